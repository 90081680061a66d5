#include "cli.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gtoc/bruhat.hpp"
#include "gtoc/error.hpp"
#include "gtoc/fan.hpp"
#include "gtoc/graphs.hpp"
#include "gtoc/json_io.hpp"
#include "gtoc/perm.hpp"
#include "gtoc/poly.hpp"
#include "gtoc/polytope.hpp"
#include "gtoc/projection.hpp"
#include "gtoc/scan.hpp"

namespace gtoc::cli {
namespace {

constexpr int kCapDefault = kMaxLowerSetN;  // project, fiber, poly, ...
constexpr int kCapPolytope = kMaxPolytopeN;

struct Options {
  std::string w, u, v;
  int n = 0;
  std::string check = "all";
  bool json = false;
  bool dot = false;
  bool tilde = false;
  bool why = false;
  bool faces = false;
  bool retraction = false;
};

Permutation parse_arg(const std::string& text, int cap, const char* what) {
  Permutation p = Permutation::parse(text);
  if (p.size() > cap) {
    throw DomainError(std::string(what) + ": n=" + std::to_string(p.size()) +
                      " exceeds the supported maximum " + std::to_string(cap));
  }
  return p;
}

std::string join(const std::vector<Permutation>& ps, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += sep;
    out += ps[i].to_string();
  }
  return out;
}

Json labels(const std::vector<Permutation>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_project(const Options& o, std::ostream& out) {
  const Permutation w = parse_arg(o.w, kCapDefault, "project");
  const Permutation v = parse_arg(o.v, kCapDefault, "project");
  const Permutation vp = project(w, v);
  if (o.json) {
    emit(out, {{"w", w.to_string()}, {"v", v.to_string()}, {"projection", vp.to_string()}});
  } else {
    out << vp.to_string() << "\n";
  }
  return kOk;
}

int cmd_fiber(const Options& o, std::ostream& out) {
  const Permutation w = parse_arg(o.w, kCapDefault, "fiber");
  const Permutation u = parse_arg(o.u, kCapDefault, "fiber");
  const auto members = fiber(w, u);
  const Permutation top = detail::top_of(members, w, u);
  if (o.json) {
    emit(out, {{"w", w.to_string()},
               {"u", u.to_string()},
               {"top", top.to_string()},
               {"members", labels(members)}});
  } else {
    out << "interval: [" << u.to_string() << ", " << top.to_string() << "]_R\n";
    out << "members: " << join(members) << "\n";
  }
  return kOk;
}

int cmd_fan(const Options& o, std::ostream& out) {
  const Permutation w = parse_arg(o.w, kCapDefault, "fan");
  Json cones = Json::object();
  for (const auto& u : bruhat_lower_set(w)) {
    const ConeUnion cone = maximal_cone(w, u);
    if (o.json) {
      cones[u.to_string()] = labels(cone.members);
    } else {
      out << u.to_string() << ": " << join(cone.members) << "\n";
    }
  }
  if (o.json) emit(out, {{"w", w.to_string()}, {"cones", cones}});
  return kOk;
}

int cmd_edges(const Options& o, std::ostream& out) {
  const Permutation w = parse_arg(o.w, kCapDefault, "edges");
  std::string label;
  std::optional<EdgePairSet> pairs;
  if (o.u.empty() && !o.tilde) {
    pairs = edge_set_R(w);
    label = "R(" + w.to_string() + ")";
  } else {
    const Permutation u = o.u.empty() ? w : parse_arg(o.u, kCapDefault, "edges");
    pairs = o.tilde ? tilde_edge_set(w, u) : edge_set(w, u);
    label = std::string(o.tilde ? "E~_" : "E_") + w.to_string() + "(" +
            u.to_string() + ")";
  }
  if (o.json) {
    emit(out, to_json(*pairs));
  } else {
    out << label << " = " << pairs->to_string() << "\n";
  }
  return kOk;
}

int cmd_graph(const Options& o, std::ostream& out) {
  const Permutation w = parse_arg(o.w, kCapDefault, "graph");
  const Permutation u = o.u.empty() ? w : parse_arg(o.u, kCapDefault, "graph");
  const ValueGraph g = graph(w, u);
  if (o.dot) {
    out << to_dot(g, u);
    return kOk;
  }
  if (o.json) {
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
    emit(out, {{"w", w.to_string()},
               {"u", u.to_string()},
               {"vertices", g.vertices()},
               {"edges", edges},
               {"pairs", to_json(g.pair_order())},
               {"forest", g.is_forest()},
               {"b1", g.betti1()},
               {"components", g.component_count()}});
    return kOk;
  }
  out << "vertices:";
  for (int v : g.vertices()) out << " " << v;
  out << "\nedges: " << g.pair_order().to_string() << "\n";
  out << "forest: " << yes_no(g.is_forest()) << "\n";
  out << "b1: " << g.betti1() << "\n";
  out << "components: " << g.component_count() << "\n";
  return kOk;
}

std::string cycle_text(const std::vector<int>& cycle) {
  std::string s;
  for (int v : cycle) s += std::to_string(v) + "-";
  return s + std::to_string(cycle.front());
}

int cmd_smooth(const Options& o, std::ostream& out) {
  const Permutation w = parse_arg(o.w, kCapDefault, "smooth");
  std::vector<Permutation> points;
  if (o.u.empty()) {
    points = bruhat_lower_set(w);
  } else {
    points.push_back(parse_arg(o.u, kCapDefault, "smooth"));
  }
  std::vector<Permutation> singular;
  Json why = Json::object();
  for (const auto& u : points) {
    const ValueGraph g = graph(w, u);
    if (g.is_forest()) continue;
    singular.push_back(u);
    why[u.to_string()] = *g.find_cycle();
  }
  if (o.json) {
    Json j = {{"w", w.to_string()}, {"smooth", singular.empty()},
              {"singular_points", labels(singular)}};
    if (!o.u.empty()) j["u"] = points.front().to_string();
    if (o.why) j["cycles"] = why;
    emit(out, j);
    return kOk;
  }
  if (o.u.empty()) {
    out << "smooth: " << yes_no(singular.empty()) << "\n";
    if (!singular.empty()) out << "singular points: " << join(singular) << "\n";
  } else {
    out << "smooth at " << points.front().to_string()
        << ": " << yes_no(singular.empty()) << "\n";
  }
  if (o.why) {
    for (const auto& u : singular) {
      out << u.to_string() << ": cycle "
          << cycle_text(why[u.to_string()].get<std::vector<int>>()) << "\n";
    }
  }
  return kOk;
}

int cmd_patterns(const Options& o, std::ostream& out) {
  const Permutation w = parse_arg(o.w, kCapDefault, "patterns");
  const bool a = avoids_4231(w);
  const bool b = avoids_45bar312(w);
  if (o.json) {
    emit(out, {{"w", w.to_string()}, {"avoids_4231", a}, {"avoids_45bar312", b}});
  } else {
    out << "4231: " << (a ? "avoids" : "contains") << "\n";
    out << "45bar312: " << (b ? "avoids" : "contains") << "\n";
  }
  return kOk;
}

int cmd_toric(const Options& o, std::ostream& out) {
  const Permutation w = parse_arg(o.w, kCapDefault, "toric");
  const int len = length(w);
  const int e = static_cast<int>(edge_set(w, Permutation::identity(w.size())).size());
  if (o.json) {
    emit(out, {{"w", w.to_string()}, {"toric", len == e}, {"length", len},
               {"edges_at_identity", e}});
  } else {
    out << "toric: " << yes_no(len == e) << " (l(w) = " << len
        << ", |E_w(id)| = " << e << ")\n";
  }
  return kOk;
}

int cmd_poly(const Options& o, std::ostream& out) {
  const Permutation w = parse_arg(o.w, kCapDefault, "poly");
  const EulerianPair p = eulerian_pair(w);
  const IntPolynomial squared = p.ascents.substitute_square();
  if (o.json) {
    emit(out, {{"w", w.to_string()},
               {"A", to_json(p.ascents)},
               {"Abar", to_json(p.descents)},
               {"palindromic", is_palindromic(p.ascents)},
               {"unimodal", is_unimodal(p.ascents)},
               {"A_t2", to_json(squared)}});
  } else {
    out << "A_w(t) = " << p.ascents.to_string() << "\n";
    out << "Abar_w(t) = " << p.descents.to_string() << "\n";
    out << "palindromic: " << yes_no(is_palindromic(p.ascents)) << "\n";
    out << "unimodal: " << yes_no(is_unimodal(p.ascents)) << "\n";
    out << "A_w(t^2) = " << squared.to_string() << "\n";
  }
  return kOk;
}

int cmd_polytope(const Options& o, std::ostream& out) {
  const Permutation w = parse_arg(o.w, kCapPolytope, "polytope");
  const BruhatIntervalPolytope p = build_polytope(w);
  std::optional<FaceLattice> lattice;
  if (o.faces || o.retraction) lattice = face_lattice(p);
  std::optional<RetractionSequence> seq;
  if (o.retraction) seq = retraction_sequence(*lattice);

  if (o.json) {
    Json j = to_json(p, o.faces ? &*lattice : nullptr);
    j["dim"] = p.dim;
    j["simple"] = is_simple(p);
    if (o.faces) j["f_vector"] = lattice->f_vector();
    if (o.retraction) {
      j["retraction"] = seq ? to_json(p, *seq) : Json(nullptr);
      if (seq) j["poincare"] = to_json(poincare_from_retraction(*seq));
    }
    emit(out, j);
  } else {
    out << "w: " << w.to_string() << "\n";
    out << "dim: " << p.dim << "\n";
    out << "vertices: " << p.vertices.size() << "\n";
    for (const auto& v : p.vertices) {
      out << "  " << v.u.to_string() << " (";
      for (std::size_t k = 0; k < v.point.size(); ++k) {
        out << (k ? "," : "") << v.point[k];
      }
      out << ")" << (is_simple_vertex(p, v.u) ? "" : " non-simple") << "\n";
    }
    out << "edges: " << p.edges.size() << "\n";
    for (const auto& [i, j] : p.edges) {
      out << "  " << p.vertices[i].u.to_string() << " - "
          << p.vertices[j].u.to_string() << "\n";
    }
    out << "simple: " << yes_no(is_simple(p)) << "\n";
    out << "non-simple vertices connected: "
        << yes_no(non_simple_vertices_connected(p)) << "\n";
    if (o.faces) {
      out << "f-vector:";
      for (int f : lattice->f_vector()) out << " " << f;
      out << "\n";
    }
    if (o.retraction) {
      if (!seq) {
        out << "retraction: not found\n";
      } else {
        out << "retraction:\n";
        for (const auto& step : seq->steps) {
          out << "  " << p.vertices[step.vertex].u.to_string()
              << " dim E = " << step.face.dim << "\n";
        }
        out << "Poincare polynomial: "
            << poincare_from_retraction(*seq).to_string() << "\n";
      }
    }
  }
  if (o.retraction && !seq) return kNotFound;
  return kOk;
}

int cmd_scan(const Options& o, std::ostream& out) {
  if (o.n < 2 || o.n > kMaxScanN) {
    throw DomainError("scan: --n must be in [2, " + std::to_string(kMaxScanN) + "]");
  }
  std::vector<std::function<ScanResult(int)>> checks;
  const auto add = [&](const std::string& name, auto fn) {
    if (o.check == "all" || o.check == name) {
      checks.push_back([fn](int n) { return fn(n, worker_count()); });
    }
  };
  add("dualcone", scan_dual_cone);
  add("avoidance", scan_avoidance);
  add("conjecture", scan_conjecture);
  add("palindromic", scan_palindromic);

  Json results = Json::array();
  for (const auto& check : checks) {
    const ScanResult r = check(o.n);
    if (o.json) {
      results.push_back({{"check", r.check},
                         {"checked", r.checked},
                         {"counterexamples", r.counterexamples},
                         {"observations", r.observations}});
      continue;
    }
    out << r.check << ": " << r.counterexamples.size() << " counterexamples ("
        << r.checked << " cases checked, n=" << o.n << ")\n";
    for (const auto& c : r.counterexamples) out << "  counterexample: " << c << "\n";
    for (const auto& c : r.observations) out << "  observed: " << c << "\n";
  }
  if (o.json) emit(out, {{"n", o.n}, {"results", results}});
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generic torus orbit closures in Schubert varieties"};
  app.require_subcommand(1);
  Options o;

  const auto with_w = [&](CLI::App* sub) {
    sub->add_option("--w", o.w, "permutation w in one-line notation")->required();
    sub->add_flag("--json", o.json, "JSON output");
    return sub;
  };

  auto* project_cmd = with_w(app.add_subcommand("project", "print v' for the given w"));
  project_cmd->add_option("--v", o.v, "permutation v")->required();

  auto* fiber_cmd = with_w(app.add_subcommand("fiber", "fiber {v : v' = u}"));
  fiber_cmd->add_option("--u", o.u, "fixed point u <= w")->required();

  auto* fan_cmd = with_w(app.add_subcommand("fan", "maximal cones of the fan of Y_w"));

  auto* edges_cmd = with_w(app.add_subcommand("edges", "R(w), E_w(u) or E~_w(u)"));
  edges_cmd->add_option("--u", o.u, "fixed point u <= w");
  edges_cmd->add_flag("--tilde", o.tilde, "print E~_w(u) before decomposition");

  auto* graph_cmd = with_w(app.add_subcommand("graph", "graph Gamma_w(u)"));
  graph_cmd->add_option("--u", o.u, "fixed point u <= w (default w)");
  graph_cmd->add_flag("--dot", o.dot, "Graphviz output");

  auto* smooth_cmd = with_w(app.add_subcommand("smooth", "smoothness of Y_w"));
  smooth_cmd->add_option("--u", o.u, "check only at uB");
  smooth_cmd->add_flag("--why", o.why, "print a cycle for each singular point");

  auto* patterns_cmd = with_w(app.add_subcommand("patterns", "4231 / 45bar312 avoidance"));
  auto* toric_cmd = with_w(app.add_subcommand("toric", "is X_w toric"));
  auto* poly_cmd = with_w(app.add_subcommand("poly", "A_w(t) and Abar_w(t)"));

  auto* polytope_cmd = with_w(app.add_subcommand("polytope", "Bruhat interval polytope"));
  polytope_cmd->add_flag("--faces", o.faces, "face lattice and f-vector");
  polytope_cmd->add_flag("--retraction", o.retraction,
                         "retraction sequence and Poincare polynomial");

  auto* scan_cmd = app.add_subcommand("scan", "exhaustive property scans over S_n");
  scan_cmd->add_option("--n", o.n, "n")->required();
  scan_cmd->add_option("--check", o.check, "which check")
      ->check(CLI::IsMember({"all", "dualcone", "avoidance", "conjecture", "palindromic"}));
  scan_cmd->add_flag("--json", o.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  const std::vector<std::pair<CLI::App*, int (*)(const Options&, std::ostream&)>> table = {
      {project_cmd, cmd_project},   {fiber_cmd, cmd_fiber},     {fan_cmd, cmd_fan},
      {edges_cmd, cmd_edges},       {graph_cmd, cmd_graph},     {smooth_cmd, cmd_smooth},
      {patterns_cmd, cmd_patterns}, {toric_cmd, cmd_toric},     {poly_cmd, cmd_poly},
      {polytope_cmd, cmd_polytope}, {scan_cmd, cmd_scan},
  };
  try {
    for (const auto& [sub, handler] : table) {
      if (sub->parsed()) return handler(o, out);
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace gtoc::cli
