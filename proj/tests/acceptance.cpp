// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every comparison is exact; there are no numeric tolerances.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gtoc/bruhat.hpp"
#include "gtoc/fan.hpp"
#include "gtoc/graphs.hpp"
#include "gtoc/poly.hpp"
#include "gtoc/polytope.hpp"
#include "gtoc/projection.hpp"
#include "test_util.hpp"

namespace {

using namespace gtoc;
using testing::P;

struct Check {
  bool ok = true;
  std::ostringstream why;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

using Pairs = std::set<EdgePair>;

// u -> (E_w(u), a_w(u))
using EdgeTable = std::map<std::string, std::pair<Pairs, int>>;

void check_table(Check& c, const Permutation& w, const EdgeTable& table) {
  c.expect(table.size() == bruhat_lower_set(w).size(),
           "row count for w=" + w.to_string());
  for (const auto& [label, row] : table) {
    const Permutation u = P(label.c_str());
    c.expect(edge_set(w, u).as_set() == row.first,
             "E_" + w.to_string() + "(" + label + ")");
    c.expect(ascent_count(w, u) == row.second,
             "a_" + w.to_string() + "(" + label + ")");
  }
}

std::map<int, int> dimension_counts(const RetractionSequence& seq) {
  std::map<int, int> out;
  for (const auto& step : seq.steps) ++out[step.face.dim];
  return out;
}

void criterion1(Check& c) {
  c.expect(project(P("3412"), P("4123")) == P("1423"), "project(3412, 4123)");
}

void criterion2(Check& c) {
  for (int n = 1; n <= 5 && c.ok; ++n) {
    const auto all = all_permutations(n);
    for (const auto& w : all) {
      for (const auto& v : all) {
        c.expect(limit_point_oracle(w, v) == project(w, v),
                 "w=" + w.to_string() + " v=" + v.to_string());
      }
    }
  }
}

void criterion3(Check& c) {
  for (int n = 1; n <= 5 && c.ok; ++n) {
    const auto all = all_permutations(n);
    for (const auto& w : all) {
      std::set<Permutation> covered;
      std::size_t total = 0;
      for (const auto& u : bruhat_lower_set(w)) {
        const auto f = fiber(w, u);
        c.expect(f == right_weak_interval(u, fiber_top(w, u)),
                 "interval w=" + w.to_string() + " u=" + u.to_string());
        for (const auto& v : f) {
          c.expect(project(w, v) == u, "member w=" + w.to_string() + " v=" + v.to_string());
        }
        total += f.size();
        covered.insert(f.begin(), f.end());
      }
      c.expect(total == all.size() && covered.size() == all.size(),
               "partition w=" + w.to_string());
    }
  }
}

void criterion4(Check& c) {
  const Permutation w = P("1342");
  const std::vector<std::pair<const char*, const char*>> rows = {
      {"1342", "4321"}, {"1243", "4231"}, {"1324", "3241"}, {"1234", "2341"}};
  for (const auto& [u, top] : rows) {
    c.expect(fiber_top(w, P(u)) == P(top), std::string("u=") + u);
  }
}

void criterion5(Check& c) {
  c.expect(edge_set_R(P("3152674")).as_set() ==
               Pairs{{3, 1}, {3, 2}, {5, 2}, {5, 4}, {6, 4}, {7, 4}},
           "R(3152674)");
  c.expect(edge_set_R(P("3715264")).as_set() ==
               Pairs{{3, 1}, {3, 2}, {7, 1}, {7, 5}, {7, 6}, {5, 2}, {5, 4}, {6, 4}},
           "R(3715264)");
  const Permutation w3412 = P("3412");
  c.expect(tilde_edge_set(w3412, P("2143")).as_set() == Pairs{{1, 4}, {2, 3}, {2, 1}, {4, 3}},
           "E~(2143)");
  c.expect(edge_set(w3412, P("2143")).as_set() == Pairs{{1, 4}, {2, 1}, {4, 3}}, "E(2143)");
  c.expect(tilde_edge_set(w3412, P("2413")).as_set() == Pairs{{2, 3}, {2, 1}, {4, 1}, {4, 3}},
           "E~(2413)");
  c.expect(edge_set(w3412, P("2413")) == tilde_edge_set(w3412, P("2413")), "E(2413)");
  c.expect(tilde_edge_set(w3412, P("1432")).as_set() == Pairs{{1, 3}, {4, 3}, {3, 2}},
           "E~(1432)");
  c.expect(edge_set(w3412, P("1432")) == tilde_edge_set(w3412, P("1432")), "E(1432)");

  check_table(c, P("32154"),
              {{"32154", {{{3, 2}, {2, 1}, {5, 4}}, 0}},
               {"32145", {{{3, 2}, {2, 1}, {4, 5}}, 1}},
               {"31254", {{{3, 1}, {1, 2}, {5, 4}}, 1}},
               {"23154", {{{2, 3}, {3, 1}, {5, 4}}, 1}},
               {"31245", {{{3, 1}, {1, 2}, {4, 5}}, 2}},
               {"23145", {{{2, 3}, {3, 1}, {4, 5}}, 2}},
               {"21354", {{{2, 1}, {1, 3}, {5, 4}}, 1}},
               {"13254", {{{1, 3}, {3, 2}, {5, 4}}, 1}},
               {"21345", {{{2, 1}, {1, 3}, {4, 5}}, 2}},
               {"13245", {{{1, 3}, {3, 2}, {4, 5}}, 2}},
               {"12354", {{{1, 2}, {2, 3}, {5, 4}}, 2}},
               {"12345", {{{1, 2}, {2, 3}, {4, 5}}, 3}}});
  check_table(c, P("4231"),
              {{"4231", {{{4, 2}, {4, 3}, {2, 1}, {3, 1}}, 0}},
               {"4132", {{{4, 1}, {4, 3}, {1, 2}, {3, 2}}, 1}},
               {"4213", {{{4, 2}, {2, 1}, {1, 3}}, 1}},
               {"2431", {{{2, 4}, {4, 3}, {3, 1}}, 1}},
               {"3241", {{{3, 2}, {3, 4}, {2, 1}, {4, 1}}, 1}},
               {"1432", {{{1, 4}, {4, 3}, {3, 2}}, 1}},
               {"4123", {{{4, 1}, {1, 2}, {2, 3}}, 2}},
               {"2413", {{{2, 4}, {4, 1}, {1, 3}}, 2}},
               {"3142", {{{3, 1}, {3, 4}, {1, 2}, {4, 2}}, 2}},
               {"3214", {{{3, 2}, {2, 1}, {1, 4}}, 1}},
               {"2341", {{{2, 3}, {3, 4}, {4, 1}}, 2}},
               {"1423", {{{1, 4}, {4, 2}, {2, 3}}, 2}},
               {"1342", {{{1, 3}, {3, 4}, {4, 2}}, 2}},
               {"2143", {{{2, 1}, {1, 4}, {4, 3}}, 1}},
               {"3124", {{{3, 1}, {1, 2}, {2, 4}}, 2}},
               {"2314", {{{1, 4}, {2, 3}, {3, 1}}, 2}},
               {"1243", {{{1, 2}, {2, 4}, {4, 3}}, 2}},
               {"1324", {{{1, 3}, {3, 2}, {2, 4}}, 2}},
               {"2134", {{{2, 1}, {1, 3}, {3, 4}}, 2}},
               {"1234", {{{1, 2}, {2, 3}, {3, 4}}, 3}}});
  check_table(c, P("3412"),
              {{"3412", {{{3, 1}, {3, 2}, {4, 1}, {4, 2}}, 0}},
               {"1432", {{{1, 3}, {4, 3}, {3, 2}}, 1}},
               {"2413", {{{2, 1}, {2, 3}, {4, 1}, {4, 3}}, 1}},
               {"3142", {{{3, 1}, {1, 4}, {4, 2}}, 1}},
               {"3214", {{{3, 2}, {2, 1}, {2, 4}}, 1}},
               {"1423", {{{1, 2}, {4, 2}, {2, 3}}, 2}},
               {"1342", {{{1, 3}, {3, 4}, {4, 2}}, 2}},
               {"2143", {{{2, 1}, {1, 4}, {4, 3}}, 1}},
               {"3124", {{{3, 1}, {1, 2}, {2, 4}}, 2}},
               {"2314", {{{2, 3}, {3, 1}, {3, 4}}, 2}},
               {"1243", {{{1, 2}, {2, 4}, {4, 3}}, 2}},
               {"1324", {{{1, 3}, {3, 2}, {2, 4}}, 2}},
               {"2134", {{{2, 1}, {1, 3}, {3, 4}}, 2}},
               {"1234", {{{1, 2}, {2, 3}, {3, 4}}, 3}}});
}

void criterion6(Check& c) {
  for (int n = 1; n <= 5 && c.ok; ++n) {
    const auto all = all_permutations(n);
    for (const auto& w : all) {
      std::vector<Permutation> image;
      for (const auto& v : all) image.push_back(project(w, v));
      for (const auto& u : bruhat_lower_set(w)) {
        const EdgePairSet e = edge_set(w, u);
        for (std::size_t k = 0; k < all.size(); ++k) {
          c.expect(respects(all[k], e) == (image[k] == u),
                   "w=" + w.to_string() + " u=" + u.to_string() + " v=" + all[k].to_string());
        }
      }
    }
  }
}

void criterion7(Check& c) {
  const std::vector<std::tuple<const char*, int, int>> rows = {
      {"3152674", 6, 0}, {"3715264", 6, 2}, {"3412", 3, 1}, {"341265", 4, 1}};
  for (const auto& [w, dim, b1] : rows) {
    const Permutation p = P(w);
    c.expect(cone_dim(edge_set_R(p)) == dim, std::string("dim ") + w);
    c.expect(graph(p, p).betti1() == b1, std::string("b1 ") + w);
  }
}

void criterion8(Check& c) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& w : all_permutations(n)) {
      c.expect(graph(w, w).is_forest() == (avoids_4231(w) && avoids_45bar312(w)),
               "w=" + w.to_string());
    }
  }
}

void criterion9(Check& c) {
  for (int n = 1; n <= 6; ++n) {
    const Permutation id = Permutation::identity(n);
    for (const auto& w : all_permutations(n)) {
      c.expect(graph(w, id).is_forest(), "Gamma_w(id) w=" + w.to_string());
    }
  }
  c.expect(is_smooth(P("32154")), "32154 smooth");
  c.expect(!is_smooth(P("4231")), "4231 singular");
  c.expect(!is_smooth(P("3412")), "3412 singular");
  std::set<Permutation> singular;
  for (const auto& w : all_permutations(4))
    if (!is_smooth(w)) singular.insert(w);
  c.expect(singular == std::set<Permutation>{P("4231"), P("3412")}, "singular set in S_4");
}

void criterion10(Check& c) {
  for (int n = 1; n <= 6; ++n) {
    std::set<Permutation> toric;
    for (const auto& w : all_permutations(n))
      if (is_toric_schubert(w)) toric.insert(w);
    c.expect(toric == testing::products_of_distinct_simple_reflections(n),
             "n=" + std::to_string(n));
  }
}

void criterion11(Check& c) {
  using C = std::vector<std::uint64_t>;
  c.expect(A_poly(P("4231")) == IntPolynomial(C{1, 7, 11, 1}), "A_4231");
  c.expect(A_poly(P("3412")) == IntPolynomial(C{1, 5, 7, 1}), "A_3412");
  c.expect(A_poly(P("32154")) == IntPolynomial(C{1, 5, 5, 1}), "A_32154");
  c.expect(Abar_poly(P("4231")) == IntPolynomial(C{1, 10, 6, 2, 1}), "Abar_4231");
  c.expect(Abar_poly(P("3412")) == IntPolynomial(C{1, 7, 4, 1, 1}), "Abar_3412");
  for (int n = 1; n <= 6; ++n) {
    c.expect(A_poly(Permutation::longest(n)) == eulerian_poly(n), "A_w0 n=" + std::to_string(n));
  }
  for (int n = 1; n <= 5; ++n) {
    for (const auto& w : all_permutations(n)) {
      if (!is_smooth(w)) continue;
      const IntPolynomial a = A_poly(w);
      c.expect(is_palindromic(a) && is_unimodal(a), "smooth w=" + w.to_string());
    }
  }
}

void criterion12(Check& c) {
  for (int n = 2; n <= 5; ++n) {
    const ConjectureReport r = conjecture_scan(n);
    c.expect(r.counterexamples.empty(), "forest counterexample n=" + std::to_string(n));
    c.expect(r.betti_violations.empty(), "b1 violation n=" + std::to_string(n));
  }
}

void criterion13(Check& c) {
  const auto q3412 = build_polytope(P("3412"));
  const auto q4231 = build_polytope(P("4231"));
  c.expect(q3412.vertices.size() == 14, "3412 vertex count");
  c.expect(q4231.vertices.size() == 20, "4231 vertex count");
  for (const auto* p : {&q3412, &q4231}) {
    for (const auto& v : p->vertices) {
      c.expect(v.point == moment_point(v.u) &&
                   compose(v.u, Permutation::from_images(v.point)).is_identity(),
               "point of " + v.u.to_string());
    }
  }
  for (const auto& w : all_permutations(4)) {
    c.expect(is_simple(build_polytope(w)) == is_smooth(w), "simple w=" + w.to_string());
  }
  using C = std::vector<std::uint64_t>;
  const auto s4231 = retraction_sequence(q4231);
  const auto s3412 = retraction_sequence(q3412);
  c.expect(s4231.has_value(), "retraction for 4231");
  c.expect(s3412.has_value(), "retraction for 3412");
  if (!c.ok) return;
  c.expect(poincare_from_retraction(*s4231) == IntPolynomial(C{1, 0, 7, 0, 11, 0, 1}),
           "Poincare 4231");
  c.expect(poincare_from_retraction(*s3412) == IntPolynomial(C{1, 0, 5, 0, 7, 0, 1}),
           "Poincare 3412");
  c.expect(dimension_counts(*s4231) == std::map<int, int>{{0, 1}, {1, 7}, {2, 11}, {3, 1}},
           "dims 4231");
  c.expect(dimension_counts(*s3412) == std::map<int, int>{{0, 1}, {1, 5}, {2, 7}, {3, 1}},
           "dims 3412");
}

void criterion14(Check& c) {
  int found = 0;
  for (const auto& w : all_permutations(4)) {
    const auto seq = retraction_sequence(build_polytope(w));
    if (!seq) continue;
    ++found;
    c.expect(poincare_from_retraction(*seq) == poincare_from_A(w), "w=" + w.to_string());
  }
  c.expect(found == 24, "retractions found for " + std::to_string(found) + " of 24");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria = {
      {"projection example", criterion1},
      {"projection oracle equivalence", criterion2},
      {"fiber structure", criterion3},
      {"fiber tops for w=1342", criterion4},
      {"edge sets and reference tables", criterion5},
      {"dual cone theorem", criterion6},
      {"dimensions and Betti numbers", criterion7},
      {"pattern equivalence", criterion8},
      {"smoothness facts", criterion9},
      {"toric criterion", criterion10},
      {"polynomials", criterion11},
      {"conjecture scan", criterion12},
      {"polytopes and retractions", criterion13},
      {"retraction and A agreement", criterion14},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.why << "exception: " << e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %s (%.2fs)", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, secs);
    if (!c.ok) std::printf(": %s", c.why.str().c_str());
    std::printf("\n");
    failures += !c.ok;
  }
  return failures == 0 ? 0 : 1;
}
