#pragma once

// JSON forms:
//   permutation     "3412" (or "10,3,..." for n >= 10)
//   EdgePairSet     {"n": 4, "pairs": [[3,1],[3,2]]}   construction order
//   IntPolynomial   [1, 7, 11, 1]                       low to high degree
//   polytope        {"w": "...", "vertices": [{"u": "...", "point": [..]}],
//                    "edges": [["u1","u2"], ...],
//                    "faces": [{"dim": d, "vertices": ["u", ...]}]}
//   retraction      [{"b": "u", "dim_E": d}, ...]

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gtoc/error.hpp"
#include "gtoc/fan.hpp"
#include "gtoc/perm.hpp"
#include "gtoc/poly.hpp"
#include "gtoc/polytope.hpp"

namespace gtoc {

using Json = nlohmann::json;

inline Json to_json(const Permutation& p) { return p.to_string(); }

inline Permutation permutation_from_json(const Json& j) {
  if (!j.is_string()) throw InvalidArgument("permutation must be a JSON string");
  return Permutation::parse(j.get<std::string>());
}

inline Json to_json(const EdgePairSet& s) {
  Json pairs = Json::array();
  for (const auto& [a, b] : s) pairs.push_back({a, b});
  return {{"n", s.n()}, {"pairs", pairs}};
}

inline EdgePairSet edge_pair_set_from_json(const Json& j) {
  EdgePairSet out(j.at("n").get<int>());
  for (const auto& pair : j.at("pairs")) {
    if (!pair.is_array() || pair.size() != 2) {
      throw InvalidArgument("edge pair must be a two-element array");
    }
    out.add(pair[0].get<int>(), pair[1].get<int>());
  }
  return out;
}

inline Json to_json(const IntPolynomial& p) { return p.coeffs(); }

inline IntPolynomial polynomial_from_json(const Json& j) {
  return IntPolynomial(j.get<std::vector<std::uint64_t>>());
}

inline Json vertex_labels(const BruhatIntervalPolytope& p, VertexMask mask) {
  Json out = Json::array();
  for (int i = 0; i < static_cast<int>(p.vertices.size()); ++i) {
    if ((mask >> i) & 1) out.push_back(p.vertices[i].u.to_string());
  }
  return out;
}

/// Faces are written only when a lattice is given; the empty face is omitted.
inline Json to_json(const BruhatIntervalPolytope& p,
                    const FaceLattice* lattice = nullptr) {
  Json vertices = Json::array();
  for (const auto& v : p.vertices) {
    vertices.push_back({{"u", v.u.to_string()}, {"point", v.point}});
  }
  Json edges = Json::array();
  for (const auto& [i, j] : p.edges) {
    edges.push_back({p.vertices[i].u.to_string(), p.vertices[j].u.to_string()});
  }
  Json out = {{"w", p.w.to_string()}, {"vertices", vertices}, {"edges", edges}};
  if (lattice) {
    Json faces = Json::array();
    for (const auto& f : lattice->faces()) {
      if (f.dim < 0) continue;
      faces.push_back({{"dim", f.dim}, {"vertices", vertex_labels(p, f.vertices)}});
    }
    out["faces"] = faces;
  }
  return out;
}

struct PolytopeDocument {
  BruhatIntervalPolytope polytope;
  std::optional<std::vector<Face>> faces;
};

/// Reads the polytope form back. Points must match the moment map of their
/// labels; dim is recomputed from w.
inline PolytopeDocument polytope_from_json(const Json& j) {
  const Permutation w = permutation_from_json(j.at("w"));
  BruhatIntervalPolytope p{w, {}, {}, cone_dim(edge_set_R(w))};
  for (const auto& v : j.at("vertices")) {
    const Permutation u = permutation_from_json(v.at("u"));
    auto point = v.at("point").get<std::vector<int>>();
    if (point != moment_point(u)) {
      throw InvalidArgument("vertex " + u.to_string() + " has the wrong point");
    }
    p.vertices.push_back({u, std::move(point)});
  }
  std::sort(p.vertices.begin(), p.vertices.end(),
            [](const PolytopeVertex& a, const PolytopeVertex& b) { return a.u < b.u; });
  auto index = [&](const Json& label) {
    const int i = p.index_of(permutation_from_json(label));
    if (i < 0) throw InvalidArgument("unknown vertex " + label.dump());
    return i;
  };
  for (const auto& e : j.at("edges")) {
    const int a = index(e.at(0)), b = index(e.at(1));
    p.edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(p.edges.begin(), p.edges.end());
  std::optional<std::vector<Face>> faces;
  if (j.contains("faces")) {
    faces.emplace();
    for (const auto& f : j.at("faces")) {
      VertexMask mask = 0;
      for (const auto& label : f.at("vertices")) mask |= VertexMask{1} << index(label);
      faces->push_back({mask, f.at("dim").get<int>()});
    }
  }
  return PolytopeDocument{std::move(p), std::move(faces)};
}

inline Json to_json(const BruhatIntervalPolytope& p, const RetractionSequence& seq) {
  Json out = Json::array();
  for (const auto& step : seq.steps) {
    out.push_back({{"b", p.vertices[step.vertex].u.to_string()},
                   {"dim_E", step.face.dim}});
  }
  return out;
}

/// (b_k, dim E_k) in sequence order.
inline std::vector<std::pair<Permutation, int>> retraction_from_json(const Json& j) {
  std::vector<std::pair<Permutation, int>> out;
  for (const auto& step : j) {
    out.emplace_back(permutation_from_json(step.at("b")), step.at("dim_E").get<int>());
  }
  return out;
}

}  // namespace gtoc
