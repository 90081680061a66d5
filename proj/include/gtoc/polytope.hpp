#pragma once

// The Bruhat interval polytope Q_{id,w^{-1}}: the convex hull of the points
// (u^{-1}(1), ..., u^{-1}(n)) for u <= w. Its edges at the vertex of u are
// the segments to t_{a,b} u for (a,b) in E_w(u).
//
// face_lattice() works in exact integer arithmetic. Vertices are mapped
// injectively into R^d (d = affine dimension) by keeping the pivot
// coordinates of their difference vectors; facets are found by testing the
// hyperplane through every d-subset of vertices; every other face is an
// intersection of facets. Vertex sets are 64-bit masks, hence the vertex
// limit.
//
// Retraction sequences: a vertex b of the current complex is free when it
// lies in exactly one maximal face F and has exactly dim F edges inside F.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gtoc/bruhat.hpp"
#include "gtoc/error.hpp"
#include "gtoc/exact.hpp"
#include "gtoc/fan.hpp"
#include "gtoc/perm.hpp"
#include "gtoc/poly.hpp"

namespace gtoc {

inline constexpr int kMaxPolytopeN = 6;
inline constexpr int kMaxLatticeDim = 4;
inline constexpr int kMaxLatticeVertices = 64;

struct PolytopeVertex {
  Permutation u;
  std::vector<int> point;  // (u^{-1}(1), ..., u^{-1}(n))
};

struct BruhatIntervalPolytope {
  Permutation w;
  /// Lexicographic in u.
  std::vector<PolytopeVertex> vertices;
  /// Vertex index pairs (i, j), i < j, sorted.
  std::vector<std::pair<int, int>> edges;
  int dim = 0;

  int index_of(const Permutation& u) const {
    auto it = std::lower_bound(
        vertices.begin(), vertices.end(), u,
        [](const PolytopeVertex& v, const Permutation& x) { return v.u < x; });
    if (it == vertices.end() || it->u != u) return -1;
    return static_cast<int>(it - vertices.begin());
  }

  int degree(int vertex) const {
    int d = 0;
    for (const auto& [i, j] : edges) d += (i == vertex) + (j == vertex);
    return d;
  }
};

inline std::vector<int> moment_point(const Permutation& u) {
  std::vector<int> point(u.size());
  for (int k = 1; k <= u.size(); ++k) point[k - 1] = u.position_of(k);
  return point;
}

inline BruhatIntervalPolytope build_polytope(const Permutation& w) {
  if (w.size() > kMaxPolytopeN) {
    throw DomainError("build_polytope: n must be at most " +
                      std::to_string(kMaxPolytopeN));
  }
  BruhatIntervalPolytope p{w, {}, {}, cone_dim(edge_set_R(w))};
  for (const auto& u : bruhat_lower_set(w)) {
    p.vertices.push_back({u, moment_point(u)});
  }
  std::set<std::pair<int, int>> edges;
  for (int i = 0; i < static_cast<int>(p.vertices.size()); ++i) {
    const Permutation& u = p.vertices[i].u;
    for (const auto& [a, b] : edge_set(w, u)) {
      const int j = p.index_of(apply_transposition(a, b, u));
      if (j < 0) {
        detail::fail_invariant("build_polytope: edge leaves the lower set at " +
                               u.to_string());
      }
      edges.emplace(std::min(i, j), std::max(i, j));
    }
  }
  p.edges.assign(edges.begin(), edges.end());
  return p;
}

inline bool is_simple_vertex(const BruhatIntervalPolytope& p,
                             const Permutation& u) {
  require_same_size(p.w, u, "is_simple_vertex");
  require_below(u, p.w, "is_simple_vertex");
  return static_cast<int>(edge_set(p.w, u).size()) == p.dim;
}

inline bool is_simple(const BruhatIntervalPolytope& p) {
  return std::all_of(p.vertices.begin(), p.vertices.end(),
                     [&](const PolytopeVertex& v) {
                       return is_simple_vertex(p, v.u);
                     });
}

/// Whether the non-simple vertices induce a connected subgraph of the
/// 1-skeleton (vacuously true when there are fewer than two).
inline bool non_simple_vertices_connected(const BruhatIntervalPolytope& p) {
  std::vector<int> bad;
  for (int i = 0; i < static_cast<int>(p.vertices.size()); ++i) {
    if (p.degree(i) != p.dim) bad.push_back(i);
  }
  if (bad.size() < 2) return true;
  std::set<int> in(bad.begin(), bad.end());
  std::set<int> seen{bad.front()};
  std::deque<int> queue{bad.front()};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (const auto& [i, j] : p.edges) {
      const int y = i == x ? j : (j == x ? i : -1);
      if (y >= 0 && in.count(y) && seen.insert(y).second) queue.push_back(y);
    }
  }
  return seen.size() == bad.size();
}

using VertexMask = std::uint64_t;

struct Face {
  VertexMask vertices = 0;
  int dim = -1;  // -1 for the empty face

  int vertex_count() const noexcept { return std::popcount(vertices); }
  bool contains_vertex(int v) const noexcept {
    return (vertices >> v) & VertexMask{1};
  }
  bool subset_of(const Face& other) const noexcept {
    return (vertices & ~other.vertices) == 0;
  }
};

class FaceLattice {
 public:
  FaceLattice(int vertex_count, int dim, std::vector<Face> faces)
      : vertex_count_(vertex_count), dim_(dim), faces_(std::move(faces)) {
    std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
      return a.dim != b.dim ? a.dim < b.dim : a.vertices < b.vertices;
    });
  }

  int vertex_count() const noexcept { return vertex_count_; }
  int dim() const noexcept { return dim_; }
  /// Graded by dimension, empty face first, the polytope last.
  const std::vector<Face>& faces() const noexcept { return faces_; }

  /// faces()[inner] is a face of faces()[outer].
  bool incident(std::size_t inner, std::size_t outer) const noexcept {
    return faces_[inner].subset_of(faces_[outer]);
  }

  std::vector<Face> faces_of_dim(int k) const {
    std::vector<Face> out;
    for (const auto& f : faces_) {
      if (f.dim == k) out.push_back(f);
    }
    return out;
  }

  /// (f_0, f_1, ..., f_{dim-1}); the polytope itself is not counted.
  std::vector<int> f_vector() const {
    std::vector<int> f(std::max(dim_, 0), 0);
    for (const auto& face : faces_) {
      if (face.dim >= 0 && face.dim < dim_) ++f[face.dim];
    }
    return f;
  }

 private:
  int vertex_count_;
  int dim_;
  std::vector<Face> faces_;
};

namespace detail {

// Affine rank of the points selected by mask (-1 for the empty set).
inline int affine_rank(const std::vector<std::vector<exact::Int>>& pts,
                       VertexMask mask) {
  if (mask == 0) return -1;
  const int base = std::countr_zero(mask);
  exact::Matrix diffs;
  for (VertexMask m = mask & (mask - 1); m; m &= m - 1) {
    const int i = std::countr_zero(m);
    std::vector<exact::Int> row(pts[i].size());
    for (std::size_t k = 0; k < row.size(); ++k) row[k] = pts[i][k] - pts[base][k];
    diffs.push_back(std::move(row));
  }
  return diffs.empty() ? 0 : exact::rank(std::move(diffs));
}

// Normal of the hyperplane through d points in R^d (cofactor expansion of
// the (d-1) x d difference matrix); all zero when the points are affinely
// dependent.
inline std::vector<exact::Int> hyperplane_normal(
    const std::vector<std::vector<exact::Int>>& pts,
    const std::vector<int>& subset) {
  const int d = static_cast<int>(subset.size());
  std::vector<exact::Int> normal(d, 0);
  exact::Matrix diffs;
  for (int r = 1; r < d; ++r) {
    std::vector<exact::Int> row(d);
    for (int k = 0; k < d; ++k) row[k] = pts[subset[r]][k] - pts[subset[0]][k];
    diffs.push_back(std::move(row));
  }
  for (int k = 0; k < d; ++k) {
    exact::Matrix minor;
    for (const auto& row : diffs) {
      std::vector<exact::Int> m;
      for (int c = 0; c < d; ++c) {
        if (c != k) m.push_back(row[c]);
      }
      minor.push_back(std::move(m));
    }
    const exact::Int det = exact::determinant(std::move(minor));
    normal[k] = (k % 2 == 0) ? det : -det;
  }
  return normal;
}

}  // namespace detail

inline FaceLattice face_lattice(const BruhatIntervalPolytope& p) {
  const int count = static_cast<int>(p.vertices.size());
  if (count == 0) throw DomainError("face_lattice: polytope has no vertices");
  if (p.dim > kMaxLatticeDim || count > kMaxLatticeVertices) {
    throw DomainError("face_lattice: needs dim <= " +
                      std::to_string(kMaxLatticeDim) + " and at most " +
                      std::to_string(kMaxLatticeVertices) + " vertices (got dim " +
                      std::to_string(p.dim) + ", " + std::to_string(count) +
                      " vertices)");
  }
  const VertexMask all =
      count == 64 ? ~VertexMask{0} : ((VertexMask{1} << count) - 1);

  // Local integer coordinates on the affine hull.
  exact::Matrix diffs;
  for (int i = 1; i < count; ++i) {
    std::vector<exact::Int> row(p.w.size());
    for (int k = 0; k < p.w.size(); ++k) {
      row[k] = p.vertices[i].point[k] - p.vertices[0].point[k];
    }
    diffs.push_back(std::move(row));
  }
  std::vector<int> pivots;
  const int d = diffs.empty() ? 0 : exact::rank(diffs, &pivots);
  if (d != p.dim) {
    detail::fail_invariant("face_lattice: affine dimension " +
                           std::to_string(d) + " differs from cone dimension " +
                           std::to_string(p.dim));
  }
  if (d == 0) {
    return FaceLattice(count, 0, {Face{0, -1}, Face{all, 0}});
  }
  std::vector<std::vector<exact::Int>> local(count);
  for (int i = 0; i < count; ++i) {
    for (int c : pivots) local[i].push_back(p.vertices[i].point[c]);
  }

  std::set<VertexMask> facets;
  std::vector<int> subset(d);
  for (int t = 0; t < d; ++t) subset[t] = t;
  while (true) {
    const auto normal = detail::hyperplane_normal(local, subset);
    if (std::any_of(normal.begin(), normal.end(),
                    [](exact::Int x) { return x != 0; })) {
      exact::Int level = 0;
      for (int k = 0; k < d; ++k) level += normal[k] * local[subset[0]][k];
      bool above = false, below = false;
      VertexMask on = 0;
      for (int i = 0; i < count && !(above && below); ++i) {
        exact::Int s = 0;
        for (int k = 0; k < d; ++k) s += normal[k] * local[i][k];
        if (s > level) above = true;
        else if (s < level) below = true;
        else on |= VertexMask{1} << i;
      }
      if (!(above && below)) facets.insert(on);
    }
    int t = d - 1;
    while (t >= 0 && subset[t] == count - d + t) --t;
    if (t < 0) break;
    ++subset[t];
    for (int s = t + 1; s < d; ++s) subset[s] = subset[s - 1] + 1;
  }

  // Close the facets under intersection.
  std::set<VertexMask> masks(facets.begin(), facets.end());
  std::deque<VertexMask> queue(facets.begin(), facets.end());
  while (!queue.empty()) {
    const VertexMask f = queue.front();
    queue.pop_front();
    for (VertexMask g : facets) {
      const VertexMask h = f & g;
      if (masks.insert(h).second) queue.push_back(h);
    }
  }
  masks.insert(0);
  masks.insert(all);

  std::vector<Face> faces;
  for (VertexMask m : masks) faces.push_back(Face{m, detail::affine_rank(local, m)});
  return FaceLattice(count, d, std::move(faces));
}

struct RetractionStep {
  VertexMask complex_vertices = 0;  // vertices of B_k
  Face face;                        // E_k
  int vertex = 0;                   // b_k, as an index into the polytope
};

struct RetractionSequence {
  std::vector<RetractionStep> steps;
};

enum class TieBreak { kSmallest, kLargest };

/// Greedy retraction sequence; at each step takes the free vertex whose
/// label is lexicographically smallest (or largest). nullopt when some
/// intermediate complex has no free vertex.
inline std::optional<RetractionSequence> retraction_sequence(
    const FaceLattice& lattice, TieBreak tie = TieBreak::kSmallest) {
  const auto& faces = lattice.faces();
  const int count = lattice.vertex_count();
  std::vector<bool> alive(faces.size());
  for (std::size_t f = 0; f < faces.size(); ++f) alive[f] = faces[f].dim >= 0;
  VertexMask remaining =
      count == 64 ? ~VertexMask{0} : ((VertexMask{1} << count) - 1);

  std::vector<int> order(count);
  for (int i = 0; i < count; ++i) {
    order[i] = tie == TieBreak::kSmallest ? i : count - 1 - i;
  }

  RetractionSequence seq;
  while (remaining) {
    std::vector<std::size_t> maximal;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (!alive[f]) continue;
      bool covered = false;
      for (std::size_t g = 0; g < faces.size() && !covered; ++g) {
        covered = g != f && alive[g] && faces[g].dim > faces[f].dim &&
                  faces[f].subset_of(faces[g]);
      }
      if (!covered) maximal.push_back(f);
    }

    std::optional<std::size_t> chosen_face;
    int chosen = -1;
    for (int b : order) {
      if (!((remaining >> b) & 1)) continue;
      std::optional<std::size_t> home;
      bool unique = true;
      for (std::size_t f : maximal) {
        if (!faces[f].contains_vertex(b)) continue;
        if (home) unique = false;
        home = f;
      }
      if (!home || !unique) continue;
      const Face& F = faces[*home];
      int corner_edges = 0;
      for (const auto& e : faces) {
        corner_edges += e.dim == 1 && e.contains_vertex(b) && e.subset_of(F);
      }
      if (corner_edges == F.dim) {
        chosen = b;
        chosen_face = home;
        break;
      }
    }
    if (chosen < 0) return std::nullopt;

    seq.steps.push_back({remaining, faces[*chosen_face], chosen});
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (faces[f].contains_vertex(chosen)) alive[f] = false;
    }
    remaining &= ~(VertexMask{1} << chosen);
  }
  return seq;
}

inline std::optional<RetractionSequence> retraction_sequence(
    const BruhatIntervalPolytope& p, TieBreak tie = TieBreak::kSmallest) {
  return retraction_sequence(face_lattice(p), tie);
}

/// sum_k t^{2 dim E_k}.
inline IntPolynomial poincare_from_retraction(const RetractionSequence& seq) {
  IntPolynomial out;
  for (const auto& step : seq.steps) out.add_term(2 * step.face.dim);
  return out;
}

inline std::optional<IntPolynomial> poincare_from_retraction(
    const BruhatIntervalPolytope& p) {
  auto seq = retraction_sequence(p);
  if (!seq) return std::nullopt;
  return poincare_from_retraction(*seq);
}

}  // namespace gtoc
