#pragma once

// Edge-pair sets R(w), E~_w(u), E_w(u) and the cones they describe.
//
// A pair (a,b) stands for the vector e_b - e_a. The dual cone D_w(u) is
// spanned by these vectors for (a,b) in E_w(u), and the maximal cone of the
// fan of Y_w at uB is the union of the Weyl chambers C(v) over the fiber of
// u. A chamber C(v) lies in D_w(u)^dual exactly when every a precedes its b
// in v's one-line notation, which is what respects() tests.

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gtoc/bruhat.hpp"
#include "gtoc/error.hpp"
#include "gtoc/exact.hpp"
#include "gtoc/perm.hpp"
#include "gtoc/projection.hpp"
#include "gtoc/union_find.hpp"

namespace gtoc {

using EdgePair = std::pair<int, int>;

/// Ordered pairs of values in [1..n], kept in construction order.
class EdgePairSet {
 public:
  explicit EdgePairSet(int n) : n_(n) {}
  EdgePairSet(int n, std::vector<EdgePair> pairs) : n_(n) {
    for (const auto& [a, b] : pairs) add(a, b);
  }

  void add(int a, int b) {
    if (a < 1 || a > n_ || b < 1 || b > n_ || a == b) {
      throw InvalidArgument("edge pair (" + std::to_string(a) + "," +
                            std::to_string(b) + ") invalid for n=" +
                            std::to_string(n_));
    }
    if (contains(a, b)) return;
    pairs_.emplace_back(a, b);
  }

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  auto begin() const noexcept { return pairs_.begin(); }
  auto end() const noexcept { return pairs_.end(); }
  const std::vector<EdgePair>& pairs() const noexcept { return pairs_; }

  bool contains(int a, int b) const noexcept {
    return std::find(pairs_.begin(), pairs_.end(), EdgePair{a, b}) !=
           pairs_.end();
  }

  /// Order-insensitive view, for comparing against tabulated sets.
  std::set<EdgePair> as_set() const {
    return std::set<EdgePair>(pairs_.begin(), pairs_.end());
  }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if (i) out += ", ";
      out += "(" + std::to_string(pairs_[i].first) + "," +
             std::to_string(pairs_[i].second) + ")";
    }
    return out + "}";
  }

  friend bool operator==(const EdgePairSet&, const EdgePairSet&) = default;

 private:
  int n_;
  std::vector<EdgePair> pairs_;
};

/// C-bar_w(u): the chambers C(v) merged into the maximal cone at uB.
struct ConeUnion {
  std::vector<Permutation> members;
  Permutation fixed_point;
};

/// R(w): pairs (w(i), w(j)), i<j, with l(w) - l(t_{w(i),w(j)} w) = 1.
inline EdgePairSet edge_set_R(const Permutation& w) {
  const int lw = length(w);
  EdgePairSet out(w.size());
  for (int i = 1; i <= w.size(); ++i) {
    for (int j = i + 1; j <= w.size(); ++j) {
      if (lw - length(apply_transposition(w(i), w(j), w)) == 1) {
        out.add(w(i), w(j));
      }
    }
  }
  return out;
}

/// E~_w(u): pairs (u(i), u(j)), i<j, with t u <= w and |l(u) - l(t u)| = 1.
inline EdgePairSet tilde_edge_set(const Permutation& w, const Permutation& u) {
  require_same_size(w, u, "tilde_edge_set");
  require_below(u, w, "tilde_edge_set");
  const PrefixTable top(w);
  const int lu = length(u);
  EdgePairSet out(w.size());
  for (int i = 1; i <= u.size(); ++i) {
    for (int j = i + 1; j <= u.size(); ++j) {
      const Permutation t = apply_transposition(u(i), u(j), u);
      if (std::abs(lu - length(t)) == 1 && PrefixTable(t).leq(top)) {
        out.add(u(i), u(j));
      }
    }
  }
  return out;
}

/// Keeps the indecomposable pairs: (a,b) is dropped when some chain
/// a = x0 -> x1 -> ... -> xk = b with k >= 2 uses only pairs of the set.
inline EdgePairSet indecomposable_part(const EdgePairSet& pairs) {
  const int n = pairs.n();
  std::vector<std::vector<int>> succ(n + 1);
  for (const auto& [a, b] : pairs) succ[a].push_back(b);
  EdgePairSet out(n);
  for (const auto& [a, b] : pairs) {
    // values reachable from a by a path of length >= 2
    std::vector<bool> seen(n + 1, false);
    std::vector<int> stack;
    for (int x : succ[a]) {
      for (int y : succ[x]) {
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : succ[x]) {
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    if (!seen[b]) out.add(a, b);
  }
  return out;
}

/// E_w(u).
inline EdgePairSet edge_set(const Permutation& w, const Permutation& u) {
  return indecomposable_part(tilde_edge_set(w, u));
}

/// True iff a precedes b in v for every (a,b) in pairs, i.e. C(v) lies in
/// the dual of the cone spanned by the pairs.
inline bool respects(const Permutation& v, const EdgePairSet& pairs) {
  if (pairs.n() != v.size()) throw InvalidArgument("respects: size mismatch");
  for (const auto& [a, b] : pairs) {
    if (v.position_of(a) > v.position_of(b)) return false;
  }
  return true;
}

inline ConeUnion maximal_cone(const Permutation& w, const Permutation& u) {
  return ConeUnion{fiber(w, u), u};
}

/// (#values touched) - (#connected components).
inline int cone_dim(const EdgePairSet& pairs) {
  detail::UnionFind uf(pairs.n() + 1);
  std::vector<bool> touched(pairs.n() + 1, false);
  int vertices = 0;
  int components = 0;
  for (const auto& [a, b] : pairs) {
    for (int x : {a, b}) {
      if (!touched[x]) {
        touched[x] = true;
        ++vertices;
        ++components;
      }
    }
    if (uf.unite(a, b)) --components;
  }
  return vertices - components;
}

/// Rows e_b - e_a, one per pair.
inline exact::Matrix edge_matrix(const EdgePairSet& pairs) {
  exact::Matrix m;
  for (const auto& [a, b] : pairs) {
    std::vector<exact::Int> row(pairs.n(), 0);
    row[b - 1] += 1;
    row[a - 1] -= 1;
    m.push_back(std::move(row));
  }
  return m;
}

/// The generators are independent and extend to a basis of Z^n.
inline bool is_unimodular(const EdgePairSet& pairs) {
  if (pairs.empty()) return true;
  const exact::Matrix m = edge_matrix(pairs);
  if (exact::rank(m) != static_cast<int>(m.size())) return false;
  return exact::maximal_minor_gcd(m) == 1;
}

}  // namespace gtoc
