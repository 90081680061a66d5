#pragma once

// Graphs Gamma_w(u) on values, smoothness and toricness of Y_w, pattern
// avoidance, and the forest-conjecture scan.
//
// Y_w is smooth at uB iff Gamma_w(u) is a forest. Gamma_w itself (u = w) is
// a forest iff w avoids 4231 and the barred pattern 45-bar-312; the two
// pattern predicates below are written independently of the graph code so
// that equivalence can be checked exhaustively.

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gtoc/bruhat.hpp"
#include "gtoc/fan.hpp"
#include "gtoc/parallel.hpp"
#include "gtoc/perm.hpp"
#include "gtoc/union_find.hpp"

namespace gtoc {

class ValueGraph {
 public:
  explicit ValueGraph(EdgePairSet pairs) : pair_order_(std::move(pairs)) {
    for (const auto& [a, b] : pair_order_) {
      vertices_.push_back(a);
      vertices_.push_back(b);
      edges_.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()),
                    vertices_.end());
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
      throw InvalidArgument("ValueGraph: parallel edges in " +
                            pair_order_.to_string());
    }
  }

  const std::vector<int>& vertices() const noexcept { return vertices_; }
  /// Unordered edges as (min, max), sorted.
  const std::vector<EdgePair>& edges() const noexcept { return edges_; }
  const EdgePairSet& pair_order() const noexcept { return pair_order_; }

  int component_count() const {
    detail::UnionFind uf(pair_order_.n() + 1);
    int components = static_cast<int>(vertices_.size());
    for (const auto& [a, b] : edges_) {
      if (uf.unite(a, b)) --components;
    }
    return components;
  }

  int betti1() const {
    return static_cast<int>(edges_.size()) -
           static_cast<int>(vertices_.size()) + component_count();
  }

  bool is_forest() const { return betti1() == 0; }

  /// Vertices of some cycle, in walk order; nullopt for a forest.
  std::optional<std::vector<int>> find_cycle() const {
    const int n = pair_order_.n();
    std::vector<std::vector<int>> adj(n + 1);
    for (const auto& [a, b] : edges_) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::vector<int> parent(n + 1, 0);
    std::vector<int> depth(n + 1, -1);
    for (int root : vertices_) {
      if (depth[root] >= 0) continue;
      depth[root] = 0;
      std::vector<int> stack{root};
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int y : adj[x]) {
          if (y == parent[x]) continue;
          if (depth[y] < 0) {
            depth[y] = depth[x] + 1;
            parent[y] = x;
            stack.push_back(y);
            continue;
          }
          // non-tree edge x-y closes a cycle through their common ancestor
          std::vector<int> left{x}, right{y};
          int p = x, q = y;
          while (depth[p] > depth[q]) left.push_back(p = parent[p]);
          while (depth[q] > depth[p]) right.push_back(q = parent[q]);
          while (p != q) {
            left.push_back(p = parent[p]);
            right.push_back(q = parent[q]);
          }
          right.pop_back();
          left.insert(left.end(), right.rbegin(), right.rend());
          return left;
        }
      }
    }
    return std::nullopt;
  }

 private:
  EdgePairSet pair_order_;
  std::vector<int> vertices_;
  std::vector<EdgePair> edges_;
};

/// Gamma_w(u), built on E_w(u).
inline ValueGraph graph(const Permutation& w, const Permutation& u) {
  return ValueGraph(edge_set(w, u));
}

inline bool is_forest(const ValueGraph& g) { return g.is_forest(); }
inline int betti1(const ValueGraph& g) { return g.betti1(); }

/// Graphviz rendering. Each value sits at (its position in u, value);
/// arrows run a -> b for each pair (a,b).
inline std::string to_dot(const ValueGraph& g, const Permutation& u,
                          const std::string& name = "Gamma") {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  out << "  node [shape=circle];\n";
  for (int v : g.vertices()) {
    out << "  " << v << " [label=\"" << v << "\", pos=\"" << u.position_of(v)
        << "," << v << "!\"];\n";
  }
  for (const auto& [a, b] : g.pair_order()) {
    out << "  " << a << " -> " << b << ";\n";
  }
  out << "}\n";
  return out.str();
}

/// No i<j<k<l with w(l) < w(j) < w(k) < w(i).
inline bool avoids_4231(const Permutation& w) {
  const int n = w.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
          if (w(l) < w(j) && w(j) < w(k) && w(k) < w(i)) return false;
  return true;
}

/// Every occurrence of 4512 extends to 45312: for i1<i2<i3<i4 with
/// w(i3) < w(i4) < w(i1) < w(i2) some m in (i2, i3) has w(i4) < w(m) < w(i1).
inline bool avoids_45bar312(const Permutation& w) {
  const int n = w.size();
  for (int i1 = 1; i1 <= n; ++i1)
    for (int i2 = i1 + 1; i2 <= n; ++i2) {
      if (w(i2) <= w(i1)) continue;
      for (int i3 = i2 + 1; i3 <= n; ++i3)
        for (int i4 = i3 + 1; i4 <= n; ++i4) {
          if (!(w(i3) < w(i4) && w(i4) < w(i1))) continue;
          bool bridged = false;
          for (int m = i2 + 1; m < i3 && !bridged; ++m) {
            bridged = w(i4) < w(m) && w(m) < w(i1);
          }
          if (!bridged) return false;
        }
    }
  return true;
}

inline bool is_smooth_at(const Permutation& w, const Permutation& u) {
  return graph(w, u).is_forest();
}

inline bool is_smooth(const Permutation& w) {
  for (const auto& u : bruhat_lower_set(w)) {
    if (!is_smooth_at(w, u)) return false;
  }
  return true;
}

/// X_w is toric iff l(w) = |E_w(id)|.
inline bool is_toric_schubert(const Permutation& w) {
  return length(w) ==
         static_cast<int>(edge_set(w, Permutation::identity(w.size())).size());
}

struct WUPair {
  Permutation w;
  Permutation u;
};

struct ConjectureReport {
  int n = 0;
  std::size_t pairs_checked = 0;
  /// Gamma_w is a forest but Gamma_w(u) is not.
  std::vector<WUPair> counterexamples;
  /// b1(Gamma_w(u)) > b1(Gamma_w).
  std::vector<WUPair> betti_violations;
};

/// Exhaustive check over w in S_n (2 <= n <= 6) and u <= w. Deterministic:
/// results follow the lexicographic order of (w, u).
inline ConjectureReport conjecture_scan(int n,
                                        unsigned threads = worker_count()) {
  if (n < 2 || n > 6) throw DomainError("conjecture_scan: n must be in [2, 6]");
  struct Partial {
    std::size_t checked = 0;
    std::vector<WUPair> counterexamples;
    std::vector<WUPair> betti_violations;
  };
  const auto ws = all_permutations(n);
  const auto parts = parallel_map(
      ws,
      [](const Permutation& w) {
        Partial part;
        const int top_b1 = graph(w, w).betti1();
        for (const auto& u : bruhat_lower_set(w)) {
          ++part.checked;
          const int b1 = graph(w, u).betti1();
          if (top_b1 == 0 && b1 > 0) part.counterexamples.push_back({w, u});
          if (b1 > top_b1) part.betti_violations.push_back({w, u});
        }
        return part;
      },
      threads);
  ConjectureReport report;
  report.n = n;
  for (const auto& part : parts) {
    report.pairs_checked += part.checked;
    report.counterexamples.insert(report.counterexamples.end(),
                                  part.counterexamples.begin(),
                                  part.counterexamples.end());
    report.betti_violations.insert(report.betti_violations.end(),
                                   part.betti_violations.begin(),
                                   part.betti_violations.end());
  }
  return report;
}

}  // namespace gtoc
