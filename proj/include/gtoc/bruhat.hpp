#pragma once

// Bruhat order via the sorted-prefix criterion, right weak order via
// length-increasing right multiplication by simple reflections.

#include <array>
#include <deque>
#include <string>
#include <unordered_set>
#include <vector>

#include "gtoc/error.hpp"
#include "gtoc/perm.hpp"

namespace gtoc {

inline constexpr int kMaxLowerSetN = 8;

/// Sorted prefixes w^{(1)}, ..., w^{(n-1)} of one permutation, laid out for
/// repeated componentwise comparisons.
class PrefixTable {
 public:
  explicit PrefixTable(const Permutation& w) : n_(w.size()) {
    std::array<int, kMaxN> row{};
    int len = 0;
    for (int d = 1; d < n_; ++d) {
      // insertion keeps row sorted
      int x = w(d);
      int k = len++;
      while (k > 0 && row[k - 1] > x) {
        row[k] = row[k - 1];
        --k;
      }
      row[k] = x;
      for (int t = 0; t < d; ++t) rows_[d][t] = static_cast<std::uint8_t>(row[t]);
    }
  }

  int size() const noexcept { return n_; }

  /// True iff every prefix of this table is componentwise <= the other's.
  bool leq(const PrefixTable& other) const noexcept {
    for (int d = 1; d < n_; ++d) {
      for (int t = 0; t < d; ++t) {
        if (rows_[d][t] > other.rows_[d][t]) return false;
      }
    }
    return true;
  }

  /// Entry t (1-based) of w^{(d)}.
  int entry(int d, int t) const noexcept { return rows_[d][t - 1]; }

 private:
  int n_;
  std::array<std::array<std::uint8_t, kMaxN>, kMaxN> rows_{};
};

inline void require_same_size(const Permutation& a, const Permutation& b,
                              const char* op) {
  if (a.size() != b.size()) {
    throw InvalidArgument(std::string(op) + ": size mismatch (" +
                          std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()) + ")");
  }
}

inline bool bruhat_leq(const Permutation& v, const Permutation& w) {
  require_same_size(v, w, "bruhat_leq");
  return PrefixTable(v).leq(PrefixTable(w));
}

inline void require_below(const Permutation& u, const Permutation& w,
                          const char* op) {
  if (!bruhat_leq(u, w)) {
    throw DomainError(std::string(op) + ": " + u.to_string() +
                      " is not below " + w.to_string() + " in Bruhat order");
  }
}

/// All u <= w, lexicographically sorted. Filters S_n, so n <= 8.
inline std::vector<Permutation> bruhat_lower_set(const Permutation& w) {
  if (w.size() > kMaxLowerSetN) {
    throw DomainError("bruhat_lower_set: n=" + std::to_string(w.size()) +
                      " exceeds " + std::to_string(kMaxLowerSetN));
  }
  const PrefixTable top(w);
  std::vector<Permutation> out;
  for (const auto& u : all_permutations(w.size())) {
    if (PrefixTable(u).leq(top)) out.push_back(u);
  }
  return out;
}

namespace detail {

// Every element reachable from `from` by length-increasing right
// multiplications, restricted to length <= max_length.
inline std::vector<Permutation> weak_up_set(const Permutation& from,
                                            int max_length) {
  std::vector<Permutation> seen{from};
  std::unordered_set<Permutation> visited{from};
  std::deque<Permutation> queue{from};
  while (!queue.empty()) {
    Permutation x = queue.front();
    queue.pop_front();
    if (length(x) >= max_length) continue;
    for (int p = 1; p < x.size(); ++p) {
      if (x(p) < x(p + 1)) {
        Permutation y = swap_positions(x, p);
        if (visited.insert(y).second) {
          seen.push_back(y);
          queue.push_back(y);
        }
      }
    }
  }
  return seen;
}

}  // namespace detail

inline bool right_weak_leq(const Permutation& u1, const Permutation& u2) {
  require_same_size(u1, u2, "right_weak_leq");
  if (u1 == u2) return true;
  const int target = length(u2);
  if (length(u1) >= target) return false;
  // BFS layer by layer; each step raises the length by exactly one.
  std::unordered_set<Permutation> layer{u1};
  for (int l = length(u1); l < target; ++l) {
    std::unordered_set<Permutation> next;
    for (const auto& x : layer) {
      for (int p = 1; p < x.size(); ++p) {
        if (x(p) < x(p + 1)) next.insert(swap_positions(x, p));
      }
    }
    layer = std::move(next);
  }
  return layer.count(u2) > 0;
}

/// [u1,u2]_R, lexicographically sorted; empty when u1 is not <=_R u2.
inline std::vector<Permutation> right_weak_interval(const Permutation& u1,
                                                    const Permutation& u2) {
  require_same_size(u1, u2, "right_weak_interval");
  std::vector<Permutation> out;
  if (!right_weak_leq(u1, u2)) return out;
  for (const auto& x : detail::weak_up_set(u1, length(u2))) {
    if (right_weak_leq(x, u2)) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gtoc
