#pragma once

// The w-dependent projection v -> v', its fibers, and the Pluecker index
// sets I(w) and J(w).
//
// v' is built greedily: at step d it takes the leftmost unused position of v
// whose value, added to the values already taken, keeps the sorted d-set
// componentwise below w^{(d)}. Its fiber over u <= w is the right weak
// interval [u, u_w]_R, and fiber_top() returns u_w.
//
// limit_point_oracle() computes the same map along a different route: it
// minimises a generic weight over the admissible index sets for each d, i.e.
// it picks the dominant nonvanishing Pluecker coordinate of the limit of a
// generic point under a one-parameter subgroup in the interior of C(v). It
// shares nothing with project() except the Bruhat prefix tables.

#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "gtoc/bruhat.hpp"
#include "gtoc/error.hpp"
#include "gtoc/perm.hpp"

namespace gtoc {

inline constexpr int kMaxBruteFiberN = 6;

namespace detail {

// Is sorted(prefix + {x}) componentwise <= top, where prefix holds d-1
// sorted values and top is w^{(d)}?
inline bool extended_leq(const std::array<int, kMaxN>& prefix, int d,
                         int x, const PrefixTable& top) {
  int src = 0;
  bool placed = false;
  for (int t = 1; t <= d; ++t) {
    int value;
    if (!placed && (src == d - 1 || x < prefix[src])) {
      value = x;
      placed = true;
    } else {
      value = prefix[src++];
    }
    if (value > top.entry(d, t)) return false;
  }
  return true;
}

}  // namespace detail

/// v' with respect to w.
inline Permutation project(const Permutation& w, const Permutation& v) {
  require_same_size(w, v, "project");
  const int n = w.size();
  const PrefixTable top(w);
  std::array<int, kMaxN> taken_sorted{};
  std::array<bool, kMaxN + 1> used{};
  std::vector<int> out;
  out.reserve(n);
  for (int d = 1; d <= n; ++d) {
    int chosen = 0;
    for (int i = 1; i <= n; ++i) {
      if (used[i]) continue;
      // w^{(n)} = (1..n), so the last step always succeeds
      if (d == n || detail::extended_leq(taken_sorted, d, v(i), top)) {
        chosen = i;
        break;
      }
    }
    if (chosen == 0) {
      detail::fail_invariant("project: no admissible index at step " +
                             std::to_string(d) + " for w=" + w.to_string() +
                             " v=" + v.to_string());
    }
    used[chosen] = true;
    const int x = v(chosen);
    out.push_back(x);
    int k = d - 1;
    while (k > 0 && taken_sorted[k - 1] > x) {
      taken_sorted[k] = taken_sorted[k - 1];
      --k;
    }
    taken_sorted[k] = x;
  }
  return Permutation::from_images(out);
}

/// {v : project(w, v) = u}, lexicographically sorted. Grows upward from u in
/// right weak order; the fiber is a weak interval starting at u, so every
/// member is reached.
inline std::vector<Permutation> fiber(const Permutation& w,
                                      const Permutation& u) {
  require_same_size(w, u, "fiber");
  if (w.size() > kMaxLowerSetN) {
    throw DomainError("fiber: n exceeds " + std::to_string(kMaxLowerSetN));
  }
  require_below(u, w, "fiber");
  std::vector<Permutation> out{u};
  std::unordered_set<Permutation> visited{u};
  std::deque<Permutation> queue{u};
  while (!queue.empty()) {
    const Permutation x = queue.front();
    queue.pop_front();
    for (int p = 1; p < x.size(); ++p) {
      if (x(p) > x(p + 1)) continue;
      Permutation y = swap_positions(x, p);
      if (visited.count(y)) continue;
      if (project(w, y) == u) {
        visited.insert(y);
        out.push_back(y);
        queue.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Reference fiber by filtering all of S_n (n <= 6). Used to validate fiber().
inline std::vector<Permutation> fiber_brute_force(const Permutation& w,
                                                  const Permutation& u) {
  require_same_size(w, u, "fiber_brute_force");
  if (w.size() > kMaxBruteFiberN) {
    throw DomainError("fiber_brute_force: n exceeds " +
                      std::to_string(kMaxBruteFiberN));
  }
  require_below(u, w, "fiber_brute_force");
  std::vector<Permutation> out;
  for (const auto& v : all_permutations(w.size())) {
    if (project(w, v) == u) out.push_back(v);
  }
  return out;
}

namespace detail {

// The unique element of a fiber with no length-increasing cover inside it.
inline Permutation top_of(const std::vector<Permutation>& members,
                          const Permutation& w, const Permutation& u) {
  const std::unordered_set<Permutation> in(members.begin(), members.end());
  const Permutation* top = nullptr;
  for (const auto& x : members) {
    bool maximal = true;
    for (int p = 1; p < x.size() && maximal; ++p) {
      if (x(p) < x(p + 1) && in.count(swap_positions(x, p))) maximal = false;
    }
    if (!maximal) continue;
    if (top != nullptr) {
      fail_invariant("fiber over " + u.to_string() + " for w=" + w.to_string() +
                     " has two maximal elements " + top->to_string() + ", " +
                     x.to_string());
    }
    top = &x;
  }
  if (top == nullptr) fail_invariant("fiber has no maximal element");
  return *top;
}

}  // namespace detail

/// u_w: the right-weak maximum of fiber(w, u).
inline Permutation fiber_top(const Permutation& w, const Permutation& u) {
  return detail::top_of(fiber(w, u), w, u);
}

/// Pluecker index data of X_w. Both sets hold tuples of lengths 1..n-1,
/// ordered by length first.
struct PlueckerSets {
  int n = 0;
  std::set<SortedTuple> zero_set;     // I(w): coordinates vanishing on X_w
  std::set<SortedTuple> support_set;  // J(w): v^{(d)} for v <= w

  std::vector<SortedTuple> of_length(const std::set<SortedTuple>& s,
                                     int d) const {
    std::vector<SortedTuple> out;
    for (const auto& t : s) {
      if (t.size() == d) out.push_back(t);
    }
    return out;
  }
};

/// All elements of I_{d,n}, lexicographic.
inline std::vector<SortedTuple> all_sorted_tuples(int n, int d) {
  if (n < 1 || n > kMaxN || d < 1 || d > n) {
    throw InvalidArgument("all_sorted_tuples: bad (n, d)");
  }
  std::vector<SortedTuple> out;
  std::vector<int> idx(d);
  for (int t = 0; t < d; ++t) idx[t] = t + 1;
  while (true) {
    out.push_back(SortedTuple::from_values(idx));
    int t = d - 1;
    while (t >= 0 && idx[t] == n - d + t + 1) --t;
    if (t < 0) break;
    ++idx[t];
    for (int s = t + 1; s < d; ++s) idx[s] = idx[s - 1] + 1;
  }
  return out;
}

inline PlueckerSets plucker_sets(const Permutation& w) {
  PlueckerSets out;
  out.n = w.size();
  for (int d = 1; d < w.size(); ++d) {
    const SortedTuple top = prefix_sorted(w, d);
    for (const auto& i : all_sorted_tuples(w.size(), d)) {
      if (!i.componentwise_leq(top)) out.zero_set.insert(i);
    }
  }
  for (const auto& v : bruhat_lower_set(w)) {
    for (int d = 1; d < w.size(); ++d) out.support_set.insert(prefix_sorted(v, d));
  }
  return out;
}

/// Generic-point test on a pattern of nonvanishing Pluecker coordinates.
/// Throws DomainError if the pattern is nonzero somewhere X_w forces zero.
inline bool is_generic_sign_pattern(const Permutation& w,
                                    const std::set<SortedTuple>& nonzero) {
  const PlueckerSets sets = plucker_sets(w);
  for (const auto& i : nonzero) {
    if (sets.zero_set.count(i)) {
      throw DomainError("sign pattern is nonzero at " + i.to_string() +
                        ", which vanishes on X_" + w.to_string());
    }
  }
  for (const auto& j : sets.support_set) {
    if (!nonzero.count(j)) return false;
  }
  return true;
}

/// Cocharacter exponent vector a in Z^n.
struct WeightVector {
  std::vector<std::int64_t> entries;

  /// a_{v(k)} = 2^k: strictly increasing along v, all subset sums distinct.
  static WeightVector generic_for(const Permutation& v) {
    WeightVector a;
    a.entries.assign(v.size(), 0);
    for (int k = 1; k <= v.size(); ++k) {
      a.entries[v(k) - 1] = std::int64_t{1} << k;
    }
    return a;
  }

  /// a lies in the interior of C(v): a_{v(1)} < ... < a_{v(n)}.
  bool in_open_cone(const Permutation& v) const {
    for (int k = 1; k < v.size(); ++k) {
      if (entries[v(k) - 1] >= entries[v(k + 1) - 1]) return false;
    }
    return true;
  }
};

inline Permutation limit_point_oracle(const Permutation& w,
                                      const Permutation& v) {
  require_same_size(w, v, "limit_point_oracle");
  const int n = w.size();
  const WeightVector a = WeightVector::generic_for(v);
  const PrefixTable top(w);

  constexpr auto kNone = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> best(n, kNone);
  std::vector<std::uint32_t> argmin(n, 0);
  std::vector<int> ties(n, 0);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    const int d = std::popcount(mask);
    if (d >= n) continue;
    std::int64_t weight = 0;
    bool admissible = true;
    int t = 0;
    for (int k = 1; k <= n; ++k) {
      if (!(mask & (1u << (k - 1)))) continue;
      ++t;
      if (k > top.entry(d, t)) {
        admissible = false;
        break;
      }
      weight += a.entries[k - 1];
    }
    if (!admissible) continue;
    if (weight < best[d]) {
      best[d] = weight;
      argmin[d] = mask;
      ties[d] = 1;
    } else if (weight == best[d]) {
      ++ties[d];
    }
  }

  std::vector<int> out;
  std::uint32_t previous = 0;
  for (int d = 1; d < n; ++d) {
    if (best[d] == kNone || ties[d] != 1) {
      detail::fail_invariant("limit_point_oracle: argmin not unique at d=" +
                             std::to_string(d));
    }
    const std::uint32_t added = argmin[d] & ~previous;
    if ((argmin[d] & previous) != previous || std::popcount(added) != 1) {
      detail::fail_invariant("limit_point_oracle: argmin chain not nested at d=" +
                             std::to_string(d) + " for w=" + w.to_string() +
                             " v=" + v.to_string());
    }
    out.push_back(std::countr_zero(added) + 1);
    previous = argmin[d];
  }
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  out.push_back(std::countr_zero(full & ~previous) + 1);
  return Permutation::from_images(out);
}

}  // namespace gtoc
