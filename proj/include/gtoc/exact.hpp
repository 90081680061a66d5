#pragma once

// Exact integer linear algebra on small dense matrices (fraction-free
// Bareiss elimination). Entries stay bounded by the largest minor, which is
// tiny for the 0/+-1 and permutation-coordinate matrices used here.

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <utility>
#include <vector>

#include "gtoc/error.hpp"

namespace gtoc::exact {

using Int = std::int64_t;
using Matrix = std::vector<std::vector<Int>>;

namespace detail {

inline Int checked(__int128 x) {
  if (x > INT64_MAX || x < INT64_MIN) {
    gtoc::detail::fail_invariant("exact: integer overflow in elimination");
  }
  return static_cast<Int>(x);
}

}  // namespace detail

/// Rank over Q. Also reports the pivot columns, in increasing order.
inline int rank(Matrix m, std::vector<int>* pivot_columns = nullptr) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int r = 0;
  Int prev = 1;
  if (pivot_columns) pivot_columns->clear();
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        const __int128 num = static_cast<__int128>(m[r][c]) * m[i][j] -
                             static_cast<__int128>(m[i][c]) * m[r][j];
        m[i][j] = detail::checked(num / prev);
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    if (pivot_columns) pivot_columns->push_back(c);
    ++r;
  }
  return r;
}

/// Determinant of a square matrix.
inline Int determinant(Matrix m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        const __int128 num = static_cast<__int128>(m[k][k]) * m[i][j] -
                             static_cast<__int128>(m[i][k]) * m[k][j];
        m[i][j] = detail::checked(num / prev);
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// gcd of all r x r minors of an r x n matrix with r <= n (0 if rank < r).
inline Int maximal_minor_gcd(const Matrix& m) {
  const int r = static_cast<int>(m.size());
  if (r == 0) return 1;
  const int n = static_cast<int>(m[0].size());
  if (r > n) return 0;
  std::vector<int> cols(r);
  std::iota(cols.begin(), cols.end(), 0);
  Int g = 0;
  Matrix sub(r, std::vector<Int>(r));
  while (true) {
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) sub[i][j] = m[i][cols[j]];
    }
    g = std::gcd(g, std::llabs(determinant(sub)));
    if (g == 1) return 1;
    int t = r - 1;
    while (t >= 0 && cols[t] == n - r + t) --t;
    if (t < 0) break;
    ++cols[t];
    for (int s = t + 1; s < r; ++s) cols[s] = cols[s - 1] + 1;
  }
  return g;
}

}  // namespace gtoc::exact
