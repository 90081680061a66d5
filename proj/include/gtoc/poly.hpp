#pragma once

// Generalized Eulerian polynomials. a_w(u) counts the ascent pairs of
// E_w(u) (pairs (a,b) with a < b), and A_w(t) = sum over u <= w of
// t^{a_w(u)}. With descents instead one gets A-bar_w(t). For w = w0 this is
// the classical Eulerian polynomial, which eulerian_poly() computes
// separately from the ascent statistic of S_n.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "gtoc/bruhat.hpp"
#include "gtoc/fan.hpp"
#include "gtoc/perm.hpp"

namespace gtoc {

/// Dense polynomial with nonnegative integer coefficients; coeffs[k] is the
/// coefficient of t^k, trailing zeros trimmed.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::uint64_t> coeffs)
      : coeffs_(std::move(coeffs)) {
    trim();
  }

  static IntPolynomial monomial(int degree, std::uint64_t coeff = 1) {
    std::vector<std::uint64_t> c(degree + 1, 0);
    c[degree] = coeff;
    return IntPolynomial(std::move(c));
  }

  const std::vector<std::uint64_t>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  std::uint64_t coeff(int k) const noexcept {
    return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : 0;
  }

  void add_term(int degree, std::uint64_t coeff = 1) {
    if (static_cast<int>(coeffs_.size()) <= degree) coeffs_.resize(degree + 1, 0);
    coeffs_[degree] += coeff;
    trim();
  }

  std::uint64_t evaluate_at_one() const noexcept {
    std::uint64_t s = 0;
    for (auto c : coeffs_) s += c;
    return s;
  }

  /// p(t) -> p(t^2).
  IntPolynomial substitute_square() const {
    std::vector<std::uint64_t> c(coeffs_.empty() ? 0 : 2 * coeffs_.size() - 1, 0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[2 * k] = coeffs_[k];
    return IntPolynomial(std::move(c));
  }

  /// "t^3 + 11*t^2 + 7*t + 1"; "0" for the zero polynomial.
  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const auto c = coeffs_[k];
      if (c == 0) continue;
      if (!out.empty()) out += " + ";
      std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
      if (k == 0) {
        out += std::to_string(c);
      } else if (c == 1) {
        out += mono;
      } else {
        out += std::to_string(c) + "*" + mono;
      }
    }
    return out;
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<std::uint64_t> coeffs_;
};

inline int ascent_count(const Permutation& w, const Permutation& u) {
  int count = 0;
  for (const auto& [a, b] : edge_set(w, u)) count += a < b;
  return count;
}

inline int descent_count(const Permutation& w, const Permutation& u) {
  int count = 0;
  for (const auto& [a, b] : edge_set(w, u)) count += a > b;
  return count;
}

/// Both polynomials in one pass over the lower set.
struct EulerianPair {
  IntPolynomial ascents;   // A_w(t)
  IntPolynomial descents;  // A-bar_w(t)
};

inline EulerianPair eulerian_pair(const Permutation& w) {
  EulerianPair out;
  for (const auto& u : bruhat_lower_set(w)) {
    int asc = 0, desc = 0;
    for (const auto& [a, b] : edge_set(w, u)) (a < b ? asc : desc)++;
    out.ascents.add_term(asc);
    out.descents.add_term(desc);
  }
  return out;
}

inline IntPolynomial A_poly(const Permutation& w) {
  return eulerian_pair(w).ascents;
}

inline IntPolynomial Abar_poly(const Permutation& w) {
  return eulerian_pair(w).descents;
}

/// Classical Eulerian polynomial sum_k A(n,k) t^k by counting ascents
/// u(i) < u(i+1) over all of S_n.
inline IntPolynomial eulerian_poly(int n) {
  if (n < 1 || n > 10) throw DomainError("eulerian_poly: n must be in [1, 10]");
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  std::vector<std::uint64_t> counts(n, 0);
  do {
    int asc = 0;
    for (int i = 0; i + 1 < n; ++i) asc += v[i] < v[i + 1];
    ++counts[asc];
  } while (std::next_permutation(v.begin(), v.end()));
  return IntPolynomial(std::move(counts));
}

inline bool is_palindromic(const IntPolynomial& p) {
  const auto& c = p.coeffs();
  return std::equal(c.begin(), c.end(), c.rbegin());
}

/// Coefficients weakly rise then weakly fall.
inline bool is_unimodal(const IntPolynomial& p) {
  const auto& c = p.coeffs();
  std::size_t k = 0;
  while (k + 1 < c.size() && c[k] <= c[k + 1]) ++k;
  while (k + 1 < c.size() && c[k] >= c[k + 1]) ++k;
  return k + 1 >= c.size();
}

/// A_w(t^2), the Poincare polynomial of Y_w when Y_w is smooth.
inline IntPolynomial poincare_from_A(const Permutation& w) {
  return A_poly(w).substitute_square();
}

}  // namespace gtoc
