#pragma once

// Symmetric-group core. Permutations are immutable values in one-line
// notation with 1-based indexing at the API: p(i) is the image of i.

#include <algorithm>
#include <array>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gtoc/error.hpp"

namespace gtoc {

inline constexpr int kMaxN = 16;

class Permutation {
 public:
  /// Builds from one-line images, e.g. {3,4,1,2}. Throws InvalidArgument
  /// unless the images form a bijection of {1..n} with 1 <= n <= kMaxN.
  static Permutation from_images(std::span<const int> images) {
    const int n = static_cast<int>(images.size());
    if (n < 1 || n > kMaxN) {
      throw InvalidArgument("permutation size must be in [1, " +
                            std::to_string(kMaxN) + "], got " +
                            std::to_string(n));
    }
    Permutation p;
    p.n_ = static_cast<std::uint8_t>(n);
    std::array<bool, kMaxN + 1> seen{};
    for (int i = 0; i < n; ++i) {
      const int v = images[i];
      if (v < 1 || v > n || seen[v]) {
        throw InvalidArgument("not a permutation of 1.." + std::to_string(n));
      }
      seen[v] = true;
      p.img_[i] = static_cast<std::uint8_t>(v);
      p.pos_[v - 1] = static_cast<std::uint8_t>(i + 1);
    }
    return p;
  }

  static Permutation from_images(std::initializer_list<int> images) {
    return from_images(std::span<const int>(images.begin(), images.size()));
  }

  static Permutation identity(int n) {
    check_size(n);
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return from_images(v);
  }

  /// The longest element n n-1 ... 1.
  static Permutation longest(int n) {
    check_size(n);
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = n - i;
    return from_images(v);
  }

  /// Parses "3412" (n <= 9) or "10,3,1,..." (comma separated, any n).
  static Permutation parse(std::string_view text) {
    std::vector<int> images;
    if (text.find(',') == std::string_view::npos) {
      for (char c : text) {
        if (c < '1' || c > '9') {
          throw InvalidArgument("malformed permutation '" + std::string(text) +
                                "'");
        }
        images.push_back(c - '0');
      }
    } else {
      std::size_t start = 0;
      while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        const auto field = text.substr(start, end - start);
        int value = 0;
        auto [ptr, ec] =
            std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc() ||
            ptr != field.data() + field.size()) {
          throw InvalidArgument("malformed permutation '" + std::string(text) +
                                "'");
        }
        images.push_back(value);
        start = end + 1;
      }
    }
    if (images.empty()) throw InvalidArgument("empty permutation");
    return from_images(images);
  }

  int size() const noexcept { return n_; }

  /// w(i), 1-based.
  int operator()(int i) const noexcept { return img_[i - 1]; }
  /// w^{-1}(value), 1-based.
  int position_of(int value) const noexcept { return pos_[value - 1]; }

  std::vector<int> images() const {
    return std::vector<int>(img_.begin(), img_.begin() + n_);
  }

  bool is_identity() const noexcept {
    for (int i = 0; i < n_; ++i) {
      if (img_[i] != i + 1) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::string out;
    for (int i = 0; i < n_; ++i) {
      if (n_ >= 10 && i > 0) out += ',';
      out += std::to_string(img_[i]);
    }
    return out;
  }

  /// Lexicographic on one-line notation within one S_n.
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) noexcept {
    if (auto c = a.img_ <=> b.img_; c != 0) return c;
    return a.n_ <=> b.n_;
  }
  friend bool operator==(const Permutation& a, const Permutation& b) noexcept {
    return a.n_ == b.n_ && a.img_ == b.img_;
  }

  std::size_t hash() const noexcept {
    std::size_t h = n_;
    for (int i = 0; i < n_; ++i) h = h * 31 + img_[i];
    return h;
  }

 private:
  Permutation() = default;

  static void check_size(int n) {
    if (n < 1 || n > kMaxN) {
      throw InvalidArgument("n must be in [1, " + std::to_string(kMaxN) + "]");
    }
  }

  std::array<std::uint8_t, kMaxN> img_{};
  std::array<std::uint8_t, kMaxN> pos_{};
  std::uint8_t n_ = 0;
};

/// Strictly increasing tuple of values in [1..n]; an element of I_{d,n}.
class SortedTuple {
 public:
  SortedTuple() = default;

  /// Sorts and validates; throws on duplicates or values outside [1..kMaxN].
  static SortedTuple from_values(std::vector<int> values) {
    std::sort(values.begin(), values.end());
    if (values.empty() || values.size() > kMaxN) {
      throw InvalidArgument("sorted tuple must have 1..16 entries");
    }
    SortedTuple t;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] < 1 || values[i] > kMaxN ||
          (i > 0 && values[i] == values[i - 1])) {
        throw InvalidArgument("sorted tuple entries must be distinct in [1,16]");
      }
      t.v_[i] = static_cast<std::uint8_t>(values[i]);
    }
    t.d_ = static_cast<std::uint8_t>(values.size());
    return t;
  }

  int size() const noexcept { return d_; }
  /// 1-based entry access, matching i_1 < ... < i_d.
  int operator[](int t) const noexcept { return v_[t - 1]; }
  std::vector<int> values() const {
    return std::vector<int>(v_.begin(), v_.begin() + d_);
  }

  /// Componentwise order of equal-length tuples: a <= b iff a_t <= b_t for all t.
  bool componentwise_leq(const SortedTuple& other) const noexcept {
    if (d_ != other.d_) return false;
    for (int t = 0; t < d_; ++t) {
      if (v_[t] > other.v_[t]) return false;
    }
    return true;
  }

  bool contains(int value) const noexcept {
    return std::binary_search(v_.begin(), v_.begin() + d_,
                              static_cast<std::uint8_t>(value));
  }

  std::string to_string() const {
    std::string out = "(";
    for (int t = 0; t < d_; ++t) {
      if (t) out += ',';
      out += std::to_string(v_[t]);
    }
    return out + ")";
  }

  // Orders by length first, then lexicographically.
  friend std::strong_ordering operator<=>(const SortedTuple& a,
                                          const SortedTuple& b) noexcept {
    if (auto c = a.d_ <=> b.d_; c != 0) return c;
    return a.v_ <=> b.v_;
  }
  friend bool operator==(const SortedTuple&, const SortedTuple&) = default;

 private:
  std::array<std::uint8_t, kMaxN> v_{};
  std::uint8_t d_ = 0;
};

/// (a o b)(i) = a(b(i)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw InvalidArgument("compose: size mismatch");
  std::vector<int> out(a.size());
  for (int i = 1; i <= a.size(); ++i) out[i - 1] = a(b(i));
  return Permutation::from_images(out);
}

inline Permutation inverse(const Permutation& w) {
  std::vector<int> out(w.size());
  for (int v = 1; v <= w.size(); ++v) out[v - 1] = w.position_of(v);
  return Permutation::from_images(out);
}

/// Number of inversions.
inline int length(const Permutation& w) noexcept {
  int inv = 0;
  for (int i = 1; i <= w.size(); ++i) {
    for (int j = i + 1; j <= w.size(); ++j) {
      if (w(i) > w(j)) ++inv;
    }
  }
  return inv;
}

/// w^{(d)}: the first d images, sorted.
inline SortedTuple prefix_sorted(const Permutation& w, int d) {
  if (d < 1 || d > w.size()) {
    throw InvalidArgument("prefix_sorted: d=" + std::to_string(d) +
                          " out of range for n=" + std::to_string(w.size()));
  }
  std::vector<int> values(d);
  for (int i = 1; i <= d; ++i) values[i - 1] = w(i);
  return SortedTuple::from_values(std::move(values));
}

/// t_{a,b} * u: swaps the values a and b in u's one-line notation.
inline Permutation apply_transposition(int a, int b, const Permutation& u) {
  const int n = u.size();
  if (a < 1 || a > n || b < 1 || b > n || a == b) {
    throw InvalidArgument("apply_transposition: need distinct values in [1,n]");
  }
  std::vector<int> out = u.images();
  std::swap(out[u.position_of(a) - 1], out[u.position_of(b) - 1]);
  return Permutation::from_images(out);
}

/// s_i = t_{i,i+1} in S_n.
inline Permutation simple_reflection(int i, int n) {
  if (i < 1 || i > n - 1) {
    throw InvalidArgument("simple_reflection: i out of range");
  }
  return apply_transposition(i, i + 1, Permutation::identity(n));
}

/// w * s_p: swaps positions p and p+1.
inline Permutation swap_positions(const Permutation& w, int p) {
  if (p < 1 || p >= w.size()) {
    throw InvalidArgument("swap_positions: p out of range");
  }
  std::vector<int> out = w.images();
  std::swap(out[p - 1], out[p]);
  return Permutation::from_images(out);
}

/// All of S_n in lexicographic order.
inline std::vector<Permutation> all_permutations(int n) {
  if (n < 1 || n > 10) {
    throw DomainError("all_permutations: n must be in [1, 10]");
  }
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace gtoc

template <>
struct std::hash<gtoc::Permutation> {
  std::size_t operator()(const gtoc::Permutation& p) const noexcept {
    return p.hash();
  }
};
