#pragma once

// Exhaustive property scans over S_n, run in parallel over w and merged in
// lexicographic order of w so the output does not depend on thread count.

#include <string>
#include <vector>

#include "gtoc/bruhat.hpp"
#include "gtoc/fan.hpp"
#include "gtoc/graphs.hpp"
#include "gtoc/parallel.hpp"
#include "gtoc/perm.hpp"
#include "gtoc/poly.hpp"
#include "gtoc/projection.hpp"

namespace gtoc {

inline constexpr int kMaxScanN = 6;

struct ScanResult {
  std::string check;
  std::size_t checked = 0;
  /// Each entry names the failing (w, ...) tuple.
  std::vector<std::string> counterexamples;
  /// Findings that are reported but not asserted.
  std::vector<std::string> observations;
};

namespace detail {

inline void require_scan_n(int n) {
  if (n < 2 || n > kMaxScanN) {
    throw DomainError("scan: n must be in [2, " + std::to_string(kMaxScanN) + "]");
  }
}

template <typename PerW>
ScanResult merge_scan(std::string name, int n, PerW per_w, unsigned threads) {
  require_scan_n(n);
  const auto parts = parallel_map(all_permutations(n), per_w, threads);
  ScanResult out;
  out.check = std::move(name);
  for (const auto& part : parts) {
    out.checked += part.checked;
    out.counterexamples.insert(out.counterexamples.end(),
                               part.counterexamples.begin(),
                               part.counterexamples.end());
    out.observations.insert(out.observations.end(), part.observations.begin(),
                            part.observations.end());
  }
  return out;
}

}  // namespace detail

/// For all w, u <= w and v in S_n: respects(v, E_w(u)) iff project(w,v) = u.
inline ScanResult scan_dual_cone(int n, unsigned threads = worker_count()) {
  return detail::merge_scan(
      "dualcone", n,
      [](const Permutation& w) {
        ScanResult part;
        const auto all = all_permutations(w.size());
        std::vector<Permutation> image;
        image.reserve(all.size());
        for (const auto& v : all) image.push_back(project(w, v));
        for (const auto& u : bruhat_lower_set(w)) {
          const EdgePairSet e = edge_set(w, u);
          for (std::size_t k = 0; k < all.size(); ++k) {
            ++part.checked;
            if (respects(all[k], e) != (image[k] == u)) {
              part.counterexamples.push_back("w=" + w.to_string() + " u=" +
                                             u.to_string() + " v=" +
                                             all[k].to_string());
            }
          }
        }
        return part;
      },
      threads);
}

/// Gamma_w forest iff w avoids 4231 and 45-bar-312; Gamma_w(id) is a forest.
inline ScanResult scan_avoidance(int n, unsigned threads = worker_count()) {
  return detail::merge_scan(
      "avoidance", n,
      [](const Permutation& w) {
        ScanResult part;
        part.checked = 1;
        const bool forest = graph(w, w).is_forest();
        const bool avoids = avoids_4231(w) && avoids_45bar312(w);
        if (forest != avoids) {
          part.counterexamples.push_back("w=" + w.to_string() + " forest=" +
                                         (forest ? "yes" : "no") +
                                         " avoids=" + (avoids ? "yes" : "no"));
        }
        if (!graph(w, Permutation::identity(w.size())).is_forest()) {
          part.counterexamples.push_back("w=" + w.to_string() +
                                         " Gamma_w(id) not a forest");
        }
        return part;
      },
      threads);
}

/// Smooth implies A_w palindromic and unimodal. Palindromic but singular w
/// are listed as observations only.
inline ScanResult scan_palindromic(int n, unsigned threads = worker_count()) {
  return detail::merge_scan(
      "palindromic", n,
      [](const Permutation& w) {
        ScanResult part;
        part.checked = 1;
        const IntPolynomial a = A_poly(w);
        const bool smooth = is_smooth(w);
        if (smooth && !(is_palindromic(a) && is_unimodal(a))) {
          part.counterexamples.push_back("w=" + w.to_string() + " smooth, A_w=" +
                                         a.to_string());
        }
        if (!smooth && is_palindromic(a)) {
          part.observations.push_back("w=" + w.to_string() +
                                      " singular with palindromic A_w=" +
                                      a.to_string());
        }
        return part;
      },
      threads);
}

/// The forest conjecture and the Betti bound, as a ScanResult.
inline ScanResult scan_conjecture(int n, unsigned threads = worker_count()) {
  detail::require_scan_n(n);
  const ConjectureReport report = conjecture_scan(n, threads);
  ScanResult out;
  out.check = "conjecture";
  out.checked = report.pairs_checked;
  for (const auto& [w, u] : report.counterexamples) {
    out.counterexamples.push_back("w=" + w.to_string() + " u=" + u.to_string() +
                                  " (Gamma_w forest, Gamma_w(u) not)");
  }
  for (const auto& [w, u] : report.betti_violations) {
    out.counterexamples.push_back("w=" + w.to_string() + " u=" + u.to_string() +
                                  " (b1(Gamma_w(u)) > b1(Gamma_w))");
  }
  return out;
}

}  // namespace gtoc
