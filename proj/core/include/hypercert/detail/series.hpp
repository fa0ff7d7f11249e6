#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "hypercert/detail/extended.hpp"
#include "hypercert/errors.hpp"

namespace hypercert::detail {

/// Partial sum of the Gauss series in working precision `Real`.
template <class Real>
struct PartialSum {
  std::complex<Real> value;
  double tail_bound = 0.0;  // rigorous bound on the omitted terms
  double rounding = 0.0;    // a-posteriori estimate of accumulated rounding
  int terms_used = 0;
  bool finite = true;
};

/// Supremum over k >= k0 of |(u+k)(v+k)| / (|w+k| (k+1)); +inf when k0 <= |w|.
/// Symmetric in u and v, so F(u,v;w;z) and F(v,u;w;z) stop at the same term.
inline double sup_term_ratio(double u, double v, double w, double k0) {
  const double au = std::abs(u), av = std::abs(v), aw = std::abs(w);
  if (k0 <= aw) return std::numeric_limits<double>::infinity();
  const double hi = std::max(au, av), lo = std::min(au, av);
  const double first = std::max(1.0, (k0 + hi) / (k0 + 1.0));
  const double second = (k0 + lo) / (k0 - aw);
  return first * second * (1.0 + 1e-12);
}

/// Sums sum_n (u)_n (v)_n / ((w)_n n!) z^n until the rigorous geometric tail
/// bound drops below tol * max(1, |partial sum|).
///
/// The bound |t_{n+1}| / (1 - q) is applied only after five consecutive
/// observed ratios below (1+|z|)/2 and only when q, the supremum of the ratio
/// over every remaining index, is itself below that level.
template <class Real>
PartialSum<Real> sum_gauss_series(Real u, Real v, Real w, std::complex<Real> z,
                                  double tol, int max_terms) {
  PartialSum<Real> out;
  out.value = std::complex<Real>(1);
  out.terms_used = 1;
  if (z == std::complex<Real>(0)) return out;

  const double abs_z = magnitude(z);
  const double onset_level = 0.5 * (1.0 + abs_z);
  const double ud = to_double(u), vd = to_double(v), wd = to_double(w);
  constexpr double eps = unit_roundoff<Real>();

  std::complex<Real> term(1);
  std::complex<Real> sum(1);
  double rounding_weight = 1.0;
  int consecutive = 0;

  for (int n = 0;; ++n) {
    const Real k = static_cast<Real>(n);
    const Real coefficient = ((u + k) * (v + k)) / ((w + k) * (k + Real(1)));
    const std::complex<Real> next = term * z * coefficient;

    if (next == std::complex<Real>(0)) {
      ++out.terms_used;  // the vanishing term closes a terminating series
      out.tail_bound = 0.0;
      break;
    }

    const double next_abs = magnitude(next);
    const double term_abs = magnitude(term);
    if (!std::isfinite(next_abs) || !std::isfinite(term_abs)) {
      out.finite = false;
      break;
    }
    consecutive = (next_abs <= onset_level * term_abs) ? consecutive + 1 : 0;
    if (consecutive >= 5) {
      const double q = abs_z * sup_term_ratio(ud, vd, wd, n + 1.0);
      if (q <= onset_level) {
        const double tail = next_abs / (1.0 - q);
        if (tail <= tol * std::max(1.0, magnitude(sum))) {
          out.tail_bound = tail;
          break;
        }
      }
    }

    sum += next;
    term = next;
    rounding_weight += std::sqrt(n + 2.0) * next_abs;
    ++out.terms_used;
    if (out.terms_used >= max_terms) {
      throw NoConvergenceError("hypergeometric series did not reach tolerance within " +
                               std::to_string(max_terms) + " terms");
    }
  }

  out.value = sum;
  out.rounding = 2.0 * eps * rounding_weight;
  if (!std::isfinite(magnitude(sum))) out.finite = false;
  return out;
}

}  // namespace hypercert::detail
