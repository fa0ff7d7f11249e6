#include "hypercert/hypergeom.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hypercert/detail/series.hpp"
#include "hypercert/errors.hpp"
#include "hypercert/specfun.hpp"

namespace hypercert {
namespace detail {

std::complex<double> principal_pow(std::complex<double> base, double alpha) {
  return std::exp(alpha * std::log(base));
}

cquad principal_pow(const cquad& base, quad alpha) {
  __complex128 b;
  __real__ b = base.real();
  __imag__ b = base.imag();
  __complex128 a;
  __real__ a = alpha;
  __imag__ a = 0;
  const __complex128 r = cexpq(a * clogq(b));
  return {crealq(r), cimagq(r)};
}

}  // namespace detail

namespace {

using detail::cquad;
using detail::quad;

void check_tolerance(double tol) {
  if (!(tol >= kMinTolerance) || !std::isfinite(tol)) {
    throw DomainError("tolerance must be >= 1e-14, got " + std::to_string(tol));
  }
}

void check_options(const SeriesOptions& options) {
  if (!(options.r_max > 0.0 && options.r_max < 1.0)) {
    throw DomainError("r_max must lie in (0, 1)");
  }
  if (options.max_terms < 2) throw DomainError("max_terms must be at least 2");
}

// Points built as polar(r_max, theta) can land a few ulps outside r_max.
constexpr double kRadiusSlack = 1.0 + 8.0 * std::numeric_limits<double>::epsilon();

void check_radius(std::complex<double> z, const SeriesOptions& options) {
  if (!(std::abs(z) <= options.r_max * kRadiusSlack)) {
    throw DomainError("|z| = " + std::to_string(std::abs(z)) + " exceeds r_max = " +
                      std::to_string(options.r_max));
  }
}

// (u)_k (v)_k / (w)_k in working precision.
template <class Real>
Real shift_factor(Real u, Real v, Real w, int order) {
  Real c = 1;
  for (int j = 0; j < order; ++j) {
    c *= (u + Real(j)) * (v + Real(j)) / (w + Real(j));
  }
  return c;
}

template <class Real>
struct Scaled {
  std::complex<Real> value;
  double tail_bound = 0.0;
  double rounding = 0.0;
  int terms_used = 0;
  bool finite = true;
};

template <class Real>
Scaled<Real> derivative_in(const HypergeomParams& p, std::complex<Real> z, int order,
                           double tol, int max_terms) {
  const Real u = p.u, v = p.v, w = p.w;
  const Real c = shift_factor(u, v, w, order);
  const double c_abs = std::abs(detail::to_double(c));
  const double inner_tol = tol / std::max(1.0, c_abs);
  const Real k = static_cast<Real>(order);
  const auto partial = detail::sum_gauss_series<Real>(u + k, v + k, w + k, z, inner_tol, max_terms);
  Scaled<Real> out;
  out.value = partial.value * c;
  out.tail_bound = partial.tail_bound * c_abs;
  out.rounding = partial.rounding * c_abs;
  out.terms_used = partial.terms_used;
  out.finite = partial.finite && std::isfinite(c_abs);
  return out;
}

SeriesValue derivative_value(const HypergeomParams& p, std::complex<double> z, int order,
                             double tol, const SeriesOptions& options) {
  p.validate();
  check_tolerance(tol);
  check_options(options);
  check_radius(z, options);

  if (options.precision != Precision::Extended) {
    const auto d = derivative_in<double>(p, z, order, tol, options.max_terms);
    const double scale = std::max(1.0, std::abs(d.value));
    const bool accurate = d.finite && d.rounding <= tol * scale;
    if (options.precision == Precision::Double || accurate) {
      if (!d.finite) throw NoConvergenceError("hypergeometric series overflowed in double");
      return {d.value, d.tail_bound, d.terms_used, false};
    }
  }
  const auto q = derivative_in<quad>(p, cquad(z.real(), z.imag()), order, tol, options.max_terms);
  if (!q.finite) throw NoConvergenceError("hypergeometric series overflowed");
  return {detail::to_complex_double(q.value), q.tail_bound, q.terms_used, true};
}

}  // namespace

void HypergeomParams::validate() const {
  if (!std::isfinite(u) || !std::isfinite(v) || !std::isfinite(w)) {
    throw ParamPoleError("hypergeometric parameters must be finite");
  }
  if (is_nonpositive_integer(w)) {
    throw ParamPoleError("w = " + std::to_string(w) + " is a nonpositive integer");
  }
}

SeriesValue gauss_2f1(const HypergeomParams& p, std::complex<double> z, double tol,
                      const SeriesOptions& options) {
  return derivative_value(p, z, 0, tol, options);
}

SeriesValue gauss_2f1_deriv(const HypergeomParams& p, std::complex<double> z, int order,
                            double tol, const SeriesOptions& options) {
  if (order != 1 && order != 2) {
    throw DomainError("derivative order must be 1 or 2");
  }
  return derivative_value(p, z, order, tol, options);
}

NormalizedValues normalized_f(const HypergeomParams& p, std::complex<double> z, double tol,
                              const SeriesOptions& options) {
  const SeriesValue f0 = gauss_2f1(p, z, tol, options);
  const SeriesValue d1 = gauss_2f1_deriv(p, z, 1, tol, options);
  const SeriesValue d2 = gauss_2f1_deriv(p, z, 2, tol, options);
  const double az = std::abs(z);
  const bool ext = f0.extended || d1.extended || d2.extended;
  const int terms = std::max({f0.terms_used, d1.terms_used, d2.terms_used});

  NormalizedValues out;
  out.f = {z * f0.value, az * f0.tail_bound, f0.terms_used, f0.extended};
  out.f1 = {f0.value + z * d1.value, f0.tail_bound + az * d1.tail_bound,
            std::max(f0.terms_used, d1.terms_used), f0.extended || d1.extended};
  out.f2 = {2.0 * d1.value + z * d2.value, 2.0 * d1.tail_bound + az * d2.tail_bound, terms, ext};
  return out;
}

namespace detail {

ExtendedValue gauss_2f1_extended(const HypergeomParams& p, const cquad& z, int order,
                                 double tol, int max_terms) {
  p.validate();
  if (order < 0) throw DomainError("derivative order must be nonnegative");
  const auto d = derivative_in<quad>(p, z, order, tol, max_terms);
  if (!d.finite) throw NoConvergenceError("hypergeometric series overflowed");
  return {d.value, d.tail_bound, d.terms_used};
}

}  // namespace detail

IdentityResidual ode_residual(const HypergeomParams& p, std::complex<double> z, double tol,
                              const SeriesOptions& options) {
  p.validate();
  check_tolerance(tol);
  check_options(options);
  check_radius(z, options);

  const double s = p.u + p.v + 1.0;
  if (options.precision == Precision::Double) {
    SeriesOptions opts = options;
    const auto f = gauss_2f1(p, z, tol, opts);
    const auto d1 = gauss_2f1_deriv(p, z, 1, tol, opts);
    const auto d2 = gauss_2f1_deriv(p, z, 2, tol, opts);
    const auto a = z * (1.0 - z);
    const auto b = p.w - s * z;
    const double uv = p.u * p.v;
    return {a * d2.value + b * d1.value - uv * f.value,
            std::abs(a) * d2.tail_bound + std::abs(b) * d1.tail_bound +
                std::abs(uv) * f.tail_bound};
  }

  const double inner = tol * detail::kExtendedToleranceScale;
  const cquad zq(z.real(), z.imag());
  const auto f = detail::gauss_2f1_extended(p, zq, 0, inner, options.max_terms);
  const auto d1 = detail::gauss_2f1_extended(p, zq, 1, inner, options.max_terms);
  const auto d2 = detail::gauss_2f1_extended(p, zq, 2, inner, options.max_terms);
  const cquad a = zq * (cquad(1) - zq);
  const cquad b = cquad(quad(p.w)) - quad(p.u + quad(p.v) + 1) * zq;
  const quad uv = quad(p.u) * quad(p.v);
  const cquad r = a * d2.value + b * d1.value - uv * f.value;
  return {detail::to_complex_double(r),
          detail::magnitude(a) * d2.tail_bound + detail::magnitude(b) * d1.tail_bound +
              std::abs(detail::to_double(uv)) * f.tail_bound};
}

IdentityResidual euler_transform_residual(const HypergeomParams& p, std::complex<double> z,
                                          double tol, const SeriesOptions& options) {
  p.validate();
  check_tolerance(tol);
  check_options(options);
  check_radius(z, options);

  const HypergeomParams mirrored{p.w - p.u, p.w - p.v, p.w};
  if (options.precision == Precision::Double) {
    const auto lhs = gauss_2f1(p, z, tol, options);
    const auto rhs = gauss_2f1(mirrored, z, tol, options);
    const auto factor = detail::principal_pow(1.0 - z, p.w - p.u - p.v);
    return {lhs.value - factor * rhs.value,
            lhs.tail_bound + std::abs(factor) * rhs.tail_bound};
  }

  const double inner = tol * detail::kExtendedToleranceScale;
  const cquad zq(z.real(), z.imag());
  const auto lhs = detail::gauss_2f1_extended(p, zq, 0, inner, options.max_terms);
  // Mirror the parameters in quad so w-u, w-v carry no double rounding.
  const quad u = p.u, v = p.v, w = p.w;
  const auto rhs_partial =
      detail::sum_gauss_series<quad>(w - u, w - v, w, zq, inner, options.max_terms);
  if (!rhs_partial.finite) throw NoConvergenceError("hypergeometric series overflowed");
  const cquad factor = detail::principal_pow(cquad(1) - zq, w - u - v);
  const cquad r = lhs.value - factor * rhs_partial.value;
  return {detail::to_complex_double(r),
          lhs.tail_bound + detail::magnitude(factor) * rhs_partial.tail_bound};
}

}  // namespace hypercert
