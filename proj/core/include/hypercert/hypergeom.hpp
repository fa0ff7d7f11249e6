#pragma once

#include <complex>

#include "hypercert/detail/extended.hpp"

namespace hypercert {

inline constexpr double kDefaultTolerance = 1e-12;
inline constexpr double kMinTolerance = 1e-14;
inline constexpr double kDefaultRMax = 0.99;
inline constexpr int kDefaultMaxTerms = 10000;

/// Real parameters (u, v, w) of F(u, v; w; z). w must avoid 0, -1, -2, ...
struct HypergeomParams {
  double u = 0.0;
  double v = 0.0;
  double w = 1.0;

  /// Throws ParamPoleError when w is within 1e-12 of a nonpositive integer.
  void validate() const;
  /// (u-1, v-1, w-1): the parameter shift relating zF to derivatives of F.
  HypergeomParams shifted_down() const { return {u - 1.0, v - 1.0, w - 1.0}; }

  friend bool operator==(const HypergeomParams&, const HypergeomParams&) = default;
};

enum class Precision {
  Automatic,  // double, re-summed in __float128 when rounding threatens tol
  Double,
  Extended,   // always __float128
};

struct SeriesOptions {
  double r_max = kDefaultRMax;
  int max_terms = kDefaultMaxTerms;
  Precision precision = Precision::Automatic;
};

/// A series value with a bound on the truncation error.
struct SeriesValue {
  std::complex<double> value;
  double tail_bound = 0.0;
  int terms_used = 0;
  bool extended = false;  // true when the __float128 path produced the value
};

/// F(u, v; w; z) for |z| <= r_max, with |value - F| <= tail_bound <=
/// tol * max(1, |value|) up to rounding.
SeriesValue gauss_2f1(const HypergeomParams& p, std::complex<double> z,
                      double tol = kDefaultTolerance, const SeriesOptions& options = {});

/// d^order F / dz^order for order in {1, 2}, by the parameter-shift identity
/// w F'(u,v;w;z) = u v F(u+1, v+1; w+1; z).
SeriesValue gauss_2f1_deriv(const HypergeomParams& p, std::complex<double> z, int order,
                            double tol = kDefaultTolerance,
                            const SeriesOptions& options = {});

/// The normalized function zF and its first two derivatives.
struct NormalizedValues {
  SeriesValue f;   // z F
  SeriesValue f1;  // F + z F'
  SeriesValue f2;  // 2 F' + z F''
};

NormalizedValues normalized_f(const HypergeomParams& p, std::complex<double> z,
                              double tol = kDefaultTolerance,
                              const SeriesOptions& options = {});

/// Residual of an identity together with the part of it explained by the
/// truncation bounds of the constituent series.
struct IdentityResidual {
  std::complex<double> value;
  double tail_budget = 0.0;
};

/// z(1-z)F'' + [w - (u+v+1) z] F' - u v F.
///
/// Unless options.precision is Double, the constituents are summed in
/// __float128 to tol * 1e-16, so the residual measures the evaluator rather
/// than double rounding.
IdentityResidual ode_residual(const HypergeomParams& p, std::complex<double> z,
                              double tol = kDefaultTolerance,
                              const SeriesOptions& options = {});

/// F(u,v;w;z) - (1-z)^(w-u-v) F(w-u, w-v; w; z), principal branch. Same
/// precision policy as ode_residual.
IdentityResidual euler_transform_residual(const HypergeomParams& p, std::complex<double> z,
                                          double tol = kDefaultTolerance,
                                          const SeriesOptions& options = {});

namespace detail {

/// Internal-precision tolerance used by the identity residuals.
inline constexpr double kExtendedToleranceScale = 1e-16;

struct ExtendedValue {
  cquad value;
  double tail_bound = 0.0;
  int terms_used = 0;
};

/// d^order F / dz^order summed in __float128 (any order >= 0). No lower bound
/// on tol; used by identity checks and test oracles.
ExtendedValue gauss_2f1_extended(const HypergeomParams& p, const cquad& z, int order,
                                 double tol, int max_terms = kDefaultMaxTerms);

}  // namespace detail
}  // namespace hypercert
