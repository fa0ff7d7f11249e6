#pragma once

#include <cmath>

namespace hypercert {

/// Distance below which a real is treated as a nonpositive integer.
inline constexpr double kPoleTolerance = 1e-12;

/// log|Gamma(x)| together with the sign of Gamma(x).
struct SignedLogGamma {
  double log_abs = 0.0;
  int sign = 1;

  double value() const { return sign * std::exp(log_abs); }
};

/// True when x lies within `tol` of one of 0, -1, -2, ...
bool is_nonpositive_integer(double x, double tol = kPoleTolerance);

/// sin(pi x) with argument reduction done before the multiplication by pi,
/// so that integers give exact zeros.
double sin_pi(double x);

/// Lanczos approximation (g = 7, nine coefficients) for x >= 1/2, reflection
/// below. Throws PoleError at the poles of Gamma.
SignedLogGamma log_gamma_signed(double x);

/// Rising factorial (a)_n = a (a+1) ... (a+n-1), by direct product so that
/// nonpositive integer `a` with |a| < n gives an exact zero.
double pochhammer(double a, unsigned n);

}  // namespace hypercert
