#pragma once

// Helpers for the __float128 summation path. GCC-specific.

#include <cmath>
#include <complex>
#include <limits>

namespace hypercert::detail {

using quad = __float128;
using cquad = std::complex<quad>;

template <class Real>
constexpr double unit_roundoff() {
  if constexpr (std::is_same_v<Real, quad>) {
    return 1.925929944387235853e-34;  // 2^-112
  } else {
    return std::numeric_limits<Real>::epsilon();
  }
}

inline double to_double(double x) { return x; }
inline double to_double(quad x) { return static_cast<double>(x); }

template <class Real>
std::complex<double> to_complex_double(const std::complex<Real>& z) {
  return {to_double(z.real()), to_double(z.imag())};
}

/// |z| evaluated in double; adequate for bounds and stopping rules.
template <class Real>
double magnitude(const std::complex<Real>& z) {
  return std::hypot(to_double(z.real()), to_double(z.imag()));
}

/// Principal branch base^alpha = exp(alpha Log base).
std::complex<double> principal_pow(std::complex<double> base, double alpha);
cquad principal_pow(const cquad& base, quad alpha);

}  // namespace hypercert::detail
