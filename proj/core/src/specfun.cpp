#include "hypercert/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hypercert/errors.hpp"

namespace hypercert {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

// log Gamma(x) for x >= 1/2.
double lanczos_log_gamma(double x) {
  const double xm = x - 1.0;
  double series = kLanczosCoefficients[0];
  for (std::size_t i = 1; i < kLanczosCoefficients.size(); ++i) {
    series += kLanczosCoefficients[i] / (xm + static_cast<double>(i));
  }
  const double t = xm + kLanczosG + 0.5;
  constexpr double half_log_two_pi = 0.91893853320467274178;
  return half_log_two_pi + (xm + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

bool is_nonpositive_integer(double x, double tol) {
  if (x > tol) return false;
  return std::abs(x - std::round(x)) < tol;
}

double sin_pi(double x) {
  // Reduce to r in [-1, 1): sin(pi x) = sin(pi r).
  double r = std::fmod(x, 2.0);
  if (r >= 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  if (r == 0.0 || r == -1.0) return 0.0;
  // Fold into [-1/2, 1/2] using sin(pi r) = sin(pi (sign(r) - r)).
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(std::numbers::pi * r);
}

SignedLogGamma log_gamma_signed(double x) {
  if (std::isnan(x)) throw PoleError("log_gamma_signed: NaN argument");
  if (is_nonpositive_integer(x)) {
    throw PoleError("log_gamma_signed: argument " + std::to_string(x) +
                    " is at a pole of Gamma");
  }
  if (x >= 0.5) return {lanczos_log_gamma(x), 1};

  // Gamma(x) Gamma(1-x) = pi / sin(pi x); Gamma(1-x) > 0 here.
  const double s = sin_pi(x);
  SignedLogGamma out;
  out.log_abs = std::log(std::numbers::pi) - std::log(std::abs(s)) -
                lanczos_log_gamma(1.0 - x);
  out.sign = s > 0 ? 1 : -1;
  return out;
}

double pochhammer(double a, unsigned n) {
  double product = 1.0;
  for (unsigned k = 0; k < n; ++k) {
    product *= a + static_cast<double>(k);
  }
  return product;
}

}  // namespace hypercert
