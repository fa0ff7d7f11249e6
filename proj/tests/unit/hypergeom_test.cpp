#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "hypercert/errors.hpp"
#include "hypercert/hypergeom.hpp"
#include "oracles.hpp"

namespace hypercert {
namespace {

using cd = std::complex<double>;

TEST(Gauss2F1, OriginIsExactlyOne) {
  for (HypergeomParams p : {HypergeomParams{0.5, 0.3, 1.7}, HypergeomParams{-3, 4, -2.5}}) {
    const auto s = gauss_2f1(p, 0.0);
    EXPECT_EQ(s.value, cd(1.0));
    EXPECT_EQ(s.tail_bound, 0.0);
    EXPECT_GE(s.terms_used, 1);
  }
}

TEST(Gauss2F1, LogarithmClosedForm) {
  const auto s = gauss_2f1({1, 1, 2}, 0.5);
  EXPECT_NEAR(s.value.real(), 2.0 * std::log(2.0), 1e-12);
  EXPECT_EQ(s.value.imag(), 0.0);
  // Direct summation of sum z^n / (n+1).
  double direct = 0.0, zn = 1.0;
  for (int n = 0; n < 200; ++n, zn *= 0.5) direct += zn / (n + 1);
  EXPECT_NEAR(s.value.real(), direct, 1e-12);
}

TEST(Gauss2F1, BinomialClosedForm) {
  const auto s = gauss_2f1({2, 3, 3}, 0.5);
  EXPECT_NEAR(s.value.real(), 4.0, 4e-12);
  // Term-by-term against the binomial series sum (2)_n z^n / n! = sum (n+1) z^n.
  double binomial = 0.0, zn = 1.0;
  for (int n = 0; n < 200; ++n, zn *= 0.5) binomial += (n + 1) * zn;
  EXPECT_NEAR(s.value.real(), binomial, 4e-12);
}

TEST(Gauss2F1, TailBoundMeetsTolerance) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> box(-3.0, 5.0), ang(0.0, 6.283185307179586);
  for (int i = 0; i < 100; ++i) {
    HypergeomParams p{box(rng), box(rng), box(rng)};
    if (std::abs(p.w - std::round(p.w)) < 0.01 && p.w < 0.5) continue;
    const cd z = std::polar(0.9, ang(rng));
    const auto s = gauss_2f1(p, z);
    EXPECT_LE(s.tail_bound, kDefaultTolerance * std::max(1.0, std::abs(s.value)));
    EXPECT_LE(s.terms_used, kDefaultMaxTerms);
  }
}

TEST(Gauss2F1, MatchesTermwiseOracleInsideDisk) {
  const HypergeomParams p{0.5, 0.3, 1.7};
  for (cd z : {cd(0.4, 0.3), cd(-0.9, 0.1), cd(0.0, 0.95), cd(0.98, 0.0)}) {
    const cd ref = oracle::termwise(p.u, p.v, p.w, z);
    EXPECT_LE(std::abs(gauss_2f1(p, z).value - ref), 1e-12 * std::abs(ref)) << z;
  }
}

TEST(Gauss2F1, SymmetricInNumeratorParameters) {
  const HypergeomParams p{0.5, 3.3, -1.7}, q{3.3, 0.5, -1.7};
  for (cd z : {cd(0.4, 0.3), cd(-0.9, 0.1), cd(0.6, -0.7)}) {
    const auto a = gauss_2f1(p, z), b = gauss_2f1(q, z);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.terms_used, b.terms_used);
  }
}

TEST(Gauss2F1, PolynomialCutoff) {
  for (int m = 0; m <= 6; ++m) {
    const HypergeomParams p{-static_cast<double>(m), 2.5, 1.5};
    const cd z(0.7, -0.2);
    const auto s = gauss_2f1(p, z);
    EXPECT_LE(s.terms_used, m + 2) << m;
    EXPECT_EQ(s.tail_bound, 0.0);
    EXPECT_NEAR(std::abs(s.value - oracle::termwise(p.u, p.v, p.w, z)), 0.0, 1e-13);
  }
}

TEST(Gauss2F1, Errors) {
  EXPECT_THROW(gauss_2f1({1, 1, 0}, 0.1), ParamPoleError);
  EXPECT_THROW(gauss_2f1({1, 1, -2}, 0.1), ParamPoleError);
  EXPECT_THROW(gauss_2f1({1, 1, -2 + 1e-13}, 0.1), ParamPoleError);
  EXPECT_THROW(gauss_2f1({1, 1, 2}, 0.995), DomainError);
  EXPECT_THROW(gauss_2f1({1, 1, 2}, cd(0.8, 0.8)), DomainError);
  EXPECT_THROW(gauss_2f1({1, 1, 2}, 0.5, 1e-15), DomainError);
  SeriesOptions tight;
  tight.max_terms = 10;
  EXPECT_THROW(gauss_2f1({1, 1, 2}, 0.9, 1e-12, tight), NoConvergenceError);
  SeriesOptions wide;
  wide.r_max = 0.999;
  EXPECT_NO_THROW(gauss_2f1({1, 1, 2}, 0.995, 1e-12, wide));
}

TEST(Gauss2F1, PrecisionModesAgree) {
  const HypergeomParams p{4.7, 4.9, -2.3};
  const cd z(0.93, 0.1);
  SeriesOptions ext;
  ext.precision = Precision::Extended;
  const auto a = gauss_2f1(p, z);
  const auto b = gauss_2f1(p, z, kDefaultTolerance, ext);
  EXPECT_TRUE(b.extended);
  EXPECT_LE(std::abs(a.value - b.value), 1e-11 * std::abs(b.value));
}

TEST(Gauss2F1Deriv, AtOrigin) {
  const HypergeomParams p{0.5, 0.3, 1.7};
  EXPECT_NEAR(gauss_2f1_deriv(p, 0.0, 1).value.real(), 0.5 * 0.3 / 1.7, 1e-16);
  EXPECT_NEAR(gauss_2f1_deriv(p, 0.0, 2).value.real(), 0.5 * 0.3 * 1.5 * 1.3 / (1.7 * 2.7),
              1e-16);
}

TEST(Gauss2F1Deriv, LogarithmClosedForm) {
  const double expected = 4.0 - 4.0 * std::log(2.0);
  const auto d = gauss_2f1_deriv({1, 1, 2}, 0.5, 1);
  EXPECT_NEAR(d.value.real(), expected, 1e-12);
  const double h = 1e-6;
  const double fd =
      (gauss_2f1({1, 1, 2}, 0.5 + h).value.real() - gauss_2f1({1, 1, 2}, 0.5 - h).value.real()) /
      (2 * h);
  EXPECT_NEAR(d.value.real(), fd, 1e-7);
}

TEST(Gauss2F1Deriv, MatchesTermwiseDifferentiation) {
  const HypergeomParams p{1.5, -0.7, 2.2};
  const cd z(-0.5, 0.6);
  for (int order : {1, 2}) {
    const cd ref = oracle::termwise(p.u, p.v, p.w, z, order);
    EXPECT_LE(std::abs(gauss_2f1_deriv(p, z, order).value - ref), 1e-11 * std::abs(ref));
  }
}

TEST(Gauss2F1Deriv, RejectsOtherOrders) {
  EXPECT_THROW(gauss_2f1_deriv({1, 1, 2}, 0.1, 0), DomainError);
  EXPECT_THROW(gauss_2f1_deriv({1, 1, 2}, 0.1, 3), DomainError);
}

TEST(NormalizedF, OriginValues) {
  const HypergeomParams p{0.5, 0.3, 1.7};
  const auto n = normalized_f(p, 0.0);
  EXPECT_EQ(n.f.value, cd(0.0));
  EXPECT_EQ(n.f1.value, cd(1.0));
  EXPECT_NEAR(n.f2.value.real(), 2 * 0.5 * 0.3 / 1.7, 1e-16);
  for (HypergeomParams q : {HypergeomParams{-2, 3, 0.5}, HypergeomParams{4, 4, -1.5}}) {
    EXPECT_EQ(normalized_f(q, 0.0).f1.value, cd(1.0));
  }
}

TEST(NormalizedF, LogarithmClosedForm) {
  const auto n = normalized_f({1, 1, 2}, 0.5);
  EXPECT_NEAR(n.f.value.real(), std::log(2.0), 1e-12);
}

TEST(OdeResidual, VanishesAtOriginExactly) {
  EXPECT_EQ(ode_residual({0.5, 0.3, 1.7}, 0.0).value, cd(0.0));
  EXPECT_EQ(ode_residual({-2.2, 4.1, -0.6}, 0.0).value, cd(0.0));
}

TEST(OdeResidual, Examples) {
  EXPECT_LT(std::abs(ode_residual({0.5, 0.3, 1.7}, cd(0.4, 0.3)).value), 1e-10);
  EXPECT_LT(std::abs(ode_residual({1, 1, 2}, 0.5).value), 1e-10);
}

TEST(OdeResidual, DoublePrecisionWithinTailBudget) {
  SeriesOptions dbl;
  dbl.precision = Precision::Double;
  const auto r = ode_residual({0.5, 0.3, 1.7}, cd(0.4, 0.3), kDefaultTolerance, dbl);
  EXPECT_LT(std::abs(r.value), 1e-12);
  EXPECT_GT(r.tail_budget, 0.0);
}

TEST(EulerTransformResidual, Examples) {
  EXPECT_EQ(euler_transform_residual({0.5, 0.3, 1.7}, 0.0).value, cd(0.0));
  EXPECT_LT(std::abs(euler_transform_residual({0.5, 0.3, 1.7}, cd(0.4, 0.3)).value), 1e-10);
  EXPECT_LT(std::abs(euler_transform_residual({2.5, -1.3, 0.7}, cd(-0.9, 0.2)).value), 1e-10);
}

}  // namespace
}  // namespace hypercert
