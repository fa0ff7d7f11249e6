#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hypercert/domains.hpp"
#include "hypercert/errors.hpp"
#include "oracles.hpp"

namespace hypercert {
namespace {

using cd = std::complex<double>;

JanowskiPair pair(double C, double D) {
  JanowskiPair j;
  j.C = C;
  j.D = D;
  return j;
}

TEST(ExpDisk, Examples) {
  const auto center = in_exp_disk(1.0);
  EXPECT_TRUE(center.inside);
  EXPECT_NEAR(center.margin, 1.0 - 1.0 / std::numbers::e, 1e-15);
  const auto out = in_exp_disk(1.7);
  EXPECT_FALSE(out.inside);
  EXPECT_NEAR(out.margin, -0.0679, 1e-4);
  const auto edge = in_exp_disk(cd(1.0, 0.6321206));
  EXPECT_FALSE(edge.inside);
  EXPECT_NEAR(edge.margin, 0.0, 1e-7);
}

TEST(ExpImage, Examples) {
  const auto one = in_exp_image(1.0);
  EXPECT_TRUE(one.inside);
  EXPECT_EQ(one.margin, 1.0);
  const auto admitted = in_exp_image(1.7);
  EXPECT_TRUE(admitted.inside);
  EXPECT_NEAR(admitted.margin, 1.0 - std::log(1.7), 1e-15);
  EXPECT_FALSE(in_exp_disk(1.7).inside);
  const auto beyond = in_exp_image(std::numbers::e * 1.001);
  EXPECT_FALSE(beyond.inside);
  EXPECT_LT(beyond.margin, 0.0);
  EXPECT_THROW(in_exp_image(0.0), ZeroArgumentError);
}

TEST(ExpImage, NegativeAxisIsOutside) {
  const auto m = in_exp_image(-1.0);
  EXPECT_FALSE(m.inside);
  EXPECT_NEAR(m.margin, 1.0 - std::numbers::pi, 1e-15);
}

TEST(ExpImage, ContainsLemmaDisk) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int checked = 0;
  while (checked < 10000) {
    const cd x = 1.0 + std::polar(kExpDiskRadius * std::sqrt(unit(rng)),
                                  2 * std::numbers::pi * unit(rng));
    if (!in_exp_disk(x).inside) continue;
    ++checked;
    ASSERT_TRUE(in_exp_image(x).inside) << x;
  }
}

TEST(JanowskiRegion, Examples) {
  const auto half = janowski_region(pair(1, -1));
  EXPECT_EQ(half.kind, RegionDescriptor::Kind::HalfPlane);
  EXPECT_EQ(half.boundary_re, 0.0);
  const auto disk = janowski_region(pair(0.3, 0));
  EXPECT_EQ(disk.kind, RegionDescriptor::Kind::Disk);
  EXPECT_EQ(disk.center, cd(1.0));
  EXPECT_NEAR(disk.radius, 0.3, 1e-16);
  const auto sym = janowski_region(pair(0.5, -0.5));
  EXPECT_NEAR(sym.center.real(), 5.0 / 3.0, 1e-15);
  EXPECT_NEAR(sym.radius, 4.0 / 3.0, 1e-15);
}

TEST(JanowskiRegion, BoundaryImagesLieOnDescriptor) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    double D = -1.0 + 1.98 * unit(rng);
    if (trial % 10 == 0) D = -1.0;
    const double C = D + (1.0 - D) * (0.01 + 0.99 * unit(rng));
    const auto region = janowski_region(pair(C, D));
    for (const cd x : oracle::mobius_boundary(C, D)) {
      if (region.kind == RegionDescriptor::Kind::Disk) {
        EXPECT_NEAR(std::abs(x - region.center), region.radius, 1e-9) << C << " " << D;
      } else {
        EXPECT_NEAR(x.real(), region.boundary_re, 1e-9) << C << " " << D;
      }
    }
  }
}

TEST(InJanowski, Examples) {
  EXPECT_TRUE(in_janowski(1.0, pair(1, -1)).inside);
  EXPECT_TRUE(in_janowski(1.0, pair(0.25, 0)).inside);
  EXPECT_TRUE(in_janowski(1.0, pair(-0.2, -0.9)).inside);
  const auto far = in_janowski(3.0, pair(1, -1));
  EXPECT_TRUE(far.inside);
  EXPECT_EQ(far.margin, 3.0);
  const auto off = in_janowski(cd(1.0, 0.6), pair(0.5, 0));
  EXPECT_FALSE(off.inside);
  EXPECT_NEAR(off.margin, -0.1, 1e-15);
}

TEST(InJanowski, ConventionDoesNotChangeMembership) {
  for (const cd x : {cd(0.4, 0.2), cd(1.5, -0.7), cd(2.0, 0.0)}) {
    auto plus = pair(0.75, -0.25), minus = pair(0.75, -0.25);
    plus.convention = JanowskiConvention::PlusD;
    minus.convention = JanowskiConvention::MinusD;
    EXPECT_EQ(in_janowski(x, plus).inside, in_janowski(x, minus).inside);
    EXPECT_EQ(in_janowski(x, plus).margin, in_janowski(x, minus).margin);
  }
}

TEST(Margins, SignMatchesMembership) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> box(-3.0, 3.0);
  const JanowskiPair j = pair(0.5, -0.5);
  for (int i = 0; i < 2000; ++i) {
    const cd x(box(rng), box(rng));
    for (const Membership m : {in_exp_disk(x), in_exp_image(x), in_janowski(x, j)}) {
      EXPECT_EQ(m.inside, m.margin > 0.0) << x;
    }
  }
}

TEST(JanowskiPairValidity, Bounds) {
  EXPECT_TRUE(pair(1, -1).valid());
  EXPECT_FALSE(pair(0.5, 0.5).valid());
  EXPECT_FALSE(pair(1.1, 0).valid());
  EXPECT_FALSE(pair(0, -1.1).valid());
  EXPECT_FALSE(pair(0.2, 0.2 - 1e-12).valid());
  EXPECT_THROW(pair(0.2, 0.5).validate(), InvalidPairError);
}

}  // namespace
}  // namespace hypercert
