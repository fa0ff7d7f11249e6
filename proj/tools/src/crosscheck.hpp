#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hypercert/foxwright.hpp"
#include "hypercert/hypergeom.hpp"

namespace hypercert::cli {

/// Sampling box shared by the identity suites: u, v, w uniform in [-3, 5],
/// w kept kPoleMargin away from 0, -1, -2, ...; z uniform in |z| <= 0.95.
inline constexpr double kParamLo = -3.0;
inline constexpr double kParamHi = 5.0;
inline constexpr double kPoleMargin = 0.01;
inline constexpr double kSampleRadius = 0.95;

using Rng = std::mt19937_64;

/// Distance from x to the nearest nonpositive integer (inf for x > 0.5).
double pole_distance(double x);
HypergeomParams random_params(Rng& rng);
std::complex<double> random_disk_point(Rng& rng, double radius = kSampleRadius);
/// Unit-scaled Fox-Wright parameters with 1..3 factors on each side that
/// pass ps_validity, psi0 > 0 and sandwich_hypotheses; convergence is the
/// caller's concern.
FoxWrightParams random_fox_wright(Rng& rng);

/// Central difference step for the derivative suite.
inline constexpr double kFiniteDifferenceStep = 1e-6;

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  double worst = 0.0;  // largest deviation (or smallest slack) seen
  std::string worst_case;

  bool ok() const { return total > 0 && passed == total; }
};

struct CrosscheckOptions {
  std::uint64_t seed = 1;
  std::optional<std::size_t> samples;  // overrides every suite's default count
  std::vector<std::string> suites;     // empty = all
  double tol = kDefaultTolerance;
  SeriesOptions series;
};

/// Suite names in run order: ode, euler, derivative, foxwright, lemma1, starlike.
const std::vector<std::string>& crosscheck_suites();

/// Runs the property suites; each suite draws from its own generator seeded
/// from (seed, suite index), so subsets reproduce the full run.
std::vector<SuiteResult> run_crosscheck(const CrosscheckOptions& options);

}  // namespace hypercert::cli
