#pragma once

#include <complex>
#include <optional>
#include <string_view>
#include <vector>

#include "hypercert/certify.hpp"
#include "hypercert/domains.hpp"
#include "hypercert/hypergeom.hpp"

namespace hypercert {

/// Polar sampling grid of the disk |z| <= r_max: every radius crossed with
/// `angles` equally spaced arguments starting at 0.
struct DiskGrid {
  std::vector<double> radii;
  int angles = 256;
  double r_max = kDefaultRMax;

  /// radii strictly increasing in (0, r_max], angles >= 1, 0 < r_max <= 0.99.
  void validate() const;
  std::size_t size() const { return radii.size() * static_cast<std::size_t>(angles); }
  std::complex<double> point(std::size_t radius_index, int angle_index) const;

  /// `count` radii geometrically spaced from 0.05 to r_max.
  static DiskGrid standard(int count = 32, int angles = 256, double r_max = kDefaultRMax);
  /// Inserts midpoints between consecutive radii and doubles the angle count;
  /// the result contains every point of *this.
  DiskGrid refined() const;
};

enum class FunctionalKind {
  Function,          // F
  ExpConvex,         // 1 + z f''/f' with f = zF
  ExpStarlike,       // z g'/g with g = zF
  JanowskiConvex,    // 1 + z F''/F'
  JanowskiStarlike,  // z g'/g with g = zF
};

std::string_view to_string(FunctionalKind k);
std::optional<FunctionalKind> parse_functional_kind(std::string_view s);

struct Target {
  enum class Kind { ExpDisk, ExpImage, Janowski };
  Kind kind = Kind::ExpDisk;
  JanowskiPair pair;  // Janowski only

  static Target exp_disk() { return {Kind::ExpDisk, {}}; }
  static Target exp_image() { return {Kind::ExpImage, {}}; }
  static Target janowski(const JanowskiPair& j) { return {Kind::Janowski, j}; }
};

std::string_view to_string(Target::Kind k);

/// The quantity each theorem-level claim is about, and its natural target.
FunctionalKind functional_for(ConditionSet set);
Target target_for(ConditionSet set, const std::optional<JanowskiPair>& pair);

/// Moduli below this make a quotient functional numerically meaningless.
inline constexpr double kDenominatorThreshold = 1e-8;

/// Value of the functional at z; exact value 1 at z = 0 for the quotient
/// kinds. Throws DenominatorError when the quotient's denominator has modulus
/// below kDenominatorThreshold.
std::complex<double> eval_functional(FunctionalKind kind, const HypergeomParams& p,
                                     std::complex<double> z, double tol = kDefaultTolerance,
                                     const SeriesOptions& options = {});

/// Membership of a functional value in the target region.
Membership target_membership(const Target& target, std::complex<double> x);

struct GridSample {
  std::complex<double> z;
  std::complex<double> value;
  double margin = 0.0;
};

struct VerificationReport {
  FunctionalKind kind = FunctionalKind::Function;
  Target target;
  HypergeomParams params;
  std::size_t samples = 0;
  std::size_t violations = 0;
  double min_margin = 0.0;
  std::complex<double> worst_point;
  std::complex<double> worst_value;
  std::vector<std::complex<double>> denominator_alerts;
  std::vector<std::complex<double>> evaluation_errors;
  std::vector<GridSample> counterexamples;  // first kMaxCounterexamples, grid order
  bool passed = false;

  static constexpr std::size_t kMaxCounterexamples = 16;
};

/// Evaluates the functional at every grid point and tests membership. Per
/// point failures are collected in the alert lists; a parameter pole aborts.
/// Grid is traversed radius-major, angle-minor; the report does not depend on
/// evaluation order.
VerificationReport verify_on_disk(FunctionalKind kind, const HypergeomParams& p,
                                  const Target& target, const DiskGrid& grid,
                                  double tol = kDefaultTolerance,
                                  const SeriesOptions& options = {});

/// z (zF)'/(zF) - [1 + z F''(p-1)/F'(p-1)], both sides summed in __float128.
/// Throws DenominatorError when F or F'(p-1) is below the alert threshold.
std::complex<double> starlike_identity_residual(const HypergeomParams& p,
                                                std::complex<double> z,
                                                double tol = kDefaultTolerance,
                                                const SeriesOptions& options = {});

}  // namespace hypercert
