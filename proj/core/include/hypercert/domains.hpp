#pragma once

#include <complex>
#include <string_view>

namespace hypercert {

/// 1 - 1/e, the radius of the disk about 1 that sits inside exp(D).
inline constexpr double kExpDiskRadius = 0.63212055882855767840;

/// Which Moebius map the caller had in mind. Both send the unit disk onto the
/// same set, so membership does not depend on it; certificates echo it.
enum class JanowskiConvention {
  PlusD,   // (1 + Cz) / (1 + Dz)
  MinusD,  // (1 + Cz) / (1 - Dz)
};

std::string_view to_string(JanowskiConvention c);

/// Janowski parameters with -1 <= D < C <= 1.
struct JanowskiPair {
  double C = 1.0;
  double D = -1.0;
  JanowskiConvention convention = JanowskiConvention::MinusD;

  bool valid() const;
  /// Throws InvalidPairError unless -1 <= D < C <= 1 and C - D >= 1e-9.
  void validate() const;
};

/// Outcome of a membership test. margin > 0 inside, < 0 outside.
struct Membership {
  bool inside = false;
  double margin = 0.0;
};

struct RegionDescriptor {
  enum class Kind { Disk, HalfPlane };
  Kind kind = Kind::Disk;
  std::complex<double> center;  // Disk
  double radius = 0.0;          // Disk
  double boundary_re = 0.0;     // HalfPlane: Re x > boundary_re
};

/// |x - 1| < 1 - 1/e.
Membership in_exp_disk(std::complex<double> x);

/// |Log x| < 1 (principal branch), i.e. x in exp(D). Throws
/// ZeroArgumentError for x = 0.
Membership in_exp_image(std::complex<double> x);

/// Image of the unit disk under (1 + Cz)/(1 + Dz).
RegionDescriptor janowski_region(const JanowskiPair& j);

/// Membership in janowski_region(j); disk margin is radius minus distance to
/// the center, half-plane margin is Re x - boundary_re.
Membership in_janowski(std::complex<double> x, const JanowskiPair& j);

}  // namespace hypercert
