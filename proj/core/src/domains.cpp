#include "hypercert/domains.hpp"

#include <cmath>
#include <string>

#include "hypercert/errors.hpp"

namespace hypercert {

std::string_view to_string(JanowskiConvention c) {
  return c == JanowskiConvention::PlusD ? "plus" : "minus";
}

bool JanowskiPair::valid() const {
  return std::isfinite(C) && std::isfinite(D) && D >= -1.0 && C <= 1.0 && C - D >= 1e-9;
}

void JanowskiPair::validate() const {
  if (!valid()) {
    throw InvalidPairError("Janowski pair requires -1 <= D < C <= 1, got C = " +
                           std::to_string(C) + ", D = " + std::to_string(D));
  }
}

Membership in_exp_disk(std::complex<double> x) {
  const double margin = kExpDiskRadius - std::abs(x - 1.0);
  return {margin > 0.0, margin};
}

Membership in_exp_image(std::complex<double> x) {
  if (x == std::complex<double>(0.0)) {
    throw ZeroArgumentError("in_exp_image: 0 has no logarithm");
  }
  const double margin = 1.0 - std::abs(std::log(x));
  return {margin > 0.0, margin};
}

RegionDescriptor janowski_region(const JanowskiPair& j) {
  j.validate();
  RegionDescriptor r;
  if (j.D == -1.0) {
    r.kind = RegionDescriptor::Kind::HalfPlane;
    r.boundary_re = (1.0 - j.C) / 2.0;
    return r;
  }
  const double denom = 1.0 - j.D * j.D;
  r.kind = RegionDescriptor::Kind::Disk;
  r.center = (1.0 - j.C * j.D) / denom;
  r.radius = (j.C - j.D) / denom;
  return r;
}

Membership in_janowski(std::complex<double> x, const JanowskiPair& j) {
  const RegionDescriptor r = janowski_region(j);
  double margin = 0.0;
  if (r.kind == RegionDescriptor::Kind::HalfPlane) {
    margin = x.real() - r.boundary_re;
  } else {
    margin = r.radius - std::abs(x - r.center);
  }
  return {margin > 0.0, margin};
}

}  // namespace hypercert
