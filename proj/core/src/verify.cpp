#include "hypercert/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hypercert/detail/series.hpp"
#include "hypercert/errors.hpp"

namespace hypercert {
namespace {

void check_denominator(std::complex<double> d, std::string_view what) {
  if (!(std::abs(d) >= kDenominatorThreshold)) {
    throw DenominatorError(std::string(what) + " has modulus " + std::to_string(std::abs(d)) +
                           " below the alert threshold");
  }
}

// F, F', F'' at one point; only the orders a functional needs are filled.
using Derivatives = std::array<std::complex<double>, 3>;

int lowest_order(FunctionalKind kind) { return kind == FunctionalKind::JanowskiConvex ? 1 : 0; }

int highest_order(FunctionalKind kind) {
  switch (kind) {
    case FunctionalKind::Function: return 0;
    case FunctionalKind::ExpStarlike:
    case FunctionalKind::JanowskiStarlike: return 1;
    case FunctionalKind::ExpConvex:
    case FunctionalKind::JanowskiConvex: return 2;
  }
  return 2;
}

std::complex<double> functional_from(FunctionalKind kind, std::complex<double> z,
                                     const Derivatives& d) {
  switch (kind) {
    case FunctionalKind::Function: return d[0];
    case FunctionalKind::ExpConvex: {
      // f = zF: f' = F + zF', f'' = 2F' + zF''.
      const auto f1 = d[0] + z * d[1];
      check_denominator(f1, "f'");
      return 1.0 + z * (2.0 * d[1] + z * d[2]) / f1;
    }
    case FunctionalKind::ExpStarlike:
    case FunctionalKind::JanowskiStarlike:
      check_denominator(d[0], "F");
      return (d[0] + z * d[1]) / d[0];
    case FunctionalKind::JanowskiConvex:
      check_denominator(d[1], "F'");
      return 1.0 + z * d[2] / d[1];
  }
  return d[0];
}

// F and its derivatives on a whole circle |z| = r at the angles 2 pi j / A.
//
// The coefficients a_n r^n are real, so the series for order k folds into
// min(N, A) buckets by (n - k) mod A and each angle costs one pass over the
// buckets. Stops once the rigorous tail bound of every needed order is below
// tol (absolute, hence also relative). Returns false when the double sum
// cannot meet the contract (rounding, overflow, term cap); the caller then
// evaluates pointwise.
bool circle_derivatives(const HypergeomParams& p, double r, int angles, int lo, int hi,
                        double tol, int max_terms, std::vector<Derivatives>& out) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double onset_level = 0.5 * (1.0 + r);
  const auto bucket_count = static_cast<std::size_t>(angles);
  std::array<std::vector<double>, 3> buckets;
  std::array<double, 3> rounding{};
  for (int k = lo; k <= hi; ++k) buckets[k].assign(bucket_count, 0.0);
  std::size_t used = 1;

  // Term n of order k is falling(n, k) a_n r^(n-k) e^(i (n-k) theta); the
  // buckets hold falling(n, k) a_n r^n and r^-k is applied at the end.
  auto add = [&](int n, double t) {
    double falling = 1.0;
    for (int k = 0; k <= hi; ++k) {
      if (k > 0) falling *= n - k + 1;
      if (k < lo || n < k) continue;
      const double s = falling * t;
      buckets[k][static_cast<std::size_t>(n - k) % bucket_count] += s;
      rounding[k] += std::sqrt(n + 2.0) * std::abs(s);
    }
    used = std::max(used, std::min(bucket_count, static_cast<std::size_t>(n) + 1));
  };

  double t = 1.0;
  add(0, t);
  int consecutive = 0;
  int terms = 1;
  for (int n = 0;; ++n) {
    const double next = t * r * ((p.u + n) * (p.v + n)) / ((p.w + n) * (n + 1.0));
    if (next == 0.0) break;  // terminating series
    if (!std::isfinite(next)) return false;
    consecutive = std::abs(next) <= onset_level * std::abs(t) ? consecutive + 1 : 0;
    if (consecutive >= 5) {
      const double s = r * detail::sup_term_ratio(p.u, p.v, p.w, n + 1.0);
      const int m = n + 1;  // first omitted index
      bool done = true;
      double falling = 1.0;
      for (int k = 0; k <= hi && done; ++k) {
        if (k > 0) falling *= m - k + 1;
        if (k < lo) continue;
        const double q = s * (m + 1.0) / (m + 1.0 - k);
        const double tail = falling * std::abs(next) / std::pow(r, k) / (1.0 - q);
        done = m + 1 > k && q <= onset_level && tail <= tol;
      }
      if (done) break;
    }
    add(n + 1, next);
    t = next;
    if (++terms >= max_terms) return false;
  }

  // Twiddles e^(2 pi i m j / A) indexed by (m j) mod A.
  std::vector<std::complex<double>> twiddle(bucket_count);
  for (std::size_t i = 0; i < bucket_count; ++i) {
    twiddle[i] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(i) / angles);
  }
  out.assign(bucket_count, Derivatives{});
  for (int k = lo; k <= hi; ++k) {
    const double scale = std::pow(r, -k);
    double bucket_mass = 0.0;
    for (std::size_t m = 0; m < used; ++m) bucket_mass += std::abs(buckets[k][m]);
    const double error = 2.0 * eps * scale * (rounding[k] + std::sqrt(double(used)) * bucket_mass);
    for (std::size_t j = 0; j < bucket_count; ++j) {
      std::complex<double> sum = 0.0;
      for (std::size_t m = 0, idx = 0; m < used; ++m, idx = (idx + j) % bucket_count) {
        sum += buckets[k][m] * twiddle[idx];
      }
      sum *= scale;
      if (!std::isfinite(std::abs(sum)) || error > tol * std::max(1.0, std::abs(sum))) return false;
      out[j][k] = sum;
    }
  }
  return true;
}
}  // namespace

void DiskGrid::validate() const {
  if (!(r_max > 0.0 && r_max <= 0.99)) throw DomainError("grid r_max must lie in (0, 0.99]");
  if (angles < 1) throw DomainError("grid needs at least one angle");
  if (radii.empty()) throw DomainError("grid needs at least one radius");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0 && radii[i] <= r_max)) {
      throw DomainError("grid radius " + std::to_string(radii[i]) + " outside (0, r_max]");
    }
    if (i > 0 && !(radii[i] > radii[i - 1])) {
      throw DomainError("grid radii must be strictly increasing");
    }
  }
}

std::complex<double> DiskGrid::point(std::size_t radius_index, int angle_index) const {
  const double theta = 2.0 * std::numbers::pi * angle_index / angles;
  return std::polar(radii[radius_index], theta);
}

DiskGrid DiskGrid::standard(int count, int angles, double r_max) {
  DiskGrid g;
  g.angles = angles;
  g.r_max = r_max;
  if (count < 1) throw DomainError("grid needs at least one radius");
  constexpr double r_min = 0.05;
  if (count == 1) {
    g.radii = {r_max};
  } else {
    const double ratio = std::log(r_max / r_min);
    for (int i = 0; i < count; ++i) {
      g.radii.push_back(i == count - 1 ? r_max : r_min * std::exp(ratio * i / (count - 1)));
    }
  }
  g.validate();
  return g;
}

DiskGrid DiskGrid::refined() const {
  DiskGrid g;
  g.angles = angles * 2;
  g.r_max = r_max;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (i > 0) g.radii.push_back(0.5 * (radii[i - 1] + radii[i]));
    g.radii.push_back(radii[i]);
  }
  return g;
}

std::string_view to_string(FunctionalKind k) {
  switch (k) {
    case FunctionalKind::Function: return "Function";
    case FunctionalKind::ExpConvex: return "ExpConvex";
    case FunctionalKind::ExpStarlike: return "ExpStarlike";
    case FunctionalKind::JanowskiConvex: return "JanowskiConvex";
    case FunctionalKind::JanowskiStarlike: return "JanowskiStarlike";
  }
  return "?";
}

std::optional<FunctionalKind> parse_functional_kind(std::string_view s) {
  if (s == "Function" || s == "function") return FunctionalKind::Function;
  if (s == "ExpConvex" || s == "exp-convex") return FunctionalKind::ExpConvex;
  if (s == "ExpStarlike" || s == "exp-starlike") return FunctionalKind::ExpStarlike;
  if (s == "JanowskiConvex" || s == "janowski-convex") return FunctionalKind::JanowskiConvex;
  if (s == "JanowskiStarlike" || s == "janowski-starlike") return FunctionalKind::JanowskiStarlike;
  return std::nullopt;
}

std::string_view to_string(Target::Kind k) {
  switch (k) {
    case Target::Kind::ExpDisk: return "ExpDisk";
    case Target::Kind::ExpImage: return "ExpImage";
    case Target::Kind::Janowski: return "Janowski";
  }
  return "?";
}

FunctionalKind functional_for(ConditionSet set) {
  switch (set) {
    case ConditionSet::H1: return FunctionalKind::Function;
    case ConditionSet::H2: return FunctionalKind::ExpConvex;
    case ConditionSet::CorollaryStarlike: return FunctionalKind::ExpStarlike;
    case ConditionSet::JanowskiConvex: return FunctionalKind::JanowskiConvex;
    case ConditionSet::JanowskiStarlike: return FunctionalKind::JanowskiStarlike;
  }
  return FunctionalKind::Function;
}

Target target_for(ConditionSet set, const std::optional<JanowskiPair>& pair) {
  if (is_janowski(set)) {
    if (!pair) throw InvalidPairError("Janowski targets need (C, D)");
    return Target::janowski(*pair);
  }
  return Target::exp_disk();
}

std::complex<double> eval_functional(FunctionalKind kind, const HypergeomParams& p,
                                     std::complex<double> z, double tol,
                                     const SeriesOptions& options) {
  if (kind == FunctionalKind::Function) return gauss_2f1(p, z, tol, options).value;

  p.validate();
  if (z == std::complex<double>(0.0)) return 1.0;

  const int top = highest_order(kind);
  Derivatives d;
  if (lowest_order(kind) == 0) d[0] = gauss_2f1(p, z, tol, options).value;
  for (int k = 1; k <= top; ++k) d[k] = gauss_2f1_deriv(p, z, k, tol, options).value;
  return functional_from(kind, z, d);
}

Membership target_membership(const Target& target, std::complex<double> x) {
  switch (target.kind) {
    case Target::Kind::ExpDisk: return in_exp_disk(x);
    case Target::Kind::ExpImage:
      if (x == std::complex<double>(0.0)) {
        return {false, -std::numeric_limits<double>::infinity()};
      }
      return in_exp_image(x);
    case Target::Kind::Janowski: return in_janowski(x, target.pair);
  }
  return {};
}

VerificationReport verify_on_disk(FunctionalKind kind, const HypergeomParams& p,
                                  const Target& target, const DiskGrid& grid, double tol,
                                  const SeriesOptions& options) {
  grid.validate();
  p.validate();
  const bool janowski_kind =
      kind == FunctionalKind::JanowskiConvex || kind == FunctionalKind::JanowskiStarlike;
  if (janowski_kind != (target.kind == Target::Kind::Janowski)) {
    throw DomainError("target " + std::string(to_string(target.kind)) +
                      " is not compatible with functional " + std::string(to_string(kind)));
  }
  if (target.kind == Target::Kind::Janowski) target.pair.validate();

  SeriesOptions opts = options;
  opts.r_max = std::max(opts.r_max, grid.r_max);

  VerificationReport report;
  report.kind = kind;
  report.target = target;
  report.params = p;
  report.min_margin = std::numeric_limits<double>::infinity();
  bool have_worst = false;

  std::vector<Derivatives> circle;
  const int lo = lowest_order(kind), hi = highest_order(kind);
  for (std::size_t ri = 0; ri < grid.radii.size(); ++ri) {
    const bool batched = circle_derivatives(p, grid.radii[ri], grid.angles, lo, hi, tol,
                                            opts.max_terms, circle);
    for (int ai = 0; ai < grid.angles; ++ai) {
      const std::complex<double> z = grid.point(ri, ai);
      std::complex<double> value;
      try {
        value = batched ? functional_from(kind, z, circle[static_cast<std::size_t>(ai)])
                        : eval_functional(kind, p, z, tol, opts);
      } catch (const DenominatorError&) {
        report.denominator_alerts.push_back(z);
        continue;
      } catch (const ParamPoleError&) {
        throw;
      } catch (const Error&) {
        report.evaluation_errors.push_back(z);
        continue;
      }
      ++report.samples;
      const Membership m = target_membership(target, value);
      const bool nan_value = std::isnan(value.real()) || std::isnan(value.imag());
      const double margin = nan_value ? -std::numeric_limits<double>::infinity() : m.margin;
      if (!have_worst || margin < report.min_margin) {
        report.min_margin = margin;
        report.worst_point = z;
        report.worst_value = value;
        have_worst = true;
      }
      if (!(margin > 0.0)) {
        ++report.violations;
        if (report.counterexamples.size() < VerificationReport::kMaxCounterexamples) {
          report.counterexamples.push_back({z, value, margin});
        }
      }
    }
  }
  if (!have_worst) report.min_margin = std::numeric_limits<double>::quiet_NaN();
  report.passed = report.violations == 0 && report.denominator_alerts.empty() &&
                  report.evaluation_errors.empty();
  return report;
}

std::complex<double> starlike_identity_residual(const HypergeomParams& p,
                                                std::complex<double> z, double tol,
                                                const SeriesOptions& options) {
  p.validate();
  const HypergeomParams lowered = p.shifted_down();
  lowered.validate();
  if (!(tol >= kMinTolerance)) throw DomainError("tolerance must be >= 1e-14");
  if (!(std::abs(z) <= options.r_max * (1.0 + 8.0 * std::numeric_limits<double>::epsilon()))) {
    throw DomainError("|z| exceeds r_max");
  }
  if (z == std::complex<double>(0.0)) return 0.0;

  using detail::cquad;
  const double inner = tol * detail::kExtendedToleranceScale;
  const cquad zq(z.real(), z.imag());
  const auto f = detail::gauss_2f1_extended(p, zq, 0, inner, options.max_terms).value;
  const auto d1 = detail::gauss_2f1_extended(p, zq, 1, inner, options.max_terms).value;
  const auto l1 = detail::gauss_2f1_extended(lowered, zq, 1, inner, options.max_terms).value;
  const auto l2 = detail::gauss_2f1_extended(lowered, zq, 2, inner, options.max_terms).value;
  check_denominator(detail::to_complex_double(f), "F");
  check_denominator(detail::to_complex_double(l1), "F'(u-1, v-1; w-1)");

  const cquad lhs = (f + zq * d1) / f;
  const cquad rhs = cquad(1) + zq * l2 / l1;
  return detail::to_complex_double(lhs - rhs);
}

}  // namespace hypercert
