#include "crosscheck.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>

#include "hypercert/domains.hpp"
#include "hypercert/errors.hpp"
#include "hypercert/serialize.hpp"
#include "hypercert/verify.hpp"

namespace hypercert::cli {
namespace {

std::string describe(const HypergeomParams& p, std::complex<double> z) {
  return "u=" + format_number(p.u) + " v=" + format_number(p.v) + " w=" + format_number(p.w) +
         " z=(" + format_number(z.real()) + ", " + format_number(z.imag()) + ")";
}

std::string describe(const FoxWrightParams& fw, double z) {
  std::string s = "upper=[";
  for (const auto& f : fw.upper) s += "(" + format_number(f.shift) + "," + format_number(f.scale) + ")";
  s += "] lower=[";
  for (const auto& f : fw.lower) s += "(" + format_number(f.shift) + "," + format_number(f.scale) + ")";
  return s + "] z=" + format_number(z);
}

// Largest-deviation bookkeeping: `deviation` is compared against `budget`.
void record(SuiteResult& r, double deviation, double budget, const std::string& where) {
  ++r.total;
  if (deviation <= budget) ++r.passed;
  if (r.total == 1 || deviation > r.worst || std::isnan(deviation)) {
    r.worst = deviation;
    r.worst_case = where;
  }
}

SuiteResult identity_suite(const std::string& name, Rng& rng, std::size_t n,
                           const std::function<IdentityResidual(const HypergeomParams&,
                                                                std::complex<double>)>& f) {
  SuiteResult r;
  r.name = name;
  constexpr double budget = 1e-9;
  for (std::size_t i = 0; i < n; ++i) {
    const HypergeomParams p = random_params(rng);
    const auto z = random_disk_point(rng);
    double dev;
    try {
      dev = std::abs(f(p, z).value);
    } catch (const Error&) {
      dev = std::numeric_limits<double>::infinity();
    }
    record(r, dev, budget, describe(p, z));
  }
  return r;
}

SuiteResult derivative_suite(Rng& rng, std::size_t n, const CrosscheckOptions& o) {
  SuiteResult r;
  r.name = "derivative";
  constexpr double h = kFiniteDifferenceStep;
  for (std::size_t i = 0; i < n; ++i) {
    const HypergeomParams p = random_params(rng);
    const auto z = random_disk_point(rng);
    double dev = std::numeric_limits<double>::infinity();
    double budget = 1e-7;
    try {
      using detail::cquad;
      const double inner = o.tol * detail::kExtendedToleranceScale;
      const cquad zq(z.real(), z.imag());
      const cquad hq(h);
      const auto fp = detail::gauss_2f1_extended(p, zq + hq, 0, inner, o.series.max_terms).value;
      const auto fm = detail::gauss_2f1_extended(p, zq - hq, 0, inner, o.series.max_terms).value;
      const auto fd = detail::to_complex_double((fp - fm) / (cquad(2) * hq));
      const auto d1 = gauss_2f1_deriv(p, z, 1, o.tol, o.series);
      // Central differences carry a truncation error of h^2/6 |F'''| on the
      // segment [z-h, z+h]; the budget admits it on top of the fixed 1e-7.
      double third = 0.0;
      for (double s : {-1.0, 0.0, 1.0}) {
        const auto t = detail::gauss_2f1_extended(p, zq + cquad(s) * hq, 3, inner,
                                                  o.series.max_terms);
        third = std::max(third, std::abs(detail::to_complex_double(t.value)));
      }
      budget += 1.1 * h * h / 6.0 * third + d1.tail_bound;
      dev = std::abs(fd - d1.value);
    } catch (const Error&) {
    }
    ++r.total;
    if (dev <= budget) ++r.passed;
    const double excess = dev / budget;
    if (r.total == 1 || excess > r.worst) {
      r.worst = excess;
      r.worst_case = describe(p, z);
    }
  }
  return r;
}

SuiteResult foxwright_suite(Rng& rng, std::size_t n, const CrosscheckOptions& o) {
  SuiteResult r;
  r.name = "foxwright";
  constexpr double slack = -1e-9;
  constexpr double zs[] = {0.25, 0.5, 1.0};
  std::size_t accepted = 0;
  while (accepted < n) {
    const FoxWrightParams fw = random_fox_wright(rng);
    double values[3];
    bool convergent = true;
    for (int k = 0; k < 3 && convergent; ++k) {
      try {
        values[k] = fox_wright_eval(fw, zs[k], o.tol, o.series.max_terms).value.real();
      } catch (const Error&) {
        convergent = false;
      }
    }
    if (!convergent) continue;
    ++accepted;
    const PsiMoments m = psi_moments(fw);
    for (int k = 0; k < 3; ++k) {
      const TwoSidedBound b = ps_bounds(m, zs[k]);
      // Smallest slack of the two sides; negative means the sandwich broke.
      const double s = std::min(values[k] - b.lower, b.upper - values[k]);
      ++r.total;
      if (s >= slack) ++r.passed;
      if (r.total == 1 || -s > r.worst) {
        r.worst = -s;
        r.worst_case = describe(fw, zs[k]);
      }
    }
  }
  return r;
}

SuiteResult lemma1_suite(Rng& rng, std::size_t n) {
  SuiteResult r;
  r.name = "lemma1";
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    std::complex<double> x;
    do {
      const double rad = kExpDiskRadius * std::sqrt(unit(rng));
      x = 1.0 + std::polar(rad, 2.0 * std::numbers::pi * unit(rng));
    } while (!in_exp_disk(x).inside);
    const Membership m = in_exp_image(x);
    // Worst is the negated margin: negative while every point is inside.
    ++r.total;
    if (m.inside) ++r.passed;
    if (r.total == 1 || -m.margin > r.worst) {
      r.worst = -m.margin;
      r.worst_case = "x=(" + format_number(x.real()) + ", " + format_number(x.imag()) + ")";
    }
  }
  return r;
}

SuiteResult starlike_suite(Rng& rng, std::size_t n, const CrosscheckOptions& o) {
  SuiteResult r;
  r.name = "starlike";
  constexpr double budget = 1e-8;
  std::size_t accepted = 0;
  while (accepted < n) {
    const HypergeomParams p = random_params(rng);
    const auto z = random_disk_point(rng);
    if (pole_distance(p.w - 1.0) < kPoleMargin) continue;
    double dev;
    try {
      dev = std::abs(starlike_identity_residual(p, z, o.tol, o.series));
    } catch (const DenominatorError&) {
      continue;  // inadmissible point
    } catch (const Error&) {
      dev = std::numeric_limits<double>::infinity();
    }
    ++accepted;
    record(r, dev, budget, describe(p, z));
  }
  return r;
}

}  // namespace

double pole_distance(double x) {
  if (x > 0.5) return std::numeric_limits<double>::infinity();
  return std::abs(x - std::round(x));
}

HypergeomParams random_params(Rng& rng) {
  std::uniform_real_distribution<double> box(kParamLo, kParamHi);
  HypergeomParams p;
  p.u = box(rng);
  p.v = box(rng);
  do {
    p.w = box(rng);
  } while (pole_distance(p.w) < kPoleMargin);
  return p;
}

std::complex<double> random_disk_point(Rng& rng, double radius) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = radius * std::sqrt(unit(rng));
  return std::polar(r, 2.0 * std::numbers::pi * unit(rng));
}

FoxWrightParams random_fox_wright(Rng& rng) {
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_real_distribution<double> upper_shift(0.1, 4.0);
  std::uniform_real_distribution<double> lower_shift(0.5, 6.0);
  for (;;) {
    FoxWrightParams fw;
    const int p = count(rng);
    const int q = std::max(1, std::min(3, p - 1 + count(rng) - 1));
    for (int j = 0; j < p; ++j) fw.upper.push_back({upper_shift(rng), 1.0});
    for (int j = 0; j < q; ++j) fw.lower.push_back({lower_shift(rng), 1.0});
    try {
      const PsiMoments m = psi_moments(fw);
      if (ps_validity(m) && m.psi0 > 0.0 && sandwich_hypotheses(fw)) return fw;
    } catch (const Error&) {
    }
  }
}

const std::vector<std::string>& crosscheck_suites() {
  static const std::vector<std::string> names = {"ode",       "euler",  "derivative",
                                                 "foxwright", "lemma1", "starlike"};
  return names;
}

std::vector<SuiteResult> run_crosscheck(const CrosscheckOptions& o) {
  std::vector<SuiteResult> results;
  const auto& names = crosscheck_suites();
  for (std::size_t idx = 0; idx < names.size(); ++idx) {
    const std::string& name = names[idx];
    if (!o.suites.empty() && std::find(o.suites.begin(), o.suites.end(), name) == o.suites.end()) {
      continue;
    }
    std::seed_seq seq{static_cast<std::uint32_t>(o.seed), static_cast<std::uint32_t>(o.seed >> 32),
                      static_cast<std::uint32_t>(idx)};
    Rng rng(seq);
    auto count = [&](std::size_t fallback) { return o.samples.value_or(fallback); };
    if (name == "ode") {
      results.push_back(identity_suite(name, rng, count(200), [&](const auto& p, auto z) {
        return ode_residual(p, z, o.tol, o.series);
      }));
    } else if (name == "euler") {
      results.push_back(identity_suite(name, rng, count(200), [&](const auto& p, auto z) {
        return euler_transform_residual(p, z, o.tol, o.series);
      }));
    } else if (name == "derivative") {
      results.push_back(derivative_suite(rng, count(200), o));
    } else if (name == "foxwright") {
      results.push_back(foxwright_suite(rng, count(100), o));
    } else if (name == "lemma1") {
      results.push_back(lemma1_suite(rng, count(10000)));
    } else {
      results.push_back(starlike_suite(rng, count(200), o));
    }
  }
  return results;
}

}  // namespace hypercert::cli
