#include "hypercert/foxwright.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hypercert/errors.hpp"
#include "hypercert/specfun.hpp"

namespace hypercert {
namespace {

constexpr double kMaxLogMagnitude = 700.0;

struct LogTerm {
  double log_abs = 0.0;
  int sign = 1;
  bool zero = false;  // a denominator gamma sits at a pole, 1/Gamma = 0
};

// log|prod Gamma(a + A n) / prod Gamma(b + B n)| with sign.
LogTerm log_coefficient(const FoxWrightParams& fw, double n) {
  LogTerm out;
  for (const auto& f : fw.upper) {
    const auto g = log_gamma_signed(f.shift + f.scale * n);
    out.log_abs += g.log_abs;
    out.sign *= g.sign;
  }
  for (const auto& f : fw.lower) {
    const double x = f.shift + f.scale * n;
    if (is_nonpositive_integer(x)) {
      out.zero = true;
      continue;
    }
    const auto g = log_gamma_signed(x);
    out.log_abs -= g.log_abs;
    out.sign *= g.sign;
  }
  return out;
}

}  // namespace

PsiMoments psi_moments(const FoxWrightParams& fw) {
  double values[3];
  for (int k = 0; k < 3; ++k) {
    const LogTerm t = log_coefficient(fw, k);
    if (t.zero) {
      values[k] = 0.0;
      continue;
    }
    if (std::abs(t.log_abs) > kMaxLogMagnitude) {
      throw OverflowError("psi_" + std::to_string(k) + " has log-magnitude " +
                          std::to_string(t.log_abs));
    }
    values[k] = t.sign * std::exp(t.log_abs);
  }
  return {values[0], values[1], values[2]};
}

bool ps_validity(const PsiMoments& m) {
  return m.psi1 > m.psi2 && m.psi1 * m.psi1 < m.psi0 * m.psi2;
}

TwoSidedBound ps_bounds(const PsiMoments& m, double abs_z) {
  if (!ps_validity(m) || !(m.psi0 > 0.0)) {
    throw ValidityError("Fox-Wright moments fail psi1 > psi2, psi1^2 < psi0 psi2, psi0 > 0");
  }
  if (!(abs_z >= 0.0)) throw DomainError("ps_bounds: |z| must be nonnegative");
  return {m.psi0 * std::exp(m.psi1 / m.psi0 * abs_z),
          m.psi0 + std::expm1(abs_z) * m.psi1};
}

bool sandwich_hypotheses(const FoxWrightParams& fw, int horizon) {
  // Slack for rounding in the log-gamma sums.
  constexpr double kSlack = 1e-12;
  double prev = 0.0, prev_step = 0.0;
  for (int n = 0; n <= horizon; ++n) {
    const LogTerm t = log_coefficient(fw, n);
    if (t.zero || t.sign < 0) return false;
    if (n >= 1) {
      const double step = t.log_abs - prev;
      const double scale = kSlack * std::max(1.0, std::abs(t.log_abs));
      if (n >= 2 && (step > scale || step < prev_step - scale)) return false;
      prev_step = step;
    }
    prev = t.log_abs;
  }
  return true;
}

SeriesValue fox_wright_eval(const FoxWrightParams& fw, double z, double tol, int max_terms) {
  if (!(std::abs(z) <= 1.0)) throw DomainError("fox_wright_eval requires |z| <= 1");
  if (!(tol > 0.0)) throw DomainError("fox_wright_eval requires tol > 0");

  const auto term_at = [&](int n) -> double {
    const LogTerm c = log_coefficient(fw, n);
    if (c.zero) return 0.0;
    if (n > 0 && z == 0.0) return 0.0;
    double log_abs = c.log_abs - std::lgamma(n + 1.0);
    if (n > 0) log_abs += n * std::log(std::abs(z));
    int sign = c.sign;
    if (z < 0.0 && n % 2 == 1) sign = -sign;
    if (log_abs > kMaxLogMagnitude) {
      throw NoConvergenceError("Fox-Wright terms overflow at n = " + std::to_string(n));
    }
    return sign * std::exp(log_abs);
  };

  SeriesValue out;
  double sum = term_at(0);
  double term = sum;
  out.terms_used = 1;
  if (z == 0.0) {
    out.value = sum;
    return out;
  }

  int consecutive = 0;
  for (int n = 0;; ++n) {
    const double next = term_at(n + 1);
    const double a_term = std::abs(term), a_next = std::abs(next);
    double sigma = 0.0;
    if (a_term > 0.0) {
      sigma = (n + 1.0) * (1.0 - a_next / a_term);
      consecutive = sigma > 1.0 ? consecutive + 1 : 0;
    } else {
      consecutive = a_next == 0.0 ? consecutive + 1 : 0;
    }

    if (consecutive >= 5) {
      const double factor = a_term > 0.0 ? 1.0 + (n + 1.0) / (sigma - 1.0) : 1.0;
      const double tail = a_next * factor;
      if (tail <= tol * std::max(1.0, std::abs(sum))) {
        out.tail_bound = tail;
        break;
      }
    }

    sum += next;
    term = next;
    ++out.terms_used;
    if (out.terms_used >= max_terms) {
      throw NoConvergenceError("Fox-Wright series did not settle within " +
                               std::to_string(max_terms) + " terms");
    }
  }
  out.value = sum;
  return out;
}

}  // namespace hypercert
