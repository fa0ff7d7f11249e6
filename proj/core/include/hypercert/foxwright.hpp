#pragma once

#include <vector>

#include "hypercert/hypergeom.hpp"

namespace hypercert {

/// One gamma factor Gamma(shift + scale * n) of a Fox-Wright coefficient.
struct GammaFactor {
  double shift = 0.0;
  double scale = 1.0;
};

/// Parameters of pPsiq: numerator factors (a_j, A_j), denominator (b_j, B_j).
struct FoxWrightParams {
  std::vector<GammaFactor> upper;
  std::vector<GammaFactor> lower;
};

/// psi_k = prod Gamma(a_j + A_j k) / prod Gamma(b_j + B_j k) for k = 0, 1, 2.
struct PsiMoments {
  double psi0 = 0.0;
  double psi1 = 0.0;
  double psi2 = 0.0;
};

struct TwoSidedBound {
  double lower = 0.0;
  double upper = 0.0;
};

/// Moments through signed log-gamma sums. Throws PoleError for any gamma
/// argument at a pole, OverflowError when a log-magnitude exceeds 700.
PsiMoments psi_moments(const FoxWrightParams& fw);

/// psi1 > psi2 and psi1^2 < psi0 psi2 (both strict).
bool ps_validity(const PsiMoments& m);

/// lower = psi0 exp(psi1 |z| / psi0), upper = psi0 + (e^|z| - 1) psi1.
/// Throws ValidityError unless ps_validity(m) holds and psi0 > 0.
TwoSidedBound ps_bounds(const PsiMoments& m, double abs_z);

/// Sufficient conditions under which ps_bounds is a theorem: psi_n > 0,
/// log-convex in n (which gives the lower bound) and nonincreasing from n = 1
/// on (which gives the upper bound). ps_validity is the n <= 2 shadow of these;
/// here they are checked for every n <= horizon.
bool sandwich_hypotheses(const FoxWrightParams& fw, int horizon = 1000);

/// Direct summation of pPsiq at real z with |z| <= 1.
///
/// Convergence is judged empirically from the Raabe index
/// sigma_n = (n+1)(1 - |t_{n+1}/t_n|): after five consecutive steps with
/// sigma > 1 the tail is estimated as |t_{n+1}| (1 + (n+1)/(sigma - 1)),
/// which covers both geometric and algebraic (ratio -> 1) decay. The
/// resulting tail_bound is an estimate, not a rigorous bound.
SeriesValue fox_wright_eval(const FoxWrightParams& fw, double z,
                            double tol = kDefaultTolerance, int max_terms = kDefaultMaxTerms);

}  // namespace hypercert
