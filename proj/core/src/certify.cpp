#include "hypercert/certify.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "hypercert/errors.hpp"

namespace hypercert {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kDenominatorFloor = 1e-12;
constexpr double kE = std::numbers::e;

bool vanishes(double d) { return !(std::abs(d) >= kDenominatorFloor); }

SubResult make(std::string id, Relation rel, double lhs, double rhs, bool required = true) {
  SubResult r;
  r.id = std::move(id);
  r.relation = rel;
  r.lhs = lhs;
  r.rhs = rhs;
  r.required = required;
  if (std::isnan(lhs) || std::isnan(rhs)) {
    r.lhs = std::isnan(lhs) ? kNaN : lhs;
    r.margin = kNaN;
    r.holds = false;
    return r;
  }
  switch (rel) {
    case Relation::Less:
      r.margin = rhs - lhs;
      r.holds = lhs < rhs;
      break;
    case Relation::LessEqual:
      r.margin = rhs - lhs;
      r.holds = lhs <= rhs;
      break;
    case Relation::Greater:
      r.margin = lhs - rhs;
      r.holds = lhs > rhs;
      break;
    case Relation::GreaterEqual:
      r.margin = lhs - rhs;
      r.holds = lhs >= rhs;
      break;
  }
  return r;
}

void finish(Certificate& c) {
  c.overall = true;
  for (const auto& s : c.sub_results) {
    if (s.required && !s.holds) c.overall = false;
  }
}

// Quantities shared by every inequality of the Janowski system.
struct JanowskiTerms {
  double S;      // u + v + 2
  double P;      // u + v + uv + 1
  double CmD;    // C - D
  double DmC;    // D - C
  double X;      // (D-C) - S D - P (1-D^2)/(C-D)
  double tail;   // -1 - (S/2)(D-1)
};

JanowskiTerms janowski_terms(const HypergeomParams& p, const JanowskiPair& j) {
  JanowskiTerms t{};
  const double D = j.D;
  t.S = p.u + p.v + 2.0;
  t.P = p.u + p.v + p.u * p.v + 1.0;
  t.CmD = j.C - j.D;
  t.DmC = j.D - j.C;
  t.X = t.DmC - t.S * D - t.P * (1.0 - D * D) / t.CmD;
  t.tail = -1.0 - t.S / 2.0 * (D - 1.0);
  return t;
}

// P/(2 first)(1-D)^2 - 1 - S(1+D)/2 - P(D+1)^2/(2 second) + tail: the bracket
// that recurs in the case analysis with differing denominators.
double bracket(const JanowskiTerms& t, double D, double first, double second) {
  return t.P / (2.0 * first) * (1.0 - D) * (1.0 - D) - 1.0 - t.S * (1.0 + D) / 2.0 -
         t.P * (D + 1.0) * (D + 1.0) / (2.0 * second) + t.tail;
}

const char* kCoefficientNote = "coefficient (c+d+2) of the leading-coefficient condition read as (u+v+2)";
const char* kVertexNote =
    "interior minimum required as h3 - h2^2/(4 h1) >= 0; the h3 - h2^2/(2 h1) variant and the "
    "printed grouping (juxtaposition read as product) are reported but not required";
const char* kPrintedNote = "case guards and endpoint inequality evaluated exactly as printed";

}  // namespace

std::string_view to_string(ConditionSet c) {
  switch (c) {
    case ConditionSet::H1: return "H1";
    case ConditionSet::H2: return "H2";
    case ConditionSet::CorollaryStarlike: return "CorollaryStarlike";
    case ConditionSet::JanowskiConvex: return "JanowskiConvex";
    case ConditionSet::JanowskiStarlike: return "JanowskiStarlike";
  }
  return "?";
}

std::optional<ConditionSet> parse_condition_set(std::string_view s) {
  if (s == "H1" || s == "h1") return ConditionSet::H1;
  if (s == "H2" || s == "h2") return ConditionSet::H2;
  if (s == "CorollaryStarlike" || s == "corollary-starlike") return ConditionSet::CorollaryStarlike;
  if (s == "JanowskiConvex" || s == "janowski-convex") return ConditionSet::JanowskiConvex;
  if (s == "JanowskiStarlike" || s == "janowski-starlike") return ConditionSet::JanowskiStarlike;
  return std::nullopt;
}

bool is_janowski(ConditionSet c) {
  return c == ConditionSet::JanowskiConvex || c == ConditionSet::JanowskiStarlike;
}

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Less: return "<";
    case Relation::Greater: return ">";
    case Relation::LessEqual: return "<=";
    case Relation::GreaterEqual: return ">=";
  }
  return "?";
}

bool SubResult::evaluable() const { return !std::isnan(margin); }

const SubResult* Certificate::find(std::string_view id) const {
  for (const auto& s : sub_results) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

Certificate check_h1(const HypergeomParams& p) {
  const double u = p.u, v = p.v, w = p.w;
  Certificate c;
  c.condition_set = ConditionSet::H1;
  c.params = p;

  c.sub_results.push_back(make("h1_i", Relation::Less, 2.0 * (u + 2) * (v + 2), 3.0 * (w + 2)));

  const double den_ii = (u + 2) * (v + 2) * (w + 1);
  const double lhs_ii = vanishes(den_ii) ? kNaN : (u + 1) * (v + 1) * (w + 2) / den_ii;
  c.sub_results.push_back(make("h1_ii", Relation::Less, lhs_ii, 2.0 / 3.0));

  const double den_a = 2.0 * w * (w + 1);
  const double den_b = w * (kE - 1.0);
  const double lhs_iii = (vanishes(den_a) || vanishes(den_b))
                             ? kNaN
                             : std::abs(u * (u + 1) * v * (v + 1) / den_a + u * v / den_b);
  c.sub_results.push_back(make("h1_iii", Relation::Less, lhs_iii, 1.0 / kE));

  finish(c);
  return c;
}

Certificate check_h2(const HypergeomParams& p) {
  const double u = p.u, v = p.v, w = p.w;
  Certificate c;
  c.condition_set = ConditionSet::H2;
  c.params = p;

  c.sub_results.push_back(make("h2_i", Relation::Less, 3.0 * (u + 1) * (v + 1), 2.0 * (w + 1)));
  c.sub_results.push_back(
      make("h2_ii", Relation::Less, 4.0 * (w + 1) * u * v, 3.0 * (u + 1) * (v + 1) * w));
  c.sub_results.push_back(make("h2_iii", Relation::Less, 4.0 * (u + 2) * (v + 2), 2.0 * (w + 2)));
  c.sub_results.push_back(make("h2_iv", Relation::Less, 8.0 * (w + 2) * (u + 1) * (v + 1),
                               9.0 * (u + 2) * (v + 2) * (w + 1)));

  double lhs_v = kNaN;
  if (!vanishes(w) && !vanishes(w * (w + 1))) {
    lhs_v = std::abs(u * v / w + 1.0 / (kE - 1.0) +
                     3.0 * u * (u + 1) * v * (v + 1) * (kE - 1.0) / (kE * w * (w + 1)) +
                     2.0 * u * v / (w * kE));
  }
  c.sub_results.push_back(make("h2_v", Relation::Less, lhs_v, 1.0 / kE));

  finish(c);
  return c;
}

Certificate check_corollary_starlike(const HypergeomParams& p) {
  Certificate c = check_h2(p.shifted_down());
  c.condition_set = ConditionSet::CorollaryStarlike;
  c.params = p;
  c.interpretation_notes.push_back("conditions evaluated at the shifted parameters (u-1, v-1, w-1)");
  return c;
}

HCoefficients janowski_h_coeffs(const HypergeomParams& p, const JanowskiPair& j) {
  j.validate();
  const JanowskiTerms t = janowski_terms(p, j);
  const double D = j.D;
  const double inner = t.DmC - t.S * D - t.P * (1.0 - D * D) / t.DmC;
  HCoefficients h;
  h.h1 = inner * inner;
  h.h2 = bracket(t, D, t.CmD, t.CmD);
  const double sq = t.DmC - t.S * D + t.P * (1.0 - D * D) / t.CmD;
  h.h3 = 2.0 + p.w * (1.0 + D) / 2.0 + p.w * (D - 1.0) / 2.0 - sq * sq;
  return h;
}

Certificate check_janowski_convex(const HypergeomParams& p, const JanowskiPair& j) {
  j.validate();
  const JanowskiTerms t = janowski_terms(p, j);
  const HCoefficients h = janowski_h_coeffs(p, j);
  const double C = j.C, D = j.D, w = p.w;

  Certificate c;
  c.condition_set = ConditionSet::JanowskiConvex;
  c.params = p;
  c.pair = j;
  c.interpretation_notes = {
      kCoefficientNote, kVertexNote, kPrintedNote,
      "target set identical under (1+Cz)/(1+Dz) and (1+Cz)/(1-Dz); requested convention: " +
          std::string(to_string(j.convention)),
  };

  const double leading = 1.0 + C - D + w * (1.0 + D) -
                         std::abs(1.0 + C - D + t.S * (1.0 + D) +
                                  t.P * (D + 1.0) * (D + 1.0) / t.CmD);
  c.sub_results.push_back(make("leading_coeff", Relation::Greater, leading, 0.0));

  const double x_sq = t.X * t.X;
  const SubResult interior_case =
      make("interior_case", Relation::GreaterEqual, bracket(t, D, t.CmD, t.CmD), x_sq, false);
  const SubResult endpoint_case =
      make("endpoint_case", Relation::LessEqual, bracket(t, D, t.CmD, t.DmC), x_sq, false);

  const double vertex = h.h1 == 0.0 ? kNaN : h.h3 - h.h2 * h.h2 / (4.0 * h.h1);
  const double vertex_half = h.h1 == 0.0 ? kNaN : h.h3 - h.h2 * h.h2 / (2.0 * h.h1);
  const double printed_head = 2.0 + w * (1.0 + D) / 2.0 + w * (D - 1.0) / 2.0 - x_sq;
  const double printed_y = bracket(t, D, t.CmD, t.DmC);
  const double printed = printed_head * 2.0 * x_sq + printed_y * printed_y;

  c.sub_results.push_back(interior_case);
  c.sub_results.push_back(
      make("interior_min", Relation::GreaterEqual, vertex, 0.0, interior_case.holds));
  c.sub_results.push_back(
      make("interior_min_half", Relation::GreaterEqual, vertex_half, 0.0, false));
  c.sub_results.push_back(make("interior_printed", Relation::GreaterEqual, printed, 0.0, false));
  c.sub_results.push_back(endpoint_case);
  c.sub_results.push_back(make("endpoint_slope", Relation::GreaterEqual,
                               2.0 * x_sq + bracket(t, D, t.DmC, t.CmD), 0.0,
                               endpoint_case.holds));
  const double guards = (interior_case.holds ? 1.0 : 0.0) + (endpoint_case.holds ? 1.0 : 0.0);
  c.sub_results.push_back(make("case_coverage", Relation::Greater, guards, 0.0));

  const auto& v4 = c.sub_results[2];
  const auto& v2 = c.sub_results[3];
  const auto& pr = c.sub_results[4];
  if (v4.holds != v2.holds || v4.holds != pr.holds) {
    c.interpretation_notes.push_back(
        std::string("interior forms disagree: vertex=") + (v4.holds ? "1" : "0") +
        " half=" + (v2.holds ? "1" : "0") + " printed=" + (pr.holds ? "1" : "0"));
  }

  finish(c);
  return c;
}

Certificate check_janowski_starlike(const HypergeomParams& p, const JanowskiPair& j) {
  Certificate c = check_janowski_convex(p.shifted_down(), j);
  c.condition_set = ConditionSet::JanowskiStarlike;
  c.params = p;
  c.interpretation_notes.insert(c.interpretation_notes.begin(),
                                "conditions evaluated at the shifted parameters (u-1, v-1, w-1)");
  return c;
}

Certificate certify(ConditionSet set, const HypergeomParams& p,
                    const std::optional<JanowskiPair>& pair) {
  switch (set) {
    case ConditionSet::H1: return check_h1(p);
    case ConditionSet::H2: return check_h2(p);
    case ConditionSet::CorollaryStarlike: return check_corollary_starlike(p);
    case ConditionSet::JanowskiConvex:
    case ConditionSet::JanowskiStarlike:
      if (!pair) throw InvalidPairError("Janowski condition sets need (C, D)");
      return set == ConditionSet::JanowskiConvex ? check_janowski_convex(p, *pair)
                                                 : check_janowski_starlike(p, *pair);
  }
  throw Error("unknown condition set");
}

const std::vector<std::string>& sub_result_ids(ConditionSet set) {
  static const std::vector<std::string> h1{"h1_i", "h1_ii", "h1_iii"};
  static const std::vector<std::string> h2{"h2_i", "h2_ii", "h2_iii", "h2_iv", "h2_v"};
  static const std::vector<std::string> jan{
      "leading_coeff",  "interior_case", "interior_min",   "interior_min_half",
      "interior_printed", "endpoint_case", "endpoint_slope", "case_coverage"};
  switch (set) {
    case ConditionSet::H1: return h1;
    case ConditionSet::H2:
    case ConditionSet::CorollaryStarlike: return h2;
    default: return jan;
  }
}

}  // namespace hypercert
