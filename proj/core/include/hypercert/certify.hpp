#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypercert/domains.hpp"
#include "hypercert/hypergeom.hpp"

namespace hypercert {

enum class ConditionSet {
  H1,                 // F itself in the exponential class
  H2,                 // exponential convexity of zF
  CorollaryStarlike,  // H2 at (u-1, v-1, w-1): exponential starlikeness of zF
  JanowskiConvex,
  JanowskiStarlike,   // Janowski system at (u-1, v-1, w-1)
};

std::string_view to_string(ConditionSet c);
/// Accepts the enum spelling ("H1", "JanowskiConvex") and the CLI spelling
/// ("h1", "janowski-convex").
std::optional<ConditionSet> parse_condition_set(std::string_view s);
bool is_janowski(ConditionSet c);

enum class Relation { Less, Greater, LessEqual, GreaterEqual };

std::string_view to_string(Relation r);

/// One inequality `lhs <relation> rhs`. margin is oriented so that a positive
/// value means the inequality has slack; it is NaN (and holds is false) when
/// a denominator vanished.
struct SubResult {
  std::string id;
  Relation relation = Relation::Less;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  double margin = 0.0;
  bool required = true;  // participates in Certificate::overall

  bool evaluable() const;
  friend bool operator==(const SubResult&, const SubResult&) = default;
};

struct Certificate {
  ConditionSet condition_set = ConditionSet::H1;
  HypergeomParams params;
  std::optional<JanowskiPair> pair;
  std::vector<std::string> interpretation_notes;
  std::vector<SubResult> sub_results;
  bool overall = false;

  const SubResult* find(std::string_view id) const;
};

/// Coefficients of H(x) = h1 x^2 + h2 x + h3 from the admissibility argument.
struct HCoefficients {
  double h1 = 0.0;
  double h2 = 0.0;
  double h3 = 0.0;
};

Certificate check_h1(const HypergeomParams& p);
Certificate check_h2(const HypergeomParams& p);
/// check_h2 at (u-1, v-1, w-1), relabelled; echoes the unshifted p.
Certificate check_corollary_starlike(const HypergeomParams& p);

HCoefficients janowski_h_coeffs(const HypergeomParams& p, const JanowskiPair& j);
/// Throws InvalidPairError for an invalid pair.
Certificate check_janowski_convex(const HypergeomParams& p, const JanowskiPair& j);
/// check_janowski_convex at (u-1, v-1, w-1), relabelled.
Certificate check_janowski_starlike(const HypergeomParams& p, const JanowskiPair& j);

/// Dispatch by condition set; Janowski sets require `pair`.
Certificate certify(ConditionSet set, const HypergeomParams& p,
                    const std::optional<JanowskiPair>& pair = std::nullopt);

/// Sub-result ids in certificate order; fixed per condition set.
const std::vector<std::string>& sub_result_ids(ConditionSet set);

}  // namespace hypercert
