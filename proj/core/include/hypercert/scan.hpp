#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypercert/certify.hpp"
#include "hypercert/verify.hpp"

namespace hypercert {

/// `steps` equally spaced samples from lo to hi inclusive. Sample i is
/// (lo (n-1-i) + hi i) / (n-1), so decimal grid points such as 0.1 in
/// [-1, 1] with 21 steps come out exactly.
struct ParamRange {
  double lo = 0.0;
  double hi = 1.0;
  int steps = 2;

  void validate(const std::string& name) const;
  double at(int i) const;
};

struct ScanSpec {
  std::map<std::string, ParamRange> ranges;  // keys u, v, w, C, D
  /// Explicit (C, D) list used instead of C and D ranges; invalid pairs are
  /// dropped like filtered range pairs.
  std::vector<JanowskiPair> janowski_pairs;
  ConditionSet condition_set = ConditionSet::H1;
  bool verify_certified = false;
  DiskGrid grid = DiskGrid::standard();
  double tol = kDefaultTolerance;
  SeriesOptions series;

  static constexpr double kPointBudget = 1e7;

  /// Throws DomainError for missing or malformed ranges and BudgetError when
  /// the point count exceeds kPointBudget.
  void validate() const;
};

struct ScanRow {
  HypergeomParams params;
  std::optional<JanowskiPair> pair;
  std::optional<Certificate> certificate;  // empty when certification failed
  std::string error;
  std::optional<VerificationReport> verification;  // certified rows only
  std::string verification_error;

  bool overall() const { return certificate && certificate->overall; }
};

/// Certifies (and optionally verifies) every sampled tuple. Rows are ordered
/// lexicographically by (u, v, w, C, D).
std::vector<ScanRow> run_scan(const ScanSpec& spec);

struct BoundingBox {
  bool empty = true;
  double lo[5] = {};
  double hi[5] = {};  // u, v, w, C, D
};

struct ScanSummary {
  std::size_t rows = 0;
  std::size_t errors = 0;
  std::map<std::string, std::size_t> holds_count;  // per sub-result id
  std::size_t feasible = 0;
  std::size_t verified = 0;       // certified rows whose verification passed
  std::size_t verify_failed = 0;  // certified rows with a failing report
  BoundingBox feasible_box;
  std::vector<std::size_t> representatives;  // row indices, at most 100

  static constexpr std::size_t kMaxRepresentatives = 100;
};

/// Throws EmptyInputError for no rows.
ScanSummary summarize(const std::vector<ScanRow>& rows);

/// CSV with header u,v,w[,C,D],<id>_holds,<id>_margin,...,overall
/// [,verified,min_margin,violations]; %.17g numbers, 0/1 booleans, LF endings.
void write_scan_csv(std::ostream& out, const ScanSpec& spec, const std::vector<ScanRow>& rows);

/// Whitespace-separated columns with a '#' header line, one row per scan row,
/// same column order as the CSV. Failed evaluations appear as nan.
void write_plot_data(std::ostream& out, const ScanSpec& spec, const std::vector<ScanRow>& rows);

}  // namespace hypercert
