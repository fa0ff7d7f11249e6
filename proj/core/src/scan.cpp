#include "hypercert/scan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string_view>
#include <tuple>

#include "hypercert/serialize.hpp"
#include "hypercert/errors.hpp"

namespace hypercert {
namespace {

constexpr const char* kNames[] = {"u", "v", "w", "C", "D"};

std::vector<double> samples(const ParamRange& r) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(r.steps));
  for (int i = 0; i < r.steps; ++i) out.push_back(r.at(i));
  return out;
}

std::vector<JanowskiPair> scan_pairs(const ScanSpec& spec) {
  std::vector<JanowskiPair> pairs;
  if (!spec.janowski_pairs.empty()) {
    for (const auto& j : spec.janowski_pairs) {
      if (j.valid()) pairs.push_back(j);
    }
  } else {
    for (double c : samples(spec.ranges.at("C"))) {
      for (double d : samples(spec.ranges.at("D"))) {
        JanowskiPair j;
        j.C = c;
        j.D = d;
        if (j.valid()) pairs.push_back(j);
      }
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const JanowskiPair& a, const JanowskiPair& b) {
    return std::tie(a.C, a.D) < std::tie(b.C, b.D);
  });
  return pairs;
}

double row_value(const ScanRow& r, int k) {
  switch (k) {
    case 0: return r.params.u;
    case 1: return r.params.v;
    case 2: return r.params.w;
    case 3: return r.pair ? r.pair->C : std::numeric_limits<double>::quiet_NaN();
    default: return r.pair ? r.pair->D : std::numeric_limits<double>::quiet_NaN();
  }
}

std::vector<std::string> column_names(const ScanSpec& spec) {
  std::vector<std::string> cols = {"u", "v", "w"};
  if (is_janowski(spec.condition_set)) {
    cols.push_back("C");
    cols.push_back("D");
  }
  for (const auto& id : sub_result_ids(spec.condition_set)) {
    cols.push_back(id + "_holds");
    cols.push_back(id + "_margin");
  }
  cols.push_back("overall");
  if (spec.verify_certified) {
    cols.push_back("verified");
    cols.push_back("min_margin");
    cols.push_back("violations");
  }
  return cols;
}

// Cell texts for one row; `missing` stands in for values that do not exist.
std::vector<std::string> row_cells(const ScanSpec& spec, const ScanRow& r,
                                   std::string_view missing) {
  std::vector<std::string> cells;
  const int nparams = is_janowski(spec.condition_set) ? 5 : 3;
  for (int k = 0; k < nparams; ++k) cells.push_back(format_number(row_value(r, k)));
  for (const auto& id : sub_result_ids(spec.condition_set)) {
    const SubResult* s = r.certificate ? r.certificate->find(id) : nullptr;
    if (s) {
      cells.push_back(s->holds ? "1" : "0");
      cells.push_back(format_number(s->margin));
    } else {
      cells.emplace_back(missing);
      cells.emplace_back(missing);
    }
  }
  cells.push_back(r.overall() ? "1" : "0");
  if (spec.verify_certified) {
    if (r.verification) {
      cells.push_back(r.verification->passed ? "1" : "0");
      cells.push_back(format_number(r.verification->min_margin));
      cells.push_back(std::to_string(r.verification->violations));
    } else {
      cells.emplace_back(missing);
      cells.emplace_back(missing);
      cells.emplace_back(missing);
    }
  }
  return cells;
}

}  // namespace

void ParamRange::validate(const std::string& name) const {
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi)) {
    throw DomainError("range " + name + " needs finite lo < hi");
  }
  if (steps < 2) throw DomainError("range " + name + " needs at least 2 steps");
}

double ParamRange::at(int i) const {
  if (i == 0) return lo;
  if (i == steps - 1) return hi;
  return (lo * (steps - 1 - i) + hi * i) / (steps - 1);
}

void ScanSpec::validate() const {
  for (const auto& [name, range] : ranges) {
    if (std::find(std::begin(kNames), std::end(kNames), name) == std::end(kNames)) {
      throw DomainError("unknown scan parameter '" + name + "'");
    }
    range.validate(name);
  }
  for (const char* name : {"u", "v", "w"}) {
    if (!ranges.count(name)) throw DomainError(std::string("scan needs a range for ") + name);
  }
  double count = 1.0;
  for (const char* name : {"u", "v", "w"}) count *= ranges.at(name).steps;
  if (is_janowski(condition_set)) {
    if (janowski_pairs.empty()) {
      if (!ranges.count("C") || !ranges.count("D")) {
        throw DomainError("Janowski scans need C and D ranges or an explicit pair list");
      }
      count *= static_cast<double>(ranges.at("C").steps) * ranges.at("D").steps;
    } else {
      count *= static_cast<double>(janowski_pairs.size());
    }
  }
  if (count > kPointBudget) {
    throw BudgetError("scan would sample " + format_number(count) +
                      " points, above the budget of 1e7");
  }
  if (verify_certified) grid.validate();
  if (!(tol >= kMinTolerance)) throw DomainError("tolerance must be >= 1e-14");
}

std::vector<ScanRow> run_scan(const ScanSpec& spec) {
  spec.validate();
  const auto us = samples(spec.ranges.at("u"));
  const auto vs = samples(spec.ranges.at("v"));
  const auto ws = samples(spec.ranges.at("w"));
  std::vector<std::optional<JanowskiPair>> pairs;
  if (is_janowski(spec.condition_set)) {
    for (const auto& j : scan_pairs(spec)) pairs.emplace_back(j);
  } else {
    pairs.emplace_back(std::nullopt);
  }

  std::vector<ScanRow> rows;
  rows.reserve(us.size() * vs.size() * ws.size() * pairs.size());
  for (double u : us) {
    for (double v : vs) {
      for (double w : ws) {
        for (const auto& pair : pairs) {
          ScanRow row;
          row.params = {u, v, w};
          row.pair = pair;
          try {
            row.certificate = certify(spec.condition_set, row.params, pair);
          } catch (const Error& e) {
            row.error = e.what();
          }
          if (spec.verify_certified && row.overall()) {
            try {
              row.verification = verify_on_disk(
                  functional_for(spec.condition_set), row.params,
                  target_for(spec.condition_set, pair), spec.grid, spec.tol, spec.series);
            } catch (const Error& e) {
              row.verification_error = e.what();
            }
          }
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows;
}

ScanSummary summarize(const std::vector<ScanRow>& rows) {
  if (rows.empty()) throw EmptyInputError("cannot summarize an empty scan");
  ScanSummary s;
  s.rows = rows.size();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const ScanRow& r = rows[i];
    if (!r.certificate) {
      ++s.errors;
      continue;
    }
    for (const auto& sub : r.certificate->sub_results) {
      s.holds_count[sub.id] += sub.holds ? 1 : 0;
    }
    if (!r.certificate->overall) continue;
    ++s.feasible;
    if (r.verification) {
      if (r.verification->passed) {
        ++s.verified;
      } else {
        ++s.verify_failed;
      }
    }
    const int dims = r.pair ? 5 : 3;
    for (int k = 0; k < dims; ++k) {
      const double x = row_value(r, k);
      if (s.feasible_box.empty) {
        s.feasible_box.lo[k] = s.feasible_box.hi[k] = x;
      } else {
        s.feasible_box.lo[k] = std::min(s.feasible_box.lo[k], x);
        s.feasible_box.hi[k] = std::max(s.feasible_box.hi[k], x);
      }
    }
    s.feasible_box.empty = false;
    if (s.representatives.size() < ScanSummary::kMaxRepresentatives) {
      s.representatives.push_back(i);
    }
  }
  return s;
}

void write_scan_csv(std::ostream& out, const ScanSpec& spec, const std::vector<ScanRow>& rows) {
  const auto cols = column_names(spec);
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const auto& r : rows) {
    const auto cells = row_cells(spec, r, "");
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << '\n';
  }
}

void write_plot_data(std::ostream& out, const ScanSpec& spec, const std::vector<ScanRow>& rows) {
  const auto cols = column_names(spec);
  out << '#';
  for (const auto& c : cols) out << ' ' << c;
  out << '\n';
  for (const auto& r : rows) {
    const auto cells = row_cells(spec, r, "nan");
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? " " : "") << cells[i];
    out << '\n';
  }
}

}  // namespace hypercert
