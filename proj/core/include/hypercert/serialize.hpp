#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "hypercert/certify.hpp"
#include "hypercert/hypergeom.hpp"
#include "hypercert/scan.hpp"
#include "hypercert/verify.hpp"

namespace hypercert {

/// Text is an indented key/value tree; Json carries the same fields and
/// numbers. Complex numbers appear as (re, im) pairs in both.
enum class TreeFormat { Text, Json };

/// 17 significant digits ("%.17g"); non-finite values as nan, inf, -inf.
std::string format_number(double x);

std::string render(const Certificate& c, TreeFormat format);
std::string render(const VerificationReport& r, TreeFormat format);
std::string render(const SeriesValue& s, TreeFormat format);
/// A single functional value at z, as printed by the evaluation command.
std::string render_functional(FunctionalKind kind, const HypergeomParams& p,
                              std::complex<double> z, std::complex<double> value,
                              TreeFormat format);
std::string render(const ScanSummary& s, const std::vector<ScanRow>& rows, TreeFormat format);

/// Stated at the top of every rendered verification report.
inline constexpr std::string_view kGridEvidenceNote =
    "grid evidence only: membership is tested at sampled points with |z| <= r_max; "
    "this neither proves subordination on the open disk nor covers |z| -> 1";

}  // namespace hypercert
