#pragma once

#include <iosfwd>
#include <string>

namespace hypercert::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;     // condition fails, violations, empty region
inline constexpr int kExitError = 2;        // evaluation or parameter error
inline constexpr int kExitDenominator = 3;  // verify: no violations, but unclassified points
inline constexpr int kExitUsage = 64;

/// Entry point of the `hypercert` command. Results go to `out`; diagnostics,
/// summaries of file-bound output and COUNTEREXAMPLE blocks go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hypercert::cli
