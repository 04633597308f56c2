#pragma once

// Input documents, report documents, and the command dispatcher behind the
// CLI and the C API.

#include <cstdint>
#include <optional>
#include <string>

#include "lenfact/krull.hpp"
#include "lenfact/monoid.hpp"

namespace lenfact {

inline constexpr int kReportVersion = 1;

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitAssertion = 2;

struct RunOptions {
  std::optional<std::int64_t> bound;  // default: 4 x max atom grading
  std::string strategy = "all";       // lattice | brute | all
  std::string format = "text";        // text | json
  std::optional<std::string> element;  // JSON: 8, [1,2], "3/2"
};

struct RunResult {
  std::string output;
  int exit_code = kExitOk;
};

/// Never throws: errors become a report with exit code 1 (input) or 2
/// (property assertion).
RunResult run(const std::string& command, const std::string& input, const RunOptions& options);

/// {"kind", "generators", "ambient"}; kind "krull" takes a distribution
/// document instead of generators. Diagnostics name the offending field.
MonoidSpec parse_monoid_document(const std::string& text);

/// {"class_group": {"free_rank", "torsion"}, "primes": [{"class", "count",
/// "label"?}], "degree_bound"?}. Families without a label are named P, Q,
/// R, ... in order.
PrimeDistribution parse_distribution_document(const std::string& text);

/// Canonical JSON echo of a spec; parses back to an equivalent spec.
std::string echo_monoid_document(const MonoidSpec& spec);

}  // namespace lenfact
