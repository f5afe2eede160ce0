#pragma once

// Named validation suites run by `zetakit validate`.

#include <string>
#include <string_view>
#include <vector>

#include "zetakit/config.hpp"
#include "zetakit/report.hpp"

namespace zetakit::cli {

struct CheckError {
  std::string check;
  std::string message;
};

struct SuiteRun {
  std::vector<std::string> suites;       // expanded, in run order
  std::vector<IdentityReport> reports;   // sorted by id
  std::vector<CheckError> errors;        // kernel failures, sorted by check

  bool all_as_expected() const;
};

std::vector<std::string_view> suite_names();

/// Splits "a,b c" into names; "all" expands to every suite. Throws
/// UsageError for an empty list or an unknown name.
std::vector<std::string> expand_suites(const std::vector<std::string>& requested);

/// Runs the suites. A kernel error inside one check is recorded and the
/// remaining checks still run.
SuiteRun run_suites(const std::vector<std::string>& suites, const PrecisionConfig& cfg);

}  // namespace zetakit::cli
