#pragma once

// JSON and CSV rendering for the CLI. Values are always decimal strings.

#include <string>
#include <vector>

#include "compute.hpp"
#include "suites.hpp"

namespace zetakit::cli {

/// Wall-clock data kept out of the deterministic part of every document.
struct RunMetadata {
  std::string timestamp;  // ISO 8601, UTC
  double elapsed_ms = 0;
  std::string cache;      // "hit", "miss", "disabled" (compute only)
};

RunMetadata start_metadata();
std::string library_versions();

std::string render_compute(const ComputeRequest& req, const ComputeOutcome& out, const RunMetadata& meta);

std::string render_report_file(const SuiteRun& run, long digits, const RunMetadata& meta);

/// One text line per identity: PASS/FAIL/XFAIL, id, residual, tolerance.
std::string render_report_text(const SuiteRun& run);

struct TableRow {
  std::string x;
  ComputeOutcome outcome;
};

std::string render_table_csv(const std::vector<TableRow>& rows);
std::string render_table_json(const ComputeRequest& base, const std::vector<TableRow>& rows, const RunMetadata& meta);

/// RFC 4180 field quoting.
std::string csv_field(const std::string& s);

}  // namespace zetakit::cli
