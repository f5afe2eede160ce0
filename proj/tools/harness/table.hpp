#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "compute.hpp"
#include "output.hpp"

namespace zetakit::cli {

/// Parses "start:stop:count" (0 < start <= stop, count >= 1) into decimal
/// point strings, evenly spaced. Throws UsageError.
std::vector<std::string> parse_grid(std::string_view spec);

/// Evaluates base with x set to each point, on up to `workers` threads.
/// Rows come back in grid order. The first kernel exception (in grid order)
/// is rethrown after all workers finish.
std::vector<TableRow> run_table(const ComputeRequest& base, const std::vector<std::string>& xs, unsigned workers);

}  // namespace zetakit::cli
