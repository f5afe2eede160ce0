#pragma once

#include <string_view>

#include "zetakit/real.hpp"

namespace zetakit {

/// Value plus a heuristic error estimate; the common return of summation
/// and quadrature kernels. err_estimate is an upper-style heuristic (last
/// term or last difference times a safety factor), never a rigorous bound.
struct SeriesResult {
  Real value;
  Real err_estimate;
  long terms_used = 0;
  bool converged = false;
};

/// Returns r.value, throwing NonConvergence when r did not converge.
const Real& require_converged(const SeriesResult& r, std::string_view what);

inline constexpr int kErrorSafetyFactor = 4;

}  // namespace zetakit
