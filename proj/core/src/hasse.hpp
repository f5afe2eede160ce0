#pragma once

// Outer sums of Hasse-type globally convergent series:
//   S_i = sum_{n>=0} 1/(n+1) sum_{k=0}^{n} (-1)^k C(n,k) f_i(k).
// Shared by the zeta and Stieltjes routes.

#include <functional>
#include <span>
#include <vector>

#include "zetakit/config.hpp"
#include "zetakit/real.hpp"

namespace zetakit::detail {

/// Fills out[i] = f_i(k) for every i, at the engine precision.
using HasseValues = std::function<void(long k, std::vector<Real>& out)>;

struct HasseOutcome {
  std::vector<Real> sums;
  std::vector<Real> errors;
  long terms = 0;
  bool converged = false;
};

/// Stops once every |outer term| stayed below its threshold for five
/// consecutive n, or at n_cap. errors[i] = 4 * max of the last five terms.
HasseOutcome hasse_sums(const HasseValues& values, size_t count, std::span<const Real> thresholds, long n_cap,
                        Precision p);

/// Shift K so that x + K clears the slow algebraic regime of the outer sum.
long hasse_shift(const Real& x, long digits);

/// Outer-index cap for a given target accuracy.
long hasse_term_cap(const PrecisionConfig& cfg);

}  // namespace zetakit::detail
