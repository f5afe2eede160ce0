#pragma once

// log Gamma, digamma and polygamma for real x > 0.

#include "zetakit/config.hpp"
#include "zetakit/real.hpp"
#include "zetakit/report.hpp"
#include "zetakit/series_result.hpp"

namespace zetakit::gamma {

/// log Gamma(x), x > 0. Shifts x above 16, then sums the Weierstrass
/// product series with an Euler-Maclaurin tail.
Real log_gamma(const Real& x, const PrecisionConfig& cfg);

/// psi(x), x > 0, by the same shift-then-series scheme.
Real digamma(const Real& x, const PrecisionConfig& cfg);

/// psi^{(k)}(x) = (-1)^{k+1} k! zeta(k+1, x), k >= 1.
Real polygamma(int k, const Real& x, const PrecisionConfig& cfg);

/// Quadrature of -int_0^1 u^{x-1}[1/log u + 1/(1-u)] du against psi(x) - log x.
/// (With the bracket written as 1/log u - 1/(1-u) the integral diverges at u = 1.)
IdentityReport digamma_integral_check(const Real& x, const PrecisionConfig& cfg);

/// Bourguet's oscillatory-integral expansion of log Gamma(x), with the
/// n-sum truncated at `terms` and Richardson-extrapolated. Low accuracy
/// (about 1e-4); a cross-check only.
SeriesResult bourguet_log_gamma(const Real& x, long terms, const PrecisionConfig& cfg);

}  // namespace zetakit::gamma
