#pragma once

// Hurwitz zeta zeta(s,x) for real s != 1, x > 0, and its s-derivatives.

#include <vector>

#include "zetakit/config.hpp"
#include "zetakit/real.hpp"
#include "zetakit/series_result.hpp"

namespace zetakit::hurwitz {

struct ZetaPoint {
  Real s;
  Real x;
  int deriv = 0;  // order of the s-derivative
};

/// Hasse's globally convergent series (and its term-wise s-derivatives).
///
/// The series converges only algebraically in the outer index for small x,
/// so x is first shifted by K with zeta(s,x) = sum_{k<K} (k+x)^{-s} + zeta(s,x+K).
/// The pole part 1/(s-1) is differentiated analytically. Throws PoleError
/// when |s-1| < 1e-8 and DomainError when x <= 0.
SeriesResult zeta_hasse(const ZetaPoint& p, const PrecisionConfig& cfg);

/// zeta^{(j)}(s,x) for j = 0..jmax from a single pass of the series.
std::vector<SeriesResult> zeta_hasse_derivatives(const Real& s, const Real& x, int jmax, const PrecisionConfig& cfg);

/// Hurwitz's Fourier expansion, s < 1 and 0 < x <= 1 (j = 0 only). At x = 1
/// only s < 0 is accepted, where the sine sum vanishes and the cosine sum
/// is absolutely convergent.
SeriesResult zeta_fourier(const ZetaPoint& p, const PrecisionConfig& cfg);

enum class Route { kHasse, kFourier };

/// zeta'(0,x). The Fourier route needs 0 < x < 1; its accuracy is that of
/// the averaged trigonometric sums (about 1e-10).
Real zeta_prime0(const Real& x, Route via, const PrecisionConfig& cfg);

/// zeta''(0,x), same routes and domains as zeta_prime0.
Real zeta_doubleprime0(const Real& x, Route via, const PrecisionConfig& cfg);

/// Srivastava-Choi binomial-type series in zeta(s+n,x), accelerated over n.
/// x is first shifted to x >= 2, where the terms decay geometrically.
SeriesResult zeta_srivastava_choi(const Real& s, const Real& x, const PrecisionConfig& cfg);

/// Poisson-summation form: (1/2)x^{-s} + x^{1-s}/(s-1) plus a sum of
/// oscillatory integrals, truncated at `terms` and Richardson-extrapolated.
/// Requires s > 1. Verification grade (about 1e-5).
SeriesResult poisson_zeta(const Real& s, const Real& x, long terms, const PrecisionConfig& cfg);

}  // namespace zetakit::hurwitz
