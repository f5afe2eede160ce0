#pragma once

// Summation, acceleration and quadrature kernels shared by every module.
// All kernels are pure functions of their arguments.

#include <functional>
#include <span>
#include <vector>

#include "zetakit/config.hpp"
#include "zetakit/real.hpp"
#include "zetakit/series_result.hpp"

namespace zetakit::numeric {

/// term(n) for integer n, returned at (at least) the working precision.
using TermFn = std::function<Real(long)>;
using RealFn = std::function<Real(const Real&)>;

enum class Trig { kSin, kCos };

/// Sum of an (eventually) alternating series sum_{n >= first_index} term(n).
///
/// Applies the Cohen-Rodriguez Villegas-Zagier weights to the magnitudes
/// (-1)^k term(first_index + k), growing the length by half each round until
/// two successive accelerated sums agree. err_estimate = 4 * |last difference|.
/// The length never exceeds min(max_terms, 10 * digits + 200).
SeriesResult sum_alternating_accelerated(const TermFn& term, const PrecisionConfig& cfg, long first_index = 1);

/// Fixed-length accelerated sum of sum_k (-1)^k a[k].
Real cvz_sum(std::span<const Real> magnitudes);

struct TrigSeriesOptions {
  long first_index = 1;
  /// Use angle (2n+1)*pi*x instead of 2*pi*n*x.
  bool odd_multiples = false;
};

/// sum_n coeff(n) * trig(2 pi n x) (or trig((2n+1) pi x)) for 0 < x < 1 and
/// eventually monotone coefficients, via k-fold iterated block averaging of
/// the partial sums (k <= 6, block length doubled until the averaged
/// estimates settle). Throws DomainError when x is outside (0,1).
SeriesResult sum_trig_averaged(const TermFn& coeff, Trig mode, const Real& x, const PrecisionConfig& cfg,
                               TrigSeriesOptions opts = {});

/// Marker for an infinite upper limit.
struct Infinity {};
inline constexpr Infinity infinity{};

/// Double-exponential (tanh-sinh) quadrature on [a,b]. Integrable endpoint
/// singularities are fine; f is never evaluated at an endpoint. Throws
/// QuadratureFailure when refinement stalls above the tolerance.
SeriesResult integrate_adaptive(const RealFn& f, const Real& a, const Real& b, const PrecisionConfig& cfg);
/// Same on [a, inf) after the map t = a + y/(1-y).
SeriesResult integrate_adaptive(const RealFn& f, const Real& a, Infinity, const PrecisionConfig& cfg);

struct OscillatoryOptions {
  Trig kind = Trig::kCos;
  /// Integrate [a, a + near_field] panel by panel before accelerating, for
  /// integrands that are not yet monotone near a.
  double near_field = 0.0;
  int gauss_points = 20;
};

/// int_a^inf g(t) trig(freq t) dt for smooth g decaying monotonically to 0.
///
/// Gauss-Legendre on each half period between zeros of the trigonometric
/// factor; the alternating sequence of panel integrals is summed with
/// sum_alternating_accelerated. Verification grade. Throws DomainError when
/// g does not decay and QuadratureFailure when the panel sum stalls.
SeriesResult integrate_oscillatory(const RealFn& g, const Real& freq, const Real& a, const PrecisionConfig& cfg,
                                   OscillatoryOptions opts = {});

/// Richardson extrapolation of values computed at N, 2N, 4N, ... whose error
/// has an expansion in integer powers of 1/N. err_estimate is the change
/// contributed by the last column.
SeriesResult richardson_extrapolate(std::span<const Real> values);

struct GaussLegendreRule {
  std::vector<Real> nodes;    // on [-1, 1]
  std::vector<Real> weights;
};
GaussLegendreRule gauss_legendre(int points, Precision p);

}  // namespace zetakit::numeric
