#pragma once

// Lerch's series-differentiation transform and checks of the Fourier-series
// identities around log Gamma, zeta'(0,x), zeta''(0,x) and gamma_1(x).
// Conditionally convergent trigonometric sums all go through
// numeric::sum_trig_averaged.

#include <functional>
#include <string>
#include <vector>

#include "zetakit/config.hpp"
#include "zetakit/numeric.hpp"
#include "zetakit/rational.hpp"
#include "zetakit/real.hpp"
#include "zetakit/report.hpp"
#include "zetakit/series_result.hpp"

namespace zetakit::fourier {

using FourierIdentityReport = IdentityReport;

/// Coefficient sequence n -> c_n, n >= 1 (c_0 = 0 is implied).
struct CoeffSeq {
  std::function<Real(long)> eval;
  std::string label;
};

/// For f(x) = sum c_n/n sin(2 pi n x) (kSin) or g(x) = sum c_n/n cos(2 pi n x)
/// (kCos), returns f'(x) sin(pi x)/pi as
///   -c_1 trig(pi x) + sum_{n>=1} (c_n - c_{n+1}) trig((2n+1) pi x).
/// Requires 0 < x < 1.
SeriesResult lerch_transform(const CoeffSeq& c, numeric::Trig mode, const Real& x, const PrecisionConfig& cfg);

/// Sine transform of c plus cosine transform of d: [f' + g'](x) sin(pi x)/pi.
SeriesResult lerch_transform_combined(const CoeffSeq& c, const CoeffSeq& d, const Real& x, const PrecisionConfig& cfg);

/// Kummer's series for log Gamma(x), 0 < x < 1, against log_gamma.
FourierIdentityReport kummer_log_gamma(const Real& x, const PrecisionConfig& cfg);

/// sum log(1+1/n) sin((2n+1) pi x) against its psi closed form, 0 < x < 1.
FourierIdentityReport series_316(const Real& x, const PrecisionConfig& cfg);

/// sum (-1)^{n+1} log(1+1/n) = log(pi/2), accelerated.
FourierIdentityReport wallis_alternating(const PrecisionConfig& cfg);

/// Closed form of f(x) = sum log n/n cos(2 pi n x) in zeta''(0,x), zeta''(0,1-x).
Real deninger_closed_form(const Real& x, const PrecisionConfig& cfg);

/// Averaged sum log n/n cos(2 pi n x) against deninger_closed_form.
FourierIdentityReport deninger_f(const Real& x, const PrecisionConfig& cfg);

/// f(x + 1/2) = f(2x) - f(x) - log 2 log(2 sin 2 pi x), 0 < x < 1/2, with f
/// from deninger_closed_form.
FourierIdentityReport landau_f_functional(const Real& x, const PrecisionConfig& cfg);

/// gamma_1(x) from the Lerch-transformed Fourier series of zeta''(0,x),
/// 1e-3 <= x <= 1 - 1e-3. Verification grade (about 1e-4).
SeriesResult gamma1_fourier(const Real& x, const PrecisionConfig& cfg);

enum class Log1pFamily {
  kCosOdd,          // sum log(1+1/n) cos((2n+1) pi x)
  kRationalCosOdd,  // the same at x = p/q in log Gamma(j/q)
  kCosEven,         // sum log(1+1/n) cos(2n pi x)
  kSinEven,         // sum log(1+1/n) sin(2n pi x)
};

/// Averaged log(1+1/n) trigonometric sums against closed forms in
/// gamma_1(1-x) - gamma_1(x), psi(x) and log Gamma. kRationalCosOdd needs
/// the Rational overload.
FourierIdentityReport series_325_family(const Real& x, Log1pFamily which, const PrecisionConfig& cfg);
FourierIdentityReport series_325_family(const Rational& x, Log1pFamily which, const PrecisionConfig& cfg);

/// int_0^1 psi(x) sin(pi x) dx, Koelbig's log n/(4n^2-1) series and the
/// log(1+1/n)/(2n+1) series: series equivalence, quadrature agreement,
/// the integrated form with the consistent sign, and the printed sign
/// (annotated, expected to fail).
std::vector<FourierIdentityReport> kolbig_check(const PrecisionConfig& cfg);

struct Complex {
  Real re;
  Real im;
};

enum class SondowRoute {
  kSeries,    // the defining power series
  kIntegral,  // int_0^1 (1-y+log y)/((1-zy) log y) dy, real z only
  kTwoQ,      // finite log Gamma sum at z = e^{i pi p/q}
};

/// Generalized Euler constant function gamma(z) for real -1 <= z <= 1
/// (series or integral route).
Complex sondow_gamma(const Real& z, SondowRoute route, const PrecisionConfig& cfg);

/// gamma(e^{i pi p/q}) for 0 < p/q < 1 (series or 2q route).
Complex sondow_gamma(const Rational& angle, SondowRoute route, const PrecisionConfig& cfg);

}  // namespace zetakit::fourier
