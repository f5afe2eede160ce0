#pragma once

// Generalized Stieltjes constants gamma_m(x): the Laurent coefficients of
// zeta(s,x) about s = 1, by four independent routes, plus derivative
// formulas, rational-argument closed forms and functional equations.

#include <vector>

#include "zetakit/config.hpp"
#include "zetakit/rational.hpp"
#include "zetakit/real.hpp"
#include "zetakit/report.hpp"
#include "zetakit/series_result.hpp"

namespace zetakit::stieltjes {

enum class Method {
  kHasse,          // Hasse-type double series in log^{m+1}(k+x)/(k+x)
  kBell,           // series in zeta^{(j)}(n+1,x) with Bell-polynomial weights
  kLaurentOracle,  // defining limit with an Euler-Maclaurin tail
  kBriggs,         // oscillatory-integral representation, m in {0,1}
};

struct StieltjesRequest {
  long m = 0;
  Real x;
  Method method = Method::kHasse;
  PrecisionConfig cfg;
  long briggs_terms = 64;
};

/// gamma_m(x), x > 0. Throws DomainError for invalid (m, x, method)
/// combinations and PrecisionError when the Hasse route cannot reach the
/// requested digits within max_terms.
SeriesResult stieltjes_gamma(const StieltjesRequest& req);

/// gamma_m(x) by the defining limit
///   lim_N [sum_{k<=N} log^m(k+x)/(k+x) - log^{m+1}(N+x)/(m+1)]
/// with an Euler-Maclaurin tail. Shares no code with the other routes.
SeriesResult laurent_oracle(long m, const Real& x, const PrecisionConfig& cfg);

/// gamma_m(x) - gamma_m(1+x) = log^m(x)/x. For m >= 1 the identity follows
/// from zeta(s,x) = zeta(s,x+1) + x^{-s}; the report meta says so.
IdentityReport stieltjes_shift(long m, const Real& x, const PrecisionConfig& cfg);

/// psi(x) from the Hasse-type double series in log(k+x).
SeriesResult digamma_hasse_series(const Real& x, const PrecisionConfig& cfg);

/// int_0^1 u^{x-1}(1-u)^n / log u du against sum_k C(n,k)(-1)^k log(k+x);
/// fails as well if the integrand is found positive on (0,1].
IdentityReport coffey_difference_integral(long n, const Real& x, const PrecisionConfig& cfg);

/// gamma_1'(x) = zeta'(2,x) + zeta(2,x).
Real gamma1_prime(const Real& x, const PrecisionConfig& cfg);

/// gamma_1'(x) = sum_k (1 - log(k+x))/(k+x)^2, summed directly with an
/// Euler-Maclaurin tail.
SeriesResult gamma1_prime_series(const Real& x, const PrecisionConfig& cfg);

/// Closed form of gamma_1(p/q) in zeta''(0,r/q), log Gamma(r/q) and
/// cot(p pi/q); trigonometric arguments are reduced exactly mod q.
Real gamma1_rational(const Rational& r, const PrecisionConfig& cfg);

/// gamma_1(1/4) and gamma_1(1/2) in elementary constants and gamma_1.
Real gamma1_quarter_display(const PrecisionConfig& cfg);
Real gamma1_half_display(const PrecisionConfig& cfg);

/// gamma_1(1-p/q) - gamma_1(p/q) from two Hasse evaluations against the
/// cot / log Gamma closed form.
IdentityReport adamchik_reflection(const Rational& r, const PrecisionConfig& cfg);

/// Landau-type functional equation linking gamma_1 at x, 2x and x + 1/2,
/// 0 < x < 1/2.
IdentityReport landau_gamma1_functional(const Real& x, const PrecisionConfig& cfg);

/// S = sum 1/(n(e^{2 pi n}-1)) against its closed forms: the difference
/// gamma_1(3/4) - gamma_1(1/4), the log Gamma(3/4) form, and the misprinted
/// log Gamma(1/4) form (annotated, expected to fail).
std::vector<IdentityReport> coffey_ramanujan_sum(const PrecisionConfig& cfg);

/// Annotated discrepancy checks of misprinted rational-argument formulas:
/// the general gamma_1(p/q) formula with its printed cot sign, and the
/// printed gamma_1(1/5) display. Both are expected to fail.
IdentityReport gamma1_rational_printed_sign(const Rational& r, const PrecisionConfig& cfg);
IdentityReport gamma1_fifth_printed_display(const PrecisionConfig& cfg);

/// gamma_m(x), m in {0,1}, from the oscillatory-integral representation
/// with the n-sum truncated at `terms` and Richardson-extrapolated.
/// Verification grade (about 1e-4).
SeriesResult briggs_gamma(long m, const Real& x, long terms, const PrecisionConfig& cfg);

/// gamma_m(x), m <= 6, from the series in zeta^{(m-k)}(n+1,x) weighted by
/// Bell polynomials of harmonic numbers, accelerated over n. x < 1 is
/// shifted up with the shift identity.
SeriesResult bell_series_gamma(long m, const Real& x, const PrecisionConfig& cfg);

}  // namespace zetakit::stieltjes
