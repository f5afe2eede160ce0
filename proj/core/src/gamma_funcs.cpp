#include "zetakit/gamma_funcs.hpp"

#include <cmath>
#include <functional>
#include <vector>

#include "zetakit/combinatorics.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/hurwitz.hpp"
#include "zetakit/numeric.hpp"

namespace zetakit::gamma {

namespace {

constexpr long kShiftTarget = 16;

void require_positive(const Real& x, const char* what) {
  if (!(x > 0)) throw DomainError(std::string(what) + " requires x > 0, got " + x.to_string(10));
}

long shift_count(const Real& x) {
  if (x >= kShiftTarget) return 0;
  return kShiftTarget - floor(x).to_long();
}

// sum_{n >= N} f(n) by Euler-Maclaurin, with deriv(r) = f^{(r)}(N).
Real euler_maclaurin_tail(const Real& integral, const Real& f_at_n, const std::function<Real(long)>& deriv,
                          const Real& tol) {
  const Precision p = integral.precision();
  Real sum = integral + f_at_n / 2;
  mpz_class factorial = 1;
  Real previous(p);
  for (long j = 1; j < 200; ++j) {
    factorial *= (2 * j - 1) * (2 * j);
    Real coeff(combinatorics::bernoulli(2 * j) / mpq_class(factorial), p);
    Real term = coeff * deriv(2 * j - 1);
    if (j > 2 && abs(term) > abs(previous)) break;
    sum -= term;
    if (abs(term) < tol) break;
    previous = std::move(term);
  }
  return sum;
}

long direct_terms(const PrecisionConfig& cfg) { return cfg.digits + 10; }

// (-1)^r r!
Real signed_factorial(long r, Precision p) {
  mpz_class f = 1;
  for (long i = 2; i <= r; ++i) f *= i;
  Real out(f, p);
  return r % 2 == 0 ? out : -out;
}

// log Gamma(y) for y >= 16.
Real log_gamma_large(const Real& y, const PrecisionConfig& cfg, Precision p) {
  const Real tol = cfg.tolerance() / 1000;
  const long big_n = direct_terms(cfg);
  Real sum = -euler_gamma(p) * y - log(y);
  for (long n = 1; n < big_n; ++n) sum += y / n - log1p(y / n);
  const Real nn(big_n, p);
  Real integral = (nn + y) * log1p(y / nn) - y;
  Real f_n = y / nn - log1p(y / nn);
  auto deriv = [&](long r) {
    // f(n) = y/n - log(n+y) + log n
    Real a = y * signed_factorial(r, p) / pow(nn, r + 1);
    Real b = -signed_factorial(r - 1, p) * (1 / pow(nn + y, r) - 1 / pow(nn, r));
    return a + b;
  };
  return sum + euler_maclaurin_tail(integral, f_n, deriv, tol);
}

// psi(y + 1) for y >= 16.
Real digamma_plus_one_large(const Real& y, const PrecisionConfig& cfg, Precision p) {
  const Real tol = cfg.tolerance() / 1000;
  const long big_n = direct_terms(cfg);
  Real sum = -euler_gamma(p);
  for (long n = 1; n < big_n; ++n) sum += 1 / Real(n, p) - 1 / (y + n);
  const Real nn(big_n, p);
  Real integral = log1p(y / nn);
  Real f_n = 1 / nn - 1 / (nn + y);
  auto deriv = [&](long r) { return signed_factorial(r, p) * (1 / pow(nn, r + 1) - 1 / pow(nn + y, r + 1)); };
  return sum + euler_maclaurin_tail(integral, f_n, deriv, tol);
}

}  // namespace

Real log_gamma(const Real& x, const PrecisionConfig& cfg) {
  cfg.validate();
  require_positive(x, "log_gamma");
  const Precision p = max(cfg.working_precision(), x.precision());
  const Real xp = x.with_precision(p);
  const long shift = shift_count(xp);
  Real product(1, p);
  for (long k = 0; k < shift; ++k) product *= xp + k;
  return (log_gamma_large(xp + shift, cfg, p) - log(product)).with_precision(cfg.working_precision());
}

Real digamma(const Real& x, const PrecisionConfig& cfg) {
  cfg.validate();
  require_positive(x, "digamma");
  const Precision p = max(cfg.working_precision(), x.precision());
  const Real xp = x.with_precision(p);
  const long shift = shift_count(xp);
  const Real y = xp + shift;
  Real value = digamma_plus_one_large(y, cfg, p) - 1 / y;
  for (long k = 0; k < shift; ++k) value -= 1 / (xp + k);
  return value.with_precision(cfg.working_precision());
}

Real polygamma(int k, const Real& x, const PrecisionConfig& cfg) {
  if (k < 1) throw DomainError("polygamma requires k >= 1");
  require_positive(x, "polygamma");
  const Precision p = cfg.working_precision();
  SeriesResult z = hurwitz::zeta_hasse({Real(k + 1, p), x, 0}, cfg);
  Real value = require_converged(z, "polygamma");
  mpz_class factorial = 1;
  for (int i = 2; i <= k; ++i) factorial *= i;
  value *= factorial;
  return k % 2 == 1 ? value : -value;
}

IdentityReport digamma_integral_check(const Real& x, const PrecisionConfig& cfg) {
  require_positive(x, "digamma_integral_check");
  const PrecisionConfig qcfg = cfg.relaxed_to(1e-15);
  const Precision p = qcfg.working_precision();
  const Real xm1 = x.with_precision(p) - 1;
  auto integrand = [&](const Real& u) {
    Real one_minus = 1 - u;
    // -[1/log u + 1/(1-u)]; the two poles at u = 1 cancel.
    Real bracket = -(1 / log1p(-one_minus) + 1 / one_minus);
    return xm1.is_zero() ? bracket : pow(u, xm1) * bracket;
  };
  SeriesResult q = numeric::integrate_adaptive(integrand, Real(p), Real(1, p), qcfg);
  Real rhs = digamma(x, cfg) - log(x.with_precision(cfg.working_precision()));
  return make_report("digamma-log-integral", q.value, rhs, 1e-10, x);
}

SeriesResult bourguet_log_gamma(const Real& x, long terms, const PrecisionConfig& cfg) {
  require_positive(x, "bourguet_log_gamma");
  if (terms < 8) throw DomainError("bourguet_log_gamma needs at least 8 terms");
  const PrecisionConfig qcfg = cfg.relaxed_to(1e-9);
  const Precision p = qcfg.working_precision();
  const Real xp = x.with_precision(p);
  const Real two_pi = 2 * pi(p);
  auto g = [&](const Real& t) { return 1 / (xp + t); };

  std::vector<Real> partial;
  Real sum(p);
  for (long n = 1; n <= terms; ++n) {
    numeric::OscillatoryOptions opts;
    opts.kind = numeric::Trig::kSin;
    SeriesResult in = numeric::integrate_oscillatory(g, two_pi * n, Real(p), qcfg, opts);
    sum += in.value / n;
    if (n == terms / 8 || n == terms / 4 || n == terms / 2 || n == terms) partial.push_back(sum);
  }
  SeriesResult extrapolated = numeric::richardson_extrapolate(partial);
  Real base = log(two_pi) / 2 + (xp - Real(0.5, p)) * log(xp) - xp;
  Real value = base + extrapolated.value / pi(p);
  Real err = extrapolated.err_estimate / pi(p);
  return SeriesResult{value, err, terms, err <= Real(1e-4, p)};
}

}  // namespace zetakit::gamma
