#include "zetakit/hurwitz.hpp"

#include <algorithm>
#include <cmath>

#include "hasse.hpp"
#include "zetakit/combinatorics.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/gamma_funcs.hpp"
#include "zetakit/numeric.hpp"

namespace zetakit::hurwitz {

namespace {

constexpr double kPoleGuard = 1e-8;

void check_pole(const Real& s) {
  if (abs(s - 1) < kPoleGuard) throw PoleError("zeta has a pole at s = 1 (|s-1| < 1e-8)");
}

// (-1)^r r! / (s-1)^{r+1}
std::vector<Real> pole_part_derivatives(const Real& s, int jmax) {
  std::vector<Real> out;
  const Real inv = 1 / (s - 1);
  Real v = inv;
  for (int r = 0; r <= jmax; ++r) {
    out.push_back(v);
    v *= inv;
    v *= -(r + 1);
  }
  return out;
}

}  // namespace

std::vector<SeriesResult> zeta_hasse_derivatives(const Real& s, const Real& x, int jmax, const PrecisionConfig& cfg) {
  cfg.validate();
  if (jmax < 0) throw DomainError("derivative order must be non-negative");
  if (!(x > 0)) throw DomainError("zeta requires x > 0, got " + x.to_string(10));
  check_pole(s);

  const Precision work = cfg.working_precision();
  const long n_cap = detail::hasse_term_cap(cfg);
  const long shift = detail::hasse_shift(x, cfg.digits);
  const double dist = std::abs((s - 1).to_double());
  const double big_x = x.to_double() + static_cast<double>(shift + n_cap);
  double extra = 0;
  if (dist < 1) extra += (jmax + 1) * std::log2(1 / dist);
  if (s < 1) extra += (1 - s.to_double()) * std::log2(big_x);
  extra += jmax * std::log2(std::log(big_x) + 1);
  const Precision p = work + static_cast<long>(std::ceil(extra)) + n_cap + 16;

  const Real sp = s.with_precision(p);
  const Real xp = x.with_precision(p);
  const Real shifted = xp + shift;
  const Real one_minus_s = 1 - sp;
  const std::vector<Real> pole = pole_part_derivatives(sp, jmax);

  const Real tol = cfg.tolerance();
  std::vector<Real> thresholds;
  for (int i = 0; i <= jmax; ++i) {
    Real weight(1, p);
    for (int j = i; j <= jmax; ++j) {
      Real w = abs(pole[static_cast<size_t>(j - i)]) * combinatorics::binomial(j, i);
      weight = max(weight, w);
    }
    thresholds.push_back(tol / (weight * 10 * (jmax + 1)));
  }

  auto values = [&](long k, std::vector<Real>& out) {
    Real lg = log(shifted + k);
    Real v = exp(one_minus_s * lg);
    for (int i = 0; i <= jmax; ++i) {
      out[static_cast<size_t>(i)] = v;
      v *= -lg;
    }
  };
  detail::HasseOutcome b = detail::hasse_sums(values, static_cast<size_t>(jmax + 1), thresholds, n_cap, p);

  std::vector<Real> direct(static_cast<size_t>(jmax + 1), Real(p));
  for (long k = 0; k < shift; ++k) {
    Real lg = log(xp + k);
    Real v = exp(-sp * lg);
    for (int j = 0; j <= jmax; ++j) {
      direct[static_cast<size_t>(j)] += v;
      v *= -lg;
    }
  }

  std::vector<SeriesResult> out;
  for (int j = 0; j <= jmax; ++j) {
    Real value = direct[static_cast<size_t>(j)];
    Real err(p);
    for (int i = 0; i <= j; ++i) {
      mpz_class c = combinatorics::binomial(j, i);
      Real a = pole[static_cast<size_t>(j - i)] * c;
      value += a * b.sums[static_cast<size_t>(i)];
      err += abs(a) * b.errors[static_cast<size_t>(i)];
    }
    bool converged = b.converged && err <= tol;
    out.push_back(SeriesResult{value.with_precision(work), err.with_precision(work), b.terms + shift, converged});
  }
  return out;
}

SeriesResult zeta_hasse(const ZetaPoint& pt, const PrecisionConfig& cfg) {
  return zeta_hasse_derivatives(pt.s, pt.x, pt.deriv, cfg).back();
}

namespace {

// sum_{n>=1} n^{-a} for a > 1: direct terms plus an Euler-Maclaurin tail.
Real riemann_zeta_direct(const Real& a, const PrecisionConfig& cfg) {
  const Precision p = a.precision();
  const long big_n = cfg.digits + 20;
  Real sum(p);
  for (long n = 1; n < big_n; ++n) sum += exp(-a * log(Real(n, p)));
  const Real nn(big_n, p);
  const Real f = exp(-a * log(nn));
  sum += f * nn / (a - 1) + f / 2;
  // f^{(r)}(N) = (-1)^r a(a+1)...(a+r-1) N^{-a-r}
  Real rising = a;
  mpz_class factorial = 1;
  const Real tol = cfg.tolerance() / 1000;
  for (long j = 1; j < 100; ++j) {
    factorial *= (2 * j - 1) * (2 * j);
    Real deriv = -rising * f / pow(nn, 2 * j - 1);
    Real term = Real(combinatorics::bernoulli(2 * j) / mpq_class(factorial), p) * deriv;
    sum -= term;
    if (abs(term) < tol) break;
    rising *= a + (2 * j - 1);
    rising *= a + 2 * j;
  }
  return sum;
}

}  // namespace

SeriesResult zeta_fourier(const ZetaPoint& pt, const PrecisionConfig& cfg) {
  cfg.validate();
  if (pt.deriv != 0) throw DomainError("zeta_fourier evaluates j = 0 only");
  if (!(pt.s < 1)) throw DomainError("Fourier formula requires s < 1");
  if (!(pt.x > 0 && pt.x <= 1)) throw DomainError("Fourier formula requires 0 < x <= 1");
  const Precision p = cfg.working_precision();
  const Real s = pt.s.with_precision(p);
  const Real x = pt.x.with_precision(p);
  const Real two_pi = 2 * pi(p);
  const Real gamma_factor = 2 * exp(gamma::log_gamma(1 - s, cfg));
  const Real half_angle = pi(p) * s / 2;

  if (x == 1) {
    if (!(s < 0)) throw DomainError("at x = 1 the Fourier formula needs s < 0");
    Real cos_sum = exp((s - 1) * log(two_pi)) * riemann_zeta_direct(1 - s, cfg);
    Real value = gamma_factor * sin(half_angle) * cos_sum;
    return SeriesResult{value, Real(p), cfg.digits + 20, true};
  }

  const PrecisionConfig tcfg = cfg.relaxed_to(1e-12);
  auto coeff = [&](long n) { return exp((s - 1) * log(two_pi * n)); };
  SeriesResult cos_sum = numeric::sum_trig_averaged(coeff, numeric::Trig::kCos, x, tcfg);
  SeriesResult sin_sum = numeric::sum_trig_averaged(coeff, numeric::Trig::kSin, x, tcfg);
  Real a = gamma_factor * sin(half_angle);
  Real b = gamma_factor * cos(half_angle);
  Real value = a * cos_sum.value + b * sin_sum.value;
  Real err = abs(a) * cos_sum.err_estimate + abs(b) * sin_sum.err_estimate;
  return SeriesResult{value, err, cos_sum.terms_used + sin_sum.terms_used,
                      cos_sum.converged && sin_sum.converged};
}

namespace {

struct FourierSums {
  Real log2_sin, log_sin, sin, log_cos, cos;
};

// sum_n L^k trig(2 pi n x)/n, L = log(2 pi n); Fourier route of the s = 0 derivatives.
Real log_power_sum(int power, numeric::Trig mode, const Real& x, const PrecisionConfig& cfg) {
  const Precision p = cfg.working_precision();
  const Real two_pi = 2 * pi(p);
  auto coeff = [&](long n) {
    Real c = 1 / Real(n, p);
    if (power > 0) {
      Real lg = log(two_pi * n);
      for (int i = 0; i < power; ++i) c *= lg;
    }
    return c;
  };
  SeriesResult r = numeric::sum_trig_averaged(coeff, mode, x, cfg);
  return require_converged(r, "Fourier-route trigonometric sum");
}

void check_fourier_domain(const Real& x) {
  if (!(x > 0 && x < 1)) throw DomainError("Fourier route requires 0 < x < 1");
}

}  // namespace

Real zeta_prime0(const Real& x, Route via, const PrecisionConfig& cfg) {
  const Precision p = cfg.working_precision();
  if (via == Route::kHasse) {
    return require_converged(zeta_hasse({Real(p), x, 1}, cfg), "zeta'(0,x)");
  }
  check_fourier_domain(x);
  const PrecisionConfig tcfg = cfg.relaxed_to(1e-12);
  const Real xp = x.with_precision(p);
  const Real g = euler_gamma(p);
  Real sin_part = log_power_sum(1, numeric::Trig::kSin, xp, tcfg) + g * log_power_sum(0, numeric::Trig::kSin, xp, tcfg);
  Real cos_part = log_power_sum(0, numeric::Trig::kCos, xp, tcfg);
  return sin_part / pi(p) + cos_part / 2;
}

Real zeta_doubleprime0(const Real& x, Route via, const PrecisionConfig& cfg) {
  const Precision p = cfg.working_precision();
  if (via == Route::kHasse) {
    return require_converged(zeta_hasse({Real(p), x, 2}, cfg), "zeta''(0,x)");
  }
  check_fourier_domain(x);
  const PrecisionConfig tcfg = cfg.relaxed_to(1e-12);
  const Real xp = x.with_precision(p);
  const Real g = euler_gamma(p);
  const Real pi_p = pi(p);
  const Real zeta2 = pi_p * pi_p / 6;
  using numeric::Trig;
  // Each sum over 1/(2 pi n) is the 1/n sum divided by 2 pi.
  Real sines = 2 * log_power_sum(2, Trig::kSin, xp, tcfg) + 4 * g * log_power_sum(1, Trig::kSin, xp, tcfg) +
               (2 * g * g - zeta2) * log_power_sum(0, Trig::kSin, xp, tcfg);
  Real cosines = 2 * pi_p * log_power_sum(1, Trig::kCos, xp, tcfg) + 2 * pi_p * g * log_power_sum(0, Trig::kCos, xp, tcfg);
  return (sines + cosines) / (2 * pi_p);
}

SeriesResult zeta_srivastava_choi(const Real& s, const Real& x, const PrecisionConfig& cfg) {
  cfg.validate();
  if (!(x > 0)) throw DomainError("zeta requires x > 0");
  check_pole(s);
  const Precision p = cfg.working_precision();
  const Real sp = s.with_precision(p);
  Real xp = x.with_precision(p);
  Real prefix(p);
  // At x = 1 the terms tend to (-1)^n n^{s-2} zeta(s+n,1), divergent for s >= 2;
  // from x >= 2 on they decay geometrically.
  while (xp < 2) {
    prefix += exp(-sp * log(xp));
    xp += 1;
  }

  // r_n = (s)_n / n!; when s + n - 1 = 0 the factor is dropped and the pole
  // of zeta(s+n, x) contributes its residue 1 instead.
  const bool nonpositive_integer = sp.is_integer() && !(sp > 0);
  const long pole_index = nonpositive_integer ? 1 - sp.to_long() : -1;
  std::vector<Real> ratios{Real(1, p)};
  auto ratio = [&](long n) -> const Real& {
    while (static_cast<long>(ratios.size()) <= n) {
      long m = static_cast<long>(ratios.size());
      Real r = ratios.back();
      if (m != pole_index) r *= sp + (m - 1);
      r /= m;
      ratios.push_back(std::move(r));
    }
    return ratios[static_cast<size_t>(n)];
  };

  auto term = [&](long n) -> Real {
    if (pole_index > 0 && n > pole_index) return Real(p);
    Real z = n == pole_index ? Real(1, p) : require_converged(zeta_hasse({sp + n, xp, 0}, cfg), "zeta(s+n,x)");
    Real t = ratio(n) * z / (n + 1);
    return n % 2 == 1 ? t : -t;
  };
  SeriesResult tail = numeric::sum_alternating_accelerated(term, cfg, 1);
  Real value = prefix + exp((1 - sp) * log(xp)) / (sp - 1) + tail.value;
  return SeriesResult{value, tail.err_estimate, tail.terms_used, tail.converged};
}

SeriesResult poisson_zeta(const Real& s, const Real& x, long terms, const PrecisionConfig& cfg) {
  if (!(s > 1)) throw DomainError("Poisson form requires s > 1");
  if (!(x > 0)) throw DomainError("zeta requires x > 0");
  if (terms < 8) throw DomainError("poisson_zeta needs at least 8 terms");
  const PrecisionConfig qcfg = cfg.relaxed_to(1e-10);
  const Precision p = qcfg.working_precision();
  const Real sp = s.with_precision(p);
  const Real xp = x.with_precision(p);
  const Real two_pi = 2 * pi(p);
  auto g = [&](const Real& t) { return exp(-sp * log(xp + t)); };

  // Each integral behaves like sum_k (-1)^k g^{(2k-1)}(0)/(2 pi n)^{2k}. Those
  // terms are summed over all n exactly (zeta(2k)/(2 pi)^{2k} = |B_2k|/(2 (2k)!)),
  // leaving O(n^-8) remainders for the truncated, extrapolated n-sum.
  constexpr int kAsymptoticTerms = 3;
  std::vector<Real> coeff;  // (-1)^k g^{(2k-1)}(0)
  Real closed(p);
  {
    Real rising(1, p), deriv_pow = exp(-sp * log(xp));
    for (int j = 1; j <= 2 * kAsymptoticTerms; ++j) {
      rising *= sp + (j - 1);
      deriv_pow /= xp;
      if (j % 2 == 0) continue;
      const int k = (j + 1) / 2;
      // g^{(j)}(0) = (-1)^j (s)_j x^{-s-j}; j is odd here.
      Real c = -rising * deriv_pow;
      if (k % 2 == 1) c = -c;
      coeff.push_back(c);
      mpq_class b = combinatorics::bernoulli(2 * k);
      mpz_class f;
      mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(2 * k));
      closed += c * Real(mpq_class(abs(b) / (2 * f)), p);
    }
  }

  std::vector<Real> partial;
  Real sum(p);
  for (long n = 1; n <= terms; ++n) {
    SeriesResult in = numeric::integrate_oscillatory(g, two_pi * n, Real(p), qcfg);
    Real asym(p);
    const Real w2 = pow(two_pi * n, 2);
    Real wpow = w2;
    for (const Real& c : coeff) {
      asym += c / wpow;
      wpow *= w2;
    }
    sum += in.value - asym;
    if (n == terms / 8 || n == terms / 4 || n == terms / 2 || n == terms) partial.push_back(sum);
  }
  SeriesResult extrapolated = numeric::richardson_extrapolate(partial);
  Real value = exp(-sp * log(xp)) / 2 + exp((1 - sp) * log(xp)) / (sp - 1) + 2 * (closed + extrapolated.value);
  Real err = 2 * extrapolated.err_estimate;
  return SeriesResult{value, err, terms, err <= Real(1e-5, p)};
}

}  // namespace zetakit::hurwitz
