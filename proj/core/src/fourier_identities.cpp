#include "zetakit/fourier_identities.hpp"

#include <cmath>

#include "zetakit/combinatorics.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/gamma_funcs.hpp"
#include "zetakit/hurwitz.hpp"
#include "zetakit/stieltjes.hpp"

namespace zetakit::fourier {

using numeric::Trig;

namespace {

// Trigonometric sums here are verification grade; chasing the full working
// precision through block averaging would only cost time.
constexpr double kTrigTolerance = 1e-12;

void require_unit_interval(const Real& x, const char* what) {
  if (!(x > 0 && x < 1)) throw DomainError(std::string(what) + " requires 0 < x < 1, got " + x.to_string(10));
}

Real trig(Trig mode, const Real& angle) { return mode == Trig::kSin ? sin(angle) : cos(angle); }

Real log_two_pi(Precision p) { return log(2 * pi(p)); }

Real gamma1(const Real& x, const PrecisionConfig& cfg) {
  return require_converged(stieltjes::stieltjes_gamma({1, x, stieltjes::Method::kHasse, cfg}), "gamma_1(x)");
}

// psi(x) sin(pi x) + (pi/2) cos(pi x)
Real psi_combination(const Real& x, const PrecisionConfig& cfg) {
  const Precision p = cfg.working_precision();
  const Real px = pi(p) * x;
  return gamma::digamma(x, cfg) * sin(px) + pi(p) / 2 * cos(px);
}

// sum_{n>=1} log(1+1/n) trig(angle_n), averaged.
Real log1p_sum(Trig mode, const Real& x, bool odd, const PrecisionConfig& cfg) {
  const Precision p = cfg.working_precision();
  auto coeff = [p](long n) { return log1p(1 / Real(n, p)); };
  numeric::TrigSeriesOptions opts;
  opts.odd_multiples = odd;
  return require_converged(numeric::sum_trig_averaged(coeff, mode, x, cfg.relaxed_to(kTrigTolerance), opts),
                           "log(1+1/n) trigonometric sum");
}

}  // namespace

SeriesResult lerch_transform(const CoeffSeq& c, Trig mode, const Real& x, const PrecisionConfig& cfg) {
  require_unit_interval(x, "Lerch transform");
  const Precision p = cfg.working_precision();
  const Real xp = x.with_precision(p);
  auto diff = [&c](long n) { return c.eval(n) - c.eval(n + 1); };
  numeric::TrigSeriesOptions opts;
  opts.odd_multiples = true;
  SeriesResult r = numeric::sum_trig_averaged(diff, mode, xp, cfg, opts);
  r.value -= c.eval(1) * trig(mode, pi(p) * xp);
  return r;
}

SeriesResult lerch_transform_combined(const CoeffSeq& c, const CoeffSeq& d, const Real& x,
                                      const PrecisionConfig& cfg) {
  SeriesResult s = lerch_transform(c, Trig::kSin, x, cfg);
  SeriesResult t = lerch_transform(d, Trig::kCos, x, cfg);
  return SeriesResult{s.value + t.value, s.err_estimate + t.err_estimate, s.terms_used + t.terms_used,
                      s.converged && t.converged};
}

FourierIdentityReport kummer_log_gamma(const Real& x, const PrecisionConfig& cfg) {
  require_unit_interval(x, "Kummer's series");
  const Precision p = cfg.working_precision();
  const Real xp = x.with_precision(p);
  const Real pi_p = pi(p);
  auto coeff = [p](long n) {
    Real v(n, p);
    return log(v) / v;
  };
  Real sum = require_converged(
      numeric::sum_trig_averaged(coeff, Trig::kSin, xp, cfg.relaxed_to(kTrigTolerance)), "Kummer's series");
  Real series = log(pi_p / sin(pi_p * xp)) / 2 + (euler_gamma(p) + log_two_pi(p)) * (Real(1, p) / 2 - xp) +
                sum / pi_p;
  return make_report("kummer-log-gamma", gamma::log_gamma(xp, cfg), series, 1e-5, xp, "averaged sine series");
}

FourierIdentityReport series_316(const Real& x, const PrecisionConfig& cfg) {
  require_unit_interval(x, "log(1+1/n) sine series");
  const Precision p = cfg.working_precision();
  const Real xp = x.with_precision(p);
  Real lhs = log1p_sum(Trig::kSin, xp, true, cfg);
  Real rhs = -(psi_combination(xp, cfg) + (euler_gamma(p) + log_two_pi(p)) * sin(pi(p) * xp));
  return make_report("log1p-sin-odd", lhs, rhs, 1e-5, xp, "averaged sine series");
}

FourierIdentityReport wallis_alternating(const PrecisionConfig& cfg) {
  const Precision p = cfg.working_precision();
  auto term = [p](long n) {
    Real v = log1p(1 / Real(n, p));
    return n % 2 == 1 ? v : -v;
  };
  Real lhs = require_converged(numeric::sum_alternating_accelerated(term, cfg), "alternating log(1+1/n) sum");
  return make_report("wallis-alternating-log", lhs, log(pi(p) / 2), 1e-10, "accelerated alternating sum");
}

Real deninger_closed_form(const Real& x, const PrecisionConfig& cfg) {
  require_unit_interval(x, "Deninger's cosine series");
  const Precision p = cfg.working_precision();
  const Real xp = x.with_precision(p);
  using hurwitz::Route;
  Real z2 = hurwitz::zeta_doubleprime0(xp, Route::kHasse, cfg) + hurwitz::zeta_doubleprime0(1 - xp, Route::kHasse, cfg);
  return z2 / 2 + (euler_gamma(p) + log_two_pi(p)) * log(2 * sin(pi(p) * xp));
}

FourierIdentityReport deninger_f(const Real& x, const PrecisionConfig& cfg) {
  const Precision p = cfg.working_precision();
  const Real xp = x.with_precision(p);
  Real rhs = deninger_closed_form(xp, cfg);
  auto coeff = [p](long n) {
    Real v(n, p);
    return log(v) / v;
  };
  Real lhs = require_converged(
      numeric::sum_trig_averaged(coeff, Trig::kCos, xp, cfg.relaxed_to(kTrigTolerance)), "log n/n cosine series");
  return make_report("deninger-cosine", lhs, rhs, 1e-4, xp, "averaged cosine series");
}

FourierIdentityReport landau_f_functional(const Real& x, const PrecisionConfig& cfg) {
  if (!(x > 0 && x * 2 < 1)) throw DomainError("Landau's functional equation for f requires 0 < x < 1/2");
  const Precision p = cfg.working_precision();
  const Real xp = x.with_precision(p);
  const Real half = Real(1, p) / 2;
  Real lhs = deninger_closed_form(xp + half, cfg);
  Real rhs = deninger_closed_form(2 * xp, cfg) - deninger_closed_form(xp, cfg) -
             log_2(p) * log(2 * sin(2 * pi(p) * xp));
  return make_report("landau-f-functional", lhs, rhs, 1e-4, xp);
}

SeriesResult gamma1_fourier(const Real& x, const PrecisionConfig& cfg) {
  if (!(x >= 1e-3 && x <= 1 - 1e-3)) {
    throw DomainError("gamma1_fourier requires 1e-3 <= x <= 1 - 1e-3, got " + x.to_string(10));
  }
  const Precision p = cfg.working_precision();
  const Real xp = x.with_precision(p);
  const Real pi_p = pi(p), g = euler_gamma(p), two_pi = 2 * pi_p;
  const Real constant = (2 * g * g - pi_p * pi_p / 6) / 2;
  CoeffSeq c{[&](long n) {
               Real l = log(two_pi * n);
               return (l * l + 2 * g * l + constant) / pi_p;
             },
             "zeta''(0,x) sine coefficients"};
  CoeffSeq d{[&](long n) { return log(two_pi * n) + g; }, "zeta''(0,x) cosine coefficients"};
  SeriesResult r = lerch_transform_combined(c, d, xp, cfg.relaxed_to(kTrigTolerance));
  const Real scale = pi_p / (2 * sin(pi_p * xp));
  r.value *= scale;
  r.err_estimate *= scale;
  return r;
}

FourierIdentityReport series_325_family(const Real& x, Log1pFamily which, const PrecisionConfig& cfg) {
  if (which == Log1pFamily::kRationalCosOdd) {
    throw DomainError("the log Gamma(j/q) closed form needs a rational argument");
  }
  require_unit_interval(x, "log(1+1/n) trigonometric series");
  const Precision p = cfg.working_precision();
  const Real xp = x.with_precision(p);
  const Real pi_p = pi(p), px = pi_p * xp;
  const Real s = sin(px), c = cos(px);
  const Real lg = euler_gamma(p) + log_two_pi(p);
  const Real diff = gamma1(1 - xp, cfg) - gamma1(xp, cfg);
  switch (which) {
    case Log1pFamily::kCosOdd:
      return make_report("log1p-cos-odd", log1p_sum(Trig::kCos, xp, true, cfg), diff * s / pi_p - lg * c, 1e-4, xp,
                         "averaged cosine series");
    case Log1pFamily::kCosEven:
      return make_report("log1p-cos-even", log1p_sum(Trig::kCos, xp, false, cfg),
                         diff * s * c / pi_p - lg - psi_combination(xp, cfg) * s, 1e-4, xp, "averaged cosine series");
    case Log1pFamily::kSinEven:
      return make_report("log1p-sin-even", log1p_sum(Trig::kSin, xp, false, cfg),
                         -diff * s * s / pi_p - psi_combination(xp, cfg) * c, 1e-4, xp, "averaged sine series");
    case Log1pFamily::kRationalCosOdd:
      break;
  }
  throw DomainError("unknown log(1+1/n) series");
}

FourierIdentityReport series_325_family(const Rational& r, Log1pFamily which, const PrecisionConfig& cfg) {
  const Precision p = cfg.working_precision();
  const Real xp = Real(r.p(), p) / r.q();
  if (which != Log1pFamily::kRationalCosOdd) return series_325_family(xp, which, cfg);
  const Real pi_p = pi(p);
  Real gamma_sum(p);
  for (long j = 1; j < r.q(); ++j) {
    Real jq = Real(j, p) / r.q();
    gamma_sum += gamma::log_gamma(jq, cfg) * sin(2 * pi_p * jq * r.p());
  }
  Real rhs = log(Real(r.q(), p)) * cos(pi_p * xp) - 2 * sin(pi_p * xp) * gamma_sum;
  FourierIdentityReport rep =
      make_report("log1p-cos-odd-rational", log1p_sum(Trig::kCos, xp, true, cfg), rhs, 1e-4, xp, "averaged cosine series");
  rep.meta += ", x = " + r.to_string();
  return rep;
}

namespace {

// sum_{n>=1} log(1+1/n)/(2n+1): direct part below `cut`, tail from the
// expansion sum_k a_k n^{-k} summed against zeta(k, cut).
Real log1p_odd_series(long cut, const PrecisionConfig& cfg) {
  const Precision p = cfg.working_precision();
  Real sum(p);
  for (long n = 1; n < cut; ++n) sum += log1p(1 / Real(n, p)) / (2 * n + 1);
  const Real cut_r(cut, p);
  const long kmax = static_cast<long>(std::ceil((cfg.digits + 10) / std::log10(static_cast<double>(cut)))) + 2;
  for (long k = 2; k <= kmax; ++k) {
    mpq_class a = 0;
    for (long i = 1; i < k; ++i) {
      mpq_class t(1, k - i);
      mpz_class pow2;
      mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(i));
      a += t / pow2;
    }
    if (k % 2 == 1) a = -a;
    Real z = require_converged(hurwitz::zeta_hasse({Real(k, p), cut_r, 0}, cfg), "zeta(k,N)");
    sum += Real(a, p) * z;
  }
  return sum;
}

// sum_{n>=2} log n/(4n^2-1), tail as -sum_i 4^{-i} zeta'(2i, cut).
Real koelbig_series(long cut, const PrecisionConfig& cfg) {
  const Precision p = cfg.working_precision();
  Real sum(p);
  for (long n = 2; n < cut; ++n) sum += log(Real(n, p)) / (4 * n * n - 1);
  const Real cut_r(cut, p);
  const long imax = static_cast<long>(std::ceil((cfg.digits + 10) / std::log10(4.0 * cut * cut))) + 2;
  Real quarter(p);
  quarter = Real(1, p);
  for (long i = 1; i <= imax; ++i) {
    quarter /= 4;
    Real zp = require_converged(hurwitz::zeta_hasse({Real(2 * i, p), cut_r, 1}, cfg), "zeta'(2i,N)");
    sum -= quarter * zp;
  }
  return sum;
}

}  // namespace

std::vector<FourierIdentityReport> kolbig_check(const PrecisionConfig& cfg) {
  const Precision p = cfg.working_precision();
  constexpr long kCut = 32;
  const Real pi_p = pi(p);
  const Real lg = euler_gamma(p) + log_two_pi(p);
  const Real s_log = koelbig_series(kCut, cfg);
  const Real s_log1p = log1p_odd_series(kCut, cfg);

  auto integrand = [&](const Real& x) { return gamma::digamma(x, cfg) * sin(pi_p * x); };
  const Real integral = require_converged(
      numeric::integrate_adaptive(integrand, Real(p), Real(1, p), cfg.relaxed_to(1e-15)), "int psi(x) sin(pi x)");

  std::vector<FourierIdentityReport> out;
  out.push_back(make_report("kolbig-series-equivalence", 2 * s_log, s_log1p, 1e-10));
  out.push_back(make_report("kolbig-psi-sine-integral", integral, -2 / pi_p * (lg + 2 * s_log), 1e-8, "quadrature"));
  out.push_back(make_report("kolbig-log1p-integral", -2 / pi_p * s_log1p, integral + 2 / pi_p * lg, 1e-8,
                            "quadrature"));
  FourierIdentityReport printed = make_report("kolbig-log1p-integral-printed", -2 / pi_p * s_log1p,
                                              -integral + 2 / pi_p * lg, 1e-8, "quadrature");
  printed.discrepancy = "printed sign of the psi(x) sin(pi x) integral; the consistent sign is +";
  out.push_back(std::move(printed));
  return out;
}

namespace {

// 1/n - log(1+1/n)
Real sondow_coeff(long n, Precision p) {
  Real v(n, p);
  return 1 / v - log1p(1 / v);
}

// sum_{n>=1} (1/n - log(1+1/n)) by Euler-Maclaurin.
Real sondow_at_one(const PrecisionConfig& cfg) {
  const Precision p = cfg.working_precision();
  const long cut = std::max<long>(20, cfg.digits);
  Real sum(p);
  for (long n = 1; n < cut; ++n) sum += sondow_coeff(n, p);
  const Real nn(cut, p), n1 = nn + 1;
  sum += sondow_coeff(cut, p) / 2;
  sum += n1 * log1p(1 / nn) - 1;
  const Real tol = cfg.tolerance() / 100;
  // f^{(r)}(n) = (-1)^r r! n^{-r-1} + (-1)^r (r-1)! [(n+1)^{-r} - n^{-r}]
  mpz_class fact = 1;  // (r-1)!
  for (long k = 1; 2 * k <= 4 * cut; ++k) {
    const long r = 2 * k - 1;
    const Real pn = pow(nn, -r), pn1 = pow(n1, -r);
    // r odd: (-1)^r = -1
    Real deriv = -(Real(fact, p) * r) * pn / nn - Real(fact, p) * (pn1 - pn);
    mpq_class b = combinatorics::bernoulli(2 * k);
    mpz_class fact2k;
    mpz_fac_ui(fact2k.get_mpz_t(), static_cast<unsigned long>(2 * k));
    Real term = Real(mpq_class(b / fact2k), p) * deriv;
    sum -= term;
    fact *= r * (r + 1);
    if (abs(term) < tol) break;
  }
  return sum;
}

Complex complex_log_one_minus(const Real& re, const Real& im) {
  Real a = 1 - re, b = -im;
  return {log(sqrt(a * a + b * b)), atan2(b, a)};
}

}  // namespace

Complex sondow_gamma(const Real& z, SondowRoute route, const PrecisionConfig& cfg) {
  const Precision p = cfg.working_precision();
  const Real zp = z.with_precision(p);
  if (abs(zp) > 1) throw DomainError("the generalized Euler constant needs |z| <= 1");
  if (route == SondowRoute::kTwoQ) throw DomainError("the 2q formula needs z = e^{i pi p/q}");
  if (route == SondowRoute::kIntegral) {
    auto integrand = [&](const Real& y) {
      Real ly = log(y);
      return (1 - y + ly) / ((1 - zp * y) * ly);
    };
    return {require_converged(numeric::integrate_adaptive(integrand, Real(p), Real(1, p), cfg.relaxed_to(1e-15)),
                              "generalized Euler constant integral"),
            Real(p)};
  }
  if (zp == 1) return {sondow_at_one(cfg), Real(p)};
  if (zp == -1) {
    auto term = [p](long n) {
      Real v = sondow_coeff(n, p);
      return n % 2 == 1 ? v : -v;
    };
    return {require_converged(numeric::sum_alternating_accelerated(term, cfg), "gamma(-1)"), Real(p)};
  }
  const Real tol = cfg.tolerance() / 100;
  Real sum(p), zk(1, p);
  for (long n = 1; n <= cfg.max_terms; ++n) {
    Real term = zk * sondow_coeff(n, p);
    sum += term;
    if (abs(term) < tol) return {sum, Real(p)};
    zk *= zp;
  }
  throw NonConvergence("generalized Euler constant series did not converge within max_terms");
}

Complex sondow_gamma(const Rational& angle, SondowRoute route, const PrecisionConfig& cfg) {
  const Precision p = cfg.working_precision();
  const long pp = angle.p(), q = angle.q();
  const Real theta = pi(p) * pp / q;
  Real w_re(p), w_im(p);
  sin_cos(theta, w_im, w_re);
  if (route == SondowRoute::kIntegral) throw DomainError("the integral route needs real z");
  if (route == SondowRoute::kSeries) {
    // sum_{n>=0} a_{n+1} e^{i n theta}; angle n*theta = 2 pi n (p/(2q)).
    const Real x = Real(pp, p) / (2 * q);
    auto coeff = [p](long n) { return sondow_coeff(n + 1, p); };
    numeric::TrigSeriesOptions opts;
    opts.first_index = 0;
    const PrecisionConfig tcfg = cfg.relaxed_to(kTrigTolerance);
    Real re = require_converged(numeric::sum_trig_averaged(coeff, Trig::kCos, x, tcfg, opts), "Re gamma(z)");
    Real im = require_converged(numeric::sum_trig_averaged(coeff, Trig::kSin, x, tcfg, opts), "Im gamma(z)");
    return {re, im};
  }
  // gamma(w) = -log(1-w)/w + sum_{n=1}^{2q} w^{n-1} log[Gamma((n+1)/2q) / Gamma(n/2q)]
  const long two_q = 2 * q;
  Real re(p), im(p);
  Real lg_prev = gamma::log_gamma(Real(1, p) / two_q, cfg);
  for (long n = 1; n <= two_q; ++n) {
    Real lg_next = gamma::log_gamma(Real(n + 1, p) / two_q, cfg);
    Real c = lg_next - lg_prev;
    Real s(p), co(p);
    sin_cos(theta * (n - 1), s, co);
    re += c * co;
    im += c * s;
    lg_prev = std::move(lg_next);
  }
  Complex l = complex_log_one_minus(w_re, w_im);
  // l / w = l * conj(w) since |w| = 1
  re -= l.re * w_re + l.im * w_im;
  im -= l.im * w_re - l.re * w_im;
  return {re, im};
}

}  // namespace zetakit::fourier
