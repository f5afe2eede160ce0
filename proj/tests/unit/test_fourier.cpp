#include <gtest/gtest.h>

#include "oracles.hpp"
#include "test_util.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/fourier_identities.hpp"
#include "zetakit/stieltjes.hpp"

using namespace zetakit;
using fourier::Log1pFamily;
using fourier::SondowRoute;
using numeric::Trig;
using testutil::cfg;
using testutil::gap;
using testutil::num;

namespace {

fourier::CoeffSeq constant_one(Precision p) {
  return {[p](long) { return Real(1, p); }, "1"};
}

Real third(const PrecisionConfig& c) { return Real(1, c.working_precision()) / 3; }

// sum_n log n/(4n^2-1), split at N: direct head, tail -sum_i 4^{-i} zeta'(2i, N)
// with the oracle's finite-difference s-derivative.
Real kolbig_sum(Precision p) {
  const long cut = 32;
  Real head(p);
  for (long n = 2; n < cut; ++n) head += log(Real(n, p)) / (4 * Real(n, p) * n - 1);
  Real tail(p);
  const Real big(cut, p);
  for (long i = 1; i < 40; ++i) {
    Real t = oracle::hurwitz_zeta_ds(1, Real(2 * i, p), big, p) / pow(Real(4, p), i);
    tail -= t;
    if (abs(t) < power_of_ten(-40, p)) break;
  }
  return head + tail;
}

}  // namespace

TEST(LerchTransform, ConstantCoefficientsOnGrid) {
  const auto c = cfg(20);
  const Precision p = c.working_precision();
  for (int i = 1; i <= 9; ++i) {
    const Real x = Real(i, p) / 10;
    const auto s = fourier::lerch_transform(constant_one(p), Trig::kSin, x, c);
    const auto k = fourier::lerch_transform(constant_one(p), Trig::kCos, x, c);
    EXPECT_LE(gap(s.value, -sin(pi(p) * x)), 1e-6) << x;
    EXPECT_LE(gap(k.value, -cos(pi(p) * x)), 1e-6) << x;
  }
}

TEST(LerchTransform, LogCoefficientsGiveGammaOneDifference) {
  const auto c = cfg(25);
  const Precision p = c.working_precision();
  const Real g = euler_gamma(p), two_pi = 2 * pi(p);
  const fourier::CoeffSeq d{[&](long n) { return log(two_pi * n) + g; }, "log(2 pi n) + gamma"};
  const Real x = third(c);
  const auto r = fourier::lerch_transform(d, Trig::kCos, x, c);
  const Real g1x = oracle::stieltjes(1, x, p), g1c = oracle::stieltjes(1, 1 - x, p);
  EXPECT_NEAR_REAL(r.value, -(g1c - g1x) * sin(pi(p) * x) / pi(p), 1e-8);
}

TEST(LerchTransform, CombinedIsSumOfParts) {
  const auto c = cfg(20);
  const Precision p = c.working_precision();
  const fourier::CoeffSeq logs{[p](long n) { return log(Real(n + 1, p)); }, "log(n+1)"};
  const Real x = num("0.37", c);
  const auto both = fourier::lerch_transform_combined(constant_one(p), logs, x, c);
  const auto a = fourier::lerch_transform(constant_one(p), Trig::kSin, x, c);
  const auto b = fourier::lerch_transform(logs, Trig::kCos, x, c);
  EXPECT_NEAR_REAL(both.value, a.value + b.value, 1e-10);
  EXPECT_THROW(fourier::lerch_transform(constant_one(p), Trig::kSin, num("1", c), c), DomainError);
}

TEST(LerchTransform, MoreTermsNeverMuchWorse) {
  const Precision p = precision_for_digits(20, 64);
  const Real x = Real::parse("0.3", p);
  double last = 1e300;
  for (long terms : {100L, 1000L, 10000L}) {
    auto c = cfg(20);
    c.max_terms = terms;
    const auto r = fourier::lerch_transform(constant_one(p), Trig::kCos, x, c);
    const double res = gap(r.value, -cos(pi(p) * x));
    EXPECT_LE(res, 2 * last + 1e-15) << terms;
    last = res;
  }
}

TEST(Kummer, Examples) {
  const auto c = cfg(25);
  const Precision p = c.working_precision();
  const auto half = fourier::kummer_log_gamma(num("0.5", c), c);
  EXPECT_NEAR_REAL(half.rhs, log(pi(p)) / 2, 1e-10);
  for (const Real& x : {num("0.25", c), third(c), 1 - third(c)}) {
    const auto rep = fourier::kummer_log_gamma(x, c);
    EXPECT_TRUE(rep.pass);
    EXPECT_LE(gap(rep.rhs, oracle::log_gamma(x, p)), 1e-5) << x;
  }
}

TEST(Log1pSinOdd, Examples) {
  const auto c = cfg(25);
  const Precision p = c.working_precision();
  const auto half = fourier::series_316(num("0.5", c), c);
  // sin((2n+1) pi/2) = (-1)^n, so the sum is minus the Wallis series.
  EXPECT_NEAR_REAL(half.lhs, -log(pi(p) / 2), 1e-10);
  EXPECT_TRUE(half.pass);
  for (const char* t : {"0.25", "0.75", "0.1"}) {
    const auto rep = fourier::series_316(num(t, c), c);
    EXPECT_LE(rep.residual.to_double(), 1e-5) << t;
  }
  const auto w = fourier::wallis_alternating(c);
  EXPECT_LE(w.residual.to_double(), 1e-10);
}

TEST(Deninger, Examples) {
  const auto c = cfg(25);
  const Precision p = c.working_precision();
  const Real g = euler_gamma(p), l2 = log_2(p);
  const auto half = fourier::deninger_f(num("0.5", c), c);
  // sum (-1)^n log n/n
  EXPECT_NEAR_REAL(half.lhs, g * l2 - l2 * l2 / 2, 1e-10);
  EXPECT_TRUE(half.pass);
  for (const Real& x : {num("0.25", c), third(c)}) {
    const auto rep = fourier::deninger_f(x, c);
    EXPECT_LE(rep.residual.to_double(), 1e-4) << x;
    // closed form from the oracle's zeta''(0, .)
    const Real z = oracle::hurwitz_zeta_ds(2, Real(p), x, p) + oracle::hurwitz_zeta_ds(2, Real(p), 1 - x, p);
    const Real ref = z / 2 + (g + log(2 * pi(p))) * log(2 * sin(pi(p) * x));
    EXPECT_NEAR_REAL(fourier::deninger_closed_form(x, c), ref, 1e-20);
  }
}

TEST(Deninger, LandauFunctionalEquation) {
  const auto c = cfg(25);
  const Precision p = c.working_precision();
  const auto q = fourier::landau_f_functional(num("0.25", c), c);
  const Real l2 = log_2(p);
  const Real f = [&](const char* t) { return fourier::deninger_closed_form(num(t, c), c); }("0.75");
  EXPECT_NEAR_REAL(f, fourier::deninger_closed_form(num("0.5", c), c) -
                          fourier::deninger_closed_form(num("0.25", c), c) - l2 * l2,
                   1e-20);
  EXPECT_TRUE(q.pass);
  for (const Real& x : {Real(1, p) / 6, Real(1, p) / 8}) EXPECT_LE(fourier::landau_f_functional(x, c).residual.to_double(), 1e-4);
  EXPECT_THROW(fourier::landau_f_functional(num("0.5", c), c), DomainError);
}

TEST(Gamma1Fourier, Examples) {
  const auto c = cfg(20);
  const Precision p = c.working_precision();
  const Real half = num("0.5", c), quarter = num("0.25", c);
  EXPECT_NEAR_REAL(require_converged(fourier::gamma1_fourier(half, c), "g1"), oracle::stieltjes(1, half, p), 1e-4);
  EXPECT_NEAR_REAL(require_converged(fourier::gamma1_fourier(quarter, c), "g1"),
                   stieltjes::gamma1_rational(Rational(1, 4), c), 1e-4);
  EXPECT_NEAR_REAL(require_converged(fourier::gamma1_fourier(third(c), c), "g1"), oracle::stieltjes(1, third(c), p),
                   1e-4);
  EXPECT_THROW(fourier::gamma1_fourier(num("0.0001", c), c), DomainError);
  EXPECT_THROW(fourier::gamma1_fourier(num("1", c), c), DomainError);
}

TEST(Gamma1Fourier, MoreTermsNeverMuchWorse) {
  const Precision p = precision_for_digits(20, 64);
  const Real x = Real::parse("0.3", p);
  const Real ref = oracle::stieltjes(1, x, p);
  double last = 1e300;
  for (long terms : {100L, 1000L, 10000L}) {
    auto c = cfg(20);
    c.max_terms = terms;
    const double res = gap(fourier::gamma1_fourier(x, c).value, ref);
    EXPECT_LE(res, 2 * last + 1e-15) << terms;
    last = res;
  }
}

TEST(Log1pFamily, Examples) {
  const auto c = cfg(20);
  const Precision p = c.working_precision();
  const auto half = fourier::series_325_family(num("0.5", c), Log1pFamily::kCosOdd, c);
  EXPECT_LE(abs(half.lhs).to_double(), 1e-10);
  EXPECT_LE(abs(half.rhs).to_double(), 1e-15);
  const auto quarter = fourier::series_325_family(Rational(1, 4), Log1pFamily::kRationalCosOdd, c);
  const Real s4 = sin(pi(p) / 4), c4 = cos(pi(p) / 4);
  const Real expected = log(Real(4, p)) * c4 - 2 * s4 * (oracle::log_gamma(num("0.25", c), p) -
                                                        oracle::log_gamma(num("0.75", c), p));
  EXPECT_NEAR_REAL(quarter.rhs, expected, 1e-18);
  EXPECT_TRUE(quarter.pass);
  EXPECT_LE(fourier::series_325_family(third(c), Log1pFamily::kSinEven, c).residual.to_double(), 1e-4);
  EXPECT_LE(fourier::series_325_family(third(c), Log1pFamily::kCosEven, c).residual.to_double(), 1e-4);
  EXPECT_LE(fourier::series_325_family(num("0.3", c), Log1pFamily::kCosOdd, c).residual.to_double(), 1e-4);
  EXPECT_THROW(fourier::series_325_family(num("0.25", c), Log1pFamily::kRationalCosOdd, c), DomainError);
}

TEST(Log1pFamily, RationalPointsOnRandomFractions) {
  testutil::Gen gen(0x325);
  const auto c = cfg(20);
  for (int i = 0; i < 6; ++i) {
    const long q = gen.integer(3, 9), pn = gen.integer(1, q - 1);
    const Rational r(pn, q);
    EXPECT_TRUE(fourier::series_325_family(r, Log1pFamily::kRationalCosOdd, c).pass) << r.to_string();
  }
}

TEST(Symmetry, CosineAndSineTypesUnderReflection) {
  const auto c = cfg(20);
  testutil::Gen gen(0x5e77);
  for (int i = 0; i < 4; ++i) {
    const std::string t = gen.decimal(0.05, 0.45, 3);
    SCOPED_TRACE(t);
    const Real x = num(t, c), y = 1 - x;
    // even multiples: cos invariant, sin flips
    EXPECT_LE(gap(fourier::series_325_family(x, Log1pFamily::kCosEven, c).lhs,
                  fourier::series_325_family(y, Log1pFamily::kCosEven, c).lhs), 1e-10);
    EXPECT_LE(gap(fourier::series_325_family(x, Log1pFamily::kSinEven, c).lhs,
                  -fourier::series_325_family(y, Log1pFamily::kSinEven, c).lhs), 1e-10);
    EXPECT_LE(gap(fourier::deninger_f(x, c).lhs, fourier::deninger_f(y, c).lhs), 1e-10);
    // odd multiples (2n+1) pi x: the roles swap
    EXPECT_LE(gap(fourier::series_325_family(x, Log1pFamily::kCosOdd, c).lhs,
                  -fourier::series_325_family(y, Log1pFamily::kCosOdd, c).lhs), 1e-10);
    EXPECT_LE(gap(fourier::series_316(x, c).lhs, fourier::series_316(y, c).lhs), 1e-10);
  }
}

TEST(Kolbig, TripleCheck) {
  const auto c = cfg(30);
  const Precision p = c.working_precision();
  const auto reps = fourier::kolbig_check(c);
  ASSERT_EQ(reps.size(), 4u);
  for (const auto& rep : reps) {
    SCOPED_TRACE(rep.id);
    EXPECT_TRUE(rep.as_expected());
    if (!rep.expected_failure()) {
      EXPECT_LE(rep.residual.to_double(), 1e-8);
    }
  }
  EXPECT_LE(reps[0].residual.to_double(), 1e-10);
  EXPECT_FALSE(reps[3].pass);
  // int_0^1 psi(x) sin(pi x) dx with psi(x) = psi(x+1) - 1/x, by Simpson.
  auto f = [&](const Real& x) {
    const Real s = sin(pi(p) * x);
    const Real sinc = x.is_zero() ? pi(p) : s / x;
    return oracle::digamma(x + 1, p) * s - sinc;
  };
  const Real integral = oracle::simpson(f, Real(p), Real(1, p), 400);
  const Real closed = -2 / pi(p) * (euler_gamma(p) + log(2 * pi(p)) + 2 * kolbig_sum(p));
  EXPECT_NEAR_REAL(integral, closed, 1e-9);
  EXPECT_NEAR_REAL(reps[1].lhs, integral, 1e-9);
}

TEST(Sondow, SpecialValues) {
  const auto c = cfg(30);
  const Precision p = c.working_precision();
  const auto one = fourier::sondow_gamma(Real(1, p), SondowRoute::kSeries, c);
  EXPECT_NEAR_REAL(one.re, euler_gamma(p), 1e-28);
  EXPECT_TRUE(one.im.is_zero());
  const auto minus = fourier::sondow_gamma(Real(-1, p), SondowRoute::kSeries, c);
  EXPECT_NEAR_REAL(minus.re, log(4 / pi(p)), 1e-28);
  EXPECT_THROW(fourier::sondow_gamma(num("1.5", c), SondowRoute::kSeries, c), DomainError);
}

TEST(Sondow, RoutesAgreeInsideDisc) {
  const auto c = cfg(25);
  const Precision p = c.working_precision();
  for (const char* t : {"0.5", "-0.3", "0.9"}) {
    const Real z = num(t, c);
    const auto series = fourier::sondow_gamma(z, SondowRoute::kSeries, c);
    const auto integral = fourier::sondow_gamma(z, SondowRoute::kIntegral, c);
    EXPECT_NEAR_REAL(series.re, integral.re, 1e-8) << t;
    // direct geometric sum
    Real direct(p), zp(1, p);
    for (long n = 1; n < 2000; ++n) {
      direct += zp * (Real(1, p) / n - log1p(Real(1, p) / n));
      zp *= z;
      if (abs(zp) < power_of_ten(-40, p)) break;
    }
    EXPECT_NEAR_REAL(series.re, direct, 1e-20) << t;
  }
}

TEST(Sondow, UnitCircleRoutesAgree) {
  const auto c = cfg(20);
  for (const Rational& r : {Rational(1, 2), Rational(1, 3), Rational(2, 5)}) {
    const auto series = fourier::sondow_gamma(r, SondowRoute::kSeries, c);
    const auto two_q = fourier::sondow_gamma(r, SondowRoute::kTwoQ, c);
    EXPECT_NEAR_REAL(series.re, two_q.re, 1e-6) << r.to_string();
    EXPECT_NEAR_REAL(series.im, two_q.im, 1e-6) << r.to_string();
  }
  EXPECT_THROW(fourier::sondow_gamma(Rational(1, 2), SondowRoute::kIntegral, c), DomainError);
}
