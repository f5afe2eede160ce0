#include <gtest/gtest.h>

#include "oracles.hpp"
#include "test_util.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/gamma_funcs.hpp"

using namespace zetakit;
using testutil::cfg;
using testutil::gap;
using testutil::num;

TEST(LogGamma, Examples) {
  const auto c = cfg(30);
  const Precision p = c.working_precision();
  EXPECT_LE(abs(gamma::log_gamma(Real(1, p), c)).to_double(), 1e-30);
  EXPECT_NEAR_REAL(gamma::log_gamma(num("0.5", c), c), log(pi(p)) / 2, 1e-29);
  const Real sum = gamma::log_gamma(num("0.25", c), c) + gamma::log_gamma(num("0.75", c), c);
  EXPECT_NEAR_REAL(sum, log(pi(p) * sqrt(Real(2, p))), 1e-29);
  EXPECT_EQ(gamma::log_gamma(num("0.25", c), c).to_string(25), "1.288022524698077457370610");
}

TEST(LogGamma, AgreesWithStirlingOracle) {
  testutil::Gen gen(0x109a);
  const auto c = cfg(35);
  const Precision p = c.working_precision();
  for (int i = 0; i < 30; ++i) {
    const std::string text = gen.decimal(0.01, 40.0, 5);
    SCOPED_TRACE(text);
    const Real x = num(text, c);
    const Real v = gamma::log_gamma(x, c);
    EXPECT_LE(gap(v, oracle::log_gamma(x, p)), 1e-33 * std::max(1.0, std::abs(v.to_double())));
  }
}

TEST(LogGamma, RecurrenceOnGrid) {
  const auto c = cfg(30);
  for (int i = 1; i <= 50; ++i) {
    const Real x = Real(i, c.working_precision()) / 10;
    const Real lhs = gamma::log_gamma(x + 1, c) - gamma::log_gamma(x, c);
    EXPECT_LE(gap(lhs, log(x)), 1e-29) << x;
  }
}

TEST(LogGamma, ReflectionOnUnitInterval) {
  const auto c = cfg(30);
  const Precision p = c.working_precision();
  for (int i = 1; i < 20; ++i) {
    const Real x = Real(i, p) / 20;
    const Real lhs = gamma::log_gamma(x, c) + gamma::log_gamma(1 - x, c);
    EXPECT_LE(gap(lhs, log(pi(p) / sin(pi(p) * x))), 1e-29) << x;
  }
}

TEST(LogGamma, RejectsNonPositive) {
  const auto c = cfg(20);
  EXPECT_THROW(gamma::log_gamma(num("0", c), c), DomainError);
  EXPECT_THROW(gamma::log_gamma(num("-1.5", c), c), DomainError);
}

TEST(Digamma, Examples) {
  const auto c = cfg(30);
  const Precision p = c.working_precision();
  const Real psi1 = gamma::digamma(Real(1, p), c);
  EXPECT_EQ(psi1.to_string(15), "-0.577215664901533");
  EXPECT_NEAR_REAL(psi1, -euler_gamma(p), 1e-29);
  const Real x = num("0.3", c);
  EXPECT_NEAR_REAL(gamma::digamma(x + 1, c) - gamma::digamma(x, c), 1 / x, 1e-28);
  for (const char* t : {"0.5", "1", "10"}) {
    const Real v = num(t, c);
    EXPECT_LT(gamma::digamma(v, c) - log(v), 0) << t;
  }
  EXPECT_NEAR_REAL(gamma::digamma(num("0.5", c), c), -euler_gamma(p) - 2 * log_2(p), 1e-29);
}

TEST(Digamma, AgreesWithAsymptoticOracle) {
  testutil::Gen gen(0xd16a);
  const auto c = cfg(35);
  const Precision p = c.working_precision();
  for (int i = 0; i < 30; ++i) {
    const std::string text = gen.decimal(0.01, 40.0, 5);
    SCOPED_TRACE(text);
    const Real x = num(text, c);
    const Real v = gamma::digamma(x, c);
    EXPECT_LE(gap(v, oracle::digamma(x, p)), 1e-33 * std::max(1.0, std::abs(v.to_double())));
  }
}

TEST(Polygamma, Examples) {
  const auto c = cfg(30);
  const Precision p = c.working_precision();
  const Real pi2 = pi(p) * pi(p);
  EXPECT_NEAR_REAL(gamma::polygamma(1, Real(1, p), c), pi2 / 6, 1e-29);
  EXPECT_NEAR_REAL(gamma::polygamma(1, num("0.5", c), c), pi2 / 2, 1e-29);
  EXPECT_NEAR_REAL(gamma::polygamma(2, Real(1, p), c), -2 * oracle::hurwitz_zeta(Real(3, p), Real(1, p), p), 1e-29);
  EXPECT_THROW(gamma::polygamma(0, Real(1, p), c), DomainError);
}

TEST(Polygamma, MatchesFiniteDifferencesOfDigamma) {
  const auto c = cfg(40);
  const Precision p = c.working_precision();
  const Real h = power_of_ten(-6, p);
  for (const char* t : {"0.4", "1.7", "6.25"}) {
    const Real x = num(t, c);
    // psi^{(k)} = d^{k-1}/dx^{k-1} psi'; difference the k = 1 value of digamma upward.
    auto psi = [&](int shift) { return gamma::digamma(x + h * shift, c); };
    const Real d1 = (psi(1) - psi(-1)) / (2 * h);
    const Real d2 = (psi(1) - 2 * psi(0) + psi(-1)) / (h * h);
    const Real d3 = (psi(2) - 2 * psi(1) + 2 * psi(-1) - psi(-2)) / (2 * h * h * h);
    EXPECT_LE(gap(gamma::polygamma(1, x, c), d1), 1e-8) << t;
    EXPECT_LE(gap(gamma::polygamma(2, x, c), d2), 1e-8) << t;
    EXPECT_LE(gap(gamma::polygamma(3, x, c), d3), 1e-8 * std::max(1.0, std::abs(d3.to_double()))) << t;
  }
}

TEST(DigammaIntegral, ResidualsAndSign) {
  const auto c = cfg(30);
  for (const char* t : {"1", "2"}) {
    const auto rep = gamma::digamma_integral_check(num(t, c), c);
    EXPECT_TRUE(rep.pass) << t << " residual " << rep.residual;
    EXPECT_LE(rep.residual.to_double(), 1e-10);
  }
  const auto e = gamma::digamma_integral_check(exp(Real(1, c.working_precision())), c);
  EXPECT_TRUE(e.pass);
  EXPECT_LT(e.lhs, 0);
}

TEST(Bourguet, CrossCheckAgainstLogGamma) {
  const auto c = cfg(20);
  const auto one = gamma::bourguet_log_gamma(num("1", c), 64, c);
  EXPECT_LE(abs(one.value).to_double(), 1e-4);
  const auto mid = gamma::bourguet_log_gamma(num("2.5", c), 64, c);
  EXPECT_LE(gap(mid.value, gamma::log_gamma(num("2.5", c), c)), 1e-4);
  const auto ten = gamma::bourguet_log_gamma(num("10", c), 16, c);
  EXPECT_LE(gap(ten.value, gamma::log_gamma(num("10", c), c)), 1e-4);
  EXPECT_THROW(gamma::bourguet_log_gamma(num("1", c), 4, c), DomainError);
}
