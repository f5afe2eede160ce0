// Independent route for gamma_m(x): the defining limit with an
// Euler-Maclaurin tail. Deliberately self-contained (own Bernoulli numbers,
// own derivative recurrence) so it can serve as an oracle for the others.

#include <algorithm>
#include <vector>

#include <gmpxx.h>

#include "zetakit/errors.hpp"
#include "zetakit/stieltjes.hpp"

namespace zetakit::stieltjes {

namespace {

// Akiyama-Tanigawa; returns B_0..B_n with B_1 = +1/2 (unused here).
std::vector<mpq_class> bernoulli_table(long n) {
  std::vector<mpq_class> out;
  std::vector<mpq_class> a(static_cast<size_t>(n + 1));
  for (long m = 0; m <= n; ++m) {
    a[static_cast<size_t>(m)] = mpq_class(1, m + 1);
    for (long j = m; j >= 1; --j) {
      a[static_cast<size_t>(j - 1)] = j * (a[static_cast<size_t>(j - 1)] - a[static_cast<size_t>(j)]);
      a[static_cast<size_t>(j - 1)].canonicalize();
    }
    out.push_back(a[0]);
  }
  return out;
}

}  // namespace

SeriesResult laurent_oracle(long m, const Real& x, const PrecisionConfig& cfg) {
  cfg.validate();
  if (m < 0) throw DomainError("m must be non-negative");
  if (!(x > 0)) throw DomainError("gamma_m(x) requires x > 0");
  const Precision p = cfg.working_precision() + 32 + 8 * m;
  const Real xp = x.with_precision(p);
  const Real tol = cfg.tolerance();
  const long big_n = std::max<long>(2 * cfg.digits, 30) + 4 * m;

  auto log_power = [](const Real& l, long k) {
    Real out(1, l.precision());
    for (long i = 0; i < k; ++i) out *= l;
    return out;
  };

  Real sum(p);
  for (long k = 0; k < big_n; ++k) {
    Real u = xp + k;
    sum += log_power(log(u), m) / u;
  }
  const Real u = xp + big_n;
  const Real lu = log(u);
  sum -= log_power(lu, m + 1) / (m + 1);
  sum += log_power(lu, m) / u / 2;

  // f^{(r)}(u) = u^{-(r+1)} sum_i a[i] L^i with a_{r+1,i} = -(r+1) a_{r,i} + (i+1) a_{r,i+1}.
  std::vector<mpz_class> a(static_cast<size_t>(m + 1), 0);
  a[static_cast<size_t>(m)] = 1;
  const long max_j = big_n / 2 + 10;
  const std::vector<mpq_class> bern = bernoulli_table(2 * max_j);
  mpz_class factorial = 1;
  Real last(p);
  long r = 0;
  long used = big_n;
  bool converged = false;
  for (long j = 1; j <= max_j; ++j) {
    // advance to r = 2j - 1
    while (r < 2 * j - 1) {
      std::vector<mpz_class> next(a.size());
      for (size_t i = 0; i < a.size(); ++i) {
        next[i] = -(r + 1) * a[i];
        if (i + 1 < a.size()) next[i] += static_cast<long>(i + 1) * a[i + 1];
      }
      a = std::move(next);
      ++r;
    }
    factorial *= (2 * j - 1) * (2 * j);
    Real deriv(p);
    for (size_t i = 0; i < a.size(); ++i) deriv += Real(a[i], p) * log_power(lu, static_cast<long>(i));
    deriv /= pow(u, r + 1);
    Real term = Real(bern[static_cast<size_t>(2 * j)] / mpq_class(factorial), p) * deriv;
    sum -= term;
    last = abs(term);
    used = big_n + j;
    if (last < tol / 100) {
      converged = true;
      break;
    }
  }
  return SeriesResult{sum.with_precision(cfg.working_precision()), (last * 4).with_precision(cfg.working_precision()),
                      used, converged};
}

}  // namespace zetakit::stieltjes
