#include "oracles.hpp"

#include <cmath>
#include <map>

namespace oracle {

namespace {

long digits_of(Precision p) { return static_cast<long>(static_cast<double>(p.bits) * 0.30103); }

Real rising(const Real& s, long n) {
  Real out(1, s.precision());
  for (long i = 0; i < n; ++i) out *= s + i;
  return out;
}

Real fact(long n, Precision p) {
  Real out(1, p);
  for (long i = 2; i <= n; ++i) out *= i;
  return out;
}

void partitions(long remaining, long max_part, std::vector<long>& counts,
                const std::function<void(const std::vector<long>&)>& visit) {
  if (remaining == 0) {
    visit(counts);
    return;
  }
  for (long part = std::min(remaining, max_part); part >= 1; --part) {
    ++counts[static_cast<size_t>(part)];
    partitions(remaining - part, part, counts, visit);
    --counts[static_cast<size_t>(part)];
  }
}

}  // namespace

mpz_class pascal(long n, long k) {
  if (k < 0 || k > n) return 0;
  std::vector<mpz_class> row{1};
  for (long i = 1; i <= n; ++i) {
    std::vector<mpz_class> next(static_cast<size_t>(i + 1));
    next[0] = next[static_cast<size_t>(i)] = 1;
    for (long j = 1; j < i; ++j) next[static_cast<size_t>(j)] = row[static_cast<size_t>(j - 1)] + row[static_cast<size_t>(j)];
    row = std::move(next);
  }
  return row[static_cast<size_t>(k)];
}

mpq_class bernoulli(long n) {
  static std::map<long, mpq_class> memo;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::vector<mpq_class> b{1};
  for (long m = 1; m <= n; ++m) {
    mpq_class acc = 0;
    std::vector<mpz_class> row{1};
    for (long i = 1; i <= m + 1; ++i) {
      std::vector<mpz_class> next(static_cast<size_t>(i + 1));
      next[0] = next[static_cast<size_t>(i)] = 1;
      for (long j = 1; j < i; ++j) next[static_cast<size_t>(j)] = row[static_cast<size_t>(j - 1)] + row[static_cast<size_t>(j)];
      row = std::move(next);
    }
    for (long k = 0; k < m; ++k) acc += mpq_class(row[static_cast<size_t>(k)]) * b[static_cast<size_t>(k)];
    mpq_class bm = -acc / mpq_class(m + 1);
    bm.canonicalize();
    b.push_back(bm);
  }
  memo[n] = b[static_cast<size_t>(n)];
  return b[static_cast<size_t>(n)];
}

mpq_class harmonic(long n, long m) {
  mpq_class h = 0;
  for (long k = 1; k <= n; ++k) {
    mpz_class km;
    mpz_ui_pow_ui(km.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m));
    h += mpq_class(1, 1) / mpq_class(km);
  }
  h.canonicalize();
  return h;
}

mpq_class bell_partitions(const std::vector<mpq_class>& x) {
  const long r = static_cast<long>(x.size());
  if (r == 0) return 1;
  mpq_class total = 0;
  std::vector<long> counts(static_cast<size_t>(r + 1), 0);
  mpz_class rfact;
  mpz_fac_ui(rfact.get_mpz_t(), static_cast<unsigned long>(r));
  partitions(r, r, counts, [&](const std::vector<long>& c) {
    mpq_class term(rfact);
    for (long i = 1; i <= r; ++i) {
      const long mi = c[static_cast<size_t>(i)];
      if (mi == 0) continue;
      mpz_class mf, ifact;
      mpz_fac_ui(mf.get_mpz_t(), static_cast<unsigned long>(mi));
      mpz_fac_ui(ifact.get_mpz_t(), static_cast<unsigned long>(i));
      mpz_class denom;
      mpz_pow_ui(denom.get_mpz_t(), ifact.get_mpz_t(), static_cast<unsigned long>(mi));
      denom *= mf;
      term /= mpq_class(denom);
      for (long k = 0; k < mi; ++k) term *= x[static_cast<size_t>(i - 1)];
    }
    total += term;
  });
  total.canonicalize();
  return total;
}

Real hurwitz_zeta(const Real& s_in, const Real& x_in, Precision p) {
  const Real s = s_in.with_precision(p), x = x_in.with_precision(p);
  const long d = digits_of(p);
  const long cut = d + 20;
  Real sum(p);
  for (long n = 0; n < cut; ++n) sum += pow(x + n, -s);
  const Real big = x + cut;
  sum += pow(big, 1 - s) / (s - 1) + pow(big, -s) / 2;
  const Real tiny = zetakit::power_of_ten(-d - 5, p);
  for (long k = 1; k < 4 * cut; ++k) {
    Real term = Real(bernoulli(2 * k), p) / fact(2 * k, p) * rising(s, 2 * k - 1) * pow(big, -s - (2 * k - 1));
    sum += term;
    if (abs(term) < tiny && k > 2) break;
  }
  return sum;
}

Real hurwitz_zeta_ds(int j, const Real& s, const Real& x, Precision p) {
  const Precision hp(p.bits * 3);
  const long d = digits_of(p);
  const Real h = zetakit::power_of_ten(-(d / 2 + 2), hp);
  const Real sp = s.with_precision(hp), xp = x.with_precision(hp);
  auto f = [&](int k) { return hurwitz_zeta(sp + h * k, xp, hp); };
  const Real fm2 = f(-2), fm1 = f(-1), fp1 = f(1), fp2 = f(2);
  if (j == 1) return ((8 * (fp1 - fm1) - (fp2 - fm2)) / (12 * h)).with_precision(p);
  const Real f0 = f(0);
  return ((16 * (fp1 + fm1) - (fp2 + fm2) - 30 * f0) / (12 * h * h)).with_precision(p);
}

Real stieltjes(long m, const Real& x_in, Precision p) {
  const Precision wp = p + 64;
  const Real x = x_in.with_precision(wp);
  const long d = digits_of(p);
  const long cut = d + 10 + 4 * m;
  Real sum(wp);
  auto g = [&](const Real& u) { return pow(log(u), m) / u; };
  for (long k = 0; k < cut; ++k) sum += g(x + k);
  const Real u = x + cut, lu = log(u);
  sum -= pow(lu, m + 1) / (m + 1);
  sum += g(u) / 2;
  // d/du [L^j u^{-a}] = (j L^{j-1} - a L^j) u^{-a-1}; poly[j] holds the L^j coefficient.
  std::vector<mpz_class> poly(static_cast<size_t>(m + 1), 0);
  poly[static_cast<size_t>(m)] = 1;
  long a = 1;
  auto differentiate = [&] {
    std::vector<mpz_class> next(poly.size(), 0);
    for (size_t j = 0; j < poly.size(); ++j) {
      if (j > 0) next[j - 1] += static_cast<long>(j) * poly[j];
      next[j] -= a * poly[j];
    }
    poly = std::move(next);
    ++a;
  };
  auto eval = [&] {
    Real acc(wp), lp(1, wp);
    for (size_t j = 0; j < poly.size(); ++j) {
      acc += Real(poly[j], wp) * lp;
      lp *= lu;
    }
    return acc * pow(u, -a);
  };
  const Real tiny = zetakit::power_of_ten(-d - 8, wp);
  differentiate();  // first derivative
  for (long k = 1; k < 2 * cut; ++k) {
    Real term = Real(bernoulli(2 * k), wp) / fact(2 * k, wp) * eval();
    sum -= term;
    if (abs(term) < tiny && k > 2) break;
    differentiate();
    differentiate();
  }
  return sum.with_precision(p);
}

Real log_power_derivative(long m, long a, int order, const Real& u) {
  std::vector<mpz_class> poly(static_cast<size_t>(m + 1), 0);
  poly[static_cast<size_t>(m)] = 1;
  for (int k = 0; k < order; ++k, ++a) {
    std::vector<mpz_class> next(poly.size(), 0);
    for (size_t j = 0; j < poly.size(); ++j) {
      if (j > 0) next[j - 1] += static_cast<long>(j) * poly[j];
      next[j] -= a * poly[j];
    }
    poly = std::move(next);
  }
  const Real lu = log(u);
  Real acc(u.precision()), lp(1, u.precision());
  for (const auto& c : poly) {
    acc += Real(c, u.precision()) * lp;
    lp *= lu;
  }
  return acc * pow(u, -a);
}

Real log_gamma(const Real& x_in, Precision p) {
  const Precision wp = p + 32;
  Real x = x_in.with_precision(wp);
  const long d = digits_of(p);
  const long floor_at = d + 10;
  Real shift_log(wp);
  Real prod(1, wp);
  while (x < floor_at) {
    prod *= x;
    x += 1;
  }
  shift_log = log(prod);
  Real out = (x - Real(1, wp) / 2) * log(x) - x + log(2 * zetakit::pi(wp)) / 2;
  const Real tiny = zetakit::power_of_ten(-d - 8, wp);
  for (long k = 1; k < 4 * floor_at; ++k) {
    Real term = Real(bernoulli(2 * k), wp) / (2 * k * (2 * k - 1)) / pow(x, 2 * k - 1);
    out += term;
    if (abs(term) < tiny) break;
  }
  return (out - shift_log).with_precision(p);
}

Real digamma(const Real& x_in, Precision p) {
  const Precision wp = p + 32;
  Real x = x_in.with_precision(wp);
  const long d = digits_of(p);
  const long floor_at = d + 10;
  Real shift(wp);
  while (x < floor_at) {
    shift += 1 / x;
    x += 1;
  }
  Real out = log(x) - 1 / (2 * x);
  const Real tiny = zetakit::power_of_ten(-d - 8, wp);
  for (long k = 1; k < 4 * floor_at; ++k) {
    Real term = Real(bernoulli(2 * k), wp) / (2 * k) / pow(x, 2 * k);
    out -= term;
    if (abs(term) < tiny) break;
  }
  return (out - shift).with_precision(p);
}

Real simpson(const std::function<Real(const Real&)>& f, const Real& a, const Real& b, long n) {
  if (n % 2 == 1) ++n;
  const Real h = (b - a) / n;
  Real acc = f(a) + f(b);
  for (long i = 1; i < n; ++i) acc += (i % 2 == 1 ? 4 : 2) * f(a + h * i);
  return acc * h / 3;
}

Real sine_integral(const Real& x_in, Precision p) {
  const Real x = x_in.with_precision(p + 32);
  Real term = x, sum = x;
  const Real x2 = x * x;
  for (long k = 1; k < 1000; ++k) {
    term *= -x2 / ((2 * k) * (2 * k + 1));
    Real add = term / (2 * k + 1);
    sum += add;
    if (abs(add) < zetakit::power_of_ten(-digits_of(p) - 10, p + 32)) break;
  }
  return sum.with_precision(p);
}

}  // namespace oracle
