#include "zetakit/combinatorics.hpp"

#include <mutex>

#include "zetakit/errors.hpp"

namespace zetakit::combinatorics {

mpz_class binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

std::vector<mpz_class> binomial_row(long n) {
  std::vector<mpz_class> row(static_cast<size_t>(n + 1));
  row[0] = 1;
  for (long k = 1; k <= n; ++k) {
    row[static_cast<size_t>(k)] = row[static_cast<size_t>(k - 1)] * (n - k + 1) / k;
  }
  return row;
}

Real harmonic(const HarmonicSpec& spec) {
  if (!(spec.t > 0)) throw DomainError("harmonic: offset t must be positive");
  if (spec.n < 0 || spec.m < 1) throw DomainError("harmonic: need n >= 0 and m >= 1");
  Real sum(spec.t.precision());
  for (long k = 0; k < spec.n; ++k) sum += 1 / pow(spec.t + k, spec.m);
  return sum;
}

mpq_class harmonic_exact(long n, long m) {
  mpq_class sum = 0;
  for (long k = 1; k <= n; ++k) {
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m));
    sum += mpq_class(1, d);
  }
  sum.canonicalize();
  return sum;
}

namespace {

template <class T, class Make>
T bell_recurrence(std::span<const T> x, Make&& one) {
  const long r = static_cast<long>(x.size());
  std::vector<T> y;
  y.reserve(static_cast<size_t>(r + 1));
  y.push_back(one());
  for (long n = 0; n < r; ++n) {
    T acc = one() - one();
    for (long j = 0; j <= n; ++j) {
      T term = y[static_cast<size_t>(n - j)] * x[static_cast<size_t>(j)];
      term *= binomial(n, j);
      acc += term;
    }
    y.push_back(std::move(acc));
  }
  return y.back();
}

}  // namespace

Real bell_complete(std::span<const Real> x) {
  Precision p = x.empty() ? Precision{} : x[0].precision();
  for (const Real& v : x) p = max(p, v.precision());
  return bell_recurrence<Real>(x, [p] { return Real(1, p); });
}

mpq_class bell_complete(std::span<const mpq_class> x) {
  return bell_recurrence<mpq_class>(x, [] { return mpq_class(1); });
}

std::vector<mpq_class> bell_harmonic_all(long kmax, long n) {
  std::vector<mpq_class> args;
  mpz_class factorial = 1;
  for (long j = 1; j <= kmax; ++j) {
    if (j > 1) factorial *= j - 1;
    mpq_class v = harmonic_exact(n, j) * factorial;
    if (j % 2 == 0) v = -v;
    args.push_back(v);
  }
  std::vector<mpq_class> out;
  for (long k = 0; k <= kmax; ++k) out.push_back(bell_complete(std::span<const mpq_class>(args.data(), static_cast<size_t>(k))));
  return out;
}

mpq_class bell_harmonic(long k, long n) { return bell_harmonic_all(k, n).back(); }

Real bell_harmonic(long k, long n, Precision p) { return Real(bell_harmonic(k, n), p); }

mpq_class bernoulli(long n) {
  static std::mutex mutex;
  static std::vector<mpq_class> table{mpq_class(1)};
  if (n < 0) throw DomainError("bernoulli: negative index");
  std::lock_guard lock(mutex);
  // sum_{k=0}^{m} C(m+1,k) B_k = 0
  while (static_cast<long>(table.size()) <= n) {
    long m = static_cast<long>(table.size());
    mpq_class acc = 0;
    for (long k = 0; k < m; ++k) acc += mpq_class(binomial(m + 1, k)) * table[static_cast<size_t>(k)];
    mpq_class b = -acc / mpq_class(m + 1);
    b.canonicalize();
    table.push_back(b);
  }
  return table[static_cast<size_t>(n)];
}

}  // namespace zetakit::combinatorics
