#include "hasse.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace zetakit::detail {

HasseOutcome hasse_sums(const HasseValues& values, size_t count, std::span<const Real> thresholds, long n_cap,
                        Precision p) {
  std::vector<std::vector<Real>> f(count);
  std::vector<Real> scratch(count, Real(p));
  HasseOutcome out;
  out.sums.assign(count, Real(p));
  out.errors.assign(count, Real(p));
  std::vector<int> quiet(count, 0);
  std::vector<std::deque<Real>> recent(count);

  std::vector<mpz_class> row{mpz_class(1)};
  Real inner(p), product(p);
  for (long n = 0; n < n_cap; ++n) {
    if (n > 0) {
      // C(n,k) from C(n-1,k) in place.
      row.push_back(1);
      for (long k = n - 1; k > 0; --k) row[static_cast<size_t>(k)] += row[static_cast<size_t>(k - 1)];
    }
    values(n, scratch);
    for (size_t i = 0; i < count; ++i) f[i].push_back(scratch[i].with_precision(p));

    bool all_quiet = true;
    for (size_t i = 0; i < count; ++i) {
      mpfr_set_zero(inner.get(), 1);
      for (long k = 0; k <= n; ++k) {
        mpfr_mul_z(product.get(), f[i][static_cast<size_t>(k)].get(), row[static_cast<size_t>(k)].get_mpz_t(),
                   MPFR_RNDN);
        if (k % 2 == 0) {
          mpfr_add(inner.get(), inner.get(), product.get(), MPFR_RNDN);
        } else {
          mpfr_sub(inner.get(), inner.get(), product.get(), MPFR_RNDN);
        }
      }
      Real term = inner / (n + 1);
      out.sums[i] += term;
      Real magnitude = abs(term);
      quiet[i] = magnitude < thresholds[i] ? quiet[i] + 1 : 0;
      recent[i].push_back(std::move(magnitude));
      if (recent[i].size() > 5) recent[i].pop_front();
      if (quiet[i] < 5) all_quiet = false;
    }
    out.terms = n + 1;
    if (all_quiet) {
      out.converged = true;
      break;
    }
  }
  for (size_t i = 0; i < count; ++i) {
    Real worst(p);
    for (const Real& r : recent[i]) worst = max(worst, r);
    out.errors[i] = worst * 4;
  }
  return out;
}

long hasse_shift(const Real& x, long digits) {
  // A fixed K (rather than topping x up to a fixed point) keeps the series
  // at x and x+1 distinct, so shift identities remain non-trivial checks.
  const long target = digits + 20;
  return x >= target ? 0 : target;
}

long hasse_term_cap(const PrecisionConfig& cfg) { return std::min<long>(cfg.max_terms, 4 * cfg.digits + 80); }

}  // namespace zetakit::detail
