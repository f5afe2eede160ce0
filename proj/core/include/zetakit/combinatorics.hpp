#pragma once

// Exact binomials, generalized harmonic numbers and complete Bell polynomials.

#include <span>
#include <vector>

#include <gmpxx.h>

#include "zetakit/real.hpp"

namespace zetakit::combinatorics {

/// C(n,k); zero when k < 0 or k > n.
mpz_class binomial(long n, long k);

/// Row C(n,0..n).
std::vector<mpz_class> binomial_row(long n);

struct HarmonicSpec {
  long n = 0;
  long m = 1;
  Real t;
};

/// H_n^{(m)}(t) = sum_{k=0}^{n-1} (k+t)^{-m}, at the precision of t.
/// Throws DomainError for t <= 0, n < 0 or m < 1.
Real harmonic(const HarmonicSpec& spec);

/// Classical H_n^{(m)} as an exact fraction.
mpq_class harmonic_exact(long n, long m);

/// Complete exponential Bell polynomial Y_r(x_1..x_r), r = x.size().
Real bell_complete(std::span<const Real> x);
mpq_class bell_complete(std::span<const mpq_class> x);

/// Y_k(H_n, -1! H_n^{(2)}, 2! H_n^{(3)}, ..., (-1)^{k-1}(k-1)! H_n^{(k)}).
mpq_class bell_harmonic(long k, long n);
Real bell_harmonic(long k, long n, Precision p);

/// bell_harmonic(0..kmax, n) in one pass.
std::vector<mpq_class> bell_harmonic_all(long kmax, long n);

/// Bernoulli number B_n (B_1 = -1/2).
mpq_class bernoulli(long n);

}  // namespace zetakit::combinatorics
