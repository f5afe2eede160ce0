#include "zetakit/rational.hpp"

#include <numeric>

#include "zetakit/errors.hpp"

namespace zetakit {

Rational::Rational(long p, long q) {
  if (q <= 0 || p <= 0 || p >= q) {
    throw DomainError("rational argument must lie in (0,1), got " + std::to_string(p) + "/" + std::to_string(q));
  }
  long g = std::gcd(p, q);
  p_ = p / g;
  q_ = q / g;
}

}  // namespace zetakit
