#pragma once

#include <string>

namespace zetakit {

/// Reduced fraction p/q with 0 < p/q < 1.
class Rational {
 public:
  /// Reduces p/q; throws DomainError unless 0 < p/q < 1.
  Rational(long p, long q);

  long p() const { return p_; }
  long q() const { return q_; }
  std::string to_string() const { return std::to_string(p_) + "/" + std::to_string(q_); }

  /// 1 - p/q.
  Rational complement() const { return Rational(q_ - p_, q_); }

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  long p_;
  long q_;
};

}  // namespace zetakit
