#pragma once

// Arbitrary-precision real scalar on top of MPFR.
//
// Every Real carries its own precision. Binary arithmetic between two Reals
// rounds to the larger of the two precisions; arithmetic with a built-in
// integer keeps the Real's precision. Compound assignment widens
// the left-hand side when the right-hand side is more precise.

#include <mpfr.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace zetakit {

inline constexpr long kMinPrecisionBits = 64;

/// Precision in bits. Never below kMinPrecisionBits.
struct Precision {
  long bits = 128;

  constexpr Precision() = default;
  constexpr explicit Precision(long b) : bits(b < kMinPrecisionBits ? kMinPrecisionBits : b) {}

  friend constexpr auto operator<=>(Precision, Precision) = default;

  constexpr Precision operator+(long extra) const { return Precision(bits + extra); }
};

constexpr Precision max(Precision a, Precision b) { return a.bits >= b.bits ? a : b; }

/// Bits needed to carry `digits` decimal digits.
Precision precision_for_digits(long digits, long guard_bits = 0);

class Real {
 public:
  Real() : Real(Precision{}) {}
  explicit Real(Precision p);

  template <std::integral I>
  Real(I v, Precision p) : Real(p) {
    if constexpr (std::is_signed_v<I>) {
      mpfr_set_si(value_, static_cast<long>(v), MPFR_RNDN);
    } else {
      mpfr_set_ui(value_, static_cast<unsigned long>(v), MPFR_RNDN);
    }
  }
  Real(double v, Precision p);
  Real(const mpz_class& v, Precision p);
  Real(const mpq_class& v, Precision p);

  /// Parses a decimal literal ("0.25", "-1e-3"). Throws std::invalid_argument.
  static Real parse(std::string_view text, Precision p);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  Precision precision() const { return Precision(mpfr_get_prec(value_)); }

  /// Copy rounded (or exactly widened) to precision p.
  Real with_precision(Precision p) const;

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(value_, MPFR_RNDN); }

  /// Decimal rendering with `significant` digits. Positional notation for
  /// moderate exponents, scientific otherwise. Zero renders as "0".
  std::string to_string(int significant) const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  bool is_integer() const { return mpfr_integer_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  Real operator-() const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  template <std::integral I> Real& operator+=(I rhs) { return add_si(static_cast<long>(rhs)); }
  template <std::integral I> Real& operator-=(I rhs) { return add_si(-static_cast<long>(rhs)); }
  template <std::integral I> Real& operator*=(I rhs) { return mul_si(static_cast<long>(rhs)); }
  template <std::integral I> Real& operator/=(I rhs) { return div_si(static_cast<long>(rhs)); }

  Real& operator*=(const mpz_class& rhs);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, double b) { return mpfr_cmp_d(a.value_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, double b);

 private:
  void widen_to(Precision p);
  Real& add_si(long v);
  Real& mul_si(long v);
  Real& div_si(long v);
  friend Real si_div(long a, const Real& b);
  friend Real si_sub(long a, const Real& b);

  mpfr_t value_;
};

template <std::integral I> Real operator+(Real a, I b) { return a += b; }
template <std::integral I> Real operator+(I a, Real b) { return b += a; }
template <std::integral I> Real operator-(Real a, I b) { return a -= b; }
template <std::integral I> Real operator-(I a, const Real& b) { return si_sub(static_cast<long>(a), b); }
template <std::integral I> Real operator*(Real a, I b) { return a *= b; }
template <std::integral I> Real operator*(I a, Real b) { return b *= a; }
template <std::integral I> Real operator/(Real a, I b) { return a /= b; }
template <std::integral I> Real operator/(I a, const Real& b) { return si_div(static_cast<long>(a), b); }

inline Real operator*(Real a, const mpz_class& b) { return a *= b; }
inline Real operator*(const mpz_class& a, Real b) { return b *= a; }

Real si_div(long a, const Real& b);
Real si_sub(long a, const Real& b);

std::ostream& operator<<(std::ostream& os, const Real& r);

// Elementary functions. Results carry the argument's precision.
Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real exp(const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real cot(const Real& x);
Real tanh(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real atan2(const Real& y, const Real& x);
Real floor(const Real& x);
Real ceil(const Real& x);
Real ldexp(const Real& x, long e);
void sin_cos(const Real& x, Real& s, Real& c);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

/// log2 of |x|, as a double; -inf for zero.
double log2_abs(const Real& x);

Real pi(Precision p);
Real euler_gamma(Precision p);
Real log_2(Precision p);

/// 10^exponent at precision p.
Real power_of_ten(long exponent, Precision p);

}  // namespace zetakit
