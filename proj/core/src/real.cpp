#include "zetakit/real.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>

namespace zetakit {

Precision precision_for_digits(long digits, long guard_bits) {
  return Precision(static_cast<long>(std::ceil(static_cast<double>(digits) * 3.3219280948873623)) + guard_bits);
}

Real::Real(Precision p) {
  mpfr_init2(value_, p.bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(double v, Precision p) : Real(p) { mpfr_set_d(value_, v, MPFR_RNDN); }

Real::Real(const mpz_class& v, Precision p) : Real(p) { mpfr_set_z(value_, v.get_mpz_t(), MPFR_RNDN); }

Real::Real(const mpq_class& v, Precision p) : Real(p) { mpfr_set_q(value_, v.get_mpq_t(), MPFR_RNDN); }

Real Real::parse(std::string_view text, Precision p) {
  Real r(p);
  std::string buf(text);
  if (buf.empty()) throw std::invalid_argument("empty number");
  char* end = nullptr;
  if (mpfr_strtofr(r.value_, buf.c_str(), &end, 10, MPFR_RNDN), end != buf.c_str() + buf.size()) {
    throw std::invalid_argument("not a decimal number: " + buf);
  }
  if (!r.is_finite()) throw std::invalid_argument("not a finite number: " + buf);
  return r;
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  // Leave the source valid but tiny so its destructor stays cheap.
  mpfr_init2(value_, kMinPrecisionBits);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::with_precision(Precision p) const {
  Real r(p);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

void Real::widen_to(Precision p) {
  if (p.bits > mpfr_get_prec(value_)) mpfr_prec_round(value_, p.bits, MPFR_RNDN);
}

std::string Real::to_string(int significant) const {
  if (significant < 1) significant = 1;
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() > 0 ? "inf" : "-inf";
  if (is_zero()) return "0";
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(significant), value_, MPFR_RNDN);
  std::string digits(raw);
  mpfr_free_str(raw);
  std::string sign_str;
  if (!digits.empty() && digits[0] == '-') {
    sign_str = "-";
    digits.erase(0, 1);
  }
  // value = 0.d1d2d3... * 10^exp10
  std::string out;
  if (exp10 > 25 || exp10 < -5) {
    out = digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(static_cast<long>(exp10) - 1);
  } else if (exp10 <= 0) {
    out = "0." + std::string(static_cast<size_t>(-exp10), '0') + digits;
  } else if (static_cast<size_t>(exp10) >= digits.size()) {
    out = digits + std::string(static_cast<size_t>(exp10) - digits.size(), '0');
  } else {
    out = digits.substr(0, static_cast<size_t>(exp10)) + "." + digits.substr(static_cast<size_t>(exp10));
  }
  return sign_str + out;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

Real& Real::operator+=(const Real& rhs) {
  widen_to(rhs.precision());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  widen_to(rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  widen_to(rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  widen_to(rhs.precision());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const mpz_class& rhs) {
  mpfr_mul_z(value_, value_, rhs.get_mpz_t(), MPFR_RNDN);
  return *this;
}

Real& Real::add_si(long v) {
  mpfr_add_si(value_, value_, v, MPFR_RNDN);
  return *this;
}

Real& Real::mul_si(long v) {
  mpfr_mul_si(value_, value_, v, MPFR_RNDN);
  return *this;
}

Real& Real::div_si(long v) {
  mpfr_div_si(value_, value_, v, MPFR_RNDN);
  return *this;
}

namespace {

template <class Op>
Real binary(const Real& a, const Real& b, Op op) {
  Real r(max(a.precision(), b.precision()));
  op(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

template <class Op>
Real unary(const Real& a, Op op) {
  Real r(a.precision());
  op(r.get(), a.get(), MPFR_RNDN);
  return r;
}

}  // namespace

Real operator+(const Real& a, const Real& b) { return binary(a, b, mpfr_add); }
Real operator-(const Real& a, const Real& b) { return binary(a, b, mpfr_sub); }
Real operator*(const Real& a, const Real& b) { return binary(a, b, mpfr_mul); }
Real operator/(const Real& a, const Real& b) { return binary(a, b, mpfr_div); }

Real si_div(long a, const Real& b) {
  Real r(b.precision());
  mpfr_si_div(r.value_, a, b.value_, MPFR_RNDN);
  return r;
}

Real si_sub(long a, const Real& b) {
  Real r(b.precision());
  mpfr_si_sub(r.value_, a, b.value_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

std::partial_ordering operator<=>(const Real& a, double b) {
  if (mpfr_nan_p(a.value_) || std::isnan(b)) return std::partial_ordering::unordered;
  int c = mpfr_cmp_d(a.value_, b);
  return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

std::ostream& operator<<(std::ostream& os, const Real& r) {
  auto digits = static_cast<int>(static_cast<double>(r.precision().bits) * 0.30103);
  return os << r.to_string(digits);
}

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real log1p(const Real& x) { return unary(x, mpfr_log1p); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real tan(const Real& x) { return unary(x, mpfr_tan); }
Real cot(const Real& x) { return unary(x, mpfr_cot); }
Real tanh(const Real& x) { return unary(x, mpfr_tanh); }
Real sinh(const Real& x) { return unary(x, mpfr_sinh); }
Real cosh(const Real& x) { return unary(x, mpfr_cosh); }

Real floor(const Real& x) {
  Real r(x.precision());
  mpfr_floor(r.get(), x.get());
  return r;
}

Real ceil(const Real& x) {
  Real r(x.precision());
  mpfr_ceil(r.get(), x.get());
  return r;
}

Real pow(const Real& x, const Real& y) { return binary(x, y, mpfr_pow); }

Real pow(const Real& x, long n) {
  Real r(x.precision());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

Real atan2(const Real& y, const Real& x) { return binary(y, x, mpfr_atan2); }

Real ldexp(const Real& x, long e) {
  Real r(x);
  mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

void sin_cos(const Real& x, Real& s, Real& c) {
  s = Real(x.precision());
  c = Real(x.precision());
  mpfr_sin_cos(s.get(), c.get(), x.get(), MPFR_RNDN);
}

Real max(const Real& a, const Real& b) { return a >= b ? a : b; }
Real min(const Real& a, const Real& b) { return a <= b ? a : b; }

double log2_abs(const Real& x) {
  if (x.is_zero()) return -HUGE_VAL;
  long e = 0;
  double m = mpfr_get_d_2exp(&e, x.get(), MPFR_RNDN);
  return std::log2(std::fabs(m)) + static_cast<double>(e);
}

Real pi(Precision p) {
  Real r(p);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real euler_gamma(Precision p) {
  Real r(p);
  mpfr_const_euler(r.get(), MPFR_RNDN);
  return r;
}

Real log_2(Precision p) {
  Real r(p);
  mpfr_const_log2(r.get(), MPFR_RNDN);
  return r;
}

Real power_of_ten(long exponent, Precision p) {
  Real r(10, p);
  mpfr_pow_si(r.get(), r.get(), exponent, MPFR_RNDN);
  return r;
}

}  // namespace zetakit
