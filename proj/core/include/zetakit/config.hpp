#pragma once

#include <optional>

#include "zetakit/real.hpp"

namespace zetakit {

/// Precision policy shared by every kernel.
///
/// Working precision is digits*log2(10) + guard_bits. The tolerance defaults
/// to 10^-digits; kernels compare absolute error estimates against it.
struct PrecisionConfig {
  long digits = 30;
  long guard_bits = 64;
  long max_terms = 1'000'000;
  std::optional<double> tolerance_override;  // when set, replaces 10^-digits

  /// Throws DomainError if digits < 10, max_terms < 1, or tolerance <= 0.
  void validate() const;

  Precision working_precision() const { return precision_for_digits(digits, guard_bits); }
  Real tolerance() const;

  /// Copy with extra guard bits (for callers that suffer cancellation).
  PrecisionConfig with_guard(long extra_bits) const;
  /// Copy whose tolerance is at least `tol`; verification-grade kernels
  /// use this so they do not chase full working precision.
  PrecisionConfig relaxed_to(double tol) const;
  PrecisionConfig with_tolerance(double tol) const;
};

/// Default configuration at the given number of digits.
PrecisionConfig config_for_digits(long digits);

}  // namespace zetakit
