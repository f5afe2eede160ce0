#pragma once

#include <optional>
#include <string>

#include "zetakit/real.hpp"

namespace zetakit {

/// Outcome of one numerical identity check.
///
/// pass is true exactly when |lhs - rhs| <= tolerance. Entries that
/// deliberately evaluate a misprinted formula carry a non-empty
/// discrepancy note; for those a failing check is the expected outcome.
struct IdentityReport {
  std::string id;
  Real lhs;
  Real rhs;
  Real residual;
  Real tolerance;
  bool pass = false;
  std::optional<Real> x;
  std::string meta;
  std::string discrepancy;

  bool expected_failure() const { return !discrepancy.empty(); }
  /// True when the entry behaves as intended: passes, or is an annotated
  /// discrepancy that fails.
  bool as_expected() const { return expected_failure() ? !pass : pass; }
};

IdentityReport make_report(std::string id, const Real& lhs, const Real& rhs, double tolerance,
                           std::string meta = {});
IdentityReport make_report(std::string id, const Real& lhs, const Real& rhs, double tolerance,
                           const Real& x, std::string meta = {});

}  // namespace zetakit
