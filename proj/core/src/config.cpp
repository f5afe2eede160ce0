#include "zetakit/config.hpp"

#include <algorithm>
#include <cmath>

#include "zetakit/errors.hpp"
#include "zetakit/report.hpp"
#include "zetakit/series_result.hpp"

namespace zetakit {

void PrecisionConfig::validate() const {
  if (digits < 10) throw DomainError("digits must be >= 10");
  if (max_terms < 1) throw DomainError("max_terms must be >= 1");
  if (guard_bits < 0) throw DomainError("guard_bits must be >= 0");
  if (tolerance_override && !(*tolerance_override > 0.0)) throw DomainError("tolerance must be > 0");
}

Real PrecisionConfig::tolerance() const {
  Precision p = working_precision();
  if (tolerance_override) return Real(*tolerance_override, p);
  return power_of_ten(-digits, p);
}

PrecisionConfig PrecisionConfig::with_guard(long extra_bits) const {
  PrecisionConfig c = *this;
  c.guard_bits += extra_bits;
  return c;
}

PrecisionConfig PrecisionConfig::relaxed_to(double tol) const {
  PrecisionConfig c = *this;
  double current = tolerance_override ? *tolerance_override : std::pow(10.0, -static_cast<double>(digits));
  c.tolerance_override = std::max(current, tol);
  return c;
}

PrecisionConfig PrecisionConfig::with_tolerance(double tol) const {
  PrecisionConfig c = *this;
  c.tolerance_override = tol;
  return c;
}

PrecisionConfig config_for_digits(long digits) {
  PrecisionConfig c;
  c.digits = digits;
  c.validate();
  return c;
}

const Real& require_converged(const SeriesResult& r, std::string_view what) {
  if (!r.converged) {
    throw NonConvergence(std::string(what) + ": no convergence after " + std::to_string(r.terms_used) +
                         " terms (err ~ " + r.err_estimate.to_string(3) + ")");
  }
  return r.value;
}

IdentityReport make_report(std::string id, const Real& lhs, const Real& rhs, double tolerance, std::string meta) {
  IdentityReport rep;
  rep.id = std::move(id);
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.residual = abs(lhs - rhs);
  rep.tolerance = Real(tolerance, Precision(64));
  rep.pass = rep.residual <= rep.tolerance;
  rep.meta = std::move(meta);
  return rep;
}

IdentityReport make_report(std::string id, const Real& lhs, const Real& rhs, double tolerance, const Real& x,
                           std::string meta) {
  IdentityReport rep = make_report(std::move(id), lhs, rhs, tolerance, std::move(meta));
  rep.x = x;
  return rep;
}

}  // namespace zetakit
