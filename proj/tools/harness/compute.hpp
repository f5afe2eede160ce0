#pragma once

// Request model and dispatcher behind `zetakit compute` and `zetakit table`.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zetakit/rational.hpp"
#include "zetakit/real.hpp"

namespace zetakit::cli {

/// Malformed command line input; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Quantity { kGammaM, kZeta, kZetaPrime0, kZetaDoublePrime0, kDigamma, kLogGamma, kSondowGamma };

Quantity parse_quantity(std::string_view name);
std::string_view quantity_name(Quantity q);
std::vector<std::string_view> quantity_names();

/// A numeric argument given as a decimal ("0.25") or a fraction ("1/4").
/// Fractions in (0,1) also keep their exact Rational form.
struct Argument {
  std::string text;
  Real value;
  std::optional<Rational> exact;
};

Argument parse_argument(std::string_view text, Precision p);

struct ComputeRequest {
  Quantity quantity = Quantity::kGammaM;
  long m = 0;
  int deriv = 0;
  std::optional<std::string> s;
  std::optional<std::string> x;
  /// Unit-circle point e^{i pi p/q} for sondow_gamma.
  std::optional<std::string> angle;
  std::string method;  // empty: the quantity's default
  long digits = 30;
  long max_terms = 1'000'000;
};

/// Known methods for a quantity; the first is the default.
std::vector<std::string_view> methods_for(Quantity q);

/// Fills in the default method and checks digits, method and parameters.
/// Throws UsageError.
ComputeRequest normalized(ComputeRequest req);

struct ClosedForm {
  std::string formula;
  std::string value;
  std::string residual;
};

struct ComputeOutcome {
  std::string value;  // empty when no value could be produced
  std::optional<std::string> value_imag;
  std::string err_estimate;
  long terms_used = 0;
  bool converged = false;
  std::optional<ClosedForm> closed_form;
  std::string error;  // kernel message when not converged
};

/// Evaluates a normalized request. Kernel DomainError propagates;
/// NonConvergence and PrecisionError yield converged = false.
ComputeOutcome compute(const ComputeRequest& req);

/// Canonical cache key: quantity, parameters, method, digits, max_terms.
std::string cache_key(const ComputeRequest& req);

}  // namespace zetakit::cli
