#include "compute.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "zetakit/combinatorics.hpp"
#include "zetakit/config.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/fourier_identities.hpp"
#include "zetakit/gamma_funcs.hpp"
#include "zetakit/hurwitz.hpp"
#include "zetakit/stieltjes.hpp"

namespace zetakit::cli {

namespace {

struct QuantityInfo {
  Quantity q;
  std::string_view name;
  std::vector<std::string_view> methods;
};

const std::vector<QuantityInfo>& quantity_table() {
  static const std::vector<QuantityInfo> table{
      {Quantity::kGammaM, "gamma_m", {"hasse", "bell", "laurent", "briggs"}},
      {Quantity::kZeta, "zeta", {"hasse", "fourier", "srivastava-choi", "poisson"}},
      {Quantity::kZetaPrime0, "zeta_prime0", {"hasse", "fourier"}},
      {Quantity::kZetaDoublePrime0, "zeta_doubleprime0", {"hasse", "fourier"}},
      {Quantity::kDigamma, "digamma", {"direct", "hasse"}},
      {Quantity::kLogGamma, "log_gamma", {"direct", "bourguet"}},
      {Quantity::kSondowGamma, "sondow_gamma", {"series", "integral", "twoq"}},
  };
  return table;
}

const QuantityInfo& info(Quantity q) {
  for (const auto& i : quantity_table()) {
    if (i.q == q) return i;
  }
  throw UsageError("unknown quantity");
}

constexpr long kSeriesTerms = 64;  // n-sum length for the Briggs, Poisson and Bourguet routes

long parse_long(std::string_view text, std::string_view what) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError("malformed " + std::string(what) + " '" + std::string(text) + "'");
  }
  return v;
}

std::string fmt_err(const Real& e) { return e.to_string(3); }

ComputeOutcome from_series(const SeriesResult& r, long digits) {
  ComputeOutcome out;
  out.value = r.value.to_string(static_cast<int>(digits));
  out.err_estimate = fmt_err(r.err_estimate);
  out.terms_used = r.terms_used;
  out.converged = r.converged;
  if (!r.converged) out.error = "series did not reach the requested tolerance";
  return out;
}

ComputeOutcome from_value(const Real& v, const Real& err, long digits) {
  ComputeOutcome out;
  out.value = v.to_string(static_cast<int>(digits));
  out.err_estimate = fmt_err(err);
  out.converged = true;
  return out;
}

void attach_closed_form(ComputeOutcome& out, std::string formula, const Real& closed, const Real& value,
                        long digits) {
  out.closed_form = ClosedForm{std::move(formula), closed.to_string(static_cast<int>(digits)),
                               abs(value - closed).to_string(3)};
}

bool is_positive_integer(const Real& x) { return x.is_integer() && x > 0; }

ComputeOutcome compute_gamma_m(const ComputeRequest& req, const PrecisionConfig& cfg) {
  const Precision p = cfg.working_precision();
  const Argument x = parse_argument(*req.x, p);
  using stieltjes::Method;
  Method method = Method::kHasse;
  if (req.method == "bell") method = Method::kBell;
  if (req.method == "laurent") method = Method::kLaurentOracle;
  if (req.method == "briggs") method = Method::kBriggs;
  SeriesResult r = stieltjes::stieltjes_gamma({req.m, x.value, method, cfg, kSeriesTerms});
  ComputeOutcome out = from_series(r, req.digits);
  if (req.m == 0) {
    attach_closed_form(out, "-digamma(x)", -gamma::digamma(x.value, cfg), r.value, req.digits);
  } else if (req.m == 1 && x.exact) {
    if (*x.exact == Rational(1, 2)) {
      attach_closed_form(out, "gamma_1 - log(2)^2 - 2 gamma log(2)", stieltjes::gamma1_half_display(cfg), r.value,
                         req.digits);
    } else {
      attach_closed_form(out, "rational closed form in log Gamma(j/q), zeta''(0,j/q) and cot",
                         stieltjes::gamma1_rational(*x.exact, cfg), r.value, req.digits);
    }
  }
  return out;
}

ComputeOutcome compute_zeta(const ComputeRequest& req, const PrecisionConfig& cfg) {
  const Precision p = cfg.working_precision();
  const Argument s = parse_argument(*req.s, p);
  const Argument x = parse_argument(*req.x, p);
  SeriesResult r;
  if (req.method == "hasse") {
    r = hurwitz::zeta_hasse({s.value, x.value, req.deriv}, cfg);
  } else if (req.method == "fourier") {
    r = hurwitz::zeta_fourier({s.value, x.value, 0}, cfg);
  } else if (req.method == "srivastava-choi") {
    r = hurwitz::zeta_srivastava_choi(s.value, x.value, cfg);
  } else {
    r = hurwitz::poisson_zeta(s.value, x.value, kSeriesTerms, cfg);
  }
  ComputeOutcome out = from_series(r, req.digits);
  // zeta(2k) = (-1)^{k+1} B_2k (2 pi)^{2k} / (2 (2k)!)
  if (req.deriv == 0 && x.value == 1 && s.value.is_integer() && s.value > 0 && s.value.to_long() % 2 == 0) {
    const long two_k = s.value.to_long();
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(two_k));
    Real closed = Real(mpq_class(combinatorics::bernoulli(two_k) / fact), p) * pow(2 * pi(p), two_k) / 2;
    if ((two_k / 2) % 2 == 0) closed = -closed;
    std::string formula = two_k == 2 ? "pi^2/6" : "(-1)^(k+1) B_2k (2 pi)^2k / (2 (2k)!)";
    attach_closed_form(out, formula, closed, r.value, req.digits);
  }
  return out;
}

ComputeOutcome compute_zeta_s0(const ComputeRequest& req, const PrecisionConfig& cfg, int deriv) {
  const Precision p = cfg.working_precision();
  const Argument x = parse_argument(*req.x, p);
  ComputeOutcome out;
  if (req.method == "hasse") {
    out = from_series(hurwitz::zeta_hasse({Real(p), x.value, deriv}, cfg), req.digits);
  } else {
    using hurwitz::Route;
    Real v = deriv == 1 ? hurwitz::zeta_prime0(x.value, Route::kFourier, cfg)
                        : hurwitz::zeta_doubleprime0(x.value, Route::kFourier, cfg);
    // Accuracy of the averaged trigonometric sums, not the working precision.
    out = from_value(v, Real(1e-10, p), req.digits);
  }
  if (deriv == 1) {
    Real value = Real::parse(out.value, p);
    attach_closed_form(out, "log Gamma(x) - log(2 pi)/2", gamma::log_gamma(x.value, cfg) - log(2 * pi(p)) / 2, value,
                       req.digits);
  }
  return out;
}

ComputeOutcome compute_digamma(const ComputeRequest& req, const PrecisionConfig& cfg) {
  const Precision p = cfg.working_precision();
  const Argument x = parse_argument(*req.x, p);
  ComputeOutcome out;
  Real value(p);
  if (req.method == "hasse") {
    SeriesResult r = stieltjes::digamma_hasse_series(x.value, cfg);
    value = r.value;
    out = from_series(r, req.digits);
  } else {
    value = gamma::digamma(x.value, cfg);
    out = from_value(value, cfg.tolerance(), req.digits);
  }
  if (is_positive_integer(x.value) && x.value.to_long() <= 100000) {
    const long n = x.value.to_long();
    Real closed = -euler_gamma(p) + Real(combinatorics::harmonic_exact(n - 1, 1), p);
    attach_closed_form(out, "-gamma + H_{n-1}", closed, value, req.digits);
  } else if (x.exact && *x.exact == Rational(1, 2)) {
    attach_closed_form(out, "-gamma - 2 log(2)", -euler_gamma(p) - 2 * log_2(p), value, req.digits);
  }
  return out;
}

ComputeOutcome compute_log_gamma(const ComputeRequest& req, const PrecisionConfig& cfg) {
  const Precision p = cfg.working_precision();
  const Argument x = parse_argument(*req.x, p);
  ComputeOutcome out;
  Real value(p);
  if (req.method == "bourguet") {
    SeriesResult r = gamma::bourguet_log_gamma(x.value, kSeriesTerms, cfg);
    value = r.value;
    out = from_series(r, req.digits);
  } else {
    value = gamma::log_gamma(x.value, cfg);
    out = from_value(value, cfg.tolerance(), req.digits);
  }
  if (is_positive_integer(x.value) && x.value.to_long() <= 10000) {
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(x.value.to_long() - 1));
    attach_closed_form(out, "log((n-1)!)", log(Real(fact, p)), value, req.digits);
  } else if (x.exact && *x.exact == Rational(1, 2)) {
    attach_closed_form(out, "log(pi)/2", log(pi(p)) / 2, value, req.digits);
  }
  return out;
}

ComputeOutcome compute_sondow(const ComputeRequest& req, const PrecisionConfig& cfg) {
  const Precision p = cfg.working_precision();
  using fourier::SondowRoute;
  SondowRoute route = SondowRoute::kSeries;
  if (req.method == "integral") route = SondowRoute::kIntegral;
  if (req.method == "twoq") route = SondowRoute::kTwoQ;
  fourier::Complex v;
  ComputeOutcome out;
  if (req.angle) {
    const Argument a = parse_argument(*req.angle, p);
    if (!a.exact) throw UsageError("--angle must be a fraction p/q with 0 < p/q < 1");
    v = fourier::sondow_gamma(*a.exact, route, cfg);
    // The unit-circle routes are verification grade.
    out = from_value(v.re, Real(route == SondowRoute::kTwoQ ? cfg.tolerance() : Real(1e-10, p)), req.digits);
  } else {
    const Argument z = parse_argument(*req.x, p);
    v = fourier::sondow_gamma(z.value, route, cfg);
    out = from_value(v.re, route == SondowRoute::kIntegral ? Real(1e-15, p) : cfg.tolerance(), req.digits);
    if (z.value == 1) attach_closed_form(out, "gamma", euler_gamma(p), v.re, req.digits);
    if (z.value == -1) attach_closed_form(out, "log(4/pi)", log(4 / pi(p)), v.re, req.digits);
  }
  out.value_imag = v.im.to_string(static_cast<int>(req.digits));
  return out;
}

}  // namespace

Quantity parse_quantity(std::string_view name) {
  for (const auto& i : quantity_table()) {
    if (i.name == name) return i.q;
  }
  throw UsageError("unknown quantity '" + std::string(name) + "'");
}

std::string_view quantity_name(Quantity q) { return info(q).name; }

std::vector<std::string_view> quantity_names() {
  std::vector<std::string_view> out;
  for (const auto& i : quantity_table()) out.push_back(i.name);
  return out;
}

std::vector<std::string_view> methods_for(Quantity q) { return info(q).methods; }

Argument parse_argument(std::string_view text, Precision p) {
  Argument out{std::string(text), Real(p), std::nullopt};
  if (text.empty()) throw UsageError("empty numeric argument");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const long num = parse_long(text.substr(0, slash), "fraction numerator");
    const long den = parse_long(text.substr(slash + 1), "fraction denominator");
    if (den <= 0) throw UsageError("fraction denominator must be positive in '" + std::string(text) + "'");
    out.value = Real(num, p) / den;
    if (num > 0 && num < den) out.exact = Rational(num, den);
    return out;
  }
  try {
    out.value = Real::parse(text, p);
  } catch (const std::invalid_argument&) {
    throw UsageError("malformed number '" + std::string(text) + "'");
  }
  return out;
}

ComputeRequest normalized(ComputeRequest req) {
  if (req.digits < 10 || req.digits > 200) throw UsageError("--digits must lie in [10, 200]");
  if (req.max_terms < 1) throw UsageError("--max-terms must be positive");
  const auto methods = methods_for(req.quantity);
  if (req.method.empty()) req.method = std::string(methods.front());
  if (std::find(methods.begin(), methods.end(), req.method) == methods.end()) {
    throw UsageError("unknown method '" + req.method + "' for " + std::string(quantity_name(req.quantity)));
  }
  if (req.m < 0) throw UsageError("-m must be non-negative");
  if (req.deriv < 0) throw UsageError("--deriv must be non-negative");
  if (req.deriv > 0 && !(req.quantity == Quantity::kZeta && req.method == "hasse")) {
    throw UsageError("--deriv is only supported for zeta with the hasse method");
  }
  auto need = [&](const std::optional<std::string>& v, const char* flag) {
    if (!v) throw UsageError(std::string("missing ") + flag + " for " + std::string(quantity_name(req.quantity)));
  };
  if (req.quantity == Quantity::kSondowGamma) {
    if (req.x.has_value() == req.angle.has_value()) throw UsageError("sondow_gamma needs exactly one of -x and --angle");
  } else {
    need(req.x, "-x");
    if (req.angle) throw UsageError("--angle only applies to sondow_gamma");
  }
  if (req.quantity == Quantity::kZeta) need(req.s, "-s");
  // Surface malformed numbers before any kernel runs.
  const Precision p = precision_for_digits(req.digits);
  for (const auto* v : {&req.s, &req.x, &req.angle}) {
    if (*v) parse_argument(**v, p);
  }
  return req;
}

ComputeOutcome compute(const ComputeRequest& req) {
  PrecisionConfig cfg = config_for_digits(req.digits);
  cfg.max_terms = req.max_terms;
  try {
    switch (req.quantity) {
      case Quantity::kGammaM:
        return compute_gamma_m(req, cfg);
      case Quantity::kZeta:
        return compute_zeta(req, cfg);
      case Quantity::kZetaPrime0:
        return compute_zeta_s0(req, cfg, 1);
      case Quantity::kZetaDoublePrime0:
        return compute_zeta_s0(req, cfg, 2);
      case Quantity::kDigamma:
        return compute_digamma(req, cfg);
      case Quantity::kLogGamma:
        return compute_log_gamma(req, cfg);
      case Quantity::kSondowGamma:
        return compute_sondow(req, cfg);
    }
  } catch (const NonConvergence& e) {
    ComputeOutcome out;
    out.error = e.what();
    return out;
  } catch (const PrecisionError& e) {
    ComputeOutcome out;
    out.error = e.what();
    return out;
  }
  throw UsageError("unknown quantity");
}

std::string cache_key(const ComputeRequest& req) {
  std::string key(quantity_name(req.quantity));
  key += "|m=" + std::to_string(req.m);
  key += "|deriv=" + std::to_string(req.deriv);
  key += "|s=" + req.s.value_or("");
  key += "|x=" + req.x.value_or("");
  key += "|angle=" + req.angle.value_or("");
  key += "|method=" + req.method;
  key += "|digits=" + std::to_string(req.digits);
  key += "|max_terms=" + std::to_string(req.max_terms);
  return key;
}

}  // namespace zetakit::cli
