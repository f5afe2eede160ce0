#include "suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "compute.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/fourier_identities.hpp"
#include "zetakit/gamma_funcs.hpp"
#include "zetakit/hurwitz.hpp"
#include "zetakit/stieltjes.hpp"

namespace zetakit::cli {

namespace {

using stieltjes::Method;

class Collector {
 public:
  explicit Collector(const PrecisionConfig& cfg) : cfg_(cfg), p_(cfg.working_precision()) {}

  const PrecisionConfig& cfg() const { return cfg_; }
  Precision p() const { return p_; }
  Real num(std::string_view text) const { return parse_argument(text, p_).value; }

  void add(const std::string& label, const std::function<IdentityReport()>& f) {
    add_many(label, [&] { return std::vector<IdentityReport>{f()}; });
  }

  void add_many(const std::string& label, const std::function<std::vector<IdentityReport>()>& f) {
    try {
      for (auto& r : f()) {
        if (r.id.find('[') == std::string::npos && label.find('[') != std::string::npos) {
          r.id += label.substr(label.find('['));
        }
        reports.push_back(std::move(r));
      }
    } catch (const Error& e) {
      errors.push_back({label, e.what()});
    }
  }

  std::vector<IdentityReport> reports;
  std::vector<CheckError> errors;

 private:
  PrecisionConfig cfg_;
  Precision p_;
};

std::string at(std::string_view name, std::string_view value) {
  return "[" + std::string(name) + "=" + std::string(value) + "]";
}

Real gamma_m(long m, const Real& x, Method method, const PrecisionConfig& cfg) {
  return require_converged(stieltjes::stieltjes_gamma({m, x, method, cfg}), "gamma_m(x)");
}

Real zeta(const Real& s, const Real& x, const PrecisionConfig& cfg) {
  return require_converged(hurwitz::zeta_hasse({s, x, 0}, cfg), "zeta(s,x)");
}

// psi(x+1) = psi(x) + 1/x, gamma_m(x) - gamma_m(x+1) = log^m(x)/x,
// zeta(s,x) - zeta(s,x+1) = x^{-s}.
void functional_suite(Collector& c) {
  for (const char* x : {"0.1", "0.5", "1", "2.5", "7"}) {
    c.add("digamma-shift" + at("x", x), [&] {
      const Real xv = c.num(x);
      return make_report("digamma-shift" + at("x", x), gamma::digamma(xv + 1, c.cfg()),
                         gamma::digamma(xv, c.cfg()) + 1 / xv, 1e-12, xv);
    });
  }
  for (long m = 0; m <= 2; ++m) {
    for (const char* x : {"0.25", "1", "3"}) {
      c.add("stieltjes-shift-m" + std::to_string(m) + at("x", x),
            [&] { return stieltjes::stieltjes_shift(m, c.num(x), c.cfg()); });
    }
  }
  const std::vector<std::pair<const char*, const char*>> points{{"2", "0.5"}, {"-0.5", "0.3"}, {"3.5", "1.5"}};
  for (const auto& [s, x] : points) {
    const std::string id = "zeta-shift" + at("s", s) + at("x", x);
    c.add(id, [&] {
      const Real sv = c.num(s), xv = c.num(x);
      return make_report(id, zeta(sv, xv, c.cfg()) - zeta(sv, xv + 1, c.cfg()), pow(xv, -sv), 1e-12, xv);
    });
  }
}

void hurwitz_suite(Collector& c) {
  const std::vector<std::pair<const char*, const char*>> points{{"-0.5", "0.3"}, {"-1", "0.7"}, {"0.5", "0.25"}};
  for (const auto& [s, x] : points) {
    const std::string id = "zeta-fourier-vs-hasse" + at("s", s) + at("x", x);
    c.add(id, [&] {
      const Real sv = c.num(s), xv = c.num(x);
      Real f = require_converged(hurwitz::zeta_fourier({sv, xv, 0}, c.cfg()), "zeta_fourier");
      return make_report(id, f, zeta(sv, xv, c.cfg()), 1e-6, xv, "Fourier expansion");
    });
  }
  for (int k = 1; k <= 9; ++k) {
    const std::string x = "0." + std::to_string(k);
    const std::string id = "lerch-log-gamma" + at("x", x);
    c.add(id, [&] {
      const Real xv = c.num(x);
      const Precision p = c.p();
      Real lhs = hurwitz::zeta_prime0(xv, hurwitz::Route::kHasse, c.cfg()) + log(2 * pi(p)) / 2;
      return make_report(id, lhs, gamma::log_gamma(xv, c.cfg()), 1e-10, xv);
    });
  }
  for (const char* x : {"0.3", "0.75"}) {
    c.add("zeta-prime0-routes" + at("x", x), [&] {
      const Real xv = c.num(x);
      using hurwitz::Route;
      return make_report("zeta-prime0-routes" + at("x", x), hurwitz::zeta_prime0(xv, Route::kFourier, c.cfg()),
                         hurwitz::zeta_prime0(xv, Route::kHasse, c.cfg()), 1e-10, xv, "Fourier vs Hasse");
    });
    c.add("zeta-doubleprime0-routes" + at("x", x), [&] {
      const Real xv = c.num(x);
      using hurwitz::Route;
      return make_report("zeta-doubleprime0-routes" + at("x", x),
                         hurwitz::zeta_doubleprime0(xv, Route::kFourier, c.cfg()),
                         hurwitz::zeta_doubleprime0(xv, Route::kHasse, c.cfg()), 1e-10, xv, "Fourier vs Hasse");
    });
  }
  const std::vector<std::pair<const char*, const char*>> sc_points{{"2", "1"}, {"3", "0.5"}, {"-1.5", "2"}};
  for (const auto& [s, x] : sc_points) {
    const std::string id = "srivastava-choi-vs-hasse" + at("s", s) + at("x", x);
    c.add(id, [&] {
      const Real sv = c.num(s), xv = c.num(x);
      Real v = require_converged(hurwitz::zeta_srivastava_choi(sv, xv, c.cfg()), "Srivastava-Choi series");
      return make_report(id, v, zeta(sv, xv, c.cfg()), 1e-12, xv);
    });
  }
  c.add("poisson-zeta" + at("s", "2") + at("x", "1"), [&] {
    const Real sv = c.num("2"), xv = c.num("1");
    SeriesResult r = hurwitz::poisson_zeta(sv, xv, 64, c.cfg());
    return make_report("poisson-zeta" + at("s", "2") + at("x", "1"), r.value, zeta(sv, xv, c.cfg()), 1e-6, xv,
                       "oscillatory integrals, 64 terms");
  });
}

void gamma_suite(Collector& c) {
  for (const char* x : {"0.5", "1", "2"}) {
    c.add("digamma-log-integral" + at("x", x), [&] { return gamma::digamma_integral_check(c.num(x), c.cfg()); });
  }
  c.add("bourguet-log-gamma" + at("x", "2.5"), [&] {
    const Real xv = c.num("2.5");
    SeriesResult r = gamma::bourguet_log_gamma(xv, 64, c.cfg());
    return make_report("bourguet-log-gamma", r.value, gamma::log_gamma(xv, c.cfg()), 1e-8, xv,
                       "oscillatory integrals, 64 terms");
  });
  for (const char* x : {"0.3", "2"}) {
    c.add("digamma-hasse-series" + at("x", x), [&] {
      const Real xv = c.num(x);
      Real v = require_converged(stieltjes::digamma_hasse_series(xv, c.cfg()), "digamma Hasse series");
      return make_report("digamma-hasse-series", v, gamma::digamma(xv, c.cfg()), 1e-12, xv);
    });
  }
  c.add("polygamma-trigamma" + at("x", "1"), [&] {
    const Precision p = c.p();
    return make_report("polygamma-trigamma", gamma::polygamma(1, Real(1, p), c.cfg()), pi(p) * pi(p) / 6, 1e-12,
                       Real(1, p), "psi'(1) = zeta(2)");
  });
}

void stieltjes_suite(Collector& c) {
  PrecisionConfig oracle_cfg = config_for_digits(std::max<long>(40, c.cfg().digits));
  const Real one(1, c.p());
  const std::vector<std::tuple<const char*, Method, double>> routes{
      {"hasse", Method::kHasse, 1e-12}, {"bell", Method::kBell, 1e-12}, {"briggs", Method::kBriggs, 1e-4}};
  for (const auto& [name, method, tol] : routes) {
    const std::string id = std::string("euler-gamma-") + name;
    c.add(id, [&, method = method, tol = tol] {
      Real oracle = require_converged(stieltjes::laurent_oracle(0, one, oracle_cfg), "Laurent oracle");
      return make_report(id, gamma_m(0, one, method, c.cfg()), oracle, tol, one, "vs 40-digit defining limit");
    });
  }
  c.add("gamma1-half-closed-form", [&] {
    const Real half = c.num("1/2");
    return make_report("gamma1-half-closed-form", gamma_m(1, half, Method::kHasse, c.cfg()),
                       stieltjes::gamma1_half_display(c.cfg()), 1e-10, half);
  });
  for (long m = 0; m <= 2; ++m) {
    for (const char* x : {"1", "1.5"}) {
      const std::string id = "bell-vs-laurent-m" + std::to_string(m) + at("x", x);
      c.add(id, [&] {
        const Real xv = c.num(x);
        Real oracle = require_converged(stieltjes::laurent_oracle(m, xv, c.cfg()), "Laurent oracle");
        return make_report(id, gamma_m(m, xv, Method::kBell, c.cfg()), oracle, 1e-8, xv);
      });
    }
  }
  for (long n : {1L, 2L}) {
    c.add("coffey-difference-n" + std::to_string(n) + at("x", "0.5"),
          [&] { return stieltjes::coffey_difference_integral(n, c.num("0.5"), c.cfg()); });
  }
  for (const char* x : {"0.1", "0.2", "0.3"}) {
    c.add("landau-gamma1-functional" + at("x", x),
          [&] { return stieltjes::landau_gamma1_functional(c.num(x), c.cfg()); });
  }
  c.add("gamma1-prime-routes" + at("x", "2"), [&] {
    const Real xv = c.num("2");
    Real series = require_converged(stieltjes::gamma1_prime_series(xv, c.cfg()), "gamma_1' series");
    return make_report("gamma1-prime-routes", stieltjes::gamma1_prime(xv, c.cfg()), series, 1e-10, xv);
  });
}

void derivatives_suite(Collector& c) {
  const PrecisionConfig& cfg = c.cfg();
  for (const char* x : {"0.5", "2", "2.718281828459045"}) {
    c.add("gamma1-prime-finite-difference" + at("x", x), [&] {
      const Real xv = c.num(x), h = c.num("1e-5");
      Real fd = (gamma_m(1, xv + h, Method::kHasse, cfg) - gamma_m(1, xv - h, Method::kHasse, cfg)) / (2 * h);
      return make_report("gamma1-prime-finite-difference", stieltjes::gamma1_prime(xv, cfg), fd, 1e-6, xv,
                         "central difference, h = 1e-5");
    });
  }
  const std::vector<std::pair<const char*, const char*>> points{{"2", "0.5"}, {"-0.5", "0.3"}, {"3", "2"}};
  for (const auto& [s, x] : points) {
    const std::string id = "zeta-x-derivative" + at("s", s) + at("x", x);
    c.add(id, [&] {
      const Real sv = c.num(s), xv = c.num(x), h = c.num("1e-7");
      Real fd = (zeta(sv, xv + h, cfg) - zeta(sv, xv - h, cfg)) / (2 * h);
      return make_report(id, fd, -sv * zeta(sv + 1, xv, cfg), 1e-8, xv, "central difference, h = 1e-7");
    });
  }
  for (const char* x : {"2.718281828459045", "4", "10"}) {
    const std::string id = "gamma1-prime-negative" + at("x", x);
    c.add(id, [&] {
      const Real xv = c.num(x);
      Real d = stieltjes::gamma1_prime(xv, cfg);
      // Encoded as max(gamma_1'(x), 0) == 0 with zero tolerance.
      IdentityReport r = make_report(id, max(d, Real(c.p())), Real(c.p()), 0.0, xv);
      r.meta = "gamma_1'(x) = " + d.to_string(12);
      r.pass = d < 0;
      return r;
    });
  }
}

void rational_suite(Collector& c) {
  for (const auto& [p, q] : std::vector<std::pair<long, long>>{{1, 4}, {1, 5}, {1, 3}, {2, 7}}) {
    const std::string frac = std::to_string(p) + "/" + std::to_string(q);
    c.add("gamma1-rational" + at("x", frac), [&, p = p, q = q] {
      const Rational r(p, q);
      const Real xv = Real(p, c.p()) / q;
      return make_report("gamma1-rational", stieltjes::gamma1_rational(r, c.cfg()),
                         gamma_m(1, xv, Method::kHasse, c.cfg()), 1e-8, xv);
    });
  }
  c.add("gamma1-quarter-display", [&] {
    const Real xv = c.num("1/4");
    return make_report("gamma1-quarter-display", stieltjes::gamma1_quarter_display(c.cfg()),
                       gamma_m(1, xv, Method::kHasse, c.cfg()), 1e-8, xv);
  });
  for (const auto& [p, q] : std::vector<std::pair<long, long>>{{1, 3}, {1, 4}}) {
    const std::string frac = std::to_string(p) + "/" + std::to_string(q);
    c.add("gamma1-rational-printed-sign " + frac, [&, p = p, q = q] {
      return stieltjes::gamma1_rational_printed_sign(Rational(p, q), c.cfg());
    });
  }
  c.add("gamma1-fifth-printed-display", [&] { return stieltjes::gamma1_fifth_printed_display(c.cfg()); });
}

void adamchik_suite(Collector& c) {
  for (const auto& [p, q] : std::vector<std::pair<long, long>>{{1, 3}, {1, 4}, {2, 5}}) {
    c.add("adamchik-reflection-" + std::to_string(p) + "-" + std::to_string(q),
          [&, p = p, q = q] { return stieltjes::adamchik_reflection(Rational(p, q), c.cfg()); });
  }
}

void ramanujan_suite(Collector& c) {
  c.add_many("ramanujan", [&] { return stieltjes::coffey_ramanujan_sum(c.cfg()); });
}

void fourier_suite(Collector& c) {
  using numeric::Trig;
  const fourier::CoeffSeq ones{[p = c.p()](long) { return Real(1, p); }, "c_n = 1"};
  for (const char* x : {"0.3", "0.7"}) {
    c.add("lerch-constant-sin" + at("x", x), [&] {
      const Real xv = c.num(x);
      Real v = require_converged(fourier::lerch_transform(ones, Trig::kSin, xv, c.cfg()), "Lerch transform");
      return make_report("lerch-constant-sin", v, -sin(pi(c.p()) * xv), 1e-6, xv);
    });
    c.add("lerch-constant-cos" + at("x", x), [&] {
      const Real xv = c.num(x);
      Real v = require_converged(fourier::lerch_transform(ones, Trig::kCos, xv, c.cfg()), "Lerch transform");
      return make_report("lerch-constant-cos", v, -cos(pi(c.p()) * xv), 1e-6, xv);
    });
  }
  for (const char* x : {"1/4", "1/3", "2/3"}) {
    c.add("kummer-log-gamma" + at("x", x), [&] { return fourier::kummer_log_gamma(c.num(x), c.cfg()); });
  }
  for (const char* x : {"1/4", "1/2", "3/4"}) {
    c.add("log1p-sin-odd" + at("x", x), [&] { return fourier::series_316(c.num(x), c.cfg()); });
  }
  c.add("wallis-alternating-log", [&] { return fourier::wallis_alternating(c.cfg()); });
  for (const char* x : {"1/4", "1/3", "1/2"}) {
    c.add("deninger-cosine" + at("x", x), [&] { return fourier::deninger_f(c.num(x), c.cfg()); });
  }
  for (const char* x : {"1/4", "1/6", "1/8"}) {
    c.add("landau-f-functional" + at("x", x), [&] { return fourier::landau_f_functional(c.num(x), c.cfg()); });
  }
  for (const char* x : {"1/4", "1/3", "1/2"}) {
    c.add("gamma1-fourier" + at("x", x), [&] {
      const Real xv = c.num(x);
      Real v = require_converged(fourier::gamma1_fourier(xv, c.cfg()), "gamma_1 Fourier series");
      return make_report("gamma1-fourier", v, gamma_m(1, xv, Method::kHasse, c.cfg()), 1e-4, xv);
    });
  }
  using fourier::Log1pFamily;
  for (const char* x : {"1/3", "1/2"}) {
    c.add("log1p-cos-odd" + at("x", x),
          [&] { return fourier::series_325_family(c.num(x), Log1pFamily::kCosOdd, c.cfg()); });
  }
  for (const auto& [p, q] : std::vector<std::pair<long, long>>{{1, 4}, {2, 7}}) {
    const std::string frac = std::to_string(p) + "/" + std::to_string(q);
    c.add("log1p-cos-odd-rational" + at("x", frac), [&, p = p, q = q] {
      return fourier::series_325_family(Rational(p, q), Log1pFamily::kRationalCosOdd, c.cfg());
    });
  }
  c.add("log1p-cos-even" + at("x", "1/3"),
        [&] { return fourier::series_325_family(c.num("1/3"), Log1pFamily::kCosEven, c.cfg()); });
  c.add("log1p-sin-even" + at("x", "1/3"),
        [&] { return fourier::series_325_family(c.num("1/3"), Log1pFamily::kSinEven, c.cfg()); });
}

void kolbig_suite(Collector& c) {
  c.add_many("kolbig", [&] { return fourier::kolbig_check(c.cfg()); });
}

void sondow_suite(Collector& c) {
  using fourier::SondowRoute;
  const Precision p = c.p();
  c.add("sondow-gamma-one", [&] {
    return make_report("sondow-gamma-one", fourier::sondow_gamma(Real(1, p), SondowRoute::kSeries, c.cfg()).re,
                       euler_gamma(p), 1e-10, Real(1, p));
  });
  c.add("sondow-gamma-minus-one", [&] {
    return make_report("sondow-gamma-minus-one",
                       fourier::sondow_gamma(Real(-1, p), SondowRoute::kSeries, c.cfg()).re, log(4 / pi(p)), 1e-10,
                       Real(-1, p));
  });
  c.add("sondow-series-vs-integral" + at("z", "1/2"), [&] {
    const Real z = c.num("1/2");
    return make_report("sondow-series-vs-integral", fourier::sondow_gamma(z, SondowRoute::kSeries, c.cfg()).re,
                       fourier::sondow_gamma(z, SondowRoute::kIntegral, c.cfg()).re, 1e-8, z);
  });
  for (const auto& [a, b] : std::vector<std::pair<long, long>>{{1, 2}, {1, 3}}) {
    const std::string frac = std::to_string(a) + "/" + std::to_string(b);
    for (const char* part : {"re", "im"}) {
      const std::string id = std::string("sondow-twoq-vs-series-") + part;
      c.add(id + at("angle", frac), [&, a = a, b = b, part = std::string(part)] {
        const Rational r(a, b);
        fourier::Complex s = fourier::sondow_gamma(r, SondowRoute::kSeries, c.cfg());
        fourier::Complex t = fourier::sondow_gamma(r, SondowRoute::kTwoQ, c.cfg());
        return part == "re" ? make_report(id, t.re, s.re, 1e-6) : make_report(id, t.im, s.im, 1e-6);
      });
    }
  }
}

const std::vector<std::pair<std::string_view, std::function<void(Collector&)>>>& registry() {
  static const std::vector<std::pair<std::string_view, std::function<void(Collector&)>>> r{
      {"functional", functional_suite}, {"hurwitz", hurwitz_suite},       {"gamma", gamma_suite},
      {"stieltjes", stieltjes_suite},   {"derivatives", derivatives_suite}, {"rational", rational_suite},
      {"adamchik", adamchik_suite},     {"ramanujan", ramanujan_suite},   {"fourier", fourier_suite},
      {"kolbig", kolbig_suite},         {"sondow", sondow_suite},
  };
  return r;
}

}  // namespace

bool SuiteRun::all_as_expected() const {
  return errors.empty() &&
         std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.as_expected(); });
}

std::vector<std::string_view> suite_names() {
  std::vector<std::string_view> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

std::vector<std::string> expand_suites(const std::vector<std::string>& requested) {
  std::vector<std::string> names;
  for (const auto& item : requested) {
    std::string token;
    std::istringstream in(item);
    while (std::getline(in, token, ',')) {
      token.erase(0, token.find_first_not_of(" \t"));
      token.erase(token.find_last_not_of(" \t") + 1);
      if (!token.empty()) names.push_back(token);
    }
  }
  if (names.empty()) throw UsageError("empty suite list");
  std::vector<std::string> out;
  auto push = [&](std::string_view n) {
    if (std::find(out.begin(), out.end(), n) == out.end()) out.emplace_back(n);
  };
  const auto known = suite_names();
  for (const auto& n : names) {
    if (n == "all") {
      for (auto k : known) push(k);
    } else if (std::find(known.begin(), known.end(), n) != known.end()) {
      push(n);
    } else {
      throw UsageError("unknown suite '" + n + "'");
    }
  }
  return out;
}

SuiteRun run_suites(const std::vector<std::string>& suites, const PrecisionConfig& cfg) {
  Collector c(cfg);
  for (const auto& name : suites) {
    for (const auto& [n, fn] : registry()) {
      if (n == name) fn(c);
    }
  }
  SuiteRun run{suites, std::move(c.reports), std::move(c.errors)};
  std::stable_sort(run.reports.begin(), run.reports.end(),
                   [](const IdentityReport& a, const IdentityReport& b) { return a.id < b.id; });
  std::stable_sort(run.errors.begin(), run.errors.end(),
                   [](const CheckError& a, const CheckError& b) { return a.check < b.check; });
  return run;
}

}  // namespace zetakit::cli
