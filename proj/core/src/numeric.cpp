#include "zetakit/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zetakit/errors.hpp"

namespace zetakit::numeric {

Real cvz_sum(std::span<const Real> magnitudes) {
  const long n = static_cast<long>(magnitudes.size());
  if (n == 0) return Real();
  Precision p = magnitudes[0].precision();
  for (const Real& a : magnitudes) p = max(p, a.precision());
  Real d = pow(Real(3, p) + sqrt(Real(8, p)), n);
  d = (d + 1 / d) / 2;
  Real b(-1, p);
  Real c = -d;
  Real s(p);
  for (long k = 0; k < n; ++k) {
    c = b - c;
    s += c * magnitudes[static_cast<size_t>(k)];
    b *= 2 * (k + n) * (k - n);
    b /= (2 * k + 1) * (k + 1);
  }
  return s / d;
}

SeriesResult sum_alternating_accelerated(const TermFn& term, const PrecisionConfig& cfg, long first_index) {
  const Precision p = cfg.working_precision();
  const Real tol = cfg.tolerance();
  std::vector<Real> magnitudes;
  auto ensure = [&](long n) {
    while (static_cast<long>(magnitudes.size()) < n) {
      long k = static_cast<long>(magnitudes.size());
      Real t = term(first_index + k);
      if (t.precision() < p) t = t.with_precision(p);
      magnitudes.push_back(k % 2 == 0 ? std::move(t) : -t);
    }
  };

  // Past this length the weights cannot improve on the working precision.
  const long cap = std::min<long>(cfg.max_terms, 10 * cfg.digits + 200);
  long n = std::min<long>(8, cap);
  ensure(n);
  Real prev = cvz_sum(magnitudes);
  SeriesResult out{prev, Real(p), n, false};
  while (true) {
    long next = n + std::max<long>(4, n / 2);
    if (next > cap) return out;
    ensure(next);
    Real cur = cvz_sum(std::span<const Real>(magnitudes.data(), static_cast<size_t>(next)));
    Real err = abs(cur - prev) * kErrorSafetyFactor;
    out = SeriesResult{cur, err, next, err <= tol};
    if (out.converged) return out;
    prev = std::move(cur);
    n = next;
  }
}

namespace {

// Averages every window of `len` consecutive entries; result is shorter by len-1.
std::vector<Real> box_average(const std::vector<Real>& v, long len) {
  const long n = static_cast<long>(v.size());
  std::vector<Real> out;
  if (n < len) return out;
  out.reserve(static_cast<size_t>(n - len + 1));
  Real window(v[0].precision());
  for (long j = 0; j < len; ++j) window += v[static_cast<size_t>(j)];
  out.push_back(window / len);
  for (long j = len; j < n; ++j) {
    window += v[static_cast<size_t>(j)];
    window -= v[static_cast<size_t>(j - len)];
    out.push_back(window / len);
  }
  return out;
}

constexpr int kMaxAveragingPasses = 6;
constexpr long kInitialBlock = 64;
constexpr long kReseedInterval = 256;

}  // namespace

SeriesResult sum_trig_averaged(const TermFn& coeff, Trig mode, const Real& x, const PrecisionConfig& cfg,
                               TrigSeriesOptions opts) {
  if (!(x > 0 && x < 1)) throw DomainError("trigonometric series requires 0 < x < 1, got " + x.to_string(10));
  const Precision p = max(cfg.working_precision(), x.precision());
  const Real tol = cfg.tolerance();
  const Real xp = x.with_precision(p);
  const Real step = 2 * pi(p) * xp;
  const Real phase0 = opts.odd_multiples ? pi(p) * xp : Real(p);

  Real rot_s(p), rot_c(p);
  sin_cos(step, rot_s, rot_c);

  // partial[j] = sum of the first j+1 terms
  std::vector<Real> partial;
  Real running(p);
  Real cur_s(p), cur_c(p);
  auto extend = [&](long count) {
    while (static_cast<long>(partial.size()) < count) {
      long j = static_cast<long>(partial.size());
      long n = opts.first_index + j;
      if (j % kReseedInterval == 0) {
        sin_cos(phase0 + step * n, cur_s, cur_c);
      } else {
        Real ns = cur_s * rot_c + cur_c * rot_s;
        Real nc = cur_c * rot_c - cur_s * rot_s;
        cur_s = std::move(ns);
        cur_c = std::move(nc);
      }
      running += coeff(n) * (mode == Trig::kSin ? cur_s : cur_c);
      partial.push_back(running);
    }
  };

  long block = kInitialBlock;
  SeriesResult best{Real(p), Real(p), 0, false};
  bool have_best = false;
  while (true) {
    long start = block;
    long needed = start + kMaxAveragingPasses * block + 1;
    if (needed > cfg.max_terms) {
      if (!have_best) {
        // Not even one full round fits: average what the budget allows.
        extend(std::max<long>(cfg.max_terms, 2));
        std::vector<Real> tail(partial.begin() + static_cast<long>(partial.size()) / 2, partial.end());
        Real avg = box_average(tail, static_cast<long>(tail.size()))[0];
        best = SeriesResult{avg, abs(avg - partial.back()) * kErrorSafetyFactor, static_cast<long>(partial.size()),
                            false};
      }
      best.converged = false;
      return best;
    }
    extend(needed);
    std::vector<Real> level(partial.begin() + start, partial.begin() + needed);
    for (int pass = 1; pass <= kMaxAveragingPasses; ++pass) {
      std::vector<Real> next = box_average(level, block);
      Real err = abs(next[0] - level[0]) * kErrorSafetyFactor;
      if (!have_best || err < best.err_estimate) {
        best = SeriesResult{next[0], err, needed, err <= tol};
        have_best = true;
      }
      if (err <= tol) return best;
      level = std::move(next);
    }
    block *= 2;
  }
}

namespace {

struct DeNode {
  Real weight;      // dx/dt on [-1,1]
  Real complement;  // 1 - |x|, computed without cancellation
  bool right;       // t > 0
};

DeNode de_node(const Real& t) {
  const Precision p = t.precision();
  Real half_pi = pi(p) / 2;
  Real u = half_pi * sinh(t);
  Real au = abs(u);
  Real e2 = exp(2 * au);
  Real complement = 2 / (e2 + 1);
  Real ch = cosh(u);
  Real weight = half_pi * cosh(t) / (ch * ch);
  return DeNode{std::move(weight), std::move(complement), t.sign() > 0};
}

constexpr int kMaxDeLevel = 12;

// Sums w(x)*f over the tanh-sinh nodes; `eval` receives the node and returns
// the mapped integrand times the map's Jacobian, or nullopt once the node is
// numerically at an endpoint.
template <class Eval>
SeriesResult tanh_sinh(Eval&& eval, const PrecisionConfig& cfg, Precision p) {
  const Real tol = cfg.tolerance();
  const Real tiny = ldexp(Real(1, p), -p.bits - 8);
  Real sum(p);
  long evals = 0;

  auto accumulate_side = [&](const Real& t0, const Real& h, bool odd_only) {
    for (long j = odd_only ? 1 : 0;; j += odd_only ? 2 : 1) {
      Real t = t0 + h * j;
      bool any = false;
      for (int side = 0; side < 2; ++side) {
        if (j == 0 && !odd_only && side == 1) break;
        Real ts = side == 0 ? t : -t;
        DeNode node = de_node(ts);
        if (node.weight < tiny) continue;
        auto v = eval(node);
        if (!v) continue;
        ++evals;
        if (!v->is_finite()) throw QuadratureFailure("integrand not finite at a quadrature node");
        Real contrib = node.weight * *v;
        sum += contrib;
        if (abs(contrib) > tiny) any = true;
      }
      if (!any && j > 2) break;
      if (j > 64L << 12) break;
    }
  };

  Real h(1, p);
  accumulate_side(Real(p), h, false);
  Real prev = sum * h;
  Real err(p);
  for (int level = 1; level <= kMaxDeLevel; ++level) {
    h /= 2;
    accumulate_side(Real(p), h, true);
    Real cur = sum * h;
    err = abs(cur - prev) * kErrorSafetyFactor;
    if (level >= 3 && err <= tol) return SeriesResult{cur, err, evals, true};
    prev = std::move(cur);
  }
  throw QuadratureFailure("tanh-sinh refinement stalled; err ~ " + err.to_string(3));
}

}  // namespace

SeriesResult integrate_adaptive(const RealFn& f, const Real& a, const Real& b, const PrecisionConfig& cfg) {
  const Precision p = max(cfg.working_precision(), max(a.precision(), b.precision()));
  if (a == b) return SeriesResult{Real(p), Real(p), 0, true};
  if (b < a) {
    SeriesResult r = integrate_adaptive(f, b, a, cfg);
    r.value = -r.value;
    return r;
  }
  const Real ap = a.with_precision(p), bp = b.with_precision(p);
  const Real half = (bp - ap) / 2;
  auto eval = [&](const DeNode& node) -> std::optional<Real> {
    Real offset = half * node.complement;
    Real x = node.right ? bp - offset : ap + offset;
    if (x <= ap || x >= bp) return std::nullopt;
    return f(x) * half;
  };
  return tanh_sinh(eval, cfg, p);
}

SeriesResult integrate_adaptive(const RealFn& f, const Real& a, Infinity, const PrecisionConfig& cfg) {
  const Precision p = max(cfg.working_precision(), a.precision());
  const Real ap = a.with_precision(p);
  // y in [0,1] with y = (1+x)/2; t = a + y/(1-y), dt = dy/(1-y)^2, dy = dx/2.
  auto eval = [&](const DeNode& node) -> std::optional<Real> {
    Real one_minus_y = node.right ? node.complement / 2 : 1 - node.complement / 2;
    Real y = 1 - one_minus_y;
    if (one_minus_y.is_zero() || y.is_zero()) return std::nullopt;
    Real t = ap + y / one_minus_y;
    if (!t.is_finite()) return std::nullopt;
    Real v = f(t);
    return v / (one_minus_y * one_minus_y) / 2;
  };
  return tanh_sinh(eval, cfg, p);
}

GaussLegendreRule gauss_legendre(int points, Precision p) {
  GaussLegendreRule rule;
  const int n = points;
  rule.nodes.resize(static_cast<size_t>(n), Real(p));
  rule.weights.resize(static_cast<size_t>(n), Real(p));
  const Real eps = ldexp(Real(1, p), -p.bits + 4);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    Real z(std::cos(M_PI * (i + 0.75) / (n + 0.5)), p);
    Real dp(p);
    for (int iter = 0; iter < 100; ++iter) {
      Real p0(1, p), p1 = z;
      for (int k = 2; k <= n; ++k) {
        Real p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      if (n == 1) p0 = Real(1, p);
      dp = n * (z * p1 - p0) / (z * z - 1);
      Real dz = p1 / dp;
      z -= dz;
      if (abs(dz) <= eps) break;
    }
    Real w = 2 / ((1 - z * z) * dp * dp);
    rule.nodes[static_cast<size_t>(i)] = -z;
    rule.nodes[static_cast<size_t>(n - 1 - i)] = z;
    rule.weights[static_cast<size_t>(i)] = w;
    rule.weights[static_cast<size_t>(n - 1 - i)] = w;
  }
  return rule;
}

namespace {

Real gauss_panel(const RealFn& g, const Real& freq, Trig kind, const Real& lo, const Real& hi,
                 const GaussLegendreRule& rule) {
  Real mid = (lo + hi) / 2, half = (hi - lo) / 2;
  Real acc(mid.precision());
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    Real t = mid + half * rule.nodes[i];
    Real w = kind == Trig::kCos ? cos(freq * t) : sin(freq * t);
    acc += rule.weights[i] * g(t) * w;
  }
  return acc * half;
}

}  // namespace

SeriesResult integrate_oscillatory(const RealFn& g, const Real& freq, const Real& a, const PrecisionConfig& cfg,
                                   OscillatoryOptions opts) {
  const Precision p = max(cfg.working_precision(), max(freq.precision(), a.precision()));
  if (!(freq > 0)) throw DomainError("oscillatory integral requires a positive frequency");
  const Real ap = a.with_precision(p);

  Real g_near = abs(g(ap + 10)), g_mid = abs(g(ap + 1000)), g_far = abs(g(ap + 1000000));
  if (g_near.is_zero() && g_mid.is_zero() && g_far.is_zero()) return SeriesResult{Real(p), Real(p), 0, true};
  if (!(g_far < g_mid && g_mid < g_near)) throw DomainError("integrand amplitude does not decay");

  GaussLegendreRule rule = gauss_legendre(opts.gauss_points, p);
  const Real half_period = pi(p) / freq;
  // zeros of cos(freq t): (k + 1/2) pi / freq; of sin(freq t): k pi / freq.
  const Real offset = opts.kind == Trig::kCos ? Real(0.5, p) : Real(p);
  long k0 = (floor(ap / half_period - offset)).to_long() + 1;
  auto zero = [&](long k) { return (Real(k, p) + offset) * half_period; };

  Real head = gauss_panel(g, freq, opts.kind, ap, zero(k0), rule);
  long panels = 1;
  long k = k0;
  const Real near_end = ap + Real(opts.near_field, p);
  while (zero(k + 1) <= near_end) {
    head += gauss_panel(g, freq, opts.kind, zero(k), zero(k + 1), rule);
    ++k;
    ++panels;
  }
  const long first = k;
  auto panel = [&](long j) { return gauss_panel(g, freq, opts.kind, zero(first + j), zero(first + j + 1), rule); };
  SeriesResult tail = sum_alternating_accelerated(panel, cfg, 0);
  if (!tail.converged) throw QuadratureFailure("oscillatory panel sum did not converge");
  return SeriesResult{head + tail.value, tail.err_estimate, panels + tail.terms_used, true};
}

SeriesResult richardson_extrapolate(std::span<const Real> values) {
  if (values.empty()) throw DomainError("richardson_extrapolate needs at least one value");
  const size_t n = values.size();
  std::vector<Real> row(values.begin(), values.end());
  // In-place Neville table: after pass j, row[i] holds T[i][j] for i >= j.
  Real last_change(values[0].precision());
  for (size_t j = 1; j < n; ++j) {
    long factor = (1L << j) - 1;
    for (size_t i = n - 1; i >= j; --i) {
      Real delta = (row[i] - row[i - 1]) / factor;
      if (i == n - 1) last_change = abs(delta);
      row[i] += delta;
      if (i == j) break;
    }
  }
  return SeriesResult{row[n - 1], last_change * kErrorSafetyFactor, static_cast<long>(n), true};
}

}  // namespace zetakit::numeric
