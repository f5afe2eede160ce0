#include <benchmark/benchmark.h>

#include <vector>

#include "zetakit/gamma_funcs.hpp"
#include "zetakit/hurwitz.hpp"
#include "zetakit/numeric.hpp"
#include "zetakit/stieltjes.hpp"

using namespace zetakit;

namespace {

void BM_ZetaHasse(benchmark::State& state) {
  const auto cfg = config_for_digits(state.range(0));
  const Precision p = cfg.working_precision();
  const hurwitz::ZetaPoint pt{Real::parse("0.5", p), Real::parse("0.3", p), 0};
  for (auto _ : state) benchmark::DoNotOptimize(hurwitz::zeta_hasse(pt, cfg));
}
BENCHMARK(BM_ZetaHasse)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_StieltjesHasse(benchmark::State& state) {
  const auto cfg = config_for_digits(30);
  const Real x(1, cfg.working_precision());
  for (auto _ : state) {
    benchmark::DoNotOptimize(stieltjes::stieltjes_gamma({state.range(0), x, stieltjes::Method::kHasse, cfg, 64}));
  }
}
BENCHMARK(BM_StieltjesHasse)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_StieltjesBell(benchmark::State& state) {
  const auto cfg = config_for_digits(30);
  const Real x = Real::parse("1.5", cfg.working_precision());
  for (auto _ : state) {
    benchmark::DoNotOptimize(stieltjes::stieltjes_gamma({state.range(0), x, stieltjes::Method::kBell, cfg, 64}));
  }
}
BENCHMARK(BM_StieltjesBell)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_TrigAveraged(benchmark::State& state) {
  const auto cfg = config_for_digits(30);
  const Precision p = cfg.working_precision();
  const Real x = Real::parse("0.25", p);
  const numeric::TermFn coeff = [p](long n) { return log(Real(n, p)) / n; };
  for (auto _ : state) benchmark::DoNotOptimize(numeric::sum_trig_averaged(coeff, numeric::Trig::kSin, x, cfg.relaxed_to(1e-12)));
}
BENCHMARK(BM_TrigAveraged)->Unit(benchmark::kMillisecond);

void BM_CvzSum(benchmark::State& state) {
  const Precision p = precision_for_digits(40, 64);
  std::vector<Real> a;
  for (long k = 0; k < state.range(0); ++k) a.push_back(1 / Real(k + 1, p));
  for (auto _ : state) benchmark::DoNotOptimize(numeric::cvz_sum(a));
}
BENCHMARK(BM_CvzSum)->Arg(64)->Arg(256);

void BM_LogGamma(benchmark::State& state) {
  const auto cfg = config_for_digits(state.range(0));
  const Real x = Real::parse("0.3", cfg.working_precision());
  for (auto _ : state) benchmark::DoNotOptimize(gamma::log_gamma(x, cfg));
}
BENCHMARK(BM_LogGamma)->Arg(20)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
