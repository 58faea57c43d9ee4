#include <benchmark/benchmark.h>

#include <vector>

#include "diracwig/infoquant.hpp"
#include "diracwig/specfun.hpp"
#include "diracwig/states.hpp"
#include "diracwig/wigner.hpp"

using namespace diracwig;

namespace {

const PhysParams kBench{1.0, 1.0, 1.0};

void BM_FrakLTable(benchmark::State& state) {
  const int nmax = static_cast<int>(state.range(0));
  const BasisPoint q{0.7, -0.4, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(FrakLTable(nmax, q));
}
BENCHMARK(BM_FrakLTable)->Arg(4)->Arg(16)->Arg(34);

void BM_CatSeriesPoint(benchmark::State& state) {
  const CatSpec spec = CatSpec::with_auto_l(Symmetry::S, static_cast<double>(state.range(0)), kBench);
  const WignerSeries series = cat_wigner_series(spec, 0.8).series;
  const BasisPoint q{1.2, 0.3, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(series(q));
}
BENCHMARK(BM_CatSeriesPoint)->Arg(1)->Arg(5);

void BM_GaussianWigner(benchmark::State& state) {
  const BasisPoint q{0.5, 0.2, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(gaussian_wigner(1, 0.8, q, kBench));
}
BENCHMARK(BM_GaussianWigner);

void BM_InfoReportGaussian(benchmark::State& state) {
  const GaussianSpec g{1, 3, kBench};
  for (auto _ : state) benchmark::DoNotOptimize(info_report(g, 0.6));
}
BENCHMARK(BM_InfoReportGaussian);

void BM_InfoReportCat(benchmark::State& state) {
  const CatSpec spec = CatSpec::with_auto_l(Symmetry::S, 5.0, kBench);
  for (auto _ : state) benchmark::DoNotOptimize(info_report(spec, 0.6));
}
BENCHMARK(BM_InfoReportCat);

void BM_OracleColumn(benchmark::State& state) {
  const GaussianSpec g{1, 1, kBench};
  const SpinorField phi = [g](double s, double t) { return gaussian_eval(g, s, t); };
  std::vector<double> kx;
  for (int i = 0; i < 64; ++i) kx.push_back(-4.0 + i * 0.125);
  for (auto _ : state) benchmark::DoNotOptimize(weyl_oracle_column(phi, 0.8, 0.3, kx));
}
BENCHMARK(BM_OracleColumn)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
