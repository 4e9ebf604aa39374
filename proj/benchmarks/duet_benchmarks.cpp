#include <benchmark/benchmark.h>

#include <cmath>

#include <Eigen/Core>

#include "duet/covariance.hpp"
#include "duet/finite_bath.hpp"
#include "duet/gaussian_info.hpp"
#include "duet/spectra.hpp"
#include "duet/witness.hpp"

namespace {

using namespace duet;

// Strongly coupled pair with narrow resonances (gamma = 0.1, tau_c = 0.02).
OscillatorPair bench_pair() { return OscillatorPair::make(1.0, 1.0, 1.0, 1.15 * 1.15, 0.09); }

BathPair bench_baths(double t1, double t2) {
  return {BathSpec::ohm_drude(0.1, 0.02, t1), BathSpec::ohm_drude(0.1, 0.02, t2)};
}

void BM_CrossSpectrum(benchmark::State& state) {
  const OscillatorPair pair = bench_pair();
  const BathPair baths = bench_baths(0.5, 0.25);
  double w = 0.9;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cross_spectrum(pair, baths, w));
    w = w < 1.3 ? w + 1e-4 : 0.9;
  }
}
BENCHMARK(BM_CrossSpectrum);

void BM_StationaryCovariance(benchmark::State& state) {
  const OscillatorPair pair = bench_pair();
  const BathPair baths = bench_baths(0.5, 0.25);
  QuadratureConfig quad;
  quad.rel_tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  std::size_t panels = 0;
  for (auto _ : state) {
    const StationaryCovariance c = stationary_covariance(pair, baths, quad);
    panels = c.panels;
    benchmark::DoNotOptimize(c.matrix);
  }
  state.counters["panels"] = static_cast<double>(panels);
}
BENCHMARK(BM_StationaryCovariance)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_NetHeatCurrent(benchmark::State& state) {
  const OscillatorPair pair = bench_pair();
  const BathPair baths = bench_baths(0.5, 0.25);
  for (auto _ : state) benchmark::DoNotOptimize(net_heat_current(pair, baths, QuadratureConfig{}));
}
BENCHMARK(BM_NetHeatCurrent)->Unit(benchmark::kMicrosecond);

void BM_Williamson(benchmark::State& state) {
  Eigen::Matrix4d c = Eigen::Matrix4d::Identity() * 0.8;
  c(0, 2) = c(2, 0) = 0.3;
  c(1, 3) = c(3, 1) = -0.3;
  for (auto _ : state) benchmark::DoNotOptimize(williamson(c));
}
BENCHMARK(BM_Williamson);

void BM_EntanglementMeasures(benchmark::State& state) {
  const Eigen::Matrix4d c = stationary_covariance(bench_pair(), bench_baths(0.1, 0.15), QuadratureConfig{}).matrix;
  for (auto _ : state) {
    benchmark::DoNotOptimize(logarithmic_negativity(c));
    benchmark::DoNotOptimize(epr_pair(c));
    benchmark::DoNotOptimize(entropies(c));
  }
}
BENCHMARK(BM_EntanglementMeasures);

void BM_WitnessSpectra(benchmark::State& state) {
  const OscillatorPair pair = bench_pair();
  const BathPair baths = bench_baths(0.5, 0.25);
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimal_quadrature_spectra(pair, baths, 1.1, Sector::position));
    benchmark::DoNotOptimize(reference_spectra_T0(pair, baths, 1.1, Sector::position));
  }
}
BENCHMARK(BM_WitnessSpectra);

// Finite-bath model with a slow bath (tau_c = 0.5) so that small N is valid.
FiniteBathModel oracle_model(std::size_t n) {
  const OscillatorPair pair = OscillatorPair::make(1.0, 1.0, 1.0, 1.0, 0.36);
  const BathPair baths{BathSpec::ohm_drude(0.25, 0.5, 0.3), BathSpec::ohm_drude(0.217, 0.5, 0.1)};
  FiniteBathOptions o;
  o.n1 = o.n2 = n;
  return FiniteBathModel::build(pair, baths, o);
}

void BM_FiniteBathBuild(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_model(n));
}
BENCHMARK(BM_FiniteBathBuild)->Arg(400)->Arg(800)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_FiniteBathSystemCovariance(benchmark::State& state) {
  const FiniteBathModel model = oracle_model(static_cast<std::size_t>(state.range(0)));
  const double t = 0.25 * model.time_guard();
  for (auto _ : state) benchmark::DoNotOptimize(model.system_covariance(t));
}
BENCHMARK(BM_FiniteBathSystemCovariance)->Arg(400)->Arg(800)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
