#include <benchmark/benchmark.h>

#include "gclab/channel.hpp"
#include "gclab/covariance.hpp"
#include "gclab/entanglement.hpp"
#include "gclab/evolution.hpp"
#include "gclab/measures.hpp"

using namespace gclab;

namespace {

const ChannelSpec kSqueezed{Bath::from_phenomenological(0.5, 1.0, 0.0), Bath::from_phenomenological(0.5, 1.0, 0.3),
                            1.0};
const StandardForm kState{2, 1, 1, -1};

void BM_Evolve(benchmark::State& state) {
  const CovarianceMatrix s0 = kState.matrix();
  const CovarianceMatrix inf = asymptotic_covariance(kSqueezed);
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve(s0, inf, 1.0, t));
    t = t > 3.0 ? 0.0 : t + 1e-3;
  }
}
BENCHMARK(BM_Evolve);

void BM_SymplecticSpectrum(benchmark::State& state) {
  const CovarianceMatrix s = kState.matrix();
  for (auto _ : state) benchmark::DoNotOptimize(symplectic_spectrum(s));
}
BENCHMARK(BM_SymplecticSpectrum);

void BM_TimeSeries(benchmark::State& state) {
  const EvolutionProblem problem{kState, kSqueezed, linear_grid(3.0, static_cast<std::size_t>(state.range(0)))};
  for (auto _ : state) benchmark::DoNotOptimize(time_series(problem));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TimeSeries)->Arg(301)->Arg(3001);

void BM_InvariantPolynomials(benchmark::State& state) {
  const ChannelSpec ch{Bath::from_phenomenological(0.5, 1.0, 0.0), Bath::from_phenomenological(0.5, 1.0, 0.3), 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(separability_quartic(invariant_polynomials(kState, ch)));
}
BENCHMARK(BM_InvariantPolynomials);

void BM_EntanglementTime(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(entanglement_time(kState, kSqueezed));
}
BENCHMARK(BM_EntanglementTime);

void BM_EntanglementTimeNever(benchmark::State& state) {
  const StandardForm tmsv = squeezed_thermal_state(1.0, 1.0);
  const ChannelSpec vacuum{Bath::vacuum(), Bath::vacuum(), 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(entanglement_time(tmsv, vacuum));
}
BENCHMARK(BM_EntanglementTimeNever);

}  // namespace
BENCHMARK_MAIN();
