#include "occwalk/analysis.hpp"
#include "occwalk/classical.hpp"
#include "occwalk/generators.hpp"
#include "occwalk/quantum.hpp"

#include <benchmark/benchmark.h>

using namespace occwalk;

namespace {

Graph ba(std::int64_t n) { return barabasi_albert({static_cast<std::size_t>(n), 2, 1}); }

void BM_BarabasiAlbert(benchmark::State& state) {
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(barabasi_albert({static_cast<std::size_t>(state.range(0)), 2, seed++}));
}
BENCHMARK(BM_BarabasiAlbert)->Arg(100)->Arg(1000);

void BM_SpectralLongTimeMean(benchmark::State& state) {
    const Graph g = ba(state.range(0));
    const DenseMatrix h = quantum_hamiltonian(g);
    const QuantumState psi0 = initial_state(g, InitialState::uniform());
    for (auto _ : state) benchmark::DoNotOptimize(long_time_mean(h, psi0));
}
BENCHMARK(BM_SpectralLongTimeMean)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_LeapfrogMean(benchmark::State& state) {
    const Graph g = ba(state.range(0));
    const DenseMatrix h = quantum_hamiltonian(g);
    const QuantumState psi0 = initial_state(g, InitialState::uniform());
    const IntegrationConfig cfg{0.01, 100.0, 1e-3};
    for (auto _ : state) benchmark::DoNotOptimize(long_time_mean_numeric(h, psi0, cfg));
}
BENCHMARK(BM_LeapfrogMean)->Arg(25)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_EulerToStationarity(benchmark::State& state) {
    const Graph g = ba(state.range(0));
    const GeneratorMatrix h = generator_matrix(g, GeneratorKind::Normalized);
    IntegrationConfig cfg = default_euler_config(h);
    cfg.horizon = 1e5;
    for (auto _ : state) benchmark::DoNotOptimize(euler_evolve(h, point_mass(g, 0), cfg));
}
BENCHMARK(BM_EulerToStationarity)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_FullReport(benchmark::State& state) {
    const Graph g = ba(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(full_report(g));
}
BENCHMARK(BM_FullReport)->Arg(101)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
