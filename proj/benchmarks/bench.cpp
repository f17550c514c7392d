#include <benchmark/benchmark.h>

#include "oscloc/experiment.hpp"
#include "oscloc/green.hpp"
#include "oscloc/model.hpp"
#include "oscloc/spectral.hpp"

using namespace oscloc;

namespace {

ModelParams chain(int half_width, int dimension) {
    DisorderSpec spec;
    spec.width = 8.0;
    spec.seed = 3;
    return sample_params(spec, build_lattice(dimension, half_width), 0);
}

void BM_Diagonalize1D(benchmark::State& state) {
    const Eigen::MatrixXd h = assemble_h(chain(static_cast<int>(state.range(0)), 1));
    for (auto _ : state) benchmark::DoNotOptimize(diagonalize(h));
    state.SetComplexityN(h.rows());
}
BENCHMARK(BM_Diagonalize1D)->Arg(25)->Arg(50)->Arg(101)->Arg(200)->Complexity();

void BM_Diagonalize2D(benchmark::State& state) {
    const Eigen::MatrixXd h = assemble_h(chain(static_cast<int>(state.range(0)), 2));
    for (auto _ : state) benchmark::DoNotOptimize(diagonalize(h));
}
BENCHMARK(BM_Diagonalize2D)->Arg(4)->Arg(8)->Arg(12);

void BM_GreenColumn(benchmark::State& state) {
    const Eigen::MatrixXd h = assemble_h(chain(static_cast<int>(state.range(0)), 1));
    for (auto _ : state) benchmark::DoNotOptimize(green_column(h, h.rows() / 2, {2.0, 0.01}));
}
BENCHMARK(BM_GreenColumn)->Arg(50)->Arg(101)->Arg(200);

void BM_OneRealization(benchmark::State& state) {
    ExperimentConfig config;
    config.model.dimension = 1;
    config.model.half_width = 101;
    config.observable.kind = static_cast<ObservableKind>(state.range(0));
    config.observable.exponent = 0.5;
    config.realizations = 1;
    for (auto _ : state) benchmark::DoNotOptimize(run_experiment(config));
    state.SetLabel(to_string(config.observable.kind));
}
BENCHMARK(BM_OneRealization)
    ->Arg(static_cast<int>(ObservableKind::q_correlator))
    ->Arg(static_cast<int>(ObservableKind::weyl_commutator_sup))
    ->Arg(static_cast<int>(ObservableKind::green_moment))
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
