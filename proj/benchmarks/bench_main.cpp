#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "qcw/density.hpp"
#include "qcw/gates.hpp"
#include "qcw/oracle.hpp"
#include "qcw/random.hpp"
#include "qcw/rng.hpp"
#include "qcw/worlds.hpp"

namespace {

using namespace qcw;

void BM_HadamardLayer(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Prng prng(1);
    const StateVector psi = random_state(n, prng);
    std::vector<int> targets(static_cast<std::size_t>(n));
    std::iota(targets.begin(), targets.end(), 0);
    const GateSpec layer = hadamard_layer(targets);
    for (auto _ : state) {
        benchmark::DoNotOptimize(apply_gate(psi, layer));
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n) * n);
}
BENCHMARK(BM_HadamardLayer)->DenseRange(10, 20, 2);

void BM_SingleQubitGate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Prng prng(2);
    const StateVector psi = random_state(n, prng);
    const GateSpec gate = SingleQubitGate{random_single_qubit_unitary(prng), n / 2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(apply_gate(psi, gate));
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_SingleQubitGate)->DenseRange(10, 20, 2);

void BM_OracleApply(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Prng prng(3);
    const BooleanFunction f = random_function(n, prng);
    const StateVector psi = random_state(n + 1, prng);
    const RegisterLayout layout{n, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(apply_uf(psi, f, layout));
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (n + 1)));
}
BENCHMARK(BM_OracleApply)->DenseRange(8, 18, 2);

void BM_BruteForceOracle(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Prng prng(4);
    const BooleanFunction f = random_function(n, prng);
    const StateVector psi = random_state(n + 1, prng);
    const RegisterLayout layout{n, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force_uf(psi, f, layout));
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (n + 1)));
}
BENCHMARK(BM_BruteForceOracle)->DenseRange(8, 18, 2);

void BM_Decompose(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Prng prng(5);
    const StateVector psi = random_state(n + 1, prng);
    const RegisterLayout layout{n, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose(psi, layout));
    }
}
BENCHMARK(BM_Decompose)->DenseRange(8, 18, 2);

void BM_PartialTrace(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Prng prng(6);
    const DensityMatrix rho = density_from_state(random_state(n, prng));
    const std::vector<int> keep = {0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(partial_trace(rho, keep));
    }
}
BENCHMARK(BM_PartialTrace)->DenseRange(4, 10, 2);

}  // namespace

BENCHMARK_MAIN();
