#include "qcw/algorithms.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "qcw/errors.hpp"
#include "qcw/gates.hpp"
#include "qcw/rng.hpp"

namespace qcw {

std::string_view to_string(Stage stage) {
    switch (stage) {
        case Stage::kInit: return "init";
        case Stage::kHadamard1: return "hadamard1";
        case Stage::kManipulation: return "manipulation";
        case Stage::kHadamard2: return "hadamard2";
        case Stage::kMeasurement: return "measurement";
    }
    return "unknown";
}

CircuitRun run_dj_circuit(const BooleanFunction& f, std::uint64_t rng_seed) {
    if (f.n < 1) {
        throw std::invalid_argument("query circuit needs n >= 1 input bits");
    }
    if (f.table.size() != (std::uint64_t{1} << f.n)) {
        throw std::invalid_argument("truth table size does not match 2^n");
    }
    const int n = f.n;
    const RegisterLayout layout{n, 1};

    std::vector<int> all_qubits(static_cast<std::size_t>(n) + 1);
    std::iota(all_qubits.begin(), all_qubits.end(), 0);
    std::vector<int> register_a(all_qubits.begin(), all_qubits.end() - 1);

    CircuitRun run;
    auto record = [&run](Stage stage, std::string description, StateVector state) {
        run.trace.steps.push_back(Step{static_cast<int>(run.trace.steps.size()), stage,
                                       std::move(description), std::move(state)});
    };

    // Register B (least significant bit) starts in |1>.
    StateVector state = basis_state(n + 1, 1);
    record(Stage::kInit, "prepare |0..0>_a |1>_b", state);

    state = apply_gate(state, hadamard_layer(all_qubits));
    record(Stage::kHadamard1, "Hadamard on every qubit", state);

    state = apply_uf(state, f, layout);
    record(Stage::kManipulation, "oracle U_f", state);

    state = apply_gate(state, hadamard_layer(register_a));
    record(Stage::kHadamard2, "Hadamard on register A", state);

    run.label_distribution = outcome_distribution(state, register_a);

    // Sample one register-A outcome; the verdict itself never depends on it.
    Prng prng(rng_seed);
    const double u = prng.uniform();
    double cumulative = 0.0;
    std::uint64_t sampled = run.label_distribution.size() - 1;
    for (std::uint64_t label = 0; label < run.label_distribution.size(); ++label) {
        cumulative += run.label_distribution[label];
        if (u < cumulative) {
            sampled = label;
            break;
        }
    }
    run.sampled_label = sampled;
    run.sampled_probability = run.label_distribution[sampled];

    state = project(state, register_a, sampled);
    record(Stage::kMeasurement, "measure register A", state);
    return run;
}

namespace {

DeutschResult result_from_run(CircuitRun run) {
    const double p_zero = run.label_distribution[0];

    DeutschResult result;
    result.outcome_bit = p_zero > 0.5 ? 0 : 1;
    result.outcome_probability = result.outcome_bit == 0 ? p_zero : 1.0 - p_zero;
    result.verdict =
        result.outcome_bit == 0 ? FunctionClass::kConstant : FunctionClass::kBalanced;
    result.sampled_label = run.sampled_label;
    result.trace = std::move(run.trace);
    return result;
}

}  // namespace

DeutschResult deutsch_run(const BooleanFunction& f, std::uint64_t rng_seed) {
    if (f.n != 1) {
        throw std::invalid_argument("deutsch_run requires a 1-bit function");
    }
    return result_from_run(run_dj_circuit(f, rng_seed));
}

DeutschResult pipeline_run(const BooleanFunction& f, std::uint64_t rng_seed) {
    if (classify(f) == FunctionClass::kNeither) {
        throw promise_violation_error(
            "function is neither constant nor balanced; the promise is violated");
    }
    return result_from_run(run_dj_circuit(f, rng_seed));
}

int classical_single_query(const BooleanFunction& f, std::uint64_t x) {
    if (x >= f.table.size()) {
        throw std::out_of_range("query input " + std::to_string(x) +
                                " out of range for n = " + std::to_string(f.n));
    }
    return f.table[x];
}

}  // namespace qcw
