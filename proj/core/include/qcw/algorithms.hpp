#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qcw/oracle.hpp"
#include "qcw/statevector.hpp"

namespace qcw {

// The stages of the query pipeline: prepare, spread register A over all
// labels, correlate register B through the oracle, interfere register A,
// read out.
enum class Stage { kInit, kHadamard1, kManipulation, kHadamard2, kMeasurement };

std::string_view to_string(Stage stage);

struct Step {
    int step_index = 0;
    Stage stage = Stage::kInit;
    std::string description;
    StateVector state;
};

struct StepTrace {
    std::vector<Step> steps;
};

// One full run of the n-qubit query circuit:
//   register A (n qubits) = |0..0>, register B (1 qubit) = |1>,
//   Hadamard on all n+1 qubits, U_f, Hadamard on register A,
//   joint measurement of register A.
// No promise is assumed; the verdict-producing wrappers add that check.
struct CircuitRun {
    StepTrace trace;                        // all five stages, in order
    std::vector<double> label_distribution; // exact register-A Born distribution
    std::uint64_t sampled_label = 0;        // register-A outcome drawn with the seed
    double sampled_probability = 0.0;
};

CircuitRun run_dj_circuit(const BooleanFunction& f, std::uint64_t rng_seed);

struct DeutschResult {
    int outcome_bit = 0;              // 0 = all-zero register-A outcome
    double outcome_probability = 0.0; // exact probability of that outcome event
    FunctionClass verdict = FunctionClass::kConstant;
    std::uint64_t sampled_label = 0;
    StepTrace trace;
};

// The two-qubit instance (f.n == 1): |01> -> HxH -> U_f -> H on qubit a ->
// measure qubit a. Deterministic for every 1-bit f.
DeutschResult deutsch_run(const BooleanFunction& f, std::uint64_t rng_seed);

// n-qubit generalization (Deutsch-Jozsa). Requires f constant or balanced;
// throws promise_violation_error otherwise. The verdict is thresholded on the
// exact all-zero probability, never on the sampled outcome.
DeutschResult pipeline_run(const BooleanFunction& f, std::uint64_t rng_seed);

// One classical query: f(x) by table lookup.
int classical_single_query(const BooleanFunction& f, std::uint64_t x);

}  // namespace qcw
