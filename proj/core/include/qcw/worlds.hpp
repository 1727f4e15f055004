#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcw/algorithms.hpp"
#include "qcw/gates.hpp"
#include "qcw/statevector.hpp"

namespace qcw {

// Default squared-norm cutoff below which a labeled component is not counted
// as a world. Any sub-measurement-precision value works; this one sits well
// below every tolerance used by the contracts.
inline constexpr double kDefaultWorldThreshold = 1e-10;

// One computational world: a register-A label, the squared norm of the
// component carrying it, and the normalized register-B relative state. Any
// phase of the component is folded into the relative state, so weights are
// exactly the Born probabilities of the labels.
struct World {
    std::string label;  // n_a characters, qubit 0 first
    double weight = 0.0;
    StateVector relative_state;
};

struct WorldDecomposition {
    RegisterLayout layout;
    std::vector<World> worlds;  // sorted by label
    double residual = 0.0;      // total squared norm of below-threshold labels

    int world_count() const { return static_cast<int>(worlds.size()); }
};

// Splits a state into labeled worlds with respect to the layout. A label
// enters iff its squared norm exceeds the threshold (0 < threshold < 1).
WorldDecomposition decompose(const StateVector& state, const RegisterLayout& layout,
                             double threshold = kDefaultWorldThreshold);

// The full-space vector |label> (x) |relative_state| of one world.
StateVector world_vector(const World& world, const RegisterLayout& layout);

// Recombines sqrt(weight) * |label> (x) |relative>, renormalized. With a
// small residual this reproduces the decomposed state to high fidelity.
StateVector reconstruct(const WorldDecomposition& decomp);

// Builds |0..0>_A |0>_B on n+1 qubits, applies the opening Hadamard layer to
// register A only, and returns the world count of the result (2^n by
// construction, all weights 2^-n).
int world_count_after_hadamard1(int n);

// Row-stochastic grid of label-subspace mass transfer under a prospective
// gate: mass[i][j] is the squared norm of the part of (U * world_i) lying in
// world_j's label subspace. Rows and columns run over the decomposition's own
// labels; when those labels cover the full support reachable under U (true
// whenever the decomposition covers every populated label), each row sums
// to 1 by unitarity.
struct InterferenceMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> mass;

    double max_offdiagonal() const;
    // A gate is world-diagonal when no world leaks measurable mass into
    // another world's label subspace.
    bool world_diagonal(double tol = kPipelineTolerance) const;
};

InterferenceMatrix interference_matrix(const WorldDecomposition& decomp,
                                       const GateSpec& next_gate);

enum class EventKind { kSplit, kMerge, kStable };

std::string_view to_string(EventKind kind);

struct WorldEvent {
    int step_index = 0;  // trace step at which the new count holds
    EventKind kind = EventKind::kStable;
    int count_before = 0;
    int count_after = 0;
};

struct WorldStep {
    int step_index = 0;
    Stage stage = Stage::kInit;
    std::string description;
    WorldDecomposition decomposition;

    int world_count() const { return decomposition.world_count(); }
};

// World structure across an algorithm trace: one decomposition per step and
// one event per consecutive step pair (split when the count grows, merge when
// it shrinks, stable otherwise). World identity across steps is by label
// bitstring.
struct WorldTrace {
    std::vector<WorldStep> per_step;
    std::vector<WorldEvent> events;
};

WorldTrace track(const StepTrace& trace, const RegisterLayout& layout,
                 double threshold = kDefaultWorldThreshold);

// Information accounting over a trace (entropies in bits):
//   worlds_max                largest world count over the steps
//   bits_per_world            register-B payload carried in each world
//   classical_bits_to_describe  2^(total qubits), the classical description cost
//   retrievable_bits          Shannon entropy of the register-A outcome
//                             distribution at the last pre-measurement step
struct InformationAudit {
    int worlds_max = 0;
    int bits_per_world = 0;
    std::int64_t classical_bits_to_describe = 0;
    double retrievable_bits = 0.0;
};

InformationAudit audit_information(const StepTrace& trace, const RegisterLayout& layout);

}  // namespace qcw
