#pragma once

#include <span>
#include <vector>

#include "qcw/density.hpp"
#include "qcw/gates.hpp"
#include "qcw/statevector.hpp"

namespace qcw {

// Largest register for which storage_retrieval_bound runs its battery
// (bounded by the dense-unitary and eigensolver scale).
inline constexpr int kMaxStorageBoundQubits = 8;

// Probabilistic mixture of pure states, e.g. the record of a preparation
// procedure. Probabilities are non-negative and sum to 1.
struct EnsembleMember {
    double probability = 0.0;
    StateVector state;
};

struct Ensemble {
    std::vector<EnsembleMember> members;
};

// Entropy pair in bits; bound_satisfied records Shannon >= von Neumann up to
// a 1e-9 slack.
struct EntropyReport {
    double shannon_bits = 0.0;
    double von_neumann_bits = 0.0;
    bool bound_satisfied = false;
};

// -sum p log2 p with 0 log 0 = 0. The distribution must be non-negative and
// sum to 1 within 1e-9.
double shannon_entropy(std::span<const double> dist);

// Ascending eigenvalues of a Hermitian density matrix.
std::vector<double> hermitian_eigenvalues(const DensityMatrix& rho);

// -sum lambda log2 lambda over the spectrum; eigenvalues in [-1e-10, 0] are
// clipped to 0, anything more negative is rejected.
double von_neumann_entropy(const DensityMatrix& rho);

// Shannon entropy of the preparation probabilities vs the von Neumann entropy
// of the prepared mixture sum_i p_i |psi_i><psi_i|.
EntropyReport preparation_entropy(const Ensemble& ensemble);

// Shannon entropy of the outcome distribution of measuring every qubit after
// rotating by `basis`, vs the von Neumann entropy of the measured state
// (zero: state vectors are pure).
EntropyReport measurement_entropy(const StateVector& state, const GateSpec& basis);

struct StorageBoundReport {
    int n_qubits = 0;
    double max_retrievable_bits = 0.0;
    bool within_bound = false;  // no battery member exceeded n_qubits bits
};

// Runs the measurement-entropy battery for an n-qubit register: every
// computational basis state, the uniform superposition, and 100 seeded random
// pure states paired with random product measurement bases. The maximum
// retrievable information is n bits (attained by the uniform state).
StorageBoundReport storage_retrieval_bound(int n_qubits);

}  // namespace qcw
