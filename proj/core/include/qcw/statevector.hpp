#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qcw {

using Amplitude = std::complex<double>;

// Largest state the dense representation will allocate (2^24 amplitudes).
inline constexpr int kMaxQubits = 24;

// Tolerance for algebraic identities (norms, unitarity, Hermiticity).
inline constexpr double kAlgebraTolerance = 1e-12;

// Tolerance for quantities accumulated across multi-gate pipelines.
inline constexpr double kPipelineTolerance = 1e-10;

// Dense unit-norm amplitude vector over the 2^n computational basis states.
//
// Bit convention, used everywhere in the library: qubit 0 is the
// most-significant bit of the basis index. For an n-qubit state, qubit q
// addresses bit position (n - 1 - q) of the index.
//
// All operations on states are value-semantic: they leave their inputs
// untouched and return fresh vectors.
class StateVector {
public:
    // The trivial 0-qubit state (single amplitude 1). Zero-qubit states are
    // the relative states of worlds whose layout has an empty register B.
    StateVector() : amps_{Amplitude{1.0, 0.0}} {}

    // Validates the amplitude count (2^num_qubits), finiteness of every
    // entry, and unit norm.
    StateVector(int num_qubits, std::vector<Amplitude> amps);

    // Construction that skips validation, for kernels whose algebra already
    // guarantees the invariants (gate application, renormalized projections).
    static StateVector unchecked(int num_qubits, std::vector<Amplitude> amps);

    int num_qubits() const { return num_qubits_; }
    std::uint64_t dim() const { return static_cast<std::uint64_t>(amps_.size()); }

    std::span<const Amplitude> amps() const { return amps_; }
    std::span<Amplitude> mutable_amps() { return amps_; }

    const Amplitude& operator[](std::uint64_t index) const { return amps_[index]; }

    double squared_norm() const;
    double norm() const;

    // Index mask selecting the given qubit (qubit 0 = most significant bit).
    std::uint64_t qubit_mask(int qubit) const;

private:
    int num_qubits_ = 0;
    std::vector<Amplitude> amps_;
};

// |0...0>. Requires 1 <= num_qubits <= kMaxQubits.
StateVector zero_state(int num_qubits);

// Basis state |index>. Requires 0 <= index < 2^num_qubits.
StateVector basis_state(int num_qubits, std::uint64_t index);

// <a|b>, conjugate-linear in a. Throws on dimension mismatch.
Amplitude inner_product(const StateVector& a, const StateVector& b);

// |<a|b>|; equality of states up to global phase means fidelity 1.
double fidelity(const StateVector& a, const StateVector& b);

// Exact Born distribution of jointly measuring the listed qubits. The first
// listed qubit is the most significant bit of the outcome index. Qubits must
// be distinct, valid, and non-empty; the result sums to 1.
std::vector<double> outcome_distribution(const StateVector& state, std::span<const int> qubits);

// Renormalized projection of the state onto the given joint outcome of the
// listed qubits. Throws std::domain_error if the outcome has zero probability.
StateVector project(const StateVector& state, std::span<const int> qubits, std::uint64_t outcome);

struct MeasurementRecord {
    int qubit = 0;
    int outcome = 0;
    double probability = 0.0;  // Born probability of the sampled outcome
    StateVector post_state;
};

// Samples one projective measurement of a single qubit using the seeded
// generator; the record carries the exact Born probability of the sampled
// outcome and the renormalized post-measurement state.
MeasurementRecord measure_qubit(const StateVector& state, int qubit, std::uint64_t rng_seed);

// Split of the qubits into register A (world labels, the n_a most-significant
// index bits, i.e. qubits 0..n_a-1) and register B (the remaining n_b bits).
struct RegisterLayout {
    int n_a = 0;
    int n_b = 0;

    int total() const { return n_a + n_b; }

    // Throws unless n_a >= 1, n_b >= 0 and n_a + n_b matches the state.
    void validate_for(const StateVector& state) const;

    std::uint64_t label_of(std::uint64_t basis_index) const {
        return basis_index >> n_b;
    }
    std::uint64_t b_index_of(std::uint64_t basis_index) const {
        return basis_index & ((std::uint64_t{1} << n_b) - 1);
    }

    // Label as an n_a-character bitstring, qubit 0 first.
    std::string label_bits(std::uint64_t label) const;
};

}  // namespace qcw
