#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "qcw/density.hpp"
#include "qcw/statevector.hpp"

namespace qcw {

// Defaults for branch classification: off-diagonal magnitude below the
// threshold counts as decohered; the stability window is the last quarter of
// the series. Both are artifact choices, configurable at every call site.
inline constexpr double kDefaultBranchThreshold = 1e-6;

// Environment of env_qubits ancillas, each coupled to the system by a
// controlled rotation of its own angle once per step. Environment qubit k is
// controlled by system qubit (k mod system size), so every env qubit records
// which decoherence-basis component it sits in.
struct EnvironmentModel {
    int env_qubits = 0;
    std::vector<double> coupling_angles;  // radians, one per environment qubit
    std::uint64_t rng_seed = 0;
};

// Angles drawn uniformly from [0, pi) with the given seed.
EnvironmentModel random_environment(int env_qubits, std::uint64_t seed);

// Dyadic ladder pi, pi/2, pi/4, ...: a measurement-strength first qubit plus
// progressively slower monitors. Coherence revivals of the k-qubit ladder
// only occur at multiples of 2^k steps, so it demonstrates branch formation
// over any shorter horizon.
EnvironmentModel ladder_environment(int env_qubits);

// Phenomenological dephasing channel: each step multiplies every off-diagonal
// entry (computational basis) by e^(-gamma) and leaves the diagonal alone.
// Returns the state after 1..steps applications.
std::vector<DensityMatrix> dephase(const DensityMatrix& rho, double gamma, int steps);

struct EnvironmentStep {
    StateVector joint;      // pure system (x) environment state
    DensityMatrix reduced;  // environment traced out
};

// Mechanistic model: the environment starts in |0..0>, each step applies the
// controlled coupling rotations, and the system's reduced density matrix is
// recorded. Returns the state after 1..steps applications.
std::vector<EnvironmentStep> entangle_environment(const StateVector& system,
                                                  const EnvironmentModel& env, int steps);

// Largest off-diagonal magnitude of the reduced state in the decoherence
// (computational) basis.
double max_offdiagonal(const DensityMatrix& rho);

struct CoherenceSample {
    int t = 0;  // step number, starting at 1
    double offdiag_norm = 0.0;
};

struct CoherenceSeries {
    std::vector<CoherenceSample> samples;
};

CoherenceSeries coherence_series(const std::vector<EnvironmentStep>& steps);
CoherenceSeries coherence_series(const std::vector<DensityMatrix>& states);

// branch: interference stayed below threshold through the whole final window.
// world_point_in_time: interference dipped below threshold at some sample but
// did not stay there (e.g. finite-environment recurrence).
// coherent: never dropped below threshold.
enum class BranchClass { kBranch, kWorldPointInTime, kCoherent };

std::string_view to_string(BranchClass c);

struct BranchReport {
    BranchClass classification = BranchClass::kCoherent;
    CoherenceSeries series;
    double threshold = kDefaultBranchThreshold;
    int window = 0;
};

BranchReport branch_stability(const CoherenceSeries& series, double threshold, int window);

// Window defaulted to the last quarter of the series (at least one sample).
BranchReport branch_stability(const CoherenceSeries& series,
                              double threshold = kDefaultBranchThreshold);

// The two-qubit surrogate of a micro-system entangled with a macro-outcome:
// (|00> + |11>)/sqrt(2), qubit 0 the micro-system, qubit 1 the cat.
StateVector cat_state();

}  // namespace qcw
