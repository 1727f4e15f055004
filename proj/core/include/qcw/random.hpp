#pragma once

#include <vector>

#include "qcw/gates.hpp"
#include "qcw/rng.hpp"
#include "qcw/statevector.hpp"

namespace qcw {

// Haar-like random pure state: i.i.d. complex Gaussian amplitudes, normalized.
StateVector random_state(int num_qubits, Prng& prng);

// Random dim x dim unitary from Gram-Schmidt on a complex Gaussian matrix.
std::vector<Amplitude> random_unitary(std::uint64_t dim, Prng& prng);

// Random single-qubit unitary.
Mat2 random_single_qubit_unitary(Prng& prng);

}  // namespace qcw
