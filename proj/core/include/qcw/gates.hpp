#pragma once

#include <array>
#include <variant>
#include <vector>

#include "qcw/oracle.hpp"
#include "qcw/statevector.hpp"

namespace qcw {

// Row-major 2x2 complex matrix: {m00, m01, m10, m11}.
using Mat2 = std::array<Amplitude, 4>;

// Largest qubit count for explicitly materialized unitaries.
inline constexpr int kMaxMatrixQubits = 8;

Mat2 hadamard_matrix();
Mat2 pauli_x_matrix();
Mat2 pauli_z_matrix();
// exp(-i theta Y / 2); real rotation with <0|Ry|0> = cos(theta/2).
Mat2 ry_matrix(double theta);

bool is_unitary(const Mat2& m, double tol = kAlgebraTolerance);
// Dense dim x dim row-major unitarity check.
bool is_unitary(const std::vector<Amplitude>& m, std::uint64_t dim,
                double tol = kAlgebraTolerance);

struct SingleQubitGate {
    Mat2 matrix;
    int target = 0;
};

struct ControlledGate {
    Mat2 matrix;
    int control = 0;
    int target = 1;
};

// Hadamard on every listed qubit (applied as independent strides).
struct HadamardLayer {
    std::vector<int> targets;
};

// The oracle unitary U_f as a gate (see oracle.hpp for the contract).
struct OracleGate {
    BooleanFunction f;
    RegisterLayout layout;
};

// Explicit unitary on the whole state; capped at kMaxMatrixQubits.
struct MatrixGate {
    int num_qubits = 0;
    std::vector<Amplitude> matrix;  // row-major, dim = 2^num_qubits
};

using GateSpec =
    std::variant<SingleQubitGate, ControlledGate, HadamardLayer, OracleGate, MatrixGate>;

GateSpec hadamard(int target);
GateSpec hadamard_layer(std::vector<int> targets);
// Identity as a gate (used when a measurement basis is the computational one).
GateSpec identity_gate();

// U * state. Norm-preserving; the input is untouched. Throws on invalid
// targets or a matrix that fails the unitarity check.
StateVector apply_gate(const StateVector& state, const GateSpec& gate);

// Kronecker product of per-qubit 2x2 matrices (factors[0] acts on qubit 0,
// the most significant index bit), materialized as a MatrixGate.
MatrixGate product_gate(const std::vector<Mat2>& factors);

}  // namespace qcw
