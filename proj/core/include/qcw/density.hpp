#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qcw/statevector.hpp"

namespace qcw {

// Largest qubit count for which a dense 2^n x 2^n density matrix is built.
inline constexpr int kMaxDensityQubits = 10;

// Dense Hermitian trace-1 operator, row-major over the computational basis.
// Same bit convention as StateVector (qubit 0 = most significant index bit).
class DensityMatrix {
public:
    // Validates dimensions, finiteness, Hermiticity (1e-12) and unit trace
    // (1e-12). Positivity is not checked here; eigenvalue consumers enforce
    // their own floor.
    DensityMatrix(int num_qubits, std::vector<Amplitude> entries);

    static DensityMatrix unchecked(int num_qubits, std::vector<Amplitude> entries);

    int num_qubits() const { return num_qubits_; }
    std::uint64_t dim() const { return std::uint64_t{1} << num_qubits_; }

    const Amplitude& operator()(std::uint64_t row, std::uint64_t col) const {
        return entries_[row * dim() + col];
    }
    Amplitude& operator()(std::uint64_t row, std::uint64_t col) {
        return entries_[row * dim() + col];
    }

    std::span<const Amplitude> entries() const { return entries_; }

    double trace_real() const;
    bool is_hermitian(double tol = kAlgebraTolerance) const;

private:
    DensityMatrix() = default;

    int num_qubits_ = 0;
    std::vector<Amplitude> entries_;
};

// Rank-1 projector |state><state|.
DensityMatrix density_from_state(const StateVector& state);

// Partial trace keeping the listed qubits (result qubit order: kept qubits
// sorted by original index, most significant first).
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

// Re tr(rho^2); 1 for pure states.
double purity(const DensityMatrix& rho);

}  // namespace qcw
