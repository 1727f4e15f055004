#include "qcw/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "qcw/errors.hpp"

namespace qcw {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void apply_single_qubit_inplace(std::vector<Amplitude>& amps, int num_qubits, int target,
                                const Mat2& u) {
    const std::uint64_t mask = std::uint64_t{1} << (num_qubits - 1 - target);
    const std::uint64_t low = mask - 1;
    const std::uint64_t high = ~low;
    const std::uint64_t pairs = std::uint64_t{1} << (num_qubits - 1);
    for (std::uint64_t p = 0; p < pairs; ++p) {
        const std::uint64_t i0 = ((p & high) << 1) | (p & low);
        const std::uint64_t i1 = i0 | mask;
        const Amplitude a0 = amps[i0];
        const Amplitude a1 = amps[i1];
        amps[i0] = u[0] * a0 + u[1] * a1;
        amps[i1] = u[2] * a0 + u[3] * a1;
    }
}

void apply_controlled_inplace(std::vector<Amplitude>& amps, int num_qubits, int control,
                              int target, const Mat2& u) {
    const std::uint64_t cmask = std::uint64_t{1} << (num_qubits - 1 - control);
    const std::uint64_t tmask = std::uint64_t{1} << (num_qubits - 1 - target);
    const std::uint64_t low = tmask - 1;
    const std::uint64_t high = ~low;
    const std::uint64_t pairs = std::uint64_t{1} << (num_qubits - 1);
    for (std::uint64_t p = 0; p < pairs; ++p) {
        const std::uint64_t i0 = ((p & high) << 1) | (p & low);
        if ((i0 & cmask) == 0) {
            continue;
        }
        const std::uint64_t i1 = i0 | tmask;
        const Amplitude a0 = amps[i0];
        const Amplitude a1 = amps[i1];
        amps[i0] = u[0] * a0 + u[1] * a1;
        amps[i1] = u[2] * a0 + u[3] * a1;
    }
}

void check_target(const StateVector& state, int qubit, const char* role) {
    if (qubit < 0 || qubit >= state.num_qubits()) {
        throw std::out_of_range(std::string(role) + " qubit " + std::to_string(qubit) +
                                " out of range for " + std::to_string(state.num_qubits()) +
                                " qubits");
    }
}

void check_unitary_2x2(const Mat2& m) {
    if (!is_unitary(m)) {
        throw std::invalid_argument("gate matrix is not unitary");
    }
}

struct GateApplier {
    const StateVector& state;
    std::vector<Amplitude>& amps;

    void operator()(const SingleQubitGate& g) const {
        check_target(state, g.target, "target");
        check_unitary_2x2(g.matrix);
        apply_single_qubit_inplace(amps, state.num_qubits(), g.target, g.matrix);
    }

    void operator()(const ControlledGate& g) const {
        check_target(state, g.control, "control");
        check_target(state, g.target, "target");
        if (g.control == g.target) {
            throw std::invalid_argument("controlled gate needs distinct control and target");
        }
        check_unitary_2x2(g.matrix);
        apply_controlled_inplace(amps, state.num_qubits(), g.control, g.target, g.matrix);
    }

    void operator()(const HadamardLayer& g) const {
        const Mat2 h = hadamard_matrix();
        for (std::size_t i = 0; i < g.targets.size(); ++i) {
            check_target(state, g.targets[i], "target");
            for (std::size_t j = i + 1; j < g.targets.size(); ++j) {
                if (g.targets[i] == g.targets[j]) {
                    throw std::invalid_argument("Hadamard layer targets must be distinct");
                }
            }
        }
        for (int target : g.targets) {
            apply_single_qubit_inplace(amps, state.num_qubits(), target, h);
        }
    }

    void operator()(const OracleGate& g) const {
        // Delegate to the oracle module; re-wrap the permuted amplitudes.
        StateVector permuted = apply_uf(state, g.f, g.layout);
        amps.assign(permuted.amps().begin(), permuted.amps().end());
    }

    void operator()(const MatrixGate& g) const {
        if (g.num_qubits != state.num_qubits()) {
            throw std::invalid_argument("matrix gate covers " + std::to_string(g.num_qubits) +
                                        " qubits but the state has " +
                                        std::to_string(state.num_qubits()));
        }
        if (g.num_qubits > kMaxMatrixQubits) {
            throw resource_limit_error("matrix gates are capped at " +
                                       std::to_string(kMaxMatrixQubits) + " qubits");
        }
        const std::uint64_t dim = state.dim();
        if (g.matrix.size() != dim * dim) {
            throw std::invalid_argument("matrix gate has wrong dimension");
        }
        if (!is_unitary(g.matrix, dim)) {
            throw std::invalid_argument("gate matrix is not unitary");
        }
        std::vector<Amplitude> out(dim, Amplitude{0.0, 0.0});
        for (std::uint64_t r = 0; r < dim; ++r) {
            Amplitude acc{0.0, 0.0};
            const Amplitude* row = &g.matrix[r * dim];
            for (std::uint64_t c = 0; c < dim; ++c) {
                acc += row[c] * amps[c];
            }
            out[r] = acc;
        }
        amps = std::move(out);
    }
};

}  // namespace

Mat2 hadamard_matrix() {
    return {Amplitude{kInvSqrt2, 0.0}, Amplitude{kInvSqrt2, 0.0}, Amplitude{kInvSqrt2, 0.0},
            Amplitude{-kInvSqrt2, 0.0}};
}

Mat2 pauli_x_matrix() {
    return {Amplitude{0.0, 0.0}, Amplitude{1.0, 0.0}, Amplitude{1.0, 0.0}, Amplitude{0.0, 0.0}};
}

Mat2 pauli_z_matrix() {
    return {Amplitude{1.0, 0.0}, Amplitude{0.0, 0.0}, Amplitude{0.0, 0.0}, Amplitude{-1.0, 0.0}};
}

Mat2 ry_matrix(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return {Amplitude{c, 0.0}, Amplitude{-s, 0.0}, Amplitude{s, 0.0}, Amplitude{c, 0.0}};
}

bool is_unitary(const Mat2& m, double tol) {
    // U^dagger U == I, checked entrywise.
    const Amplitude e00 = std::conj(m[0]) * m[0] + std::conj(m[2]) * m[2];
    const Amplitude e01 = std::conj(m[0]) * m[1] + std::conj(m[2]) * m[3];
    const Amplitude e10 = std::conj(m[1]) * m[0] + std::conj(m[3]) * m[2];
    const Amplitude e11 = std::conj(m[1]) * m[1] + std::conj(m[3]) * m[3];
    return std::abs(e00 - Amplitude{1.0, 0.0}) <= tol && std::abs(e01) <= tol &&
           std::abs(e10) <= tol && std::abs(e11 - Amplitude{1.0, 0.0}) <= tol;
}

bool is_unitary(const std::vector<Amplitude>& m, std::uint64_t dim, double tol) {
    if (m.size() != dim * dim) {
        return false;
    }
    for (std::uint64_t i = 0; i < dim; ++i) {
        for (std::uint64_t j = 0; j < dim; ++j) {
            Amplitude acc{0.0, 0.0};
            for (std::uint64_t k = 0; k < dim; ++k) {
                acc += std::conj(m[k * dim + i]) * m[k * dim + j];
            }
            const Amplitude expected = i == j ? Amplitude{1.0, 0.0} : Amplitude{0.0, 0.0};
            if (std::abs(acc - expected) > tol) {
                return false;
            }
        }
    }
    return true;
}

GateSpec hadamard(int target) { return SingleQubitGate{hadamard_matrix(), target}; }

GateSpec hadamard_layer(std::vector<int> targets) { return HadamardLayer{std::move(targets)}; }

GateSpec identity_gate() {
    return SingleQubitGate{{Amplitude{1.0, 0.0}, Amplitude{0.0, 0.0}, Amplitude{0.0, 0.0},
                            Amplitude{1.0, 0.0}},
                           0};
}

StateVector apply_gate(const StateVector& state, const GateSpec& gate) {
    std::vector<Amplitude> amps(state.amps().begin(), state.amps().end());
    std::visit(GateApplier{state, amps}, gate);
    return StateVector::unchecked(state.num_qubits(), std::move(amps));
}

MatrixGate product_gate(const std::vector<Mat2>& factors) {
    if (factors.empty()) {
        throw std::invalid_argument("product_gate needs at least one factor");
    }
    if (factors.size() > static_cast<std::size_t>(kMaxMatrixQubits)) {
        throw resource_limit_error("matrix gates are capped at " +
                                   std::to_string(kMaxMatrixQubits) + " qubits");
    }
    std::vector<Amplitude> result = {Amplitude{1.0, 0.0}};
    std::uint64_t dim = 1;
    for (const Mat2& f : factors) {
        std::vector<Amplitude> next(4 * dim * dim, Amplitude{0.0, 0.0});
        const std::uint64_t next_dim = 2 * dim;
        for (std::uint64_t i = 0; i < dim; ++i) {
            for (std::uint64_t j = 0; j < dim; ++j) {
                const Amplitude base = result[i * dim + j];
                for (int bi = 0; bi < 2; ++bi) {
                    for (int bj = 0; bj < 2; ++bj) {
                        next[(i * 2 + bi) * next_dim + (j * 2 + bj)] =
                            base * f[static_cast<std::size_t>(bi * 2 + bj)];
                    }
                }
            }
        }
        result = std::move(next);
        dim = next_dim;
    }
    MatrixGate gate;
    gate.num_qubits = static_cast<int>(factors.size());
    gate.matrix = std::move(result);
    return gate;
}

}  // namespace qcw
