#include "qcw/random.hpp"

#include <cmath>
#include <stdexcept>

namespace qcw {

StateVector random_state(int num_qubits, Prng& prng) {
    if (num_qubits < 1) {
        throw std::invalid_argument("random_state needs at least one qubit");
    }
    std::vector<Amplitude> amps(std::uint64_t{1} << num_qubits);
    double total = 0.0;
    for (Amplitude& a : amps) {
        a = Amplitude{prng.gaussian(), prng.gaussian()};
        total += std::norm(a);
    }
    const double scale = 1.0 / std::sqrt(total);
    for (Amplitude& a : amps) {
        a *= scale;
    }
    return StateVector::unchecked(num_qubits, std::move(amps));
}

std::vector<Amplitude> random_unitary(std::uint64_t dim, Prng& prng) {
    if (dim == 0) {
        throw std::invalid_argument("random_unitary needs dim >= 1");
    }
    // Columns of a Ginibre matrix, orthonormalized by modified Gram-Schmidt
    // with one re-orthogonalization pass.
    std::vector<std::vector<Amplitude>> cols(dim, std::vector<Amplitude>(dim));
    for (auto& col : cols) {
        for (Amplitude& entry : col) {
            entry = Amplitude{prng.gaussian(), prng.gaussian()};
        }
    }
    for (std::uint64_t c = 0; c < dim; ++c) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::uint64_t prev = 0; prev < c; ++prev) {
                Amplitude overlap{0.0, 0.0};
                for (std::uint64_t r = 0; r < dim; ++r) {
                    overlap += std::conj(cols[prev][r]) * cols[c][r];
                }
                for (std::uint64_t r = 0; r < dim; ++r) {
                    cols[c][r] -= overlap * cols[prev][r];
                }
            }
        }
        double nrm = 0.0;
        for (const Amplitude& entry : cols[c]) {
            nrm += std::norm(entry);
        }
        const double scale = 1.0 / std::sqrt(nrm);
        for (Amplitude& entry : cols[c]) {
            entry *= scale;
        }
    }
    std::vector<Amplitude> u(dim * dim);
    for (std::uint64_t r = 0; r < dim; ++r) {
        for (std::uint64_t c = 0; c < dim; ++c) {
            u[r * dim + c] = cols[c][r];
        }
    }
    return u;
}

Mat2 random_single_qubit_unitary(Prng& prng) {
    const std::vector<Amplitude> u = random_unitary(2, prng);
    return {u[0], u[1], u[2], u[3]};
}

}  // namespace qcw
