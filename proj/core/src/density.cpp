#include "qcw/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qcw/errors.hpp"

namespace qcw {

namespace {

void check_density_qubits(int num_qubits) {
    if (num_qubits < 0) {
        throw std::invalid_argument("density matrix needs a non-negative qubit count");
    }
    if (num_qubits > kMaxDensityQubits) {
        throw resource_limit_error("dense density matrices are capped at " +
                                   std::to_string(kMaxDensityQubits) + " qubits");
    }
}

}  // namespace

DensityMatrix::DensityMatrix(int num_qubits, std::vector<Amplitude> entries)
    : num_qubits_(num_qubits), entries_(std::move(entries)) {
    check_density_qubits(num_qubits_);
    const std::uint64_t d = dim();
    if (entries_.size() != d * d) {
        throw std::invalid_argument("density matrix entry count does not match dim^2");
    }
    for (const Amplitude& e : entries_) {
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
            throw std::invalid_argument("density matrix contains a non-finite entry");
        }
    }
    if (!is_hermitian()) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    if (std::abs(trace_real() - 1.0) > kAlgebraTolerance) {
        throw std::invalid_argument("density matrix trace differs from 1");
    }
}

DensityMatrix DensityMatrix::unchecked(int num_qubits, std::vector<Amplitude> entries) {
    DensityMatrix rho;
    rho.num_qubits_ = num_qubits;
    rho.entries_ = std::move(entries);
    return rho;
}

double DensityMatrix::trace_real() const {
    const std::uint64_t d = dim();
    double tr = 0.0;
    for (std::uint64_t i = 0; i < d; ++i) {
        tr += entries_[i * d + i].real();
    }
    return tr;
}

bool DensityMatrix::is_hermitian(double tol) const {
    const std::uint64_t d = dim();
    for (std::uint64_t i = 0; i < d; ++i) {
        for (std::uint64_t j = i; j < d; ++j) {
            if (std::abs(entries_[i * d + j] - std::conj(entries_[j * d + i])) > tol) {
                return false;
            }
        }
    }
    return true;
}

DensityMatrix density_from_state(const StateVector& state) {
    check_density_qubits(state.num_qubits());
    const std::uint64_t d = state.dim();
    std::vector<Amplitude> entries(d * d);
    for (std::uint64_t i = 0; i < d; ++i) {
        for (std::uint64_t j = 0; j < d; ++j) {
            entries[i * d + j] = state[i] * std::conj(state[j]);
        }
    }
    return DensityMatrix::unchecked(state.num_qubits(), std::move(entries));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
    const int n = rho.num_qubits();
    if (keep.empty()) {
        throw std::invalid_argument("partial_trace needs a non-empty keep set");
    }
    std::vector<int> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
        throw std::invalid_argument("partial_trace keep set contains duplicates");
    }
    if (kept.front() < 0 || kept.back() >= n) {
        throw std::out_of_range("partial_trace keep set has an out-of-range qubit");
    }

    std::vector<int> traced;
    traced.reserve(static_cast<std::size_t>(n) - kept.size());
    for (int q = 0; q < n; ++q) {
        if (!std::binary_search(kept.begin(), kept.end(), q)) {
            traced.push_back(q);
        }
    }

    // Bit positions (qubit q owns index bit n-1-q).
    const int k = static_cast<int>(kept.size());
    const int t = static_cast<int>(traced.size());
    std::vector<int> kept_pos(kept.size());
    std::vector<int> traced_pos(traced.size());
    for (int i = 0; i < k; ++i) {
        kept_pos[i] = n - 1 - kept[i];
    }
    for (int i = 0; i < t; ++i) {
        traced_pos[i] = n - 1 - traced[i];
    }

    // Scatter a compact sub-index into the full basis index. Sub-index bit 0
    // (most significant of the sub-space) maps to the first listed qubit.
    const auto scatter = [](std::uint64_t sub, std::span<const int> positions) {
        std::uint64_t full = 0;
        const int count = static_cast<int>(positions.size());
        for (int b = 0; b < count; ++b) {
            if ((sub >> (count - 1 - b)) & 1) {
                full |= std::uint64_t{1} << positions[b];
            }
        }
        return full;
    };

    const std::uint64_t kd = std::uint64_t{1} << k;
    const std::uint64_t td = std::uint64_t{1} << t;
    std::vector<Amplitude> out(kd * kd, Amplitude{0.0, 0.0});
    for (std::uint64_t i = 0; i < kd; ++i) {
        const std::uint64_t i_full = scatter(i, kept_pos);
        for (std::uint64_t j = 0; j < kd; ++j) {
            const std::uint64_t j_full = scatter(j, kept_pos);
            Amplitude acc{0.0, 0.0};
            for (std::uint64_t e = 0; e < td; ++e) {
                const std::uint64_t env = scatter(e, traced_pos);
                acc += rho(i_full | env, j_full | env);
            }
            out[i * kd + j] = acc;
        }
    }
    // Validating constructor: the result must itself be a density matrix.
    return DensityMatrix(k, std::move(out));
}

double purity(const DensityMatrix& rho) {
    const std::uint64_t d = rho.dim();
    double total = 0.0;
    for (std::uint64_t i = 0; i < d; ++i) {
        for (std::uint64_t j = 0; j < d; ++j) {
            // tr(rho^2) = sum_ij rho_ij rho_ji = sum_ij |rho_ij|^2 (Hermitian).
            total += std::norm(rho(i, j));
        }
    }
    return total;
}

}  // namespace qcw
