#include "qcw/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qcw/errors.hpp"
#include "qcw/rng.hpp"

namespace qcw {

namespace {

// Norm slack accepted at construction; looser than kAlgebraTolerance so that
// states drifted by long gate pipelines are still accepted as inputs.
constexpr double kConstructionNormSlack = 1e-9;

void check_qubit_count(int num_qubits) {
    if (num_qubits < 0) {
        throw std::invalid_argument("state vector needs a non-negative qubit count");
    }
    if (num_qubits > kMaxQubits) {
        throw resource_limit_error("qubit count " + std::to_string(num_qubits) +
                                   " exceeds the dense-representation cap of " +
                                   std::to_string(kMaxQubits));
    }
}

void check_qubit_index(const StateVector& state, int qubit) {
    if (qubit < 0 || qubit >= state.num_qubits()) {
        throw std::out_of_range("qubit index " + std::to_string(qubit) +
                                " out of range for " + std::to_string(state.num_qubits()) +
                                " qubits");
    }
}

void check_qubit_set(const StateVector& state, std::span<const int> qubits) {
    if (qubits.empty()) {
        throw std::invalid_argument("qubit set must be non-empty");
    }
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        check_qubit_index(state, qubits[i]);
        for (std::size_t j = i + 1; j < qubits.size(); ++j) {
            if (qubits[i] == qubits[j]) {
                throw std::invalid_argument("qubit set contains duplicate index " +
                                            std::to_string(qubits[i]));
            }
        }
    }
}

}  // namespace

StateVector::StateVector(int num_qubits, std::vector<Amplitude> amps)
    : num_qubits_(num_qubits), amps_(std::move(amps)) {
    check_qubit_count(num_qubits_);
    const std::uint64_t expected = std::uint64_t{1} << num_qubits_;
    if (amps_.size() != expected) {
        throw std::invalid_argument("amplitude count " + std::to_string(amps_.size()) +
                                    " does not match 2^" + std::to_string(num_qubits_));
    }
    for (const Amplitude& a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("state vector contains a non-finite amplitude");
        }
    }
    if (std::abs(squared_norm() - 1.0) > kConstructionNormSlack) {
        throw std::invalid_argument("state vector is not unit-norm");
    }
}

StateVector StateVector::unchecked(int num_qubits, std::vector<Amplitude> amps) {
    StateVector s;
    s.num_qubits_ = num_qubits;
    s.amps_ = std::move(amps);
    return s;
}

double StateVector::squared_norm() const {
    double total = 0.0;
    for (const Amplitude& a : amps_) {
        total += std::norm(a);
    }
    return total;
}

double StateVector::norm() const { return std::sqrt(squared_norm()); }

std::uint64_t StateVector::qubit_mask(int qubit) const {
    check_qubit_index(*this, qubit);
    return std::uint64_t{1} << (num_qubits_ - 1 - qubit);
}

StateVector zero_state(int num_qubits) {
    if (num_qubits < 1) {
        throw std::invalid_argument("zero_state needs at least one qubit");
    }
    check_qubit_count(num_qubits);
    std::vector<Amplitude> amps(std::uint64_t{1} << num_qubits, Amplitude{0.0, 0.0});
    amps[0] = Amplitude{1.0, 0.0};
    return StateVector::unchecked(num_qubits, std::move(amps));
}

StateVector basis_state(int num_qubits, std::uint64_t index) {
    if (num_qubits < 1) {
        throw std::invalid_argument("basis_state needs at least one qubit");
    }
    check_qubit_count(num_qubits);
    const std::uint64_t dim = std::uint64_t{1} << num_qubits;
    if (index >= dim) {
        throw std::out_of_range("basis index " + std::to_string(index) +
                                " out of range for dimension " + std::to_string(dim));
    }
    std::vector<Amplitude> amps(dim, Amplitude{0.0, 0.0});
    amps[index] = Amplitude{1.0, 0.0};
    return StateVector::unchecked(num_qubits, std::move(amps));
}

Amplitude inner_product(const StateVector& a, const StateVector& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("inner_product requires equal qubit counts");
    }
    Amplitude result{0.0, 0.0};
    for (std::uint64_t i = 0; i < a.dim(); ++i) {
        result += std::conj(a[i]) * b[i];
    }
    return result;
}

double fidelity(const StateVector& a, const StateVector& b) {
    return std::abs(inner_product(a, b));
}

namespace {

std::vector<std::uint64_t> qubit_masks(const StateVector& state, std::span<const int> qubits) {
    std::vector<std::uint64_t> masks;
    masks.reserve(qubits.size());
    for (int q : qubits) {
        masks.push_back(state.qubit_mask(q));
    }
    return masks;
}

std::uint64_t gather_bits(std::uint64_t index, std::span<const std::uint64_t> masks) {
    std::uint64_t outcome = 0;
    for (std::uint64_t mask : masks) {
        outcome = (outcome << 1) | ((index & mask) != 0 ? 1 : 0);
    }
    return outcome;
}

}  // namespace

std::vector<double> outcome_distribution(const StateVector& state, std::span<const int> qubits) {
    check_qubit_set(state, qubits);
    const std::vector<std::uint64_t> masks = qubit_masks(state, qubits);
    std::vector<double> dist(std::uint64_t{1} << qubits.size(), 0.0);
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        dist[gather_bits(i, masks)] += std::norm(state[i]);
    }
    return dist;
}

StateVector project(const StateVector& state, std::span<const int> qubits, std::uint64_t outcome) {
    check_qubit_set(state, qubits);
    if (outcome >= (std::uint64_t{1} << qubits.size())) {
        throw std::out_of_range("projection outcome out of range");
    }
    const std::vector<std::uint64_t> masks = qubit_masks(state, qubits);

    std::vector<Amplitude> amps(state.dim(), Amplitude{0.0, 0.0});
    double weight = 0.0;
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        if (gather_bits(i, masks) == outcome) {
            amps[i] = state[i];
            weight += std::norm(state[i]);
        }
    }
    if (weight <= 0.0) {
        throw std::domain_error("projection onto a zero-probability outcome");
    }
    const double scale = 1.0 / std::sqrt(weight);
    for (Amplitude& a : amps) {
        a *= scale;
    }
    return StateVector::unchecked(state.num_qubits(), std::move(amps));
}

MeasurementRecord measure_qubit(const StateVector& state, int qubit, std::uint64_t rng_seed) {
    check_qubit_index(state, qubit);
    const int qubits[1] = {qubit};
    const std::vector<double> dist = outcome_distribution(state, qubits);

    Prng prng(rng_seed);
    const int outcome = prng.uniform() < dist[1] ? 1 : 0;

    MeasurementRecord record;
    record.qubit = qubit;
    record.outcome = outcome;
    record.probability = dist[outcome];
    record.post_state = project(state, qubits, static_cast<std::uint64_t>(outcome));
    return record;
}

void RegisterLayout::validate_for(const StateVector& state) const {
    if (n_a < 1 || n_b < 0) {
        throw std::invalid_argument("register layout needs n_a >= 1 and n_b >= 0");
    }
    if (total() != state.num_qubits()) {
        throw std::invalid_argument("register layout covers " + std::to_string(total()) +
                                    " qubits but the state has " +
                                    std::to_string(state.num_qubits()));
    }
}

std::string RegisterLayout::label_bits(std::uint64_t label) const {
    std::string bits(static_cast<std::size_t>(n_a), '0');
    for (int q = 0; q < n_a; ++q) {
        if ((label >> (n_a - 1 - q)) & 1) {
            bits[static_cast<std::size_t>(q)] = '1';
        }
    }
    return bits;
}

}  // namespace qcw
