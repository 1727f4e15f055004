#include "qcw/infometrics.hpp"

#include <lapacke.h>

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qcw/errors.hpp"
#include "qcw/random.hpp"
#include "qcw/rng.hpp"

namespace qcw {

namespace {

constexpr double kEntropyBoundSlack = 1e-9;
constexpr double kEigenvalueFloor = -1e-10;

// Fixed master seed for the storage battery's random cases.
constexpr std::uint64_t kStorageBatterySeed = 0x5b7a9d01u;

double entropy_term(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

}  // namespace

double shannon_entropy(std::span<const double> dist) {
    double total = 0.0;
    for (double p : dist) {
        if (!(p >= 0.0)) {
            throw std::invalid_argument("distribution has a negative entry");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > kEntropyBoundSlack) {
        throw std::invalid_argument("distribution does not sum to 1");
    }
    double bits = 0.0;
    for (double p : dist) {
        bits += entropy_term(p);
    }
    // Probabilities carrying ~1e-16 norm drift can push the sum a hair below
    // zero; entropy itself is never negative.
    return std::max(bits, 0.0);
}

std::vector<double> hermitian_eigenvalues(const DensityMatrix& rho) {
    if (!rho.is_hermitian()) {
        throw std::invalid_argument("matrix is not Hermitian within tolerance");
    }
    const std::uint64_t d = rho.dim();
    std::vector<Amplitude> work(rho.entries().begin(), rho.entries().end());
    std::vector<double> eigenvalues(d);
    const lapack_int info = LAPACKE_zheev(
        LAPACK_ROW_MAJOR, 'N', 'U', static_cast<lapack_int>(d),
        reinterpret_cast<lapack_complex_double*>(work.data()), static_cast<lapack_int>(d),
        eigenvalues.data());
    if (info != 0) {
        throw std::runtime_error("eigenvalue solver failed with status " + std::to_string(info));
    }
    return eigenvalues;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    double bits = 0.0;
    for (double lambda : hermitian_eigenvalues(rho)) {
        if (lambda < kEigenvalueFloor) {
            throw std::invalid_argument("density matrix has eigenvalue " +
                                        std::to_string(lambda) + " below the positivity floor");
        }
        bits += entropy_term(std::max(lambda, 0.0));
    }
    return std::max(bits, 0.0);
}

namespace {

void check_ensemble(const Ensemble& ensemble) {
    if (ensemble.members.empty()) {
        throw std::invalid_argument("ensemble must be non-empty");
    }
    const int n = ensemble.members.front().state.num_qubits();
    double total = 0.0;
    for (const EnsembleMember& member : ensemble.members) {
        if (!(member.probability >= 0.0)) {
            throw std::invalid_argument("ensemble probability is negative");
        }
        if (member.state.num_qubits() != n) {
            throw std::invalid_argument("ensemble members have mismatched dimensions");
        }
        total += member.probability;
    }
    if (std::abs(total - 1.0) > kAlgebraTolerance) {
        throw std::invalid_argument("ensemble probabilities do not sum to 1");
    }
}

}  // namespace

EntropyReport preparation_entropy(const Ensemble& ensemble) {
    check_ensemble(ensemble);

    std::vector<double> probs;
    probs.reserve(ensemble.members.size());
    for (const EnsembleMember& member : ensemble.members) {
        probs.push_back(member.probability);
    }

    const int n = ensemble.members.front().state.num_qubits();
    const std::uint64_t d = std::uint64_t{1} << n;
    std::vector<Amplitude> mix(d * d, Amplitude{0.0, 0.0});
    for (const EnsembleMember& member : ensemble.members) {
        for (std::uint64_t i = 0; i < d; ++i) {
            for (std::uint64_t j = 0; j < d; ++j) {
                mix[i * d + j] +=
                    member.probability * member.state[i] * std::conj(member.state[j]);
            }
        }
    }

    EntropyReport report;
    report.shannon_bits = shannon_entropy(probs);
    report.von_neumann_bits = von_neumann_entropy(DensityMatrix(n, std::move(mix)));
    report.bound_satisfied = report.shannon_bits >= report.von_neumann_bits - kEntropyBoundSlack;
    return report;
}

EntropyReport measurement_entropy(const StateVector& state, const GateSpec& basis) {
    const StateVector rotated = apply_gate(state, basis);
    std::vector<int> all_qubits(static_cast<std::size_t>(state.num_qubits()));
    std::iota(all_qubits.begin(), all_qubits.end(), 0);

    EntropyReport report;
    report.shannon_bits = shannon_entropy(outcome_distribution(rotated, all_qubits));
    report.von_neumann_bits = von_neumann_entropy(density_from_state(state));
    report.bound_satisfied = report.shannon_bits >= report.von_neumann_bits - kEntropyBoundSlack;
    return report;
}

StorageBoundReport storage_retrieval_bound(int n_qubits) {
    if (n_qubits < 1) {
        throw std::invalid_argument("storage_retrieval_bound needs n >= 1");
    }
    if (n_qubits > kMaxStorageBoundQubits) {
        throw resource_limit_error("storage_retrieval_bound battery is capped at " +
                                   std::to_string(kMaxStorageBoundQubits) + " qubits");
    }

    StorageBoundReport report;
    report.n_qubits = n_qubits;

    const GateSpec computational = identity_gate();
    const std::uint64_t dim = std::uint64_t{1} << n_qubits;

    double max_bits = 0.0;
    const auto consider = [&max_bits](const EntropyReport& r) {
        max_bits = std::max(max_bits, r.shannon_bits);
    };

    for (std::uint64_t index = 0; index < dim; ++index) {
        consider(measurement_entropy(basis_state(n_qubits, index), computational));
    }

    std::vector<int> all_qubits(static_cast<std::size_t>(n_qubits));
    std::iota(all_qubits.begin(), all_qubits.end(), 0);
    consider(measurement_entropy(apply_gate(zero_state(n_qubits), hadamard_layer(all_qubits)),
                                 computational));

    Prng prng(kStorageBatterySeed + static_cast<std::uint64_t>(n_qubits));
    for (int trial = 0; trial < 100; ++trial) {
        const StateVector state = random_state(n_qubits, prng);
        std::vector<Mat2> factors;
        factors.reserve(static_cast<std::size_t>(n_qubits));
        for (int q = 0; q < n_qubits; ++q) {
            factors.push_back(random_single_qubit_unitary(prng));
        }
        consider(measurement_entropy(state, product_gate(factors)));
    }

    report.max_retrievable_bits = max_bits;
    report.within_bound = max_bits <= static_cast<double>(n_qubits) + kEntropyBoundSlack;
    return report;
}

}  // namespace qcw
