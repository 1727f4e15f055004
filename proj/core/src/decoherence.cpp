#include "qcw/decoherence.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "qcw/errors.hpp"
#include "qcw/gates.hpp"
#include "qcw/rng.hpp"

namespace qcw {

EnvironmentModel random_environment(int env_qubits, std::uint64_t seed) {
    if (env_qubits < 0) {
        throw std::invalid_argument("environment needs env_qubits >= 0");
    }
    EnvironmentModel env;
    env.env_qubits = env_qubits;
    env.rng_seed = seed;
    Prng prng(seed);
    env.coupling_angles.reserve(static_cast<std::size_t>(env_qubits));
    for (int k = 0; k < env_qubits; ++k) {
        env.coupling_angles.push_back(prng.uniform(0.0, std::numbers::pi));
    }
    return env;
}

EnvironmentModel ladder_environment(int env_qubits) {
    if (env_qubits < 0) {
        throw std::invalid_argument("environment needs env_qubits >= 0");
    }
    EnvironmentModel env;
    env.env_qubits = env_qubits;
    env.coupling_angles.reserve(static_cast<std::size_t>(env_qubits));
    double angle = std::numbers::pi;
    for (int k = 0; k < env_qubits; ++k) {
        env.coupling_angles.push_back(angle);
        angle /= 2.0;
    }
    return env;
}

std::vector<DensityMatrix> dephase(const DensityMatrix& rho, double gamma, int steps) {
    if (gamma < 0.0) {
        throw std::invalid_argument("dephasing rate must be non-negative");
    }
    if (steps < 0) {
        throw std::invalid_argument("step count must be non-negative");
    }
    const double factor = std::exp(-gamma);
    const std::uint64_t d = rho.dim();

    std::vector<DensityMatrix> out;
    out.reserve(static_cast<std::size_t>(steps));
    std::vector<Amplitude> entries(rho.entries().begin(), rho.entries().end());
    for (int step = 0; step < steps; ++step) {
        for (std::uint64_t i = 0; i < d; ++i) {
            for (std::uint64_t j = 0; j < d; ++j) {
                if (i != j) {
                    entries[i * d + j] *= factor;
                }
            }
        }
        out.push_back(DensityMatrix(rho.num_qubits(), entries));
    }
    return out;
}

std::vector<EnvironmentStep> entangle_environment(const StateVector& system,
                                                  const EnvironmentModel& env, int steps) {
    if (env.env_qubits < 0 ||
        env.coupling_angles.size() != static_cast<std::size_t>(env.env_qubits)) {
        throw std::invalid_argument("environment needs one coupling angle per qubit");
    }
    for (double angle : env.coupling_angles) {
        if (!std::isfinite(angle)) {
            throw std::invalid_argument("coupling angle is not finite");
        }
    }
    if (steps < 0) {
        throw std::invalid_argument("step count must be non-negative");
    }
    const int n_sys = system.num_qubits();
    if (n_sys < 1) {
        throw std::invalid_argument("system needs at least one qubit");
    }
    const int total = n_sys + env.env_qubits;
    if (total > kMaxDensityQubits) {
        throw resource_limit_error("system plus environment is capped at " +
                                   std::to_string(kMaxDensityQubits) +
                                   " qubits (reduced-state computation)");
    }

    // Joint start state: system (x) |0..0>_env, environment on the least
    // significant index bits.
    StateVector joint = [&] {
        const std::uint64_t env_dim = std::uint64_t{1} << env.env_qubits;
        std::vector<Amplitude> amps(std::uint64_t{1} << total, Amplitude{0.0, 0.0});
        for (std::uint64_t s = 0; s < system.dim(); ++s) {
            amps[s * env_dim] = system[s];
        }
        return StateVector::unchecked(total, std::move(amps));
    }();

    std::vector<int> system_qubits(static_cast<std::size_t>(n_sys));
    std::iota(system_qubits.begin(), system_qubits.end(), 0);

    std::vector<EnvironmentStep> out;
    out.reserve(static_cast<std::size_t>(steps));
    for (int step = 0; step < steps; ++step) {
        for (int k = 0; k < env.env_qubits; ++k) {
            const ControlledGate coupling{ry_matrix(env.coupling_angles[k]), k % n_sys,
                                          n_sys + k};
            joint = apply_gate(joint, GateSpec{coupling});
        }
        DensityMatrix reduced = partial_trace(density_from_state(joint), system_qubits);
        out.push_back(EnvironmentStep{joint, std::move(reduced)});
    }
    return out;
}

double max_offdiagonal(const DensityMatrix& rho) {
    const std::uint64_t d = rho.dim();
    double worst = 0.0;
    for (std::uint64_t i = 0; i < d; ++i) {
        for (std::uint64_t j = 0; j < d; ++j) {
            if (i != j) {
                worst = std::max(worst, std::abs(rho(i, j)));
            }
        }
    }
    return worst;
}

CoherenceSeries coherence_series(const std::vector<EnvironmentStep>& steps) {
    CoherenceSeries series;
    series.samples.reserve(steps.size());
    for (std::size_t i = 0; i < steps.size(); ++i) {
        series.samples.push_back(
            CoherenceSample{static_cast<int>(i) + 1, max_offdiagonal(steps[i].reduced)});
    }
    return series;
}

CoherenceSeries coherence_series(const std::vector<DensityMatrix>& states) {
    CoherenceSeries series;
    series.samples.reserve(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) {
        series.samples.push_back(
            CoherenceSample{static_cast<int>(i) + 1, max_offdiagonal(states[i])});
    }
    return series;
}

std::string_view to_string(BranchClass c) {
    switch (c) {
        case BranchClass::kBranch: return "branch";
        case BranchClass::kWorldPointInTime: return "world_point_in_time";
        case BranchClass::kCoherent: return "coherent";
    }
    return "unknown";
}

BranchReport branch_stability(const CoherenceSeries& series, double threshold, int window) {
    if (series.samples.empty()) {
        throw std::invalid_argument("branch_stability needs a non-empty series");
    }
    const int count = static_cast<int>(series.samples.size());
    if (window < 1 || window > count) {
        throw std::invalid_argument("stability window must lie in [1, series length]");
    }

    bool final_window_quiet = true;
    for (int i = count - window; i < count; ++i) {
        if (series.samples[static_cast<std::size_t>(i)].offdiag_norm >= threshold) {
            final_window_quiet = false;
            break;
        }
    }
    bool ever_quiet = false;
    for (const CoherenceSample& sample : series.samples) {
        if (sample.offdiag_norm < threshold) {
            ever_quiet = true;
            break;
        }
    }

    BranchReport report;
    report.series = series;
    report.threshold = threshold;
    report.window = window;
    if (final_window_quiet) {
        report.classification = BranchClass::kBranch;
    } else if (ever_quiet) {
        report.classification = BranchClass::kWorldPointInTime;
    } else {
        report.classification = BranchClass::kCoherent;
    }
    return report;
}

BranchReport branch_stability(const CoherenceSeries& series, double threshold) {
    const int count = static_cast<int>(series.samples.size());
    return branch_stability(series, threshold, std::max(1, count / 4));
}

StateVector cat_state() {
    constexpr double kInvSqrt2 = 0.70710678118654752440;
    std::vector<Amplitude> amps(4, Amplitude{0.0, 0.0});
    amps[0] = Amplitude{kInvSqrt2, 0.0};
    amps[3] = Amplitude{kInvSqrt2, 0.0};
    return StateVector::unchecked(2, std::move(amps));
}

}  // namespace qcw
