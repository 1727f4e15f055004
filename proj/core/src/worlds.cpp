#include "qcw/worlds.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "qcw/errors.hpp"
#include "qcw/infometrics.hpp"

namespace qcw {

WorldDecomposition decompose(const StateVector& state, const RegisterLayout& layout,
                             double threshold) {
    layout.validate_for(state);
    if (!(threshold > 0.0 && threshold < 1.0)) {
        throw std::invalid_argument("world threshold must lie in (0, 1)");
    }

    const std::uint64_t labels = std::uint64_t{1} << layout.n_a;
    const std::uint64_t b_dim = std::uint64_t{1} << layout.n_b;

    WorldDecomposition decomp;
    decomp.layout = layout;
    // Register A owns the most significant index bits, so each label's
    // component is the contiguous slice amps[label*b_dim .. (label+1)*b_dim).
    for (std::uint64_t label = 0; label < labels; ++label) {
        double weight = 0.0;
        for (std::uint64_t b = 0; b < b_dim; ++b) {
            weight += std::norm(state[label * b_dim + b]);
        }
        if (weight <= threshold) {
            decomp.residual += weight;
            continue;
        }
        std::vector<Amplitude> rel(b_dim);
        const double scale = 1.0 / std::sqrt(weight);
        for (std::uint64_t b = 0; b < b_dim; ++b) {
            rel[b] = state[label * b_dim + b] * scale;
        }
        decomp.worlds.push_back(World{layout.label_bits(label), weight,
                                      StateVector::unchecked(layout.n_b, std::move(rel))});
    }
    return decomp;
}

namespace {

std::uint64_t label_value(const std::string& bits) {
    std::uint64_t value = 0;
    for (char c : bits) {
        value = (value << 1) | (c == '1' ? 1 : 0);
    }
    return value;
}

}  // namespace

StateVector world_vector(const World& world, const RegisterLayout& layout) {
    const std::uint64_t b_dim = std::uint64_t{1} << layout.n_b;
    std::vector<Amplitude> amps(std::uint64_t{1} << layout.total(), Amplitude{0.0, 0.0});
    const std::uint64_t base = label_value(world.label) * b_dim;
    for (std::uint64_t b = 0; b < b_dim; ++b) {
        amps[base + b] = world.relative_state[b];
    }
    return StateVector::unchecked(layout.total(), std::move(amps));
}

StateVector reconstruct(const WorldDecomposition& decomp) {
    const RegisterLayout& layout = decomp.layout;
    const std::uint64_t b_dim = std::uint64_t{1} << layout.n_b;
    std::vector<Amplitude> amps(std::uint64_t{1} << layout.total(), Amplitude{0.0, 0.0});
    double total = 0.0;
    for (const World& world : decomp.worlds) {
        const double coeff = std::sqrt(world.weight);
        const std::uint64_t base = label_value(world.label) * b_dim;
        for (std::uint64_t b = 0; b < b_dim; ++b) {
            amps[base + b] = coeff * world.relative_state[b];
        }
        total += world.weight;
    }
    if (total <= 0.0) {
        throw std::domain_error("cannot reconstruct from an empty decomposition");
    }
    const double scale = 1.0 / std::sqrt(total);
    for (Amplitude& a : amps) {
        a *= scale;
    }
    return StateVector::unchecked(layout.total(), std::move(amps));
}

int world_count_after_hadamard1(int n) {
    if (n < 1) {
        throw std::invalid_argument("world_count_after_hadamard1 needs n >= 1");
    }
    if (n + 1 > kMaxQubits) {
        throw resource_limit_error("n + 1 qubits exceed the dense-representation cap");
    }
    std::vector<int> register_a(static_cast<std::size_t>(n));
    std::iota(register_a.begin(), register_a.end(), 0);

    StateVector state = apply_gate(zero_state(n + 1), hadamard_layer(register_a));
    return decompose(state, RegisterLayout{n, 1}).world_count();
}

double InterferenceMatrix::max_offdiagonal() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < mass.size(); ++i) {
        for (std::size_t j = 0; j < mass[i].size(); ++j) {
            if (i != j) {
                worst = std::max(worst, mass[i][j]);
            }
        }
    }
    return worst;
}

bool InterferenceMatrix::world_diagonal(double tol) const { return max_offdiagonal() < tol; }

InterferenceMatrix interference_matrix(const WorldDecomposition& decomp,
                                       const GateSpec& next_gate) {
    if (decomp.worlds.empty()) {
        throw std::invalid_argument("interference_matrix needs at least one world");
    }
    const RegisterLayout& layout = decomp.layout;
    const std::uint64_t b_dim = std::uint64_t{1} << layout.n_b;

    InterferenceMatrix matrix;
    matrix.labels.reserve(decomp.worlds.size());
    for (const World& world : decomp.worlds) {
        matrix.labels.push_back(world.label);
    }

    for (const World& world : decomp.worlds) {
        const StateVector moved = apply_gate(world_vector(world, layout), next_gate);
        std::vector<double> row;
        row.reserve(decomp.worlds.size());
        for (const World& other : decomp.worlds) {
            const std::uint64_t base = label_value(other.label) * b_dim;
            double mass = 0.0;
            for (std::uint64_t b = 0; b < b_dim; ++b) {
                mass += std::norm(moved[base + b]);
            }
            row.push_back(mass);
        }
        matrix.mass.push_back(std::move(row));
    }
    return matrix;
}

std::string_view to_string(EventKind kind) {
    switch (kind) {
        case EventKind::kSplit: return "split";
        case EventKind::kMerge: return "merge";
        case EventKind::kStable: return "stable";
    }
    return "unknown";
}

WorldTrace track(const StepTrace& trace, const RegisterLayout& layout, double threshold) {
    if (trace.steps.empty()) {
        throw std::invalid_argument("track needs a non-empty trace");
    }
    WorldTrace world_trace;
    world_trace.per_step.reserve(trace.steps.size());
    for (const Step& step : trace.steps) {
        world_trace.per_step.push_back(WorldStep{step.step_index, step.stage, step.description,
                                                 decompose(step.state, layout, threshold)});
    }
    for (std::size_t i = 1; i < world_trace.per_step.size(); ++i) {
        const int before = world_trace.per_step[i - 1].world_count();
        const int after = world_trace.per_step[i].world_count();
        EventKind kind = EventKind::kStable;
        if (after > before) {
            kind = EventKind::kSplit;
        } else if (after < before) {
            kind = EventKind::kMerge;
        }
        world_trace.events.push_back(
            WorldEvent{world_trace.per_step[i].step_index, kind, before, after});
    }
    return world_trace;
}

InformationAudit audit_information(const StepTrace& trace, const RegisterLayout& layout) {
    if (trace.steps.empty()) {
        throw std::invalid_argument("audit_information needs a non-empty trace");
    }
    InformationAudit audit;
    audit.bits_per_world = layout.n_b;
    audit.classical_bits_to_describe = std::int64_t{1} << layout.total();

    const WorldTrace world_trace = track(trace, layout);
    for (const WorldStep& step : world_trace.per_step) {
        audit.worlds_max = std::max(audit.worlds_max, step.world_count());
    }

    // Retrievable information: entropy of the register-A readout at the last
    // unitary (pre-measurement) step; the post-measurement state carries no
    // outcome uncertainty any more.
    const Step* readout = &trace.steps.back();
    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
        if (it->stage != Stage::kMeasurement) {
            readout = &*it;
            break;
        }
    }
    std::vector<int> register_a(static_cast<std::size_t>(layout.n_a));
    std::iota(register_a.begin(), register_a.end(), 0);
    audit.retrievable_bits = shannon_entropy(outcome_distribution(readout->state, register_a));
    return audit;
}

}  // namespace qcw
