#include "qcw/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>
#include <string>
#include <utility>

#include "qcw/errors.hpp"

namespace qcw {

namespace {

void check_oracle_args(const StateVector& state, const BooleanFunction& f,
                       const RegisterLayout& layout) {
    layout.validate_for(state);
    if (layout.n_a != f.n) {
        throw std::invalid_argument("oracle arity " + std::to_string(f.n) +
                                    " does not match register A width " +
                                    std::to_string(layout.n_a));
    }
    if (layout.n_b != 1) {
        throw std::invalid_argument("oracle runs require a one-qubit register B");
    }
    if (f.table.size() != (std::uint64_t{1} << f.n)) {
        throw std::invalid_argument("truth table size does not match 2^n");
    }
}

}  // namespace

std::string_view to_string(FunctionClass c) {
    switch (c) {
        case FunctionClass::kConstant: return "constant";
        case FunctionClass::kBalanced: return "balanced";
        case FunctionClass::kNeither: return "neither";
    }
    return "unknown";
}

BooleanFunction parse_truth_table(std::string_view text) {
    // Trim ASCII whitespace at both ends; the payload itself must be bits.
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }

    const std::size_t len = text.size();
    if (len < 2 || !std::has_single_bit(len)) {
        throw parse_error("invalid truth table: length " + std::to_string(len) +
                          " is not a power of two >= 2");
    }

    BooleanFunction f;
    f.n = std::countr_zero(len);
    f.table.reserve(len);
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw parse_error(std::string("invalid truth table: unexpected character '") + c +
                              "'");
        }
        f.table.push_back(c == '1' ? 1 : 0);
    }
    return f;
}

FunctionClass classify(const BooleanFunction& f) {
    const std::uint64_t ones =
        static_cast<std::uint64_t>(std::count(f.table.begin(), f.table.end(), std::uint8_t{1}));
    if (ones == 0 || ones == f.table.size()) {
        return FunctionClass::kConstant;
    }
    if (2 * ones == f.table.size()) {
        return FunctionClass::kBalanced;
    }
    return FunctionClass::kNeither;
}

BooleanFunction random_function(int n, Prng& prng) {
    if (n < 1) {
        throw std::invalid_argument("random_function needs n >= 1");
    }
    BooleanFunction f;
    f.n = n;
    f.table.resize(std::uint64_t{1} << n);
    for (std::uint8_t& bit : f.table) {
        bit = static_cast<std::uint8_t>(prng.below(2));
    }
    return f;
}

StateVector apply_uf(const StateVector& state, const BooleanFunction& f,
                     const RegisterLayout& layout) {
    check_oracle_args(state, f, layout);
    std::vector<Amplitude> amps(state.amps().begin(), state.amps().end());
    // Register B is the least significant bit, so label x owns the adjacent
    // pair (2x, 2x+1); f(x) = 1 swaps it.
    for (std::uint64_t x = 0; x < f.table.size(); ++x) {
        if (f.table[x]) {
            std::swap(amps[2 * x], amps[2 * x + 1]);
        }
    }
    return StateVector::unchecked(state.num_qubits(), std::move(amps));
}

StateVector brute_force_uf(const StateVector& state, const BooleanFunction& f,
                           const RegisterLayout& layout) {
    check_oracle_args(state, f, layout);
    std::vector<Amplitude> out(state.dim(), Amplitude{0.0, 0.0});
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        const std::uint64_t x = layout.label_of(i);
        const std::uint64_t y = layout.b_index_of(i);
        const std::uint64_t y_out = y ^ static_cast<std::uint64_t>(f.table[x]);
        const std::uint64_t j = (x << 1) | y_out;
        out[j] = state[i];
    }
    return StateVector::unchecked(state.num_qubits(), std::move(out));
}

}  // namespace qcw
