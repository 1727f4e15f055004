#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "qcw/rng.hpp"
#include "qcw/statevector.hpp"

namespace qcw {

// Boolean function f: {0,1}^n -> {0,1} stored as an explicit truth table of
// 2^n output bits, indexed by the big-endian input bitstring x.
struct BooleanFunction {
    int n = 0;
    std::vector<std::uint8_t> table;

    int operator()(std::uint64_t x) const { return table[x]; }
};

enum class FunctionClass { kConstant, kBalanced, kNeither };

std::string_view to_string(FunctionClass c);

// Parses a line of 2^n '0'/'1' characters (basis-index order, big-endian in
// x). Leading/trailing ASCII whitespace is ignored. Throws parse_error on any
// format violation.
BooleanFunction parse_truth_table(std::string_view text);

// Constant iff all outputs equal; balanced iff exactly half are 1.
FunctionClass classify(const BooleanFunction& f);

// Uniformly random truth table on n input bits.
BooleanFunction random_function(int n, Prng& prng);

// Oracle unitary U_f |x,y> = |x, y xor f(x)> with register A holding x and a
// one-qubit register B holding y. Applied as an index permutation: for every
// x with f(x) = 1 the two B amplitudes of that label are swapped. Requires
// layout.n_a == f.n and layout.n_b == 1.
StateVector apply_uf(const StateVector& state, const BooleanFunction& f,
                     const RegisterLayout& layout);

// Reference implementation of the same contract: a literal loop over all
// 2^(n+1) basis indices, each routed to the truth-table-permuted index.
// Deliberately naive; kept as the independent check for apply_uf.
StateVector brute_force_uf(const StateVector& state, const BooleanFunction& f,
                           const RegisterLayout& layout);

}  // namespace qcw
