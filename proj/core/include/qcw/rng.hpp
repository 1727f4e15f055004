#pragma once

#include <cstdint>
#include <random>

namespace qcw {

// Deterministic pseudo-random source: a seeded mt19937_64.
//
// Every sampling operation in the library takes an explicit seed and draws
// through this class. Uniform doubles are derived from the raw engine output
// (53 high bits) rather than std::uniform_real_distribution, whose mapping is
// implementation-defined; the produced stream is therefore the same on every
// standard library.
class Prng {
public:
    explicit Prng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal deviate (Box-Muller).
    double gaussian();

    // Uniform integer in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n);

private:
    std::mt19937_64 engine_;
};

}  // namespace qcw
