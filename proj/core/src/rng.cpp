#include "qcw/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcw {

double Prng::gaussian() {
    // Box-Muller on two fresh uniforms; the second deviate is discarded to
    // keep the stream position a simple function of the call count.
    double u1 = uniform();
    while (u1 == 0.0) {
        u1 = uniform();
    }
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t Prng::below(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("Prng::below requires n > 0");
    }
    // Rejection sampling over the largest multiple of n.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = next_u64();
    while (x >= limit) {
        x = next_u64();
    }
    return x % n;
}

}  // namespace qcw
