#include "qcw/density.hpp"

#include <gtest/gtest.h>

#include "qcw/errors.hpp"
#include "qcw/gates.hpp"
#include "qcw/random.hpp"
#include "qcw/rng.hpp"
#include "testutil.hpp"

namespace qcw {
namespace {

using test::make_state;
using test::naive_partial_trace;

double max_entry_diff(const DensityMatrix& a, const DensityMatrix& b) {
    double worst = 0.0;
    for (std::uint64_t i = 0; i < a.dim(); ++i) {
        for (std::uint64_t j = 0; j < a.dim(); ++j) {
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
        }
    }
    return worst;
}

TEST(DensityTest, ProjectorFromZeroState) {
    const DensityMatrix rho = density_from_state(zero_state(1));
    EXPECT_DOUBLE_EQ(rho(0, 0).real(), 1.0);
    EXPECT_DOUBLE_EQ(std::abs(rho(0, 1)), 0.0);
    EXPECT_DOUBLE_EQ(std::abs(rho(1, 0)), 0.0);
    EXPECT_DOUBLE_EQ(std::abs(rho(1, 1)), 0.0);
}

TEST(DensityTest, UniformStateProjector) {
    const StateVector plus = apply_gate(zero_state(1), hadamard(0));
    const DensityMatrix rho = density_from_state(plus);
    for (std::uint64_t i = 0; i < 2; ++i) {
        for (std::uint64_t j = 0; j < 2; ++j) {
            EXPECT_NEAR(rho(i, j).real(), 0.5, kAlgebraTolerance);
        }
    }
}

TEST(DensityTest, PureStatesHaveUnitPurity) {
    Prng prng(41);
    for (int n = 1; n <= 4; ++n) {
        EXPECT_NEAR(purity(density_from_state(random_state(n, prng))), 1.0,
                    kAlgebraTolerance);
    }
}

TEST(DensityTest, ConstructorValidates) {
    // Non-Hermitian.
    EXPECT_THROW(DensityMatrix(1, {Amplitude{0.5, 0.0}, Amplitude{0.5, 0.0},
                                   Amplitude{-0.5, 0.0}, Amplitude{0.5, 0.0}}),
                 std::invalid_argument);
    // Trace 2.
    EXPECT_THROW(DensityMatrix(1, {Amplitude{1.0, 0.0}, Amplitude{0.0, 0.0},
                                   Amplitude{0.0, 0.0}, Amplitude{1.0, 0.0}}),
                 std::invalid_argument);
    EXPECT_THROW(density_from_state(zero_state(kMaxDensityQubits + 1)), resource_limit_error);
}

TEST(DensityTest, PartialTraceOfProductState) {
    // |0> (x) |+>, keep qubit 0 -> |0><0|.
    std::vector<Amplitude> amps = {Amplitude{1.0, 0.0}, Amplitude{1.0, 0.0}, {}, {}};
    const StateVector psi = make_state(2, std::move(amps));
    const int keep[] = {0};
    const DensityMatrix reduced = partial_trace(density_from_state(psi), keep);
    EXPECT_NEAR(reduced(0, 0).real(), 1.0, kAlgebraTolerance);
    EXPECT_NEAR(std::abs(reduced(0, 1)), 0.0, kAlgebraTolerance);
    EXPECT_NEAR(std::abs(reduced(1, 1)), 0.0, kAlgebraTolerance);
}

TEST(DensityTest, PartialTraceOfBellPair) {
    const StateVector bell =
        make_state(2, {Amplitude{1.0, 0.0}, {}, {}, Amplitude{1.0, 0.0}});
    for (int q = 0; q < 2; ++q) {
        const int keep[] = {q};
        const DensityMatrix reduced = partial_trace(density_from_state(bell), keep);
        EXPECT_NEAR(reduced(0, 0).real(), 0.5, kAlgebraTolerance);
        EXPECT_NEAR(reduced(1, 1).real(), 0.5, kAlgebraTolerance);
        EXPECT_NEAR(std::abs(reduced(0, 1)), 0.0, kAlgebraTolerance);
        EXPECT_NEAR(purity(reduced), 0.5, kAlgebraTolerance);
    }
}

// Independent oracle: the naive all-pairs double loop.
TEST(DensityTest, PartialTraceMatchesNaiveLoop) {
    Prng prng(42);
    const std::vector<std::vector<int>> keep_sets = {{0}, {1}, {2}, {0, 2}, {1, 2}, {0, 1, 2}};
    for (int trial = 0; trial < 10; ++trial) {
        const DensityMatrix rho = density_from_state(random_state(3, prng));
        for (const auto& keep : keep_sets) {
            const DensityMatrix fast = partial_trace(rho, keep);
            const DensityMatrix naive = naive_partial_trace(rho, keep);
            EXPECT_LT(max_entry_diff(fast, naive), kAlgebraTolerance);
            EXPECT_NEAR(fast.trace_real(), 1.0, kAlgebraTolerance);
            EXPECT_TRUE(fast.is_hermitian());
        }
    }
}

// Tracing register B out of a product state recovers register A's projector.
TEST(DensityTest, PartialTraceFactorizesProducts) {
    Prng prng(43);
    for (int trial = 0; trial < 10; ++trial) {
        const StateVector a = random_state(2, prng);
        const StateVector b = random_state(1, prng);
        std::vector<Amplitude> amps(8);
        for (std::uint64_t i = 0; i < 4; ++i) {
            for (std::uint64_t j = 0; j < 2; ++j) {
                amps[i * 2 + j] = a[i] * b[j];
            }
        }
        const int keep[] = {0, 1};
        const DensityMatrix reduced =
            partial_trace(density_from_state(StateVector(3, std::move(amps))), keep);
        EXPECT_LT(max_entry_diff(reduced, density_from_state(a)), kAlgebraTolerance);
    }
}

TEST(DensityTest, PartialTraceValidatesKeepSet) {
    const DensityMatrix rho = density_from_state(zero_state(2));
    const std::vector<int> empty;
    EXPECT_THROW(partial_trace(rho, empty), std::invalid_argument);
    const int dup[] = {0, 0};
    EXPECT_THROW(partial_trace(rho, dup), std::invalid_argument);
    const int bad[] = {3};
    EXPECT_THROW(partial_trace(rho, bad), std::out_of_range);
}

}  // namespace
}  // namespace qcw
