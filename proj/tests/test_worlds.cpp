#include "qcw/worlds.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "qcw/errors.hpp"
#include "qcw/random.hpp"
#include "qcw/rng.hpp"
#include "testutil.hpp"

namespace qcw {
namespace {

using test::all_qubits;
using test::make_state;
using test::max_abs_diff;
using test::register_b_gate;

constexpr double kInvSqrt2 = 0.70710678118654752440;

StateVector deutsch_state_after_hadamard1() {
    return apply_gate(basis_state(2, 1), hadamard_layer({0, 1}));
}

TEST(WorldsTest, SingleBasisStateIsOneWorld) {
    const WorldDecomposition decomp = decompose(zero_state(2), {1, 1});
    ASSERT_EQ(decomp.world_count(), 1);
    EXPECT_EQ(decomp.worlds[0].label, "0");
    EXPECT_NEAR(decomp.worlds[0].weight, 1.0, kAlgebraTolerance);
    EXPECT_NEAR(fidelity(decomp.worlds[0].relative_state, zero_state(1)), 1.0,
                kAlgebraTolerance);
    EXPECT_NEAR(decomp.residual, 0.0, kAlgebraTolerance);

    for (int n_a = 1; n_a <= 3; ++n_a) {
        EXPECT_EQ(decompose(zero_state(3), {n_a, 3 - n_a}).world_count(), 1);
    }
}

// Two worlds after the opening Hadamards, both with relative state
// (|0>-|1>)/sqrt(2).
TEST(WorldsTest, DeutschStateSplitsIntoTwoWorlds) {
    const WorldDecomposition decomp = decompose(deutsch_state_after_hadamard1(), {1, 1});
    ASSERT_EQ(decomp.world_count(), 2);
    EXPECT_EQ(decomp.worlds[0].label, "0");
    EXPECT_EQ(decomp.worlds[1].label, "1");
    for (const World& world : decomp.worlds) {
        EXPECT_NEAR(world.weight, 0.5, kAlgebraTolerance);
        EXPECT_NEAR(world.relative_state[0].real(), kInvSqrt2, kAlgebraTolerance);
        EXPECT_NEAR(world.relative_state[1].real(), -kInvSqrt2, kAlgebraTolerance);
    }
}

// After U_f with f = [0,1] the kickback sign sits inside the relative states.
TEST(WorldsTest, OraclePhasesFoldIntoRelativeStates) {
    const StateVector state =
        apply_uf(deutsch_state_after_hadamard1(), parse_truth_table("01"), {1, 1});
    const WorldDecomposition decomp = decompose(state, {1, 1});
    ASSERT_EQ(decomp.world_count(), 2);
    EXPECT_NEAR(decomp.worlds[0].relative_state[0].real(), kInvSqrt2, kAlgebraTolerance);
    EXPECT_NEAR(decomp.worlds[0].relative_state[1].real(), -kInvSqrt2, kAlgebraTolerance);
    EXPECT_NEAR(decomp.worlds[1].relative_state[0].real(), -kInvSqrt2, kAlgebraTolerance);
    EXPECT_NEAR(decomp.worlds[1].relative_state[1].real(), kInvSqrt2, kAlgebraTolerance);
    for (const World& world : decomp.worlds) {
        EXPECT_NEAR(world.weight, 0.5, kAlgebraTolerance);
    }
}

TEST(WorldsTest, ReconstructionAndWeightConservation) {
    Prng prng(61);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(prng.below(4));
        const int n_a = 1 + static_cast<int>(prng.below(static_cast<std::uint64_t>(n)));
        const RegisterLayout layout{n_a, n - n_a};
        const StateVector psi = random_state(n, prng);
        const WorldDecomposition decomp = decompose(psi, layout);

        double total = decomp.residual;
        for (const World& world : decomp.worlds) {
            total += world.weight;
            EXPECT_GT(world.weight, kDefaultWorldThreshold);
            EXPECT_NEAR(world.relative_state.squared_norm(), 1.0, kAlgebraTolerance);
        }
        EXPECT_NEAR(total, 1.0, kPipelineTolerance);
        EXPECT_GE(fidelity(reconstruct(decomp), psi), 1.0 - kPipelineTolerance);
    }
}

TEST(WorldsTest, ThresholdDropsSmallComponents) {
    // Weight 1e-12 on label 1 vanishes below the default threshold.
    const double tiny = 1e-6;
    std::vector<Amplitude> amps = {Amplitude{std::sqrt(1.0 - tiny * tiny), 0.0}, {},
                                   Amplitude{tiny, 0.0}, {}};
    const StateVector psi(2, std::move(amps));
    const WorldDecomposition decomp = decompose(psi, {1, 1});
    ASSERT_EQ(decomp.world_count(), 1);
    EXPECT_EQ(decomp.worlds[0].label, "0");
    EXPECT_NEAR(decomp.residual, tiny * tiny, kAlgebraTolerance);

    // With a looser threshold the same component is a world again.
    EXPECT_EQ(decompose(psi, {1, 1}, 1e-14).world_count(), 2);

    EXPECT_THROW(decompose(psi, {1, 1}, 0.0), std::invalid_argument);
    EXPECT_THROW(decompose(psi, {1, 1}, 1.0), std::invalid_argument);
}

TEST(WorldsTest, WorldVectorsAreOrthogonal) {
    Prng prng(62);
    const StateVector psi = random_state(4, prng);
    const RegisterLayout layout{2, 2};
    const WorldDecomposition decomp = decompose(psi, layout);
    for (std::size_t i = 0; i < decomp.worlds.size(); ++i) {
        for (std::size_t j = i + 1; j < decomp.worlds.size(); ++j) {
            const Amplitude overlap = inner_product(world_vector(decomp.worlds[i], layout),
                                                    world_vector(decomp.worlds[j], layout));
            EXPECT_LT(std::abs(overlap), kAlgebraTolerance);
        }
    }
}

TEST(WorldsTest, WorldCountAfterHadamard1) {
    EXPECT_EQ(world_count_after_hadamard1(1), 2);
    EXPECT_EQ(world_count_after_hadamard1(3), 8);
    EXPECT_THROW(world_count_after_hadamard1(0), std::invalid_argument);

    // All weights 2^-n.
    StateVector state = apply_gate(zero_state(4), hadamard_layer({0, 1, 2}));
    const WorldDecomposition decomp = decompose(state, {3, 1});
    ASSERT_EQ(decomp.world_count(), 8);
    for (const World& world : decomp.worlds) {
        EXPECT_NEAR(world.weight, 0.125, kAlgebraTolerance);
    }
}

TEST(WorldsTest, RegisterBGatesAreExactlyWorldDiagonal) {
    Prng prng(63);
    const StateVector psi = random_state(3, prng);
    const RegisterLayout layout{2, 1};
    const WorldDecomposition decomp = decompose(psi, layout);

    const GateSpec gate = register_b_gate(2, 1, random_unitary(2, prng));
    const InterferenceMatrix matrix = interference_matrix(decomp, gate);
    EXPECT_TRUE(matrix.world_diagonal());
    // The label subspaces are invariant, so the off-diagonal mass is exactly 0.
    EXPECT_LT(matrix.max_offdiagonal(), 1e-15);
    for (std::size_t i = 0; i < matrix.mass.size(); ++i) {
        double row = 0.0;
        for (double m : matrix.mass[i]) {
            row += m;
        }
        EXPECT_NEAR(row, 1.0, kPipelineTolerance);
    }
}

TEST(WorldsTest, OracleGatesAreWorldDiagonal) {
    Prng prng(64);
    for (int n = 1; n <= 3; ++n) {
        const BooleanFunction f = random_function(n, prng);
        const StateVector psi = random_state(n + 1, prng);
        const RegisterLayout layout{n, 1};
        const WorldDecomposition decomp = decompose(psi, layout);
        const InterferenceMatrix matrix =
            interference_matrix(decomp, GateSpec{OracleGate{f, layout}});
        EXPECT_TRUE(matrix.world_diagonal());
        EXPECT_LT(matrix.max_offdiagonal(), kAlgebraTolerance);

        // Same conclusion via the brute-force oracle, world by world.
        for (std::size_t i = 0; i < decomp.worlds.size(); ++i) {
            const StateVector moved =
                brute_force_uf(world_vector(decomp.worlds[i], layout), f, layout);
            const WorldDecomposition after = decompose(moved, layout);
            ASSERT_EQ(after.world_count(), 1);
            EXPECT_EQ(after.worlds[0].label, decomp.worlds[i].label);
        }
    }
}

// The closing Hadamard mixes the two worlds half and half.
TEST(WorldsTest, FinalHadamardMovesHalfTheMass) {
    const WorldDecomposition decomp = decompose(deutsch_state_after_hadamard1(), {1, 1});
    const InterferenceMatrix matrix = interference_matrix(decomp, hadamard(0));
    ASSERT_EQ(matrix.mass.size(), 2u);
    EXPECT_NEAR(matrix.mass[0][1], 0.5, kAlgebraTolerance);
    EXPECT_NEAR(matrix.mass[1][0], 0.5, kAlgebraTolerance);
    EXPECT_NEAR(matrix.mass[0][0], 0.5, kAlgebraTolerance);
    EXPECT_FALSE(matrix.world_diagonal());
}

TEST(WorldsTest, InterferenceMatrixRequiresWorlds) {
    WorldDecomposition empty;
    empty.layout = RegisterLayout{1, 1};
    EXPECT_THROW(interference_matrix(empty, hadamard(0)), std::invalid_argument);
}

TEST(WorldsTest, TrackDeutschRun) {
    const DeutschResult result = deutsch_run(parse_truth_table("01"), 7);
    const WorldTrace trace = track(result.trace, {1, 1});
    ASSERT_EQ(trace.per_step.size(), 5u);
    const int expected_counts[] = {1, 2, 2, 1, 1};
    for (int i = 0; i < 5; ++i) {
        EXPECT_EQ(trace.per_step[static_cast<std::size_t>(i)].world_count(),
                  expected_counts[i]);
    }
    int splits = 0;
    int merges = 0;
    for (const WorldEvent& event : trace.events) {
        splits += event.kind == EventKind::kSplit ? 1 : 0;
        merges += event.kind == EventKind::kMerge ? 1 : 0;
    }
    EXPECT_EQ(splits, 1);
    EXPECT_EQ(merges, 1);
    EXPECT_EQ(trace.events[0].kind, EventKind::kSplit);
    EXPECT_EQ(trace.events[0].count_before, 1);
    EXPECT_EQ(trace.events[0].count_after, 2);
}

TEST(WorldsTest, TrackStableTrace) {
    StepTrace trace;
    const StateVector psi = deutsch_state_after_hadamard1();
    for (int i = 0; i < 4; ++i) {
        trace.steps.push_back(Step{i, Stage::kInit, "idle", apply_gate(psi, identity_gate())});
    }
    const WorldTrace world_trace = track(trace, {1, 1});
    ASSERT_EQ(world_trace.events.size(), 3u);
    for (const WorldEvent& event : world_trace.events) {
        EXPECT_EQ(event.kind, EventKind::kStable);
    }
}

// A single Hadamard on a lone qubit splits one world into two; register B is
// empty (n_b = 0) and the relative states are bare phases.
TEST(WorldsTest, TrackSplitWithEmptyRegisterB) {
    StepTrace trace;
    trace.steps.push_back(Step{0, Stage::kInit, "start", zero_state(1)});
    trace.steps.push_back(
        Step{1, Stage::kHadamard1, "H", apply_gate(zero_state(1), hadamard(0))});
    const WorldTrace world_trace = track(trace, {1, 0});
    ASSERT_EQ(world_trace.per_step.size(), 2u);
    EXPECT_EQ(world_trace.per_step[0].world_count(), 1);
    EXPECT_EQ(world_trace.per_step[1].world_count(), 2);
    ASSERT_EQ(world_trace.events.size(), 1u);
    EXPECT_EQ(world_trace.events[0].kind, EventKind::kSplit);
    EXPECT_EQ(world_trace.per_step[1].decomposition.worlds[0].relative_state.dim(), 1u);
}

TEST(WorldsTest, AuditDeutschTrace) {
    const DeutschResult result = deutsch_run(parse_truth_table("01"), 7);
    const InformationAudit audit = audit_information(result.trace, {1, 1});
    EXPECT_EQ(audit.worlds_max, 2);
    EXPECT_EQ(audit.bits_per_world, 1);
    EXPECT_EQ(audit.classical_bits_to_describe, 4);
    EXPECT_LE(audit.retrievable_bits, 1.0 + kAlgebraTolerance);
}

// A classical computation is a one-world trace throughout.
TEST(WorldsTest, AuditClassicalTraceHasOneWorld) {
    const BooleanFunction f = parse_truth_table("01");
    const std::uint64_t x = 1;
    StepTrace trace;
    trace.steps.push_back(Step{0, Stage::kInit, "input", basis_state(2, x << 1)});
    trace.steps.push_back(
        Step{1, Stage::kManipulation, "evaluate",
             basis_state(2, (x << 1) | static_cast<std::uint64_t>(f(x)))});
    const InformationAudit audit = audit_information(trace, {1, 1});
    EXPECT_EQ(audit.worlds_max, 1);
}

TEST(WorldsTest, AuditPipelineN3) {
    const DeutschResult result = pipeline_run(parse_truth_table("00000000"), 7);
    const InformationAudit audit = audit_information(result.trace, {3, 1});
    EXPECT_EQ(audit.worlds_max, 8);
    EXPECT_EQ(audit.classical_bits_to_describe, 16);
}

// A unitary acting on register B alone changes no labels and no weights, and
// rotates every relative state the same way (Remark-5 style global action).
TEST(WorldsTest, RegisterBUnitariesActIdenticallyOnEveryWorld) {
    Prng prng(65);
    for (int trial = 0; trial < 25; ++trial) {
        const int n_a = 1 + static_cast<int>(prng.below(2));
        const int n_b = 1 + static_cast<int>(prng.below(2));
        const RegisterLayout layout{n_a, n_b};
        const StateVector psi = random_state(layout.total(), prng);

        const std::vector<Amplitude> e = random_unitary(std::uint64_t{1} << n_b, prng);
        const StateVector moved = apply_gate(psi, register_b_gate(n_a, n_b, e));

        const WorldDecomposition before = decompose(psi, layout);
        const WorldDecomposition after = decompose(moved, layout);
        ASSERT_EQ(before.world_count(), after.world_count());
        const MatrixGate e_gate{n_b, e};
        for (int i = 0; i < before.world_count(); ++i) {
            const std::size_t idx = static_cast<std::size_t>(i);
            EXPECT_EQ(before.worlds[idx].label, after.worlds[idx].label);
            EXPECT_NEAR(before.worlds[idx].weight, after.worlds[idx].weight,
                        kAlgebraTolerance);
            const StateVector rotated =
                apply_gate(before.worlds[idx].relative_state, GateSpec{e_gate});
            EXPECT_GE(fidelity(rotated, after.worlds[idx].relative_state),
                      1.0 - kAlgebraTolerance);
        }
    }
}

// Measuring register A yields each label with its world weight, and leaves
// register B in that world's relative state.
TEST(WorldsTest, MeasurementCorrelatesWithWorlds) {
    Prng prng(66);
    const RegisterLayout layout{2, 2};
    const StateVector psi = random_state(4, prng);
    const WorldDecomposition decomp = decompose(psi, layout);

    const std::vector<int> register_a = all_qubits(2);
    const auto dist = outcome_distribution(psi, register_a);
    for (const World& world : decomp.worlds) {
        std::uint64_t label = 0;
        for (char c : world.label) {
            label = (label << 1) | (c == '1' ? 1 : 0);
        }
        EXPECT_NEAR(dist[label], world.weight, kAlgebraTolerance);

        const StateVector collapsed = project(psi, register_a, label);
        EXPECT_GE(fidelity(collapsed, world_vector(world, layout)),
                  1.0 - kAlgebraTolerance);
    }
}

// World-diagonal gates cannot change the world count while every weight
// stays above threshold.
TEST(WorldsTest, DiagonalGatesPreserveWorldCount) {
    Prng prng(67);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + static_cast<int>(prng.below(2));
        const BooleanFunction f = random_function(n - 1, prng);
        const RegisterLayout layout{n - 1, 1};
        const StateVector psi = random_state(n, prng);
        const GateSpec gate = GateSpec{OracleGate{f, layout}};
        ASSERT_TRUE(interference_matrix(decompose(psi, layout), gate).world_diagonal());
        EXPECT_EQ(decompose(apply_gate(psi, gate), layout).world_count(),
                  decompose(psi, layout).world_count());
    }
}

}  // namespace
}  // namespace qcw
