#include "qdiv/blocks.hpp"
#include "qdiv/dividers.hpp"
#include "qdiv/lower.hpp"
#include "qdiv/sim.hpp"

#include "helpers.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace qdiv;

TEST(Reversible, SingleGateTruthTables) {
    Circuit cx_only(1);
    cx_only.append(x(0));
    EXPECT_EQ(run_reversible(cx_only, BasisState(0, 1)).bits, 1u);

    Circuit tof(3);
    tof.append(toffoli(0, 1, 2));
    // controls on qubits 0 and 1 set -> target flips
    EXPECT_EQ(run_reversible(tof, BasisState(0b011, 3)).bits, 0b111u);
    EXPECT_EQ(run_reversible(tof, BasisState(0b001, 3)).bits, 0b001u);
    EXPECT_EQ(run_reversible(tof, BasisState(0b111, 3)).bits, 0b011u);
}

TEST(Reversible, RejectsNonReversibleKinds) {
    Circuit c(1);
    c.append(h(0));
    EXPECT_THROW(run_reversible(c, BasisState(0, 1)), std::invalid_argument);
}

TEST(Reversible, ReversedGateListInvertsCircuit) {
    const Circuit c = qdiv::testing::random_reversible(8, 100, 31);
    Circuit inverse(8);
    const auto& gates = c.gates();
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        inverse.append(*it);
    }
    for (std::uint64_t bits : {0ull, 7ull, 99ull, 200ull, 255ull}) {
        const BasisState forward = run_reversible(c, BasisState(bits, 8));
        EXPECT_EQ(run_reversible(inverse, forward).bits, bits);
    }
}

TEST(StateVector, HadamardAmplitudes) {
    Circuit c(1);
    c.append(h(0));
    const StateVector sv = run_statevector(c, BasisState(0, 1));
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2_v<double>;
    EXPECT_NEAR(sv.amplitudes[0].real(), inv_sqrt2, 1e-12);
    EXPECT_NEAR(sv.amplitudes[1].real(), inv_sqrt2, 1e-12);
    EXPECT_NEAR(sv.amplitudes[0].imag(), 0.0, 1e-12);
}

TEST(StateVector, TThenTdgIsIdentity) {
    Circuit c(2);
    c.append(h(0));
    c.append(h(1));
    c.append(t(0));
    c.append(tdg(0));
    c.append(s(1));
    c.append(sdg(1));
    c.append(h(0));
    c.append(h(1));
    const StateVector sv = run_statevector(c, BasisState(0, 2));
    EXPECT_NEAR(std::abs(sv.amplitudes[0] - Amplitude{1.0, 0.0}), 0.0, 1e-12);
    for (std::uint64_t i = 1; i < 4; ++i) {
        EXPECT_NEAR(std::abs(sv.amplitudes[i]), 0.0, 1e-12);
    }
}

TEST(StateVector, NormPreservedOverLongCircuit) {
    const Circuit c = qdiv::testing::random_reversible(10, 1500, 41);
    const Circuit lowered = lower_to_clifford_t(c);
    ASSERT_GT(lowered.size(), 5000u);
    const StateVector sv = run_statevector(lowered, BasisState(123, 10));
    EXPECT_NEAR(sv.norm(), 1.0, 1e-9);
}

TEST(StateVector, QubitCapEnforced) {
    Circuit c(17);
    c.append(x(0));
    EXPECT_THROW(run_statevector(c, BasisState(0, 17)), std::invalid_argument);
}

TEST(Permutation, EmptyCircuitIsIdentity) {
    const Circuit c(3);
    const auto perm = permutation_of(c);
    for (std::uint64_t i = 0; i < perm.size(); ++i) {
        EXPECT_EQ(perm[i], i);
    }
}

TEST(Permutation, SingleCnotSwapsOddPairs) {
    Circuit c(2);
    c.append(cnot(0, 1));
    const auto perm = permutation_of(c);
    EXPECT_EQ(perm[0], 0u);
    EXPECT_EQ(perm[1], 3u);
    EXPECT_EQ(perm[2], 2u);
    EXPECT_EQ(perm[3], 1u);
}

TEST(Permutation, CtrlAddFixesControlLowStates) {
    const Circuit c = build_ctrladd(2);
    const auto perm = permutation_of(c);
    const QubitId ctrl = c.reg("CTRL")[0];
    for (std::uint64_t i = 0; i < perm.size(); ++i) {
        if (((i >> ctrl) & 1u) == 0) {
            EXPECT_EQ(perm[i], i);
        }
    }
}

TEST(Permutation, CapEnforced) {
    Circuit c(25);
    c.append(x(0));
    EXPECT_THROW(permutation_of(c), std::invalid_argument);
}

TEST(Equivalence, LoweredSubtractorMatchesBitLevel) {
    EXPECT_TRUE(check_lowering_equivalence(build_subtractor(2), 1e-9));
}

TEST(Equivalence, LoweredDividersMatchBitLevel) {
    EXPECT_TRUE(check_lowering_equivalence(build_restoring(2).first, 1e-9));
    EXPECT_TRUE(check_lowering_equivalence(build_nonrestoring(2).first, 1e-9));
}

TEST(Equivalence, ToffoliFreeCircuitTriviallyEquivalent) {
    Circuit c(3);
    c.append(cnot(0, 1));
    c.append(x(2));
    EXPECT_TRUE(check_lowering_equivalence(c, 1e-12));
}

TEST(Equivalence, EngineAgreementOnRandomCircuits) {
    for (std::uint32_t seed : {51u, 52u}) {
        EXPECT_TRUE(check_lowering_equivalence(qdiv::testing::random_reversible(8, 60, seed)));
    }
    EXPECT_TRUE(check_lowering_equivalence(qdiv::testing::random_reversible(10, 40, 53)));
}

TEST(Verify, SmallestNonRestoringInstance) {
    const VerificationReport report = verify_divider(DividerKind::NonRestoring, 2);
    EXPECT_EQ(report.pairs_tested, 2u);
    EXPECT_TRUE(report.ok());
    EXPECT_TRUE(report.b_restored_everywhere);
}

TEST(Verify, RestoringPairCount) {
    const VerificationReport report = verify_divider(DividerKind::Restoring, 4);
    EXPECT_EQ(report.pairs_tested, 56u);
    EXPECT_TRUE(report.ok());
    EXPECT_EQ(report.quotient_source, "R");
    EXPECT_EQ(report.remainder_source, "Q");
    // the opposite register assignment cannot explain the sweep, so the
    // discovered sources are unique
    EXPECT_FALSE(report.swapped_assignment_also_fits);
}

TEST(Verify, SourceDiscoveryIsUniqueForBothKinds) {
    for (auto kind : {DividerKind::Restoring, DividerKind::NonRestoring}) {
        for (std::uint32_t n = 2; n <= 5; ++n) {
            const VerificationReport report = verify_divider(kind, n);
            EXPECT_TRUE(report.ok());
            EXPECT_FALSE(report.swapped_assignment_also_fits)
                << kind_name(kind) << " n=" << n;
        }
    }
}

TEST(Verify, DeterministicAcrossJobCounts) {
    const VerificationReport serial = verify_divider(DividerKind::NonRestoring, 5, 1);
    const VerificationReport parallel = verify_divider(DividerKind::NonRestoring, 5, 4);
    EXPECT_EQ(serial.pairs_tested, parallel.pairs_tested);
    EXPECT_EQ(serial.failures.size(), parallel.failures.size());
    EXPECT_EQ(serial.b_restored_everywhere, parallel.b_restored_everywhere);
}

TEST(Verify, ProbeModeRecordsInvalidOperands) {
    const VerificationReport report = verify_divider(DividerKind::Restoring, 3, 2, true);
    EXPECT_TRUE(report.ok());
    EXPECT_FALSE(report.probes.empty());
    // probes cover b = 0 and operands with the MSB set
    bool saw_zero_divisor = false;
    for (const ProbeRecord& probe : report.probes) {
        if (probe.b == 0) {
            saw_zero_divisor = true;
        }
    }
    EXPECT_TRUE(saw_zero_divisor);
}

TEST(Verify, WidthRangeEnforced) {
    EXPECT_THROW(verify_divider(DividerKind::Restoring, 1), std::invalid_argument);
    EXPECT_THROW(verify_divider(DividerKind::Restoring, 9), std::invalid_argument);
}

TEST(Verify, UpperWidthOfContractDomain) {
    // n = 7 and n = 8 sit above the acceptance sweep but inside the contract
    for (auto kind : {DividerKind::Restoring, DividerKind::NonRestoring}) {
        const VerificationReport report = verify_divider(kind, 7);
        EXPECT_TRUE(report.ok()) << kind_name(kind);
        EXPECT_EQ(report.pairs_tested, 64u * 63u);
    }
    const VerificationReport widest = verify_divider(DividerKind::NonRestoring, 8);
    EXPECT_TRUE(widest.ok());
    EXPECT_TRUE(widest.garbage_free);
    EXPECT_EQ(widest.pairs_tested, 128u * 127u);
}

TEST(StateVector, ToffoliRunsUnlowered) {
    Circuit c(3);
    c.append(toffoli(0, 1, 2));
    const StateVector sv = run_statevector(c, BasisState(0b011, 3));
    EXPECT_NEAR(std::abs(sv.amplitudes[0b111] - Amplitude{1.0, 0.0}), 0.0, 1e-12);
}

TEST(Verify, ReportSerializesToJson) {
    const VerificationReport report = verify_divider(DividerKind::NonRestoring, 3);
    const nlohmann::json doc = report_to_json(report);
    EXPECT_EQ(doc["kind"], "nonrestoring");
    EXPECT_EQ(doc["n"], 3);
    EXPECT_EQ(doc["pairs_tested"], 12);
    EXPECT_TRUE(doc["failures"].empty());
    EXPECT_TRUE(doc["b_restored_everywhere"].get<bool>());
}
