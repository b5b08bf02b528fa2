#include "qdiv/analyze.hpp"
#include "qdiv/dividers.hpp"
#include "qdiv/json_io.hpp"
#include "qdiv/lower.hpp"
#include "qdiv/sim.hpp"

#include <gtest/gtest.h>

#include <cstdint>

using namespace qdiv;

namespace {

DivisionResult run_division(DividerKind kind, std::uint32_t n, std::uint64_t a, std::uint64_t b) {
    auto [circuit, layout] = build_divider(kind, n);
    return decode_outputs(layout, run_reversible(circuit, encode_inputs(layout, a, b)));
}

} // namespace

TEST(Dividers, QubitCounts) {
    for (std::uint32_t n = 2; n <= 16; ++n) {
        auto [restoring, rl] = build_restoring(n);
        EXPECT_EQ(restoring.qubit_count(), 3 * n);
        EXPECT_EQ(rl.q_reg.size(), n);
        EXPECT_EQ(rl.r_reg.size(), n);
        EXPECT_EQ(rl.b_reg.size(), n);
        auto [nonrestoring, nl] = build_nonrestoring(n);
        EXPECT_EQ(nonrestoring.qubit_count(), 3 * n - 1);
        EXPECT_EQ(nl.q_reg.size(), n);
        EXPECT_EQ(nl.r_reg.size(), n - 1);
        EXPECT_EQ(nl.b_reg.size(), n);
    }
}

TEST(Dividers, MinimumWidth) {
    EXPECT_THROW(build_restoring(1), std::invalid_argument);
    EXPECT_THROW(build_nonrestoring(0), std::invalid_argument);
}

TEST(Dividers, Deterministic) {
    auto [c1, l1] = build_restoring(5);
    auto [c2, l2] = build_restoring(5);
    EXPECT_EQ(c1, c2);
    auto [d1, m1] = build_nonrestoring(5);
    auto [d2, m2] = build_nonrestoring(5);
    EXPECT_EQ(d1, d2);
}

TEST(Dividers, TCountFormulasHoldExactly) {
    for (std::uint32_t n = 2; n <= 64; ++n) {
        auto [restoring, rl] = build_restoring(n);
        const std::uint64_t rn = 35ull * n * n - 28ull * n;
        EXPECT_EQ(t_count(restoring), rn) << n;
        EXPECT_EQ(t_count(lower_to_clifford_t(restoring)), rn) << n;

        auto [nonrestoring, nl] = build_nonrestoring(n);
        const std::uint64_t nn = 14ull * n * n + 7ull * n - 35;
        EXPECT_EQ(t_count(nonrestoring), nn) << n;
        EXPECT_EQ(t_count(lower_to_clifford_t(nonrestoring)), nn) << n;
    }
}

TEST(Dividers, PublishedTableTCounts) {
    EXPECT_EQ(t_count(build_restoring(4).first), 448u);
    EXPECT_EQ(t_count(build_restoring(8).first), 2016u);
    EXPECT_EQ(t_count(build_nonrestoring(4).first), 217u);
    EXPECT_EQ(t_count(build_nonrestoring(8).first), 917u);
}

TEST(Dividers, NonRestoringComponentSum) {
    // one subtractor + three add-subs of width 4, one ctrl-add of width 3
    const std::uint64_t sum = 42 + 3 * 42 + (21 * 3 - 14);
    EXPECT_EQ(sum, 217u);
    EXPECT_EQ(t_count(build_nonrestoring(4).first), sum);
}

TEST(Dividers, NoHiddenAncilla) {
    for (std::uint32_t n : {2u, 4u, 7u}) {
        for (auto kind : {DividerKind::Restoring, DividerKind::NonRestoring}) {
            auto [circuit, layout] = build_divider(kind, n);
            const std::uint32_t total = layout.kind == DividerKind::Restoring ? 3 * n : 3 * n - 1;
            EXPECT_EQ(circuit.qubit_count(), total);
            EXPECT_EQ(layout.q_reg.size() + layout.r_reg.size() + layout.b_reg.size(), total);
        }
    }
}

TEST(Dividers, EncodeRestoring) {
    auto [circuit, layout] = build_restoring(4);
    const BasisState state = encode_inputs(layout, 0, 1);
    EXPECT_EQ(state.read(layout.q_reg), 0u);
    EXPECT_EQ(state.read(layout.r_reg), 0u);
    EXPECT_EQ(state.read(layout.b_reg), 1u);
    const BasisState s2 = encode_inputs(layout, 5, 3);
    EXPECT_EQ(s2.read(layout.q_reg), 5u);
    EXPECT_EQ(s2.read(layout.b_reg), 3u);
}

TEST(Dividers, EncodeNonRestoring) {
    auto [circuit, layout] = build_nonrestoring(4);
    // a = 5 = 0101: a3 = 0 lands in Q_0, a2..a0 = (1,0,1) land in R
    const BasisState state = encode_inputs(layout, 5, 2);
    EXPECT_EQ(state.read(layout.q_reg), 0u);
    EXPECT_TRUE(state.bit(layout.r_reg[0]));
    EXPECT_FALSE(state.bit(layout.r_reg[1]));
    EXPECT_TRUE(state.bit(layout.r_reg[2]));
    EXPECT_EQ(state.read(layout.b_reg), 2u);
}

TEST(Dividers, EncodeRangeErrors) {
    auto [circuit, layout] = build_restoring(4);
    EXPECT_THROW(encode_inputs(layout, 8, 1), std::out_of_range);
    EXPECT_THROW(encode_inputs(layout, 0, 0), std::out_of_range);
    EXPECT_THROW(encode_inputs(layout, 0, 8), std::out_of_range);
    EXPECT_NO_THROW(encode_inputs(layout, 7, 7));
}

TEST(Dividers, RestoringEndToEnd) {
    const DivisionResult result = run_division(DividerKind::Restoring, 4, 5, 2);
    EXPECT_EQ(result.quotient, 2u);
    EXPECT_EQ(result.remainder, 1u);
    EXPECT_EQ(result.b_out, 2u);
}

TEST(Dividers, NonRestoringEndToEnd) {
    const DivisionResult result = run_division(DividerKind::NonRestoring, 3, 3, 2);
    EXPECT_EQ(result.quotient, 1u);
    EXPECT_EQ(result.remainder, 1u);
    EXPECT_EQ(result.b_out, 2u);
}

TEST(Dividers, RestoringSmallestWidth) {
    const DivisionResult result = run_division(DividerKind::Restoring, 2, 1, 1);
    EXPECT_EQ(result.quotient, 1u);
    EXPECT_EQ(result.remainder, 0u);
}

TEST(Dividers, DecodeFromExplicitState) {
    auto [circuit, layout] = build_nonrestoring(3);
    BasisState state(0, circuit.qubit_count());
    state.write(layout.q_reg, 1);
    state.write(layout.r_reg, 1);
    state.write(layout.b_reg, 2);
    const DivisionResult result = decode_outputs(layout, state);
    EXPECT_EQ(result.quotient, 1u);
    EXPECT_EQ(result.remainder, 1u);
    EXPECT_EQ(result.b_out, 2u);
}

TEST(Dividers, OutputSources) {
    auto [rc, rl] = build_restoring(4);
    EXPECT_EQ(rl.quotient_source, RegisterTag::R);
    EXPECT_EQ(rl.remainder_source, RegisterTag::Q);
    auto [nc, nl] = build_nonrestoring(4);
    EXPECT_EQ(nl.quotient_source, RegisterTag::Q);
    EXPECT_EQ(nl.remainder_source, RegisterTag::R);
}

TEST(Dividers, ExhaustiveSweeps) {
    for (auto kind : {DividerKind::Restoring, DividerKind::NonRestoring}) {
        for (std::uint32_t n = 2; n <= 6; ++n) {
            const VerificationReport report = verify_divider(kind, n);
            EXPECT_TRUE(report.ok()) << kind_name(kind) << " n=" << n
                                     << " failures=" << report.failures.size();
            EXPECT_TRUE(report.b_restored_everywhere);
            EXPECT_TRUE(report.garbage_free);
            const std::uint64_t half = std::uint64_t{1} << (n - 1);
            EXPECT_EQ(report.pairs_tested, half * (half - 1));
        }
    }
}

TEST(Dividers, LayoutJson) {
    auto [circuit, layout] = build_restoring(4);
    const nlohmann::json doc = layout_to_json(layout);
    EXPECT_EQ(doc["kind"], "restoring");
    EXPECT_EQ(doc["n"], 4);
    EXPECT_EQ(doc["q"].size(), 4u);
    EXPECT_EQ(doc["r"].size(), 4u);
    EXPECT_EQ(doc["b"].size(), 4u);
    EXPECT_EQ(doc["quotient_source"], "R");
    EXPECT_EQ(doc["remainder_source"], "Q");

    auto [nc, nl] = build_nonrestoring(4);
    const nlohmann::json ndoc = layout_to_json(nl);
    EXPECT_EQ(ndoc["quotient_source"], "Q");
    EXPECT_EQ(ndoc["remainder_source"], "R");
    EXPECT_EQ(ndoc["r"].size(), 3u);
}

TEST(Dividers, CircuitJsonRoundTrip) {
    auto [circuit, layout] = build_nonrestoring(4);
    EXPECT_EQ(import_json(export_json(circuit)), circuit);
}
