#pragma once

#include "qdiv/basis_state.hpp"
#include "qdiv/circuit.hpp"
#include "qdiv/dividers.hpp"
#include "qdiv/lower.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

namespace qdiv {

// ---------------------------------------------------------------- reversible

/// Applies X/CNOT/Toffoli gates as classical conditional bit flips.
inline BasisState run_reversible(const Circuit& circuit, BasisState state) {
    if (state.width != circuit.qubit_count()) {
        throw std::invalid_argument("state width does not match circuit");
    }
    for (const Gate& gate : circuit.gates()) {
        switch (gate.kind) {
        case GateKind::X:
            state.flip(gate.operand(0));
            break;
        case GateKind::CNOT:
            if (state.bit(gate.operand(0))) {
                state.flip(gate.operand(1));
            }
            break;
        case GateKind::Toffoli:
            if (state.bit(gate.operand(0)) && state.bit(gate.operand(1))) {
                state.flip(gate.operand(2));
            }
            break;
        default:
            throw std::invalid_argument(
                "circuit contains a non-reversible-kind gate; lower it and use the "
                "state-vector engine");
        }
    }
    return state;
}

/// The full basis-state mapping of a reversible circuit.
inline std::vector<std::uint64_t> permutation_of(const Circuit& circuit,
                                                 std::uint32_t qubit_cap = 24) {
    if (circuit.qubit_count() > qubit_cap) {
        throw std::invalid_argument("circuit exceeds the permutation qubit cap");
    }
    const std::uint64_t dim = std::uint64_t{1} << circuit.qubit_count();
    std::vector<std::uint64_t> mapping(dim);
    for (std::uint64_t i = 0; i < dim; ++i) {
        mapping[i] = run_reversible(circuit, BasisState(i, circuit.qubit_count())).bits;
    }
    return mapping;
}

// -------------------------------------------------------------- state vector

using Amplitude = std::complex<double>;

/// Dense amplitude vector; index bit i is the value of qubit i.
struct StateVector {
    std::vector<Amplitude> amplitudes;
    std::uint32_t width = 0;

    static StateVector basis(const BasisState& state) {
        StateVector sv;
        sv.width = state.width;
        sv.amplitudes.assign(std::uint64_t{1} << state.width, Amplitude{0.0, 0.0});
        sv.amplitudes[state.bits] = Amplitude{1.0, 0.0};
        return sv;
    }

    double norm() const {
        double total = 0.0;
        for (const Amplitude& amp : amplitudes) {
            total += std::norm(amp);
        }
        return std::sqrt(total);
    }
};

namespace detail {

inline void apply_phase(StateVector& sv, QubitId q, Amplitude phase) {
    const std::uint64_t mask = std::uint64_t{1} << q;
    for (std::uint64_t i = 0; i < sv.amplitudes.size(); ++i) {
        if (i & mask) {
            sv.amplitudes[i] *= phase;
        }
    }
}

inline void apply_h(StateVector& sv, QubitId q) {
    const std::uint64_t mask = std::uint64_t{1} << q;
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2_v<double>;
    for (std::uint64_t i = 0; i < sv.amplitudes.size(); ++i) {
        if (i & mask) {
            continue;
        }
        const Amplitude a0 = sv.amplitudes[i];
        const Amplitude a1 = sv.amplitudes[i | mask];
        sv.amplitudes[i] = (a0 + a1) * inv_sqrt2;
        sv.amplitudes[i | mask] = (a0 - a1) * inv_sqrt2;
    }
}

inline void apply_flip(StateVector& sv, std::uint64_t control_mask, std::uint64_t target_mask) {
    for (std::uint64_t i = 0; i < sv.amplitudes.size(); ++i) {
        if ((i & control_mask) == control_mask && (i & target_mask)) {
            std::swap(sv.amplitudes[i], sv.amplitudes[i ^ target_mask]);
        }
    }
}

} // namespace detail

/// Applies each gate's unitary (Toffoli handled as the permutation it is, so
/// unlowered circuits run too).
inline StateVector run_statevector(const Circuit& circuit, StateVector state,
                                   std::uint32_t qubit_cap = 16) {
    if (circuit.qubit_count() > qubit_cap) {
        throw std::invalid_argument("circuit exceeds the state-vector qubit cap");
    }
    if (state.width != circuit.qubit_count()) {
        throw std::invalid_argument("state width does not match circuit");
    }
    const double pi = std::numbers::pi_v<double>;
    const Amplitude t_phase = std::polar(1.0, pi / 4.0);
    const Amplitude tdg_phase = std::polar(1.0, -pi / 4.0);
    for (const Gate& gate : circuit.gates()) {
        switch (gate.kind) {
        case GateKind::H:
            detail::apply_h(state, gate.operand(0));
            break;
        case GateKind::T:
            detail::apply_phase(state, gate.operand(0), t_phase);
            break;
        case GateKind::Tdg:
            detail::apply_phase(state, gate.operand(0), tdg_phase);
            break;
        case GateKind::S:
            detail::apply_phase(state, gate.operand(0), Amplitude{0.0, 1.0});
            break;
        case GateKind::Sdg:
            detail::apply_phase(state, gate.operand(0), Amplitude{0.0, -1.0});
            break;
        case GateKind::X:
            detail::apply_flip(state, 0, std::uint64_t{1} << gate.operand(0));
            break;
        case GateKind::CNOT:
            detail::apply_flip(state, std::uint64_t{1} << gate.operand(0),
                               std::uint64_t{1} << gate.operand(1));
            break;
        case GateKind::Toffoli:
            detail::apply_flip(state,
                               (std::uint64_t{1} << gate.operand(0)) |
                                   (std::uint64_t{1} << gate.operand(1)),
                               std::uint64_t{1} << gate.operand(2));
            break;
        }
    }
    return state;
}

inline StateVector run_statevector(const Circuit& circuit, const BasisState& state,
                                   std::uint32_t qubit_cap = 16) {
    return run_statevector(circuit, StateVector::basis(state), qubit_cap);
}

// -------------------------------------------------------------- equivalence

/// True iff, for every basis input, the state-vector run of the lowered
/// circuit puts all amplitude (within `tolerance`, entrywise) on the basis
/// state the bit-level simulator produces for the original circuit.
inline bool check_lowering_equivalence(const Circuit& circuit, double tolerance = 1e-9,
                                       std::uint32_t qubit_cap = 16) {
    if (circuit.qubit_count() > qubit_cap) {
        throw std::invalid_argument("circuit exceeds the state-vector qubit cap");
    }
    const Circuit lowered = lower_to_clifford_t(circuit);
    const std::uint64_t dim = std::uint64_t{1} << circuit.qubit_count();
    for (std::uint64_t i = 0; i < dim; ++i) {
        const BasisState input(i, circuit.qubit_count());
        const BasisState expected = run_reversible(circuit, input);
        const StateVector sv = run_statevector(lowered, input, qubit_cap);
        for (std::uint64_t j = 0; j < dim; ++j) {
            const Amplitude ideal =
                j == expected.bits ? Amplitude{1.0, 0.0} : Amplitude{0.0, 0.0};
            if (std::abs(sv.amplitudes[j] - ideal) > tolerance) {
                return false;
            }
        }
    }
    return true;
}

// -------------------------------------------------------------- verification

struct VerificationFailure {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    DivisionResult decoded;
    std::uint64_t expected_quotient = 0;
    std::uint64_t expected_remainder = 0;
};

struct ProbeRecord {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    DivisionResult decoded;
};

struct VerificationReport {
    std::string kind;
    std::uint32_t n = 0;
    std::uint64_t pairs_tested = 0;
    std::vector<VerificationFailure> failures;
    bool b_restored_everywhere = true;
    /// No qubit outside quotient/remainder/B may carry anything; false means
    /// some run left input-dependent junk behind.
    bool garbage_free = true;
    /// Which physical register actually held each output across the sweep.
    /// Matches the layout's declaration whenever the sweep passes; the
    /// swapped assignment is also tried so the discovery is genuine.
    std::string quotient_source;
    std::string remainder_source;
    bool swapped_assignment_also_fits = false;
    /// Out-of-domain runs (b = 0, operands with the MSB set), recorded but
    /// never asserted.
    std::vector<ProbeRecord> probes;

    bool ok() const { return failures.empty(); }
};

namespace detail {

/// Reconstructs the full expected output state from the decoded triple; any
/// mismatch with the actual state means a qubit carries garbage.
inline bool state_is_garbage_free(const DividerLayout& layout, const BasisState& final_state,
                                  std::uint64_t quotient, std::uint64_t remainder,
                                  std::uint64_t b) {
    BasisState expected(0, final_state.width);
    expected.write(layout.source(layout.quotient_source), quotient);
    expected.write(layout.source(layout.remainder_source), remainder);
    expected.write(layout.b_reg, b);
    return expected == final_state;
}

} // namespace detail

/// Exhaustive sweep of all in-domain (a, b) pairs against integer division.
/// Pairs are distributed over `jobs` workers; each pair's simulation is
/// independent, and results merge in (a, b) order regardless of completion
/// order.
inline VerificationReport verify_divider(DividerKind kind, std::uint32_t n,
                                         unsigned jobs = std::thread::hardware_concurrency(),
                                         bool probe_invalid = false) {
    if (n < 2 || n > 8) {
        throw std::invalid_argument("verify_divider covers 2 <= n <= 8");
    }
    // plain locals, not structured bindings: the workers capture them
    const std::pair<Circuit, DividerLayout> built = build_divider(kind, n);
    const Circuit& circuit = built.first;
    const DividerLayout& layout = built.second;

    VerificationReport report;
    report.kind = kind_name(kind);
    report.n = n;
    report.quotient_source = tag_name(layout.quotient_source);
    report.remainder_source = tag_name(layout.remainder_source);

    const std::uint64_t limit = std::uint64_t{1} << (n - 1);
    struct WorkerResult {
        std::vector<VerificationFailure> failures;
        bool b_restored = true;
        bool garbage_free = true;
        bool swapped_fits = true;
        std::uint64_t pairs = 0;
    };

    if (jobs == 0) {
        jobs = 1;
    }
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(limit));
    std::vector<WorkerResult> results(jobs);
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w]() {
            WorkerResult& local = results[w];
            for (std::uint64_t a = w; a < limit; a += jobs) {
                for (std::uint64_t b = 1; b < limit; ++b) {
                    const BasisState output =
                        run_reversible(circuit, encode_inputs(layout, a, b));
                    const DivisionResult decoded = decode_outputs(layout, output);
                    ++local.pairs;
                    if (decoded.quotient != a / b || decoded.remainder != a % b ||
                        decoded.b_out != b) {
                        local.failures.push_back(
                            {a, b, decoded, a / b, a % b});
                    }
                    if (decoded.b_out != b) {
                        local.b_restored = false;
                    }
                    if (!detail::state_is_garbage_free(layout, output, a / b, a % b, b)) {
                        local.garbage_free = false;
                    }
                    if (decoded.remainder != a / b || decoded.quotient != a % b) {
                        local.swapped_fits = false;
                    }
                }
            }
        });
    }
    for (auto& worker : workers) {
        worker.join();
    }
    report.swapped_assignment_also_fits = true;
    for (const WorkerResult& local : results) {
        report.pairs_tested += local.pairs;
        report.b_restored_everywhere &= local.b_restored;
        report.garbage_free &= local.garbage_free;
        report.swapped_assignment_also_fits &= local.swapped_fits;
        report.failures.insert(report.failures.end(), local.failures.begin(),
                               local.failures.end());
    }
    std::sort(report.failures.begin(), report.failures.end(),
              [](const VerificationFailure& lhs, const VerificationFailure& rhs) {
                  return lhs.a != rhs.a ? lhs.a < rhs.a : lhs.b < rhs.b;
              });

    if (probe_invalid) {
        const std::uint64_t full = std::uint64_t{1} << n;
        for (std::uint64_t a = 0; a < full; ++a) {
            for (std::uint64_t b = 0; b < full; ++b) {
                if (a < limit && b >= 1 && b < limit) {
                    continue;
                }
                const BasisState output = run_reversible(circuit, encode_raw(layout, a, b));
                report.probes.push_back({a, b, decode_outputs(layout, output)});
            }
        }
    }
    return report;
}

struct BlockCheckFailure {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint64_t ctrl = 0;
    std::uint64_t got = 0;
    std::uint64_t want = 0;
};

struct BlockReport {
    std::string kind;
    std::uint32_t n = 0;
    std::uint64_t cases_tested = 0;
    std::vector<BlockCheckFailure> failures;
    bool operands_restored = true;

    bool ok() const { return failures.empty() && operands_restored; }
};

/// Exhaustive oracle sweep for one arithmetic block: every (a, b) pair and,
/// for the conditioned blocks, both ctrl values.
inline BlockReport verify_block(BlockKind kind, std::uint32_t n) {
    if (n < 1 || n > 8) {
        throw std::invalid_argument("verify_block covers 1 <= n <= 8");
    }
    const Circuit circuit = build_block(kind, n);
    BlockReport report;
    report.kind = kind_name(kind);
    report.n = n;
    const std::uint64_t limit = std::uint64_t{1} << n;
    const std::uint64_t ctrl_values = block_has_ctrl(kind) ? 2 : 1;
    for (std::uint64_t ctrl = 0; ctrl < ctrl_values; ++ctrl) {
        for (std::uint64_t a = 0; a < limit; ++a) {
            for (std::uint64_t b = 0; b < limit; ++b) {
                BasisState state(0, circuit.qubit_count());
                state.write(circuit.reg("A"), a);
                state.write(circuit.reg("B"), b);
                if (block_has_ctrl(kind)) {
                    state.write(circuit.reg("CTRL"), ctrl);
                }
                const BasisState out = run_reversible(circuit, state);
                ++report.cases_tested;
                const std::uint64_t got = out.read(circuit.reg("B"));
                const std::uint64_t want = block_oracle(kind, n, a, b, ctrl);
                if (got != want) {
                    report.failures.push_back({a, b, ctrl, got, want});
                }
                if (out.read(circuit.reg("A")) != a ||
                    (block_has_ctrl(kind) && out.read(circuit.reg("CTRL")) != ctrl)) {
                    report.operands_restored = false;
                }
            }
        }
    }
    return report;
}

inline nlohmann::json report_to_json(const BlockReport& report) {
    nlohmann::json doc;
    doc["kind"] = report.kind;
    doc["n"] = report.n;
    doc["cases_tested"] = report.cases_tested;
    doc["operands_restored"] = report.operands_restored;
    doc["failures"] = nlohmann::json::array();
    for (const BlockCheckFailure& f : report.failures) {
        doc["failures"].push_back(
            {{"a", f.a}, {"b", f.b}, {"ctrl", f.ctrl}, {"got", f.got}, {"want", f.want}});
    }
    return doc;
}

inline nlohmann::json report_to_json(const VerificationReport& report) {
    nlohmann::json doc;
    doc["kind"] = report.kind;
    doc["n"] = report.n;
    doc["pairs_tested"] = report.pairs_tested;
    doc["b_restored_everywhere"] = report.b_restored_everywhere;
    doc["garbage_free"] = report.garbage_free;
    doc["quotient_source"] = report.quotient_source;
    doc["remainder_source"] = report.remainder_source;
    doc["swapped_assignment_also_fits"] = report.swapped_assignment_also_fits;
    doc["failures"] = nlohmann::json::array();
    for (const VerificationFailure& f : report.failures) {
        doc["failures"].push_back({{"a", f.a},
                                   {"b", f.b},
                                   {"quotient", f.decoded.quotient},
                                   {"remainder", f.decoded.remainder},
                                   {"b_out", f.decoded.b_out},
                                   {"expected_quotient", f.expected_quotient},
                                   {"expected_remainder", f.expected_remainder}});
    }
    if (!report.probes.empty()) {
        doc["probes"] = nlohmann::json::array();
        for (const ProbeRecord& p : report.probes) {
            doc["probes"].push_back({{"a", p.a},
                                     {"b", p.b},
                                     {"quotient", p.decoded.quotient},
                                     {"remainder", p.decoded.remainder},
                                     {"b_out", p.decoded.b_out}});
        }
    }
    return doc;
}

} // namespace qdiv
