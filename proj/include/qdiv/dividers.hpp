#pragma once

#include "qdiv/basis_state.hpp"
#include "qdiv/blocks.hpp"
#include "qdiv/circuit.hpp"

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qdiv {

enum class DividerKind { Restoring, NonRestoring };

inline std::string kind_name(DividerKind kind) {
    return kind == DividerKind::Restoring ? "restoring" : "nonrestoring";
}

/// Which physical register holds a logical output once the circuit has run.
enum class RegisterTag { Q, R };

inline std::string tag_name(RegisterTag tag) { return tag == RegisterTag::Q ? "Q" : "R"; }

/// Maps the algorithm roles onto qubit indices. For the restoring divider the
/// quotient bits accumulate in the physical R register (bit q_{n-i} lands at
/// R_{n-i}) and the remainder ends in Q; the non-restoring divider leaves the
/// quotient in Q and the remainder in R. Both assignments are pinned by the
/// exhaustive verification sweep.
struct DividerLayout {
    DividerKind kind;
    std::uint32_t n;
    std::vector<QubitId> q_reg;
    std::vector<QubitId> r_reg;
    std::vector<QubitId> b_reg;
    RegisterTag quotient_source;
    RegisterTag remainder_source;

    const std::vector<QubitId>& source(RegisterTag tag) const {
        return tag == RegisterTag::Q ? q_reg : r_reg;
    }
};

struct DivisionResult {
    std::uint64_t quotient = 0;
    std::uint64_t remainder = 0;
    std::uint64_t b_out = 0;
};

/// Restoring divider (n >= 2): n iterations of subtract / copy sign /
/// conditional restore / complement, the first n-1 on a sliding window Y that
/// combines the top of Q with the bottom of R, the last on Q itself with R_0
/// as the flag. The window is an index list; no qubits move.
inline std::pair<Circuit, DividerLayout> build_restoring(std::uint32_t n) {
    if (n < 2) {
        throw std::invalid_argument("restoring divider needs n >= 2");
    }
    Circuit circuit(3 * n);
    DividerLayout layout;
    layout.kind = DividerKind::Restoring;
    layout.n = n;
    for (std::uint32_t i = 0; i < n; ++i) {
        layout.q_reg.push_back(i);
        layout.r_reg.push_back(n + i);
        layout.b_reg.push_back(2 * n + i);
    }
    circuit.set_register("Q", layout.q_reg);
    circuit.set_register("R", layout.r_reg);
    circuit.set_register("B", layout.b_reg);
    layout.quotient_source = RegisterTag::R;
    layout.remainder_source = RegisterTag::Q;

    for (std::uint32_t i = 1; i < n; ++i) {
        // Y_0..Y_{i-1} = Q_{n-i}..Q_{n-1}, Y_i..Y_{n-1} = R_0..R_{n-1-i}
        std::vector<QubitId> y;
        for (std::uint32_t k = n - i; k < n; ++k) {
            y.push_back(layout.q_reg[k]);
        }
        for (std::uint32_t k = 0; k + i < n; ++k) {
            y.push_back(layout.r_reg[k]);
        }
        const QubitId flag = layout.r_reg[n - i];
        emit_subtractor(circuit, BlockPorts{layout.b_reg, y, std::nullopt});
        circuit.append(cnot(y[n - 1], flag));
        emit_ctrladd(circuit, BlockPorts{layout.b_reg, y, flag});
        circuit.append(x(flag));
    }
    const QubitId flag = layout.r_reg[0];
    emit_subtractor(circuit, BlockPorts{layout.b_reg, layout.q_reg, std::nullopt});
    circuit.append(cnot(layout.q_reg[n - 1], flag));
    emit_ctrladd(circuit, BlockPorts{layout.b_reg, layout.q_reg, flag});
    circuit.append(x(flag));

    return {std::move(circuit), std::move(layout)};
}

/// Non-restoring divider (n >= 2): initial subtraction into Q, then n-1
/// rounds of complement-and-conditional-add-or-subtract on the sliding
/// window, then a width n-1 conditional correction of R.
inline std::pair<Circuit, DividerLayout> build_nonrestoring(std::uint32_t n) {
    if (n < 2) {
        throw std::invalid_argument("non-restoring divider needs n >= 2");
    }
    Circuit circuit(3 * n - 1);
    DividerLayout layout;
    layout.kind = DividerKind::NonRestoring;
    layout.n = n;
    for (std::uint32_t i = 0; i < n; ++i) {
        layout.q_reg.push_back(i);
    }
    for (std::uint32_t i = 0; i + 1 < n; ++i) {
        layout.r_reg.push_back(n + i);
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        layout.b_reg.push_back(2 * n - 1 + i);
    }
    circuit.set_register("Q", layout.q_reg);
    circuit.set_register("R", layout.r_reg);
    circuit.set_register("B", layout.b_reg);
    layout.quotient_source = RegisterTag::Q;
    layout.remainder_source = RegisterTag::R;

    emit_subtractor(circuit, BlockPorts{layout.b_reg, layout.q_reg, std::nullopt});

    for (std::uint32_t i = 1; i < n; ++i) {
        const QubitId flag = layout.q_reg[n - i];
        circuit.append(x(flag));
        // Y_0..Y_{i-1} = R_{n-1-i}..R_{n-2}, Y_i..Y_{n-1} = Q_0..Q_{n-1-i}
        std::vector<QubitId> y;
        for (std::uint32_t k = n - 1 - i; k + 1 < n; ++k) {
            y.push_back(layout.r_reg[k]);
        }
        for (std::uint32_t k = 0; k + i < n; ++k) {
            y.push_back(layout.q_reg[k]);
        }
        emit_addsub(circuit, BlockPorts{layout.b_reg, y, flag});
    }

    std::vector<QubitId> b_low(layout.b_reg.begin(), layout.b_reg.end() - 1);
    emit_ctrladd(circuit, BlockPorts{b_low, layout.r_reg, layout.q_reg[0]});
    circuit.append(x(layout.q_reg[0]));

    return {std::move(circuit), std::move(layout)};
}

inline std::pair<Circuit, DividerLayout> build_divider(DividerKind kind, std::uint32_t n) {
    return kind == DividerKind::Restoring ? build_restoring(n) : build_nonrestoring(n);
}

/// Operand domain: both inputs positive in two's complement, so the top bit
/// must be clear, and b = 0 is rejected (the circuit output for it is
/// unspecified).
inline void check_operands(std::uint32_t n, std::uint64_t a, std::uint64_t b) {
    const std::uint64_t limit = std::uint64_t{1} << (n - 1);
    if (a >= limit) {
        throw std::out_of_range("dividend out of range: MSB must be 0");
    }
    if (b == 0 || b >= limit) {
        throw std::out_of_range("divisor out of range: need 1 <= b < 2^(n-1)");
    }
}

/// Encoding without the domain check, for probing invalid operands.
inline BasisState encode_raw(const DividerLayout& layout, std::uint64_t a, std::uint64_t b) {
    const std::uint32_t n = layout.n;
    const std::uint32_t total = layout.kind == DividerKind::Restoring ? 3 * n : 3 * n - 1;
    BasisState state(0, total);
    if (layout.kind == DividerKind::Restoring) {
        state.write(layout.q_reg, a);
        state.write(layout.b_reg, b);
    } else {
        state.set_bit(layout.q_reg[0], (a >> (n - 1)) & 1U);
        state.write(layout.r_reg, a & ((std::uint64_t{1} << (n - 1)) - 1));
        state.write(layout.b_reg, b);
    }
    return state;
}

inline BasisState encode_inputs(const DividerLayout& layout, std::uint64_t a, std::uint64_t b) {
    check_operands(layout.n, a, b);
    return encode_raw(layout, a, b);
}

inline DivisionResult decode_outputs(const DividerLayout& layout, const BasisState& state) {
    DivisionResult result;
    result.quotient = state.read(layout.source(layout.quotient_source));
    result.remainder = state.read(layout.source(layout.remainder_source));
    result.b_out = state.read(layout.b_reg);
    return result;
}

inline nlohmann::json layout_to_json(const DividerLayout& layout) {
    nlohmann::json doc;
    doc["kind"] = kind_name(layout.kind);
    doc["n"] = layout.n;
    doc["q"] = layout.q_reg;
    doc["r"] = layout.r_reg;
    doc["b"] = layout.b_reg;
    doc["quotient_source"] = tag_name(layout.quotient_source);
    doc["remainder_source"] = tag_name(layout.remainder_source);
    return doc;
}

} // namespace qdiv
