#pragma once

#include "qdiv/circuit.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace qdiv {

/// Port lists for one arithmetic block. `a` is the operand that comes back
/// unchanged, `b` receives the result, index 0 is the least significant bit.
struct BlockPorts {
    std::vector<QubitId> a;
    std::vector<QubitId> b;
    std::optional<QubitId> ctrl;

    std::size_t width() const { return a.size(); }

    void check(bool wants_ctrl) const {
        if (a.empty()) {
            throw std::invalid_argument("block width must be at least 1");
        }
        if (a.size() != b.size()) {
            throw std::invalid_argument("operand registers must have equal width");
        }
        if (wants_ctrl && !ctrl) {
            throw std::invalid_argument("block requires a ctrl qubit");
        }
        std::vector<QubitId> all(a.begin(), a.end());
        all.insert(all.end(), b.begin(), b.end());
        if (ctrl) {
            all.push_back(*ctrl);
        }
        for (std::size_t i = 0; i < all.size(); ++i) {
            for (std::size_t j = i + 1; j < all.size(); ++j) {
                if (all[i] == all[j]) {
                    throw std::invalid_argument("block ports must be pairwise disjoint");
                }
            }
        }
    }
};

namespace detail {

/// Ripple-carry core shared by all four blocks: carries are computed into the
/// a-wires by n-1 forward Toffolis and uncomputed by n-1 reverse Toffolis,
/// with the sum written onto b in between. No input carry, no carry-out wire.
/// When `sum_ctrl` is set, each of the n sum writes is promoted to a Toffoli
/// conditioned on it (conditional addition); otherwise they are CNOTs.
///
/// Toffoli count: 2n-2 unconditioned, plus n when sum_ctrl is present.
inline void emit_adder_core(Circuit& circuit, std::span<const QubitId> a,
                            std::span<const QubitId> b, std::optional<QubitId> sum_ctrl) {
    const std::size_t n = a.size();
    auto sum_write = [&](std::size_t i) {
        if (sum_ctrl) {
            circuit.append(toffoli(*sum_ctrl, a[i], b[i]));
        } else {
            circuit.append(cnot(a[i], b[i]));
        }
    };

    for (std::size_t i = 1; i < n; ++i) {
        circuit.append(cnot(a[i], b[i]));
    }
    for (std::size_t i = n - 1; i >= 2; --i) {
        circuit.append(cnot(a[i - 1], a[i]));
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        circuit.append(toffoli(b[i], a[i], a[i + 1]));
    }
    sum_write(n - 1);
    for (std::size_t i = n - 1; i-- > 0;) {
        circuit.append(toffoli(b[i], a[i], a[i + 1]));
        sum_write(i);
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        circuit.append(cnot(a[i], a[i + 1]));
    }
    for (std::size_t i = 1; i < n; ++i) {
        circuit.append(cnot(a[i], b[i]));
    }
}

} // namespace detail

/// |a,b> -> |a, (a+b) mod 2^n>. Exactly 2n-2 Toffolis.
inline void emit_adder(Circuit& circuit, const BlockPorts& ports) {
    ports.check(false);
    detail::emit_adder_core(circuit, ports.a, ports.b, std::nullopt);
}

/// |a,b> -> |a, (b-a) mod 2^n>, via complementing b around an addition.
inline void emit_subtractor(Circuit& circuit, const BlockPorts& ports) {
    ports.check(false);
    for (QubitId q : ports.b) {
        circuit.append(x(q));
    }
    detail::emit_adder_core(circuit, ports.a, ports.b, std::nullopt);
    for (QubitId q : ports.b) {
        circuit.append(x(q));
    }
}

/// ctrl high: b <- (b-a) mod 2^n; ctrl low: b <- (b+a) mod 2^n. The ctrl
/// conditions only the complementation CNOTs, so the T-count stays 14n-14.
inline void emit_addsub(Circuit& circuit, const BlockPorts& ports) {
    ports.check(true);
    for (QubitId q : ports.b) {
        circuit.append(cnot(*ports.ctrl, q));
    }
    detail::emit_adder_core(circuit, ports.a, ports.b, std::nullopt);
    for (QubitId q : ports.b) {
        circuit.append(cnot(*ports.ctrl, q));
    }
}

/// ctrl high: b <- (a+b) mod 2^n; ctrl low: identity on every port.
/// Exactly 3n-2 Toffolis (the n sum writes are conditioned on ctrl).
inline void emit_ctrladd(Circuit& circuit, const BlockPorts& ports) {
    ports.check(true);
    detail::emit_adder_core(circuit, ports.a, ports.b, *ports.ctrl);
}

namespace detail {

inline Circuit block_circuit(std::size_t width, bool with_ctrl, BlockPorts& ports) {
    if (width == 0) {
        throw std::invalid_argument("block width must be at least 1");
    }
    const auto n = static_cast<std::uint32_t>(width);
    Circuit circuit(2 * n + (with_ctrl ? 1 : 0));
    ports.a.resize(width);
    ports.b.resize(width);
    for (std::uint32_t i = 0; i < n; ++i) {
        ports.a[i] = i;
        ports.b[i] = n + i;
    }
    circuit.set_register("A", ports.a);
    circuit.set_register("B", ports.b);
    if (with_ctrl) {
        ports.ctrl = 2 * n;
        circuit.set_register("CTRL", {2 * n});
    }
    return circuit;
}

} // namespace detail

enum class BlockKind { Adder, Subtractor, AddSub, CtrlAdd };

inline std::string kind_name(BlockKind kind) {
    switch (kind) {
    case BlockKind::Adder: return "adder";
    case BlockKind::Subtractor: return "subtractor";
    case BlockKind::AddSub: return "addsub";
    case BlockKind::CtrlAdd: return "ctrladd";
    }
    return "?";
}

inline bool block_has_ctrl(BlockKind kind) {
    return kind == BlockKind::AddSub || kind == BlockKind::CtrlAdd;
}

/// Standalone block circuits with registers A (qubits 0..n-1), B (n..2n-1)
/// and, for the conditioned blocks, CTRL (qubit 2n).
inline Circuit build_adder(std::size_t width) {
    BlockPorts ports;
    Circuit circuit = detail::block_circuit(width, false, ports);
    emit_adder(circuit, ports);
    return circuit;
}

inline Circuit build_subtractor(std::size_t width) {
    BlockPorts ports;
    Circuit circuit = detail::block_circuit(width, false, ports);
    emit_subtractor(circuit, ports);
    return circuit;
}

inline Circuit build_addsub(std::size_t width) {
    BlockPorts ports;
    Circuit circuit = detail::block_circuit(width, true, ports);
    emit_addsub(circuit, ports);
    return circuit;
}

inline Circuit build_ctrladd(std::size_t width) {
    BlockPorts ports;
    Circuit circuit = detail::block_circuit(width, true, ports);
    emit_ctrladd(circuit, ports);
    return circuit;
}

inline Circuit build_block(BlockKind kind, std::size_t width) {
    switch (kind) {
    case BlockKind::Adder: return build_adder(width);
    case BlockKind::Subtractor: return build_subtractor(width);
    case BlockKind::AddSub: return build_addsub(width);
    case BlockKind::CtrlAdd: return build_ctrladd(width);
    }
    throw std::invalid_argument("unknown block kind");
}

/// The classical function each block must implement on its B register.
inline std::uint64_t block_oracle(BlockKind kind, std::size_t width, std::uint64_t a,
                                  std::uint64_t b, std::uint64_t ctrl) {
    const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
    switch (kind) {
    case BlockKind::Adder: return (a + b) & mask;
    case BlockKind::Subtractor: return (b - a) & mask;
    case BlockKind::AddSub: return ctrl ? (b - a) & mask : (a + b) & mask;
    case BlockKind::CtrlAdd: return ctrl ? (a + b) & mask : b;
    }
    return 0;
}

} // namespace qdiv
