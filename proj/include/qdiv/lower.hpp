#pragma once

#include "qdiv/circuit.hpp"

#include <vector>

namespace qdiv {

/// Exact ancilla-free Toffoli realization over {H, T, T-dagger, S, CNOT}:
/// T-count 7 and, under plain ASAP layering, T-depth exactly 3 (the seven
/// phase gates land in layers 2, 4 and 8 of the 12-layer schedule).
///
/// The phase gates implement the doubly-controlled-Z polynomial
///   x + y + z - (x^y) - (x^z) - (y^z) + (x^y^z)   (units of pi/4)
/// conjugated by H on the target; the S on c1 compensates the T-dagger that
/// the layer alignment forces onto the x term. The CNOT fabric exposes each
/// combination on a wire exactly when its phase layer is due and returns the
/// wires to identity. Unitary equality (including global phase) is pinned by
/// tests against the ideal permutation.
inline std::vector<Gate> toffoli_decomposition(QubitId c1, QubitId c2, QubitId t) {
    return {
        h(t),
        cnot(c2, c1),  // c1 <- x^y
        tdg(c1),       // -(x^y)
        qdiv::t(t),    // +z
        cnot(c2, t),   // t <- y^z
        qdiv::t(c2),   // +y
        tdg(t),        // -(y^z)
        cnot(c2, c1),  // c1 <- x
        cnot(c1, t),   // t <- x^y^z
        cnot(t, c2),   // c2 <- x^z
        s(c1),
        tdg(c1),       // net +x
        tdg(c2),       // -(x^z)
        qdiv::t(t),    // +(x^y^z)
        cnot(t, c2),   // c2 <- y
        cnot(c1, t),   // t <- y^z
        cnot(c2, t),   // t <- z
        h(t),
    };
}

/// Replaces every Toffoli by the fixed Clifford+T decomposition; all other
/// gates and the register table pass through unchanged.
inline Circuit lower_to_clifford_t(const Circuit& circuit) {
    Circuit lowered(circuit.qubit_count());
    for (const Gate& gate : circuit.gates()) {
        if (gate.kind == GateKind::Toffoli) {
            for (const Gate& g :
                 toffoli_decomposition(gate.operand(0), gate.operand(1), gate.operand(2))) {
                lowered.append(g);
            }
        } else {
            lowered.append(gate);
        }
    }
    for (const auto& [name, qubits] : circuit.registers()) {
        lowered.set_register(name, qubits);
    }
    return lowered;
}

} // namespace qdiv
