#pragma once

#include "qdiv/circuit.hpp"

#include <random>

namespace qdiv::testing {

/// Random circuit over the classical reversible kinds, for property tests.
inline Circuit random_reversible(std::uint32_t qubits, std::size_t gate_count,
                                 std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::uint32_t> pick_qubit(0, qubits - 1);
    std::uniform_int_distribution<int> pick_kind(0, 2);
    Circuit circuit(qubits);
    while (circuit.size() < gate_count) {
        const int kind = pick_kind(rng);
        const QubitId q0 = pick_qubit(rng);
        const QubitId q1 = pick_qubit(rng);
        const QubitId q2 = pick_qubit(rng);
        if (kind == 0) {
            circuit.append(x(q0));
        } else if (kind == 1 && q0 != q1) {
            circuit.append(cnot(q0, q1));
        } else if (kind == 2 && q0 != q1 && q0 != q2 && q1 != q2) {
            circuit.append(toffoli(q0, q1, q2));
        }
    }
    return circuit;
}

} // namespace qdiv::testing
