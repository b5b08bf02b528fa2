#pragma once

#include "qdiv/circuit.hpp"

#include <sstream>
#include <string>

namespace qdiv {

/// Emits OpenQASM 2.0 with a single register q[...]. Gate order is program
/// order, so emission is deterministic.
inline std::string export_qasm(const Circuit& circuit) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << circuit.qubit_count() << "];\n";
    for (const Gate& gate : circuit.gates()) {
        out << kind_name(gate.kind) << " ";
        for (int i = 0; i < gate.num_operands(); ++i) {
            if (i > 0) {
                out << ",";
            }
            out << "q[" << gate.operand(i) << "]";
        }
        out << ";\n";
    }
    return out.str();
}

} // namespace qdiv
