#pragma once

#include "qdiv/circuit.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace qdiv {

inline GateKind kind_from_name(const std::string& name) {
    if (name == "x") return GateKind::X;
    if (name == "cx") return GateKind::CNOT;
    if (name == "ccx") return GateKind::Toffoli;
    if (name == "h") return GateKind::H;
    if (name == "t") return GateKind::T;
    if (name == "tdg") return GateKind::Tdg;
    if (name == "s") return GateKind::S;
    if (name == "sdg") return GateKind::Sdg;
    throw std::invalid_argument("unknown gate kind: " + name);
}

inline nlohmann::json circuit_to_json(const Circuit& circuit) {
    nlohmann::json doc;
    doc["qubits"] = circuit.qubit_count();
    doc["registers"] = nlohmann::json::object();
    for (const auto& [name, qubits] : circuit.registers()) {
        doc["registers"][name] = qubits;
    }
    doc["gates"] = nlohmann::json::array();
    for (const Gate& gate : circuit.gates()) {
        nlohmann::json g;
        g["kind"] = std::string(kind_name(gate.kind));
        nlohmann::json ops = nlohmann::json::array();
        for (int i = 0; i < gate.num_operands(); ++i) {
            ops.push_back(gate.operand(i));
        }
        g["operands"] = ops;
        doc["gates"].push_back(g);
    }
    return doc;
}

inline std::string export_json(const Circuit& circuit) { return circuit_to_json(circuit).dump(2); }

inline Circuit circuit_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("qubits") || !doc.contains("gates")) {
        throw std::invalid_argument("circuit document needs 'qubits' and 'gates'");
    }
    if (!doc["qubits"].is_number_unsigned() || doc["qubits"].get<std::uint64_t>() == 0) {
        throw std::invalid_argument("'qubits' must be a positive integer");
    }
    Circuit circuit(doc["qubits"].get<std::uint32_t>());
    if (!doc["gates"].is_array()) {
        throw std::invalid_argument("'gates' must be an array");
    }
    for (const auto& g : doc["gates"]) {
        if (!g.is_object() || !g.contains("kind") || !g.contains("operands") ||
            !g["operands"].is_array()) {
            throw std::invalid_argument("gate entries need 'kind' and 'operands'");
        }
        GateKind kind = kind_from_name(g["kind"].get<std::string>());
        const auto& ops = g["operands"];
        if (static_cast<int>(ops.size()) != arity(kind)) {
            throw std::invalid_argument("operand count does not match gate kind");
        }
        for (const auto& op : ops) {
            if (!op.is_number_unsigned()) {
                throw std::invalid_argument("operands must be non-negative integers");
            }
        }
        switch (arity(kind)) {
        case 1:
            circuit.append(Gate(kind, ops[0].get<QubitId>()));
            break;
        case 2:
            circuit.append(Gate(kind, ops[0].get<QubitId>(), ops[1].get<QubitId>()));
            break;
        default:
            circuit.append(
                Gate(kind, ops[0].get<QubitId>(), ops[1].get<QubitId>(), ops[2].get<QubitId>()));
            break;
        }
    }
    if (doc.contains("registers")) {
        if (!doc["registers"].is_object()) {
            throw std::invalid_argument("'registers' must be an object");
        }
        for (const auto& [name, qubits] : doc["registers"].items()) {
            if (!qubits.is_array()) {
                throw std::invalid_argument("register entries must be arrays");
            }
            circuit.set_register(name, qubits.get<std::vector<QubitId>>());
        }
    }
    return circuit;
}

inline Circuit import_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed circuit JSON: ") + e.what());
    }
    return circuit_from_json(doc);
}

} // namespace qdiv
