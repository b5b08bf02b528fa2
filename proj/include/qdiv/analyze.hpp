#pragma once

#include "qdiv/circuit.hpp"
#include "qdiv/lower.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace qdiv {

/// Gates grouped into execution layers; within a layer all operand sets are
/// pairwise disjoint, and per-qubit order equals program order.
struct Schedule {
    /// layers[k] holds indices into the scheduled circuit's gate list.
    std::vector<std::vector<std::size_t>> layers;

    std::size_t depth() const { return layers.size(); }
};

/// Greedy as-soon-as-possible layering: each gate lands at layer
/// 1 + max(layer of the latest prior gate sharing any qubit). Deterministic
/// for a fixed gate list; placement is forced by the per-qubit frontier.
inline Schedule schedule_asap(const Circuit& circuit) {
    Schedule schedule;
    std::vector<std::size_t> frontier(circuit.qubit_count(), 0);
    const auto& gates = circuit.gates();
    for (std::size_t idx = 0; idx < gates.size(); ++idx) {
        const Gate& gate = gates[idx];
        std::size_t layer = 0;
        for (int i = 0; i < gate.num_operands(); ++i) {
            layer = std::max(layer, frontier[gate.operand(i)]);
        }
        ++layer;
        for (int i = 0; i < gate.num_operands(); ++i) {
            frontier[gate.operand(i)] = layer;
        }
        if (layer > schedule.layers.size()) {
            schedule.layers.resize(layer);
        }
        schedule.layers[layer - 1].push_back(idx);
    }
    return schedule;
}

/// Exact T plus T-dagger count. An unlowered circuit counts 7 per Toffoli,
/// matching what lowering will produce.
inline std::uint64_t t_count(const Circuit& circuit) {
    std::uint64_t count = 0;
    for (const Gate& gate : circuit.gates()) {
        if (gate.kind == GateKind::T || gate.kind == GateKind::Tdg) {
            ++count;
        } else if (gate.kind == GateKind::Toffoli) {
            count += 7;
        }
    }
    return count;
}

inline bool layer_has_t(const Circuit& circuit, const std::vector<std::size_t>& layer) {
    for (std::size_t idx : layer) {
        const GateKind kind = circuit.gates()[idx].kind;
        if (kind == GateKind::T || kind == GateKind::Tdg) {
            return true;
        }
    }
    return false;
}

/// Number of ASAP layers containing at least one T/T-dagger. Computed on the
/// lowered circuit; unlowered input is lowered internally first.
inline std::uint64_t t_depth(const Circuit& circuit) {
    if (circuit.count_kind(GateKind::Toffoli) > 0) {
        return t_depth(lower_to_clifford_t(circuit));
    }
    const Schedule schedule = schedule_asap(circuit);
    std::uint64_t depth = 0;
    for (const auto& layer : schedule.layers) {
        if (layer_has_t(circuit, layer)) {
            ++depth;
        }
    }
    return depth;
}

inline std::uint64_t total_depth(const Circuit& circuit) {
    return schedule_asap(circuit).depth();
}

/// For each qubit, the number of T-containing layers with a gate touching it.
inline std::vector<std::uint64_t> per_qubit_t_layers(const Circuit& circuit) {
    if (circuit.count_kind(GateKind::Toffoli) > 0) {
        Circuit lowered = lower_to_clifford_t(circuit);
        return per_qubit_t_layers(lowered);
    }
    const Schedule schedule = schedule_asap(circuit);
    std::vector<std::uint64_t> counts(circuit.qubit_count(), 0);
    std::vector<bool> touched(circuit.qubit_count());
    for (const auto& layer : schedule.layers) {
        if (!layer_has_t(circuit, layer)) {
            continue;
        }
        touched.assign(circuit.qubit_count(), false);
        for (std::size_t idx : layer) {
            const Gate& gate = circuit.gates()[idx];
            for (int i = 0; i < gate.num_operands(); ++i) {
                touched[gate.operand(i)] = true;
            }
        }
        for (std::uint32_t q = 0; q < circuit.qubit_count(); ++q) {
            if (touched[q]) {
                ++counts[q];
            }
        }
    }
    return counts;
}

struct ResourceReport {
    std::uint64_t t_count = 0;
    std::uint64_t t_depth = 0;
    std::uint64_t total_depth = 0;
    std::uint32_t qubit_count = 0;
    std::map<std::string, std::uint64_t> histogram;
    std::vector<std::uint64_t> per_qubit_t_layers;
    /// Max per-qubit count per named register, when the circuit carries a
    /// register table.
    std::map<std::string, std::uint64_t> register_t_layers;
};

inline ResourceReport resource_report(const Circuit& circuit) {
    const Circuit* lowered = &circuit;
    Circuit storage(1);
    if (circuit.count_kind(GateKind::Toffoli) > 0) {
        storage = lower_to_clifford_t(circuit);
        lowered = &storage;
    }
    ResourceReport report;
    report.qubit_count = circuit.qubit_count();
    report.t_count = t_count(*lowered);
    report.per_qubit_t_layers.assign(circuit.qubit_count(), 0);

    // one ASAP pass feeds total depth, T-depth and the per-qubit accounting
    const Schedule schedule = schedule_asap(*lowered);
    report.total_depth = schedule.depth();
    std::vector<bool> touched(circuit.qubit_count());
    for (const auto& layer : schedule.layers) {
        if (!layer_has_t(*lowered, layer)) {
            continue;
        }
        ++report.t_depth;
        touched.assign(circuit.qubit_count(), false);
        for (std::size_t idx : layer) {
            const Gate& gate = lowered->gates()[idx];
            for (int i = 0; i < gate.num_operands(); ++i) {
                touched[gate.operand(i)] = true;
            }
        }
        for (std::uint32_t q = 0; q < circuit.qubit_count(); ++q) {
            if (touched[q]) {
                ++report.per_qubit_t_layers[q];
            }
        }
    }
    for (const Gate& gate : circuit.gates()) {
        ++report.histogram[std::string(kind_name(gate.kind))];
    }
    for (const auto& [name, qubits] : circuit.registers()) {
        std::uint64_t best = 0;
        for (QubitId q : qubits) {
            best = std::max(best, report.per_qubit_t_layers[q]);
        }
        report.register_t_layers[name] = best;
    }
    return report;
}

inline nlohmann::json report_to_json(const ResourceReport& report) {
    nlohmann::json doc;
    doc["t_count"] = report.t_count;
    doc["t_depth"] = report.t_depth;
    doc["total_depth"] = report.total_depth;
    doc["qubit_count"] = report.qubit_count;
    doc["histogram"] = report.histogram;
    doc["per_qubit_t_layers"] = report.per_qubit_t_layers;
    if (!report.register_t_layers.empty()) {
        doc["register_t_layers"] = report.register_t_layers;
    }
    return doc;
}

inline std::string report_csv_row(const std::string& kind, std::uint32_t n,
                                  const ResourceReport& report) {
    std::ostringstream out;
    out << n << "," << kind << "," << report.t_count << "," << report.t_depth << ","
        << report.total_depth << "," << report.qubit_count;
    return out.str();
}

inline std::string report_markdown_row(const std::string& kind, std::uint32_t n,
                                       const ResourceReport& report) {
    std::ostringstream out;
    out << "| " << n << " | " << kind << " | " << report.t_count << " | " << report.t_depth
        << " | " << report.total_depth << " | " << report.qubit_count << " |";
    return out.str();
}

} // namespace qdiv
