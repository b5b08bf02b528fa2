#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qdiv {

using QubitId = std::uint32_t;

enum class GateKind : std::uint8_t {
    X,
    CNOT,
    Toffoli,
    H,
    T,
    Tdg,
    S,
    Sdg,
};

constexpr int arity(GateKind kind) {
    switch (kind) {
    case GateKind::CNOT: return 2;
    case GateKind::Toffoli: return 3;
    default: return 1;
    }
}

constexpr std::string_view kind_name(GateKind kind) {
    switch (kind) {
    case GateKind::X: return "x";
    case GateKind::CNOT: return "cx";
    case GateKind::Toffoli: return "ccx";
    case GateKind::H: return "h";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    }
    return "?";
}

/// Classical reversible kinds are the ones the bit-level simulator accepts.
constexpr bool is_reversible_kind(GateKind kind) {
    return kind == GateKind::X || kind == GateKind::CNOT || kind == GateKind::Toffoli;
}

constexpr bool is_phase_kind(GateKind kind) {
    return kind == GateKind::T || kind == GateKind::Tdg || kind == GateKind::S ||
           kind == GateKind::Sdg;
}

/// One gate. Operand order: controls first, target last (CNOT: control,
/// target; Toffoli: control, control, target).
struct Gate {
    GateKind kind;
    std::array<QubitId, 3> operands{};

    Gate(GateKind k, QubitId q0) : kind(k), operands{q0, 0, 0} {
        if (arity(k) != 1) {
            throw std::invalid_argument("gate kind expects more than one operand");
        }
    }
    Gate(GateKind k, QubitId q0, QubitId q1) : kind(k), operands{q0, q1, 0} {
        if (arity(k) != 2) {
            throw std::invalid_argument("gate kind does not take two operands");
        }
        if (q0 == q1) {
            throw std::invalid_argument("duplicate gate operands");
        }
    }
    Gate(GateKind k, QubitId q0, QubitId q1, QubitId q2) : kind(k), operands{q0, q1, q2} {
        if (arity(k) != 3) {
            throw std::invalid_argument("gate kind does not take three operands");
        }
        if (q0 == q1 || q0 == q2 || q1 == q2) {
            throw std::invalid_argument("duplicate gate operands");
        }
    }

    int num_operands() const { return arity(kind); }

    QubitId operand(int i) const { return operands[static_cast<std::size_t>(i)]; }

    /// Target wire (the one whose value a reversible gate flips).
    QubitId target() const { return operands[static_cast<std::size_t>(num_operands() - 1)]; }

    bool operator==(const Gate& other) const {
        if (kind != other.kind) {
            return false;
        }
        for (int i = 0; i < num_operands(); ++i) {
            if (operands[static_cast<std::size_t>(i)] !=
                other.operands[static_cast<std::size_t>(i)]) {
                return false;
            }
        }
        return true;
    }
};

inline Gate x(QubitId q) { return {GateKind::X, q}; }
inline Gate h(QubitId q) { return {GateKind::H, q}; }
inline Gate t(QubitId q) { return {GateKind::T, q}; }
inline Gate tdg(QubitId q) { return {GateKind::Tdg, q}; }
inline Gate s(QubitId q) { return {GateKind::S, q}; }
inline Gate sdg(QubitId q) { return {GateKind::Sdg, q}; }
inline Gate cnot(QubitId control, QubitId target) { return {GateKind::CNOT, control, target}; }
inline Gate toffoli(QubitId control0, QubitId control1, QubitId target) {
    return {GateKind::Toffoli, control0, control1, target};
}

/// Gate list over an indexed qubit set plus named registers. Register index 0
/// is the least significant bit. Gate order is program order (left to right
/// in circuit-diagram terms); nothing reorders gates after construction.
class Circuit {
public:
    explicit Circuit(std::uint32_t qubit_count) : qubit_count_(qubit_count) {
        if (qubit_count == 0) {
            throw std::invalid_argument("circuit needs at least one qubit");
        }
    }

    std::uint32_t qubit_count() const { return qubit_count_; }

    const std::vector<Gate>& gates() const { return gates_; }

    std::size_t size() const { return gates_.size(); }

    void append(const Gate& gate) {
        for (int i = 0; i < gate.num_operands(); ++i) {
            if (gate.operand(i) >= qubit_count_) {
                throw std::out_of_range("gate operand exceeds circuit qubit count");
            }
        }
        gates_.push_back(gate);
    }

    void append(const Circuit& other) {
        if (other.qubit_count_ > qubit_count_) {
            throw std::out_of_range("appended circuit uses more qubits");
        }
        gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    }

    const std::map<std::string, std::vector<QubitId>>& registers() const { return registers_; }

    void set_register(const std::string& name, std::vector<QubitId> qubits) {
        for (QubitId q : qubits) {
            if (q >= qubit_count_) {
                throw std::out_of_range("register qubit exceeds circuit qubit count");
            }
        }
        for (std::size_t i = 0; i < qubits.size(); ++i) {
            for (std::size_t j = i + 1; j < qubits.size(); ++j) {
                if (qubits[i] == qubits[j]) {
                    throw std::invalid_argument("register holds duplicate qubit");
                }
            }
        }
        for (const auto& [other_name, other_qubits] : registers_) {
            if (other_name == name) {
                continue;
            }
            for (QubitId q : qubits) {
                for (QubitId o : other_qubits) {
                    if (q == o) {
                        throw std::invalid_argument("registers must be disjoint");
                    }
                }
            }
        }
        registers_[name] = std::move(qubits);
    }

    const std::vector<QubitId>& reg(const std::string& name) const {
        auto it = registers_.find(name);
        if (it == registers_.end()) {
            throw std::out_of_range("no register named " + name);
        }
        return it->second;
    }

    std::size_t count_kind(GateKind kind) const {
        std::size_t count = 0;
        for (const Gate& g : gates_) {
            if (g.kind == kind) {
                ++count;
            }
        }
        return count;
    }

    bool operator==(const Circuit& other) const {
        return qubit_count_ == other.qubit_count_ && gates_ == other.gates_ &&
               registers_ == other.registers_;
    }

private:
    std::uint32_t qubit_count_;
    std::vector<Gate> gates_;
    std::map<std::string, std::vector<QubitId>> registers_;
};

inline Circuit new_circuit(std::uint32_t qubit_count) { return Circuit(qubit_count); }

} // namespace qdiv
