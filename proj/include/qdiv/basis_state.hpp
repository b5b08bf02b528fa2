#pragma once

#include "qdiv/circuit.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdiv {

/// One computational basis state: bit i is the value of qubit i.
struct BasisState {
    std::uint64_t bits = 0;
    std::uint32_t width = 0;

    BasisState() = default;
    BasisState(std::uint64_t bits_, std::uint32_t width_) : bits(bits_), width(width_) {
        if (width_ == 0 || width_ > 64) {
            throw std::invalid_argument("basis state width must be in 1..64");
        }
        if (width_ < 64 && (bits_ >> width_) != 0) {
            throw std::invalid_argument("basis state bits exceed width");
        }
    }

    bool bit(QubitId q) const { return (bits >> q) & 1U; }

    void set_bit(QubitId q, bool value) {
        if (value) {
            bits |= std::uint64_t{1} << q;
        } else {
            bits &= ~(std::uint64_t{1} << q);
        }
    }

    void flip(QubitId q) { bits ^= std::uint64_t{1} << q; }

    /// Value of a register given its qubit list (index 0 = LSB).
    std::uint64_t read(const std::vector<QubitId>& qubits) const {
        std::uint64_t value = 0;
        for (std::size_t i = 0; i < qubits.size(); ++i) {
            value |= static_cast<std::uint64_t>(bit(qubits[i])) << i;
        }
        return value;
    }

    void write(const std::vector<QubitId>& qubits, std::uint64_t value) {
        for (std::size_t i = 0; i < qubits.size(); ++i) {
            set_bit(qubits[i], (value >> i) & 1U);
        }
    }

    bool operator==(const BasisState& other) const {
        return bits == other.bits && width == other.width;
    }
};

inline BasisState zero_state(const Circuit& circuit) {
    return BasisState(0, circuit.qubit_count());
}

} // namespace qdiv
