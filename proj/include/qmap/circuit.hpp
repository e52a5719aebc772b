#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qmap {

using VirtualId = std::int32_t;

enum class GateKind : std::uint8_t {
    single_qubit,      // generic one-qubit rotation (`x` in the text format)
    hadamard,
    controlled_phase,
    cnot,
    swap,
    measure,
};

inline constexpr std::size_t kGateKindCount = 6;

std::string_view gate_kind_name(GateKind kind);
int gate_arity(GateKind kind);

/**
 * One instruction of a circuit, acting on one or two virtual qubits.
 *
 * Two-operand kinds carry distinct operands. The angle is only present on
 * controlled-phase gates; mapping ignores it.
 */
struct Gate {
    GateKind kind = GateKind::single_qubit;
    std::array<VirtualId, 2> operands{-1, -1};
    std::optional<double> angle;
    std::string label;

    int arity() const { return gate_arity(kind); }
    bool is_two_qubit() const { return arity() == 2; }

    static Gate x(VirtualId q);
    static Gate h(VirtualId q);
    static Gate measure(VirtualId q);
    static Gate cnot(VirtualId control, VirtualId target);
    static Gate cphase(VirtualId control, VirtualId target, double angle);
    static Gate swap(VirtualId a, VirtualId b);

    bool operator==(const Gate&) const = default;
};

class InvalidCircuit : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/**
 * An ordered gate list over `n_qubits` virtual qubits.
 *
 * Immutable once constructed; the constructor enforces the operand
 * invariants and that measurements only appear as a trailing suffix.
 */
class Circuit {
  public:
    Circuit(int n_qubits, std::vector<Gate> gates, std::string name = "circuit");

    int n_qubits() const { return n_qubits_; }
    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }
    const Gate& operator[](std::size_t i) const { return gates_[i]; }
    const std::string& name() const { return name_; }

    bool operator==(const Circuit&) const = default;

  private:
    int n_qubits_;
    std::vector<Gate> gates_;
    std::string name_;
};

struct CircuitStats {
    std::array<std::size_t, kGateKindCount> by_kind{};
    std::size_t total = 0;
    std::size_t two_qubit = 0;
    int depth = 0;

    std::size_t count(GateKind k) const { return by_kind[static_cast<std::size_t>(k)]; }
};

CircuitStats circuit_stats(const Circuit& c);

}  // namespace qmap
