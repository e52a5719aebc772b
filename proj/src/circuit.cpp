#include "qmap/circuit.hpp"

#include "qmap/dag.hpp"

#include <algorithm>

namespace qmap {

std::string_view gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::single_qubit: return "x";
        case GateKind::hadamard: return "h";
        case GateKind::controlled_phase: return "cp";
        case GateKind::cnot: return "cx";
        case GateKind::swap: return "swap";
        case GateKind::measure: return "measure";
    }
    return "?";
}

int gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::controlled_phase:
        case GateKind::cnot:
        case GateKind::swap:
            return 2;
        default:
            return 1;
    }
}

Gate Gate::x(VirtualId q) { return Gate{GateKind::single_qubit, {q, -1}, std::nullopt, {}}; }
Gate Gate::h(VirtualId q) { return Gate{GateKind::hadamard, {q, -1}, std::nullopt, {}}; }
Gate Gate::measure(VirtualId q) { return Gate{GateKind::measure, {q, -1}, std::nullopt, {}}; }
Gate Gate::cnot(VirtualId c, VirtualId t) { return Gate{GateKind::cnot, {c, t}, std::nullopt, {}}; }
Gate Gate::swap(VirtualId a, VirtualId b) { return Gate{GateKind::swap, {a, b}, std::nullopt, {}}; }
Gate Gate::cphase(VirtualId c, VirtualId t, double angle) {
    return Gate{GateKind::controlled_phase, {c, t}, angle, {}};
}

Circuit::Circuit(int n_qubits, std::vector<Gate> gates, std::string name)
    : n_qubits_(n_qubits), gates_(std::move(gates)), name_(std::move(name)) {
    if (n_qubits_ < 1) {
        throw InvalidCircuit("circuit needs at least one qubit");
    }
    bool seen_measure = false;
    for (std::size_t i = 0; i < gates_.size(); ++i) {
        const Gate& g = gates_[i];
        const int arity = g.arity();
        for (int k = 0; k < arity; ++k) {
            if (g.operands[k] < 0 || g.operands[k] >= n_qubits_) {
                throw InvalidCircuit("gate " + std::to_string(i) + ": operand " +
                                     std::to_string(g.operands[k]) + " out of range");
            }
        }
        if (arity == 2 && g.operands[0] == g.operands[1]) {
            throw InvalidCircuit("gate " + std::to_string(i) + ": duplicate operands");
        }
        if (arity == 1) {
            gates_[i].operands[1] = -1;
        }
        if ((g.kind == GateKind::controlled_phase) != g.angle.has_value()) {
            throw InvalidCircuit("gate " + std::to_string(i) +
                                 ": angle must be present exactly on controlled-phase gates");
        }
        if (g.kind == GateKind::measure) {
            seen_measure = true;
        } else if (seen_measure) {
            throw InvalidCircuit("gate " + std::to_string(i) +
                                 ": measurements must form a trailing suffix");
        }
    }
}

CircuitStats circuit_stats(const Circuit& c) {
    CircuitStats s;
    for (const Gate& g : c.gates()) {
        ++s.by_kind[static_cast<std::size_t>(g.kind)];
        if (g.is_two_qubit()) ++s.two_qubit;
    }
    s.total = c.size();
    if (!c.empty()) {
        const DependencyDag dag = build_dag(c);
        s.depth = dag.max_layer() + 1;
    }
    return s;
}

}  // namespace qmap
