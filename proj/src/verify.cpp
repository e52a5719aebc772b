#include "qmap/verify.hpp"

#include "qmap/dag.hpp"

#include <algorithm>

namespace qmap {

namespace {

VerificationReport failure(std::string what, long op = -1) {
    VerificationReport r;
    r.ok = false;
    r.violation = std::move(what);
    r.op_index = op;
    return r;
}

std::string at(long i, const TimedOp& op) {
    return "op " + std::to_string(i) + " (t=" + std::to_string(op.timestep) + " " +
           std::string(op_kind_name(op.kind)) + "): ";
}

}  // namespace

VerificationReport verify_mapped(const MappedCircuit& m) {
    const Architecture& a = m.arch;
    const Circuit& c = m.circuit;
    const CostModel& cost = m.config.cost;
    try {
        cost.validate();
    } catch (const std::exception& e) {
        return failure(std::string("invalid cost model: ") + e.what());
    }
    if (m.initial.n_virtual() != c.n_qubits() || m.initial.n_physical() != a.n_physical()) {
        return failure("initial placement does not match circuit/architecture sizes");
    }
    if (m.final_placement.n_virtual() != c.n_qubits() ||
        m.final_placement.n_physical() != a.n_physical()) {
        return failure("final placement does not match circuit/architecture sizes");
    }

    const DependencyDag dag = build_dag(c);
    std::vector<int> gate_end(c.size(), -1);
    std::vector<int> busy_until(static_cast<std::size_t>(a.n_physical()), 0);
    Placement pl = m.initial;
    std::vector<std::array<VirtualId, 2>> virtuals;
    virtuals.reserve(m.ops.size());
    int depth = 0;
    int prev_t = 0;

    for (std::size_t idx = 0; idx < m.ops.size(); ++idx) {
        const TimedOp& op = m.ops[idx];
        const long i = static_cast<long>(idx);
        if (op.timestep < 0) return failure(at(i, op) + "negative timestep", i);
        if (op.timestep < prev_t) return failure(at(i, op) + "ops not sorted by timestep", i);
        prev_t = op.timestep;

        const int arity = op.arity();
        for (int k = 0; k < arity; ++k) {
            if (op.qubits[k] < 0 || op.qubits[k] >= a.n_physical()) {
                return failure(at(i, op) + "physical qubit out of range", i);
            }
        }
        if (arity == 2 && op.qubits[0] == op.qubits[1]) {
            return failure(at(i, op) + "repeated physical operand", i);
        }
        if (op.kind != OpKind::gate && arity != 2) {
            return failure(at(i, op) + "routing op needs two physical qubits", i);
        }

        // resource exclusivity: ops arrive sorted by start time
        for (int k = 0; k < arity; ++k) {
            const auto q = static_cast<std::size_t>(op.qubits[k]);
            if (op.timestep < busy_until[q]) {
                return failure(at(i, op) + "resource conflict on physical qubit " +
                                   std::to_string(op.qubits[k]),
                               i);
            }
        }

        std::array<VirtualId, 2> touched{kFree, kFree};
        int expected_duration = 0;
        switch (op.kind) {
            case OpKind::gate: {
                if (op.gate_id < 0 || static_cast<std::size_t>(op.gate_id) >= c.size()) {
                    return failure(at(i, op) + "unknown source gate", i);
                }
                const auto gid = static_cast<std::size_t>(op.gate_id);
                const Gate& g = c[gid];
                if (g.arity() != arity) return failure(at(i, op) + "operand count differs from source", i);
                if (gate_end[gid] >= 0) {
                    return failure(at(i, op) + "source gate " + std::to_string(gid) + " emitted twice", i);
                }
                for (int h : dag.predecessors[gid]) {
                    const int end = gate_end[static_cast<std::size_t>(h)];
                    if (end < 0 || end > op.timestep) {
                        return failure(at(i, op) + "gate " + std::to_string(gid) +
                                           " runs before its dependency " + std::to_string(h),
                                       i);
                    }
                }
                if (arity == 2 && !a.are_adjacent(op.qubits[0], op.qubits[1])) {
                    return failure(at(i, op) + "non-adjacent operands " + std::to_string(op.qubits[0]) +
                                       "," + std::to_string(op.qubits[1]),
                                   i);
                }
                for (int k = 0; k < arity; ++k) {
                    if (pl.virtual_at(op.qubits[k]) != g.operands[k]) {
                        return failure(at(i, op) + "physical qubit " + std::to_string(op.qubits[k]) +
                                           " does not hold virtual operand " +
                                           std::to_string(g.operands[k]),
                                       i);
                    }
                    touched[k] = g.operands[k];
                }
                expected_duration = arity == 2 ? cost.dur_2q : cost.dur_1q;
                gate_end[gid] = op.end();
                break;
            }
            case OpKind::swap:
                if (op.gate_id != -1) return failure(at(i, op) + "routing op carries a gate id", i);
                if (!a.are_adjacent(op.qubits[0], op.qubits[1])) {
                    return failure(at(i, op) + "swap on non-adjacent qubits", i);
                }
                touched = {pl.virtual_at(op.qubits[0]), pl.virtual_at(op.qubits[1])};
                expected_duration = cost.dur_swap;
                pl.exchange(op.qubits[0], op.qubits[1]);
                break;
            case OpKind::teleport:
            case OpKind::exchange: {
                if (op.gate_id != -1) return failure(at(i, op) + "routing op carries a gate id", i);
                const CoreId src = a.core_of(op.qubits[0]);
                const CoreId dst = a.core_of(op.qubits[1]);
                if (src == dst) return failure(at(i, op) + "state transfer within one core", i);
                if (pl.is_free(op.qubits[0])) return failure(at(i, op) + "source slot is empty", i);
                if (op.kind == OpKind::teleport) {
                    if (!pl.is_free(op.qubits[1])) {
                        return failure(at(i, op) + "teleport destination is occupied", i);
                    }
                    touched = {pl.virtual_at(op.qubits[0]), kFree};
                    pl.move(op.qubits[0], op.qubits[1]);
                } else {
                    if (pl.is_free(op.qubits[1])) return failure(at(i, op) + "exchange partner is empty", i);
                    touched = {pl.virtual_at(op.qubits[0]), pl.virtual_at(op.qubits[1])};
                    pl.exchange(op.qubits[0], op.qubits[1]);
                }
                expected_duration = cost.dur_teleport * a.core_distance(src, dst);
                break;
            }
        }
        if (op.duration != expected_duration) {
            return failure(at(i, op) + "duration " + std::to_string(op.duration) + " but cost model gives " +
                               std::to_string(expected_duration),
                           i);
        }
        for (int k = 0; k < arity; ++k) busy_until[static_cast<std::size_t>(op.qubits[k])] = op.end();
        depth = std::max(depth, op.end());
        virtuals.push_back(touched);
    }

    for (std::size_t g = 0; g < c.size(); ++g) {
        if (gate_end[g] < 0) return failure("source gate " + std::to_string(g) + " never emitted");
    }
    if (!(pl == m.final_placement)) return failure("replayed placement differs from final placement");
    if (depth != m.depth) {
        return failure("depth " + std::to_string(m.depth) + " but schedule ends at " + std::to_string(depth));
    }
    VerificationReport ok;
    ok.op_virtuals = std::move(virtuals);
    return ok;
}

VerifiedMapping VerifiedMapping::check(MappedCircuit m) {
    VerificationReport r = verify_mapped(m);
    if (!r.ok) throw VerificationError("mapping failed verification: " + r.violation);
    return VerifiedMapping(std::move(m), std::move(r.op_virtuals));
}

}  // namespace qmap
