#include "qmap/kernels.hpp"

#include <algorithm>

namespace qmap::kernels::serial {

CoreMatrix core_matrix(std::span<const TimedOp> ops, const Architecture& a) {
    CoreMatrix m(a.n_cores());
    for (const TimedOp& op : ops) {
        if (op.kind != OpKind::teleport && op.kind != OpKind::exchange) continue;
        const CoreId src = a.core_of(op.qubits[0]);
        const CoreId dst = a.core_of(op.qubits[1]);
        ++m.at(src, dst);
        if (op.kind == OpKind::exchange) ++m.at(dst, src);
    }
    return m;
}

std::vector<QubitLoad> qubit_loads(std::span<const TimedOp> ops, std::span<const OpVirtuals> virtuals,
                                   int n_virtual, int swap_primitive_count) {
    std::vector<QubitLoad> loads(static_cast<std::size_t>(n_virtual));
    for (std::size_t i = 0; i < ops.size(); ++i) {
        const OpVirtuals& v = virtuals[i];
        for (VirtualId q : v) {
            if (q == kFree) continue;
            QubitLoad& l = loads[static_cast<std::size_t>(q)];
            switch (ops[i].kind) {
                case OpKind::gate: l.intra_ops += 1; break;
                case OpKind::swap: l.intra_ops += static_cast<std::uint64_t>(swap_primitive_count); break;
                case OpKind::teleport:
                case OpKind::exchange: l.teleports += 1; break;
            }
        }
    }
    return loads;
}

Raster raster(std::span<const TimedOp> ops, int depth, int n_physical) {
    Raster r(depth, n_physical);
    for (const TimedOp& op : ops) {
        const Activity act = op.is_routing() ? Activity::communicate : Activity::compute;
        for (int t = op.timestep; t < op.end(); ++t) {
            for (int k = 0; k < op.arity(); ++k) r.at(t, op.qubits[k]) = act;
        }
    }
    return r;
}

VerticalSeries vertical(std::span<const TimedOp> ops, const Circuit& c, int depth, const CostModel& cost) {
    VerticalSeries v;
    std::vector<std::uint64_t> starts(static_cast<std::size_t>(depth), 0);
    std::vector<std::uint64_t> measuring(static_cast<std::size_t>(depth), 0);
    for (const TimedOp& op : ops) {
        ++starts[static_cast<std::size_t>(op.timestep)];
        if (op.kind == OpKind::gate && c[static_cast<std::size_t>(op.gate_id)].kind == GateKind::measure) {
            for (int t = op.timestep; t < op.end(); ++t) ++measuring[static_cast<std::size_t>(t)];
        }
    }
    v.control_bits.resize(starts.size());
    v.readout_bps.resize(starts.size());
    for (std::size_t t = 0; t < starts.size(); ++t) {
        v.control_bits[t] = starts[t] * cost.control_bits_per_gate;
        v.readout_bps[t] = measuring[t] * cost.readout_rate;
        v.peak_control_bits = std::max(v.peak_control_bits, v.control_bits[t]);
        v.peak_readout_bps = std::max(v.peak_readout_bps, v.readout_bps[t]);
    }
    return v;
}

}  // namespace qmap::kernels::serial
