#include "qmap/kernels.hpp"

#include <algorithm>

#ifdef QMAP_HAVE_OPENMP
#include <omp.h>
#endif

namespace qmap::kernels {

int max_threads() {
#ifdef QMAP_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace omp {

CoreMatrix core_matrix(std::span<const TimedOp> ops, const Architecture& a) {
    CoreMatrix m(a.n_cores());
    std::uint64_t* counts = m.counts.data();
    [[maybe_unused]] const std::size_t cells = m.counts.size();
    const int qpc = a.qubits_per_core();
    const int n = a.n_cores();
    const auto n_ops = static_cast<long>(ops.size());
    const TimedOp* data = ops.data();
#pragma omp parallel for schedule(static) reduction(+ : counts[:cells])
    for (long i = 0; i < n_ops; ++i) {
        const TimedOp& op = data[i];
        if (op.kind != OpKind::teleport && op.kind != OpKind::exchange) continue;
        const int src = op.qubits[0] / qpc;
        const int dst = op.qubits[1] / qpc;
        counts[src * n + dst] += 1;
        if (op.kind == OpKind::exchange) counts[dst * n + src] += 1;
    }
    return m;
}

std::vector<QubitLoad> qubit_loads(std::span<const TimedOp> ops, std::span<const OpVirtuals> virtuals,
                                   int n_virtual, int swap_primitive_count) {
    std::vector<std::uint64_t> tele(static_cast<std::size_t>(n_virtual), 0);
    std::vector<std::uint64_t> intra(static_cast<std::size_t>(n_virtual), 0);
    std::uint64_t* tp = tele.data();
    std::uint64_t* ip = intra.data();
    const std::size_t n = tele.size();
    const auto spc = static_cast<std::uint64_t>(swap_primitive_count);
    const auto n_ops = static_cast<long>(ops.size());
    const TimedOp* data = ops.data();
    const OpVirtuals* vs = virtuals.data();
#pragma omp parallel for schedule(static) reduction(+ : tp[:n], ip[:n])
    for (long i = 0; i < n_ops; ++i) {
        for (VirtualId q : vs[i]) {
            if (q == kFree) continue;
            switch (data[i].kind) {
                case OpKind::gate: ip[q] += 1; break;
                case OpKind::swap: ip[q] += spc; break;
                case OpKind::teleport:
                case OpKind::exchange: tp[q] += 1; break;
            }
        }
    }
    std::vector<QubitLoad> loads(n);
    for (std::size_t q = 0; q < n; ++q) loads[q] = QubitLoad{tele[q], intra[q]};
    return loads;
}

Raster raster(std::span<const TimedOp> ops, int depth, int n_physical) {
    Raster r(depth, n_physical);
    Activity* cells = r.cells.data();
    const auto n_ops = static_cast<long>(ops.size());
    const TimedOp* data = ops.data();
    // a verified schedule never puts a qubit in two ops at once, so the
    // cells written by different ops are disjoint
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n_ops; ++i) {
        const TimedOp& op = data[i];
        const Activity act = op.is_routing() ? Activity::communicate : Activity::compute;
        for (int t = op.timestep; t < op.end(); ++t) {
            for (int k = 0; k < op.arity(); ++k) {
                cells[static_cast<std::size_t>(t) * n_physical + op.qubits[k]] = act;
            }
        }
    }
    return r;
}

VerticalSeries vertical(std::span<const TimedOp> ops, const Circuit& c, int depth, const CostModel& cost) {
    const auto d = static_cast<std::size_t>(depth);
    if (d == 0) return {};
    std::vector<std::uint64_t> starts(d, 0);
    std::vector<std::uint64_t> measuring(d, 0);
    std::uint64_t* sp = starts.data();
    std::uint64_t* mp = measuring.data();
    const auto n_ops = static_cast<long>(ops.size());
    const TimedOp* data = ops.data();
#pragma omp parallel for schedule(static) reduction(+ : sp[:d], mp[:d])
    for (long i = 0; i < n_ops; ++i) {
        const TimedOp& op = data[i];
        sp[op.timestep] += 1;
        if (op.kind == OpKind::gate && c[static_cast<std::size_t>(op.gate_id)].kind == GateKind::measure) {
            for (int t = op.timestep; t < op.end(); ++t) mp[t] += 1;
        }
    }

    VerticalSeries v;
    v.control_bits.resize(d);
    v.readout_bps.resize(d);
    std::uint64_t peak_c = 0;
    std::uint64_t peak_r = 0;
    const auto steps = static_cast<long>(d);
#pragma omp parallel for schedule(static) reduction(max : peak_c, peak_r)
    for (long t = 0; t < steps; ++t) {
        v.control_bits[static_cast<std::size_t>(t)] = sp[t] * cost.control_bits_per_gate;
        v.readout_bps[static_cast<std::size_t>(t)] = mp[t] * cost.readout_rate;
        peak_c = std::max(peak_c, v.control_bits[static_cast<std::size_t>(t)]);
        peak_r = std::max(peak_r, v.readout_bps[static_cast<std::size_t>(t)]);
    }
    v.peak_control_bits = peak_c;
    v.peak_readout_bps = peak_r;
    return v;
}

}  // namespace omp
}  // namespace qmap::kernels
