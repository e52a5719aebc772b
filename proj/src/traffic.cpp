#include "qmap/traffic.hpp"

#include "qmap/kernels.hpp"

#include <cmath>
#include <numeric>

namespace qmap {

std::uint64_t CoreMatrix::total() const { return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}); }

CoreMatrix CoreMatrix::symmetrized() const {
    CoreMatrix s(n_cores);
    for (int i = 0; i < n_cores; ++i)
        for (int j = 0; j < n_cores; ++j) s.at(i, j) = at(i, j) + at(j, i);
    return s;
}

char activity_code(Activity a) {
    switch (a) {
        case Activity::idle: return 'I';
        case Activity::compute: return 'C';
        case Activity::communicate: return 'M';
    }
    return '?';
}

std::uint64_t readout_projection(std::uint64_t n_qubits, const CostModel& cost) {
    return n_qubits * cost.readout_rate;
}

EnergyEstimate vertical_energy(const VerticalSeries& v, double joules_per_bit, double timestep_seconds,
                               double warn_joules_per_bit) {
    EnergyEstimate e;
    for (std::uint64_t b : v.control_bits) e.total_bits += static_cast<double>(b);
    for (std::uint64_t r : v.readout_bps) e.total_bits += static_cast<double>(r) * timestep_seconds;
    e.joules = e.total_bits * joules_per_bit;
    e.over_budget = joules_per_bit > warn_joules_per_bit;
    return e;
}

CoreMatrix core_traffic_matrix(const VerifiedMapping& m) {
    return kernels::omp::core_matrix(m.mapped().ops, m.mapped().arch);
}

std::vector<QubitLoad> per_qubit_counts(const VerifiedMapping& m) {
    const MappedCircuit& mc = m.mapped();
    return kernels::omp::qubit_loads(mc.ops, m.op_virtuals(), mc.circuit.n_qubits(),
                                     mc.config.cost.swap_primitive_count);
}

Raster activity_raster(const VerifiedMapping& m) {
    return kernels::omp::raster(m.mapped().ops, m.mapped().depth, m.mapped().arch.n_physical());
}

VerticalSeries vertical_bandwidth(const VerifiedMapping& m, const CostModel& cost) {
    cost.validate();
    return kernels::omp::vertical(m.mapped().ops, m.mapped().circuit, m.mapped().depth, cost);
}

VerticalSeries vertical_bandwidth(const VerifiedMapping& m) { return vertical_bandwidth(m, m.mapped().config.cost); }

namespace {

Summary summary_from(const VerifiedMapping& m, const std::vector<QubitLoad>& loads) {
    const MappedCircuit& mc = m.mapped();
    Summary s;
    s.depth = mc.depth;
    s.gates = mc.circuit.size();
    const RoutingCounts rc = routing_counts(mc.ops);
    s.swaps = rc.swaps;
    s.teleports = rc.teleports;
    const std::uint64_t all = s.gates + s.swaps + s.teleports;
    s.comm_ratio = all == 0 ? 0.0 : static_cast<double>(s.swaps + s.teleports) / static_cast<double>(all);

    double sum = 0;
    for (const QubitLoad& l : loads) sum += static_cast<double>(l.total());
    const double mean = loads.empty() ? 0.0 : sum / static_cast<double>(loads.size());
    if (mean > 0) {
        double var = 0;
        for (const QubitLoad& l : loads) {
            const double d = static_cast<double>(l.total()) - mean;
            var += d * d;
        }
        var /= static_cast<double>(loads.size());
        s.load_cov = std::sqrt(var) / mean;
    }
    return s;
}

}  // namespace

Summary summarize(const VerifiedMapping& m) { return summary_from(m, per_qubit_counts(m)); }

TrafficReport analyze(const VerifiedMapping& m) {
    TrafficReport r;
    r.core_matrix = core_traffic_matrix(m);
    r.per_qubit = per_qubit_counts(m);
    r.raster = activity_raster(m);
    r.vertical = vertical_bandwidth(m);
    r.summary = summary_from(m, r.per_qubit);
    return r;
}

}  // namespace qmap
