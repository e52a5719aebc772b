#pragma once

#include "qmap/verify.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qmap {

/// Teleport counts per ordered (source core, destination core) pair.
struct CoreMatrix {
    int n_cores = 0;
    std::vector<std::uint64_t> counts;  // row-major, source major

    CoreMatrix() = default;
    explicit CoreMatrix(int n) : n_cores(n), counts(static_cast<std::size_t>(n) * n, 0) {}

    std::uint64_t at(int src, int dst) const { return counts[static_cast<std::size_t>(src) * n_cores + dst]; }
    std::uint64_t& at(int src, int dst) { return counts[static_cast<std::size_t>(src) * n_cores + dst]; }
    std::uint64_t total() const;
    /// (i,j) + (j,i) in both cells.
    CoreMatrix symmetrized() const;

    bool operator==(const CoreMatrix&) const = default;
};

struct QubitLoad {
    std::uint64_t teleports = 0;
    std::uint64_t intra_ops = 0;

    std::uint64_t total() const { return teleports + intra_ops; }
    bool operator==(const QubitLoad&) const = default;
};

enum class Activity : std::uint8_t { idle, compute, communicate };

/// CSV code: I, C or M.
char activity_code(Activity a);

/// timestep x physical qubit activity grid, row-major by timestep.
struct Raster {
    int depth = 0;
    int n_physical = 0;
    std::vector<Activity> cells;

    Raster() = default;
    Raster(int d, int n)
        : depth(d), n_physical(n), cells(static_cast<std::size_t>(d) * n, Activity::idle) {}

    Activity at(int t, int p) const { return cells[static_cast<std::size_t>(t) * n_physical + p]; }
    Activity& at(int t, int p) { return cells[static_cast<std::size_t>(t) * n_physical + p]; }

    bool operator==(const Raster&) const = default;
};

/// Per-timestep vertical (host <-> QPU) traffic.
struct VerticalSeries {
    std::vector<std::uint64_t> control_bits;  // op starts x control_bits_per_gate
    std::vector<std::uint64_t> readout_bps;   // active measurements x readout_rate
    std::uint64_t peak_control_bits = 0;
    std::uint64_t peak_readout_bps = 0;

    bool operator==(const VerticalSeries&) const = default;
};

/// Host readout demand of an `n_qubits` system: n_qubits x readout_rate.
std::uint64_t readout_projection(std::uint64_t n_qubits, const CostModel& cost);

struct EnergyEstimate {
    double total_bits = 0;
    double joules = 0;
    bool over_budget = false;  // joules_per_bit above the warning threshold
};

inline constexpr double kEnergyWarnJoulesPerBit = 10e-15;

EnergyEstimate vertical_energy(const VerticalSeries& v, double joules_per_bit,
                               double timestep_seconds = 1e-6,
                               double warn_joules_per_bit = kEnergyWarnJoulesPerBit);

struct Summary {
    int depth = 0;
    std::uint64_t gates = 0;
    std::uint64_t swaps = 0;
    std::uint64_t teleports = 0;
    double comm_ratio = 0.0;
    double load_cov = 0.0;
};

struct TrafficReport {
    CoreMatrix core_matrix;
    std::vector<QubitLoad> per_qubit;
    Raster raster;
    VerticalSeries vertical;
    Summary summary;
};

CoreMatrix core_traffic_matrix(const VerifiedMapping& m);
std::vector<QubitLoad> per_qubit_counts(const VerifiedMapping& m);
Raster activity_raster(const VerifiedMapping& m);
VerticalSeries vertical_bandwidth(const VerifiedMapping& m, const CostModel& cost);
VerticalSeries vertical_bandwidth(const VerifiedMapping& m);
Summary summarize(const VerifiedMapping& m);

TrafficReport analyze(const VerifiedMapping& m);

}  // namespace qmap
