#pragma once

// Shared instance generators for the property-style tests.

#include "qmap/arch.hpp"
#include "qmap/generators.hpp"
#include "qmap/mapper.hpp"

#include <array>
#include <string>

namespace qmap::testing {

struct Instance {
    Circuit circuit;
    Architecture arch;
    MapperConfig config;

    std::string describe() const {
        return circuit.name() + " on " + arch.spec_string() + " [" + config.canonical() + "]";
    }
};

/// Two cores of two qubits, v0 in core 0, v2 in core 1, slot 3 free.
inline Instance two_by_two_cnot() {
    MapperConfig cfg;
    cfg.allow_full = true;
    return {Circuit(3, {Gate::cnot(0, 2)}, "cnot02"),
            Architecture::build(2, 2, IntraTopology::all_to_all, InterTopology::all_to_all), cfg};
}

/// One line-of-4 core fully occupied, CNOT between its ends.
inline Instance line_of_four_cnot() {
    MapperConfig cfg;
    cfg.allow_full = true;
    return {Circuit(4, {Gate::cnot(0, 3)}, "cnot03"),
            Architecture::build(1, 4, IntraTopology::line, InterTopology::all_to_all), cfg};
}

/// Appends a measurement on a seeded subset of qubits (at least one).
inline Circuit with_measurements(const Circuit& c, std::uint64_t seed) {
    SeededRng rng(seed);
    std::vector<Gate> gates = c.gates();
    for (VirtualId q = 0; q < c.n_qubits(); ++q) {
        if (q == 0 || rng.below(2) == 0) gates.push_back(Gate::measure(q));
    }
    return Circuit(c.n_qubits(), std::move(gates), c.name() + "_m");
}

inline int pick_grid_friendly(SeededRng& rng, int lo, int hi) {
    // 5 and 7 have no grid layout; avoid them when a grid may be drawn
    static constexpr std::array<int, 6> ok = {1, 2, 3, 4, 6, 8};
    while (true) {
        const int v = ok[rng.below(ok.size())];
        if (v >= lo && v <= hi) return v;
    }
}

struct InstanceLimits {
    int max_cores = 4;
    int max_qpc = 6;
    int max_physical = 64;
    int max_gates = 40;
    bool unit_durations = false;
};

/// Random (circuit, architecture, config) within mapping capacity.
inline Instance random_instance(std::uint64_t seed, InstanceLimits lim = {}) {
    SeededRng rng(seed * 0x9E3779B97F4A7C15ULL + 17);
    int cores = 0;
    int qpc = 0;
    do {
        cores = pick_grid_friendly(rng, 1, lim.max_cores);
        qpc = pick_grid_friendly(rng, 2, lim.max_qpc);
    } while (cores * qpc > lim.max_physical);
    const auto intra = static_cast<IntraTopology>(rng.below(3));
    const auto inter = static_cast<InterTopology>(rng.below(4));
    const Architecture arch = Architecture::build(cores, qpc, intra, inter);

    MapperConfig cfg;
    cfg.allow_full = rng.below(2) == 0;
    cfg.placement = rng.below(2) == 0 ? PlacementStrategy::block : PlacementStrategy::random;
    cfg.seed = rng.below(1000);
    if (!lim.unit_durations) {
        cfg.cost.dur_2q = 1 + static_cast<int>(rng.below(2));
        cfg.cost.dur_swap = 1 + static_cast<int>(rng.below(3));
        cfg.cost.dur_teleport = 1 + static_cast<int>(rng.below(4));
    }

    const int capacity = cfg.allow_full || cores == 1 ? cores * qpc : cores * (qpc - 1);
    const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(capacity)));
    const int gates = static_cast<int>(rng.below(static_cast<std::uint64_t>(lim.max_gates) + 1));
    const double p2 = n < 2 ? 0.0 : 0.25 * static_cast<double>(1 + rng.below(4));
    Circuit body = gen_random(n, gates, p2, rng.next());
    if (rng.below(3) == 0) body = with_measurements(body, rng.next());
    return {std::move(body), arch, cfg};
}

}  // namespace qmap::testing
