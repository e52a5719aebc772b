#include "qmap/mapper.hpp"

#include "qmap/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace qmap {

std::string_view op_kind_name(OpKind k) {
    switch (k) {
        case OpKind::gate: return "gate";
        case OpKind::swap: return "swap";
        case OpKind::teleport: return "teleport";
        case OpKind::exchange: return "exchange";
    }
    return "?";
}

void MapperConfig::validate() const {
    if (lookahead < 0) throw std::invalid_argument("lookahead window must be >= 0");
    cost.validate();
}

std::string MapperConfig::canonical() const {
    std::string s;
    s += "placement=";
    s += placement == PlacementStrategy::block ? "block" : "random";
    s += " seed=" + std::to_string(seed);
    s += " allow_full=" + std::to_string(allow_full ? 1 : 0);
    s += " lookahead=" + std::to_string(lookahead);
    s += " dur_1q=" + std::to_string(cost.dur_1q);
    s += " dur_2q=" + std::to_string(cost.dur_2q);
    s += " dur_swap=" + std::to_string(cost.dur_swap);
    s += " dur_teleport=" + std::to_string(cost.dur_teleport);
    s += " swap_primitive_count=" + std::to_string(cost.swap_primitive_count);
    s += " readout_rate=" + std::to_string(cost.readout_rate);
    s += " control_bits_per_gate=" + std::to_string(cost.control_bits_per_gate);
    return s;
}

RoutingCounts routing_counts(const std::vector<TimedOp>& ops) {
    RoutingCounts rc;
    for (const TimedOp& op : ops) {
        switch (op.kind) {
            case OpKind::swap: ++rc.swaps; break;
            case OpKind::teleport: ++rc.teleports; break;
            case OpKind::exchange: rc.teleports += 2; break;
            case OpKind::gate: break;
        }
    }
    return rc;
}

void check_capacity(const Circuit& c, const Architecture& a, const MapperConfig& cfg) {
    if (c.n_qubits() > a.n_physical()) {
        throw CapacityError("circuit needs " + std::to_string(c.n_qubits()) + " qubits but " +
                            a.spec_string() + " has " + std::to_string(a.n_physical()));
    }
    // one slot per core stays free so a single teleport can always land
    const int reserved_limit = a.n_cores() * (a.qubits_per_core() - 1);
    if (!cfg.allow_full && a.n_cores() > 1 && c.n_qubits() > reserved_limit) {
        throw CapacityError("circuit needs " + std::to_string(c.n_qubits()) + " qubits; " +
                            a.spec_string() + " keeps one free slot per core (limit " +
                            std::to_string(reserved_limit) + "); pass --allow-full to fill it");
    }
}

Placement initial_placement(const Circuit& c, const Architecture& a, const MapperConfig& cfg) {
    cfg.validate();
    check_capacity(c, a, cfg);
    std::vector<PhysicalId> slots(static_cast<std::size_t>(a.n_physical()));
    std::iota(slots.begin(), slots.end(), 0);
    if (cfg.placement == PlacementStrategy::random) {
        SeededRng rng(cfg.seed);
        for (std::size_t i = 0; i < static_cast<std::size_t>(c.n_qubits()); ++i) {
            const std::size_t j = i + rng.below(slots.size() - i);
            std::swap(slots[i], slots[j]);
        }
    }
    slots.resize(static_cast<std::size_t>(c.n_qubits()));
    return Placement(a.n_physical(), std::move(slots));
}

namespace {

class Router {
  public:
    Router(const Architecture& a, const MapperConfig& cfg, Placement start)
        : arch_(a),
          cost_(cfg.cost),
          allow_full_(cfg.allow_full),
          placement_(std::move(start)),
          busy_until_(static_cast<std::size_t>(a.n_physical()), 0),
          free_in_core_(static_cast<std::size_t>(a.n_cores()), 0) {
        for (PhysicalId p = 0; p < a.n_physical(); ++p) {
            if (placement_.is_free(p)) ++free_in_core_[static_cast<std::size_t>(a.core_of(p))];
        }
    }

    void run_gate(int gate_id, const Gate& g) {
        const PhysicalId p = placement_.physical_of(g.operands[0]);
        if (g.arity() == 1) {
            emit(OpKind::gate, gate_id, p, -1, cost_.dur_1q);
            return;
        }
        const VirtualId u = g.operands[0];
        const VirtualId v = g.operands[1];
        if (arch_.core_of(p) != arch_.core_of(placement_.physical_of(v))) {
            bring_together(u, v);
        }
        route_intra(u, v);
        emit(OpKind::gate, gate_id, placement_.physical_of(u), placement_.physical_of(v), cost_.dur_2q);
    }

    MappedCircuit finish(const Architecture& a, const Circuit& c, const MapperConfig& cfg,
                         Placement initial) {
        std::stable_sort(ops_.begin(), ops_.end(),
                         [](const TimedOp& x, const TimedOp& y) { return x.timestep < y.timestep; });
        int depth = 0;
        for (const TimedOp& op : ops_) depth = std::max(depth, op.end());
        return MappedCircuit{a, c, cfg, std::move(initial), std::move(ops_), std::move(placement_), depth};
    }

  private:
    int free_count(CoreId c) const { return free_in_core_[static_cast<std::size_t>(c)]; }

    PhysicalId lowest_free(CoreId c, PhysicalId skip = -1) const {
        const PhysicalId base = arch_.first_in_core(c);
        for (PhysicalId p = base; p < base + arch_.qubits_per_core(); ++p) {
            if (p != skip && placement_.is_free(p)) return p;
        }
        return -1;
    }

    void emit(OpKind kind, int gate_id, PhysicalId a, PhysicalId b, int duration) {
        int t = busy_until_[static_cast<std::size_t>(a)];
        if (b >= 0) t = std::max(t, busy_until_[static_cast<std::size_t>(b)]);
        ops_.push_back(TimedOp{t, duration, kind, gate_id, {a, b}});
        busy_until_[static_cast<std::size_t>(a)] = t + duration;
        if (b >= 0) busy_until_[static_cast<std::size_t>(b)] = t + duration;
    }

    int teleport_duration(PhysicalId a, PhysicalId b) const {
        return cost_.dur_teleport * arch_.core_distance(arch_.core_of(a), arch_.core_of(b));
    }

    void teleport(PhysicalId src, PhysicalId dst) {
        emit(OpKind::teleport, -1, src, dst, teleport_duration(src, dst));
        placement_.move(src, dst);
        ++free_in_core_[static_cast<std::size_t>(arch_.core_of(src))];
        --free_in_core_[static_cast<std::size_t>(arch_.core_of(dst))];
    }

    void exchange(PhysicalId a, PhysicalId b) {
        emit(OpKind::exchange, -1, a, b, teleport_duration(a, b));
        placement_.exchange(a, b);
    }

    void swap(PhysicalId a, PhysicalId b) {
        emit(OpKind::swap, -1, a, b, cost_.dur_swap);
        placement_.exchange(a, b);
    }

    // Puts u and v into a common core.
    void bring_together(VirtualId u, VirtualId v) {
        const PhysicalId p = placement_.physical_of(u);
        const PhysicalId q = placement_.physical_of(v);
        const CoreId cp = arch_.core_of(p);
        const CoreId cq = arch_.core_of(q);
        if (free_count(cq) > 0) {
            teleport(p, lowest_free(cq));
            return;
        }
        if (free_count(cp) > 0) {
            teleport(q, lowest_free(cp));
            return;
        }
        CoreId third = -1;
        int best = std::numeric_limits<int>::max();
        for (CoreId k = 0; k < arch_.n_cores(); ++k) {
            if (k == cp || k == cq || free_count(k) < 2) continue;
            const int d = arch_.core_distance(cp, k) + arch_.core_distance(cq, k);
            if (d < best) {
                best = d;
                third = k;
            }
        }
        if (third >= 0) {
            const PhysicalId f1 = lowest_free(third);
            teleport(p, f1);
            teleport(q, lowest_free(third, f1));
            return;
        }
        if (allow_full_) {
            // partner slot: closest to v inside its core, lowest index on ties
            PhysicalId partner = -1;
            int partner_dist = std::numeric_limits<int>::max();
            const PhysicalId base = arch_.first_in_core(cq);
            for (PhysicalId s = base; s < base + arch_.qubits_per_core(); ++s) {
                if (s == q) continue;
                const int d = arch_.intra_distance(s, q);
                if (d < partner_dist) {
                    partner_dist = d;
                    partner = s;
                }
            }
            exchange(p, partner);
            return;
        }
        throw RoutingError("routing deadlock: cores " + std::to_string(cp) + " and " +
                           std::to_string(cq) +
                           " are full and no other core has two free slots (try --allow-full)");
    }

    void route_intra(VirtualId u, VirtualId v) {
        PhysicalId p = placement_.physical_of(u);
        const PhysicalId q = placement_.physical_of(v);
        int d = arch_.intra_distance(p, q);
        while (d > 1) {
            PhysicalId step = -1;
            for (PhysicalId n : arch_.neighbors(p)) {
                if (arch_.intra_distance(n, q) == d - 1) {
                    step = n;
                    break;
                }
            }
            swap(p, step);
            p = step;
            --d;
        }
    }

    const Architecture& arch_;
    const CostModel& cost_;
    bool allow_full_;
    Placement placement_;
    std::vector<int> busy_until_;
    std::vector<int> free_in_core_;
    std::vector<TimedOp> ops_;
};

}  // namespace

MappedCircuit map_circuit(const Circuit& c, const Architecture& a, const MapperConfig& cfg) {
    return map_circuit(c, a, cfg, initial_placement(c, a, cfg));
}

MappedCircuit map_circuit(const Circuit& c, const Architecture& a, const MapperConfig& cfg,
                          const Placement& initial) {
    cfg.validate();
    if (initial.n_virtual() != c.n_qubits() || initial.n_physical() != a.n_physical()) {
        throw std::invalid_argument("placement does not match circuit and architecture");
    }
    if (a.qubits_per_core() < 2 &&
        std::any_of(c.gates().begin(), c.gates().end(), [](const Gate& g) { return g.is_two_qubit(); })) {
        throw RoutingError("two-qubit gates cannot run on single-qubit cores");
    }
    Router router(a, cfg, initial);
    for (std::size_t i = 0; i < c.size(); ++i) {
        router.run_gate(static_cast<int>(i), c[i]);
    }
    return router.finish(a, c, cfg, initial);
}

Placement replay(const Placement& initial, const std::vector<TimedOp>& ops) {
    Placement pl = initial;
    for (const TimedOp& op : ops) {
        switch (op.kind) {
            case OpKind::gate: break;
            case OpKind::swap:
            case OpKind::exchange: pl.exchange(op.qubits[0], op.qubits[1]); break;
            case OpKind::teleport: pl.move(op.qubits[0], op.qubits[1]); break;
        }
    }
    return pl;
}

Placement final_permutation(const MappedCircuit& m) {
    Placement pl = replay(m.initial, m.ops);
    if (!(pl == m.final_placement)) {
        throw std::logic_error("final placement disagrees with the op replay");
    }
    return pl;
}

}  // namespace qmap
