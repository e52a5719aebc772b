#include "fixtures.hpp"

#include "qmap/dag.hpp"
#include "qmap/mapped_io.hpp"
#include "qmap/mapper.hpp"
#include "qmap/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace qmap;
using namespace qmap::testing;

namespace {

TimedOp op(int t, OpKind k, PhysicalId a, PhysicalId b, int gate = -1, int d = 1) {
    return TimedOp{t, d, k, gate, {a, b}};
}

MapperConfig full_config() {
    MapperConfig cfg;
    cfg.allow_full = true;
    return cfg;
}

}  // namespace

TEST_CASE("initial_placement: block fill") {
    const Architecture a = Architecture::build(2, 4, IntraTopology::all_to_all, InterTopology::all_to_all);
    const Placement pl = initial_placement(Circuit(4, {}), a, full_config());
    for (VirtualId v = 0; v < 4; ++v) CHECK(a.core_of(pl.physical_of(v)) == 0);
    for (PhysicalId p = 4; p < 8; ++p) CHECK(pl.is_free(p));
}

TEST_CASE("initial_placement: 64 virtual qubits fill the 8x8 device") {
    const Architecture a = parse_arch_spec("8x8:alltoall/alltoall");
    const Placement pl = initial_placement(Circuit(64, {}), a, full_config());
    std::vector<int> per_core(8, 0);
    for (VirtualId v = 0; v < 64; ++v) ++per_core[static_cast<std::size_t>(a.core_of(pl.physical_of(v)))];
    CHECK(per_core == std::vector<int>(8, 8));
    for (PhysicalId p = 0; p < 64; ++p) CHECK_FALSE(pl.is_free(p));
}

TEST_CASE("initial_placement: capacity errors") {
    const Architecture one = Architecture::build(1, 2, IntraTopology::all_to_all, InterTopology::all_to_all);
    CHECK_THROWS_AS(initial_placement(Circuit(3, {}), one, full_config()), CapacityError);

    // headroom rule: one free slot per core unless allow_full
    const Architecture a = parse_arch_spec("8x8:alltoall/alltoall");
    CHECK_THROWS_AS(initial_placement(Circuit(64, {}), a, MapperConfig{}), CapacityError);
    CHECK_THROWS_AS(initial_placement(Circuit(57, {}), a, MapperConfig{}), CapacityError);
    CHECK_NOTHROW(initial_placement(Circuit(56, {}), a, MapperConfig{}));
    // a single core never teleports, so it may be filled
    CHECK_NOTHROW(initial_placement(Circuit(2, {}), one, MapperConfig{}));
}

TEST_CASE("initial_placement: random strategy is a seeded injection") {
    const Architecture a = Architecture::build(4, 4, IntraTopology::line, InterTopology::ring);
    MapperConfig cfg;
    cfg.placement = PlacementStrategy::random;
    cfg.seed = 9;
    const Placement p1 = initial_placement(Circuit(10, {}), a, cfg);
    const Placement p2 = initial_placement(Circuit(10, {}), a, cfg);
    CHECK(p1 == p2);
    std::set<PhysicalId> used(p1.as_vector().begin(), p1.as_vector().end());
    CHECK(used.size() == 10);
    cfg.seed = 10;
    CHECK_FALSE(initial_placement(Circuit(10, {}), a, cfg) == p1);
}

TEST_CASE("map_circuit: single all-to-all core needs no routing") {
    const Architecture a = Architecture::build(1, 8, IntraTopology::all_to_all, InterTopology::all_to_all);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Circuit c = gen_random(8, 50, 0.6, seed);
        const MappedCircuit m = map_circuit(c, a, MapperConfig{});
        CHECK(routing_counts(m.ops).total() == 0);
        CHECK(m.ops.size() == c.size());
        // with unit durations every gate lands on its ASAP layer
        const DependencyDag dag = build_dag(c);
        for (const TimedOp& o : m.ops) CHECK(o.timestep == dag.layer[static_cast<std::size_t>(o.gate_id)]);
        CHECK(m.depth == circuit_stats(c).depth);
    }
}

TEST_CASE("map_circuit: 2x2 cross-core CNOT takes one teleport") {
    const Instance in = two_by_two_cnot();
    const MappedCircuit m = map_circuit(in.circuit, in.arch, in.config);
    const std::vector<TimedOp> expected = {
        op(0, OpKind::teleport, 0, 3),
        op(1, OpKind::gate, 3, 2, 0),
    };
    CHECK(m.ops == expected);
    CHECK(m.depth == 2);
    CHECK(m.final_placement.physical_of(0) == 3);
    const RoutingCounts rc = routing_counts(m.ops);
    CHECK(rc.teleports == 1);
    CHECK(rc.swaps == 0);
    CHECK(verify_mapped(m).ok);
}

TEST_CASE("map_circuit: line of four walks the first operand") {
    const Instance in = line_of_four_cnot();
    const MappedCircuit m = map_circuit(in.circuit, in.arch, in.config);
    const std::vector<TimedOp> expected = {
        op(0, OpKind::swap, 0, 1),
        op(1, OpKind::swap, 1, 2),
        op(2, OpKind::gate, 2, 3, 0),
    };
    CHECK(m.ops == expected);
    CHECK(verify_mapped(m).ok);
}

TEST_CASE("map_circuit: teleport direction and fallbacks") {
    const Architecture a = Architecture::build(3, 2, IntraTopology::all_to_all, InterTopology::all_to_all);

    SUBCASE("partner core full: the second operand moves instead") {
        // core0 {v0, free}, core1 {v1, v2}
        const Placement start(6, {0, 2, 3});
        const MappedCircuit m = map_circuit(Circuit(3, {Gate::cnot(0, 1)}), a, MapperConfig{}, start);
        REQUIRE(m.ops.size() == 2);
        CHECK(m.ops[0] == op(0, OpKind::teleport, 2, 1));
        CHECK(m.ops[1] == op(1, OpKind::gate, 0, 1, 0));
    }
    SUBCASE("both cores full: both operands move to a third core") {
        const Placement start(6, {0, 1, 2, 3});
        const MappedCircuit m = map_circuit(Circuit(4, {Gate::cnot(0, 2)}), a, MapperConfig{}, start);
        const std::vector<TimedOp> expected = {
            op(0, OpKind::teleport, 0, 4),
            op(0, OpKind::teleport, 2, 5),
            op(1, OpKind::gate, 4, 5, 0),
        };
        CHECK(m.ops == expected);
        CHECK(routing_counts(m.ops).teleports == 2);
        CHECK(verify_mapped(m).ok);
    }
    SUBCASE("full machine: exchange primitive under allow_full") {
        const Architecture b = Architecture::build(2, 2, IntraTopology::all_to_all, InterTopology::all_to_all);
        const MappedCircuit m = map_circuit(Circuit(4, {Gate::cnot(0, 2)}), b, full_config());
        const std::vector<TimedOp> expected = {
            op(0, OpKind::exchange, 0, 3),
            op(1, OpKind::gate, 3, 2, 0),
        };
        CHECK(m.ops == expected);
        CHECK(routing_counts(m.ops).teleports == 2);
        CHECK(m.final_placement.physical_of(3) == 0);
        CHECK(verify_mapped(m).ok);
    }
    SUBCASE("full machine without allow_full is a deadlock") {
        const Architecture b = Architecture::build(2, 2, IntraTopology::all_to_all, InterTopology::all_to_all);
        const Placement start(4, {0, 1, 2, 3});
        CHECK_THROWS_AS(map_circuit(Circuit(4, {Gate::cnot(0, 2)}), b, MapperConfig{}, start), RoutingError);
    }
}

TEST_CASE("map_circuit: single-qubit cores cannot host two-qubit gates") {
    const Architecture a = Architecture::build(4, 1, IntraTopology::all_to_all, InterTopology::all_to_all);
    CHECK_THROWS_AS(map_circuit(Circuit(2, {Gate::cnot(0, 1)}), a, full_config()), RoutingError);
    CHECK_NOTHROW(map_circuit(Circuit(2, {Gate::h(0), Gate::x(1)}), a, full_config()));
}

TEST_CASE("map_circuit: teleport latency scales with link hops") {
    const Architecture a = Architecture::build(3, 2, IntraTopology::all_to_all, InterTopology::line);
    MapperConfig cfg;
    cfg.cost.dur_teleport = 3;
    // v0 in core 0, v1 in core 2
    const Placement start(6, {0, 4});
    const MappedCircuit m = map_circuit(Circuit(2, {Gate::cnot(0, 1)}), a, cfg, start);
    REQUIRE(m.ops.size() == 2);
    CHECK(m.ops[0] == op(0, OpKind::teleport, 0, 5, -1, 6));
    CHECK(m.ops[1] == op(6, OpKind::gate, 5, 4, 0, 1));
    CHECK(m.depth == 7);
    CHECK(verify_mapped(m).ok);
}

TEST_CASE("map_circuit: ops on disjoint qubits share timesteps") {
    const Architecture a = Architecture::build(1, 4, IntraTopology::all_to_all, InterTopology::all_to_all);
    const MappedCircuit m =
        map_circuit(Circuit(4, {Gate::cnot(0, 1), Gate::cnot(2, 3), Gate::cnot(1, 2)}), a, MapperConfig{});
    CHECK(m.ops[0].timestep == 0);
    CHECK(m.ops[1].timestep == 0);
    CHECK(m.ops[2].timestep == 1);
}

TEST_CASE("map_circuit: random instances verify and conserve") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const Instance in = random_instance(seed);
        CAPTURE(in.describe());
        const MappedCircuit m = map_circuit(in.circuit, in.arch, in.config);
        const VerificationReport r = verify_mapped(m);
        CHECK_MESSAGE(r.ok, r.violation);

        const auto gate_ops = std::count_if(m.ops.begin(), m.ops.end(),
                                            [](const TimedOp& o) { return o.kind == OpKind::gate; });
        CHECK(static_cast<std::size_t>(gate_ops) == in.circuit.size());

        // live states are conserved: the final placement still holds every virtual once
        std::set<VirtualId> live;
        for (PhysicalId p = 0; p < in.arch.n_physical(); ++p) {
            if (!m.final_placement.is_free(p)) live.insert(m.final_placement.virtual_at(p));
        }
        CHECK(live.size() == static_cast<std::size_t>(in.circuit.n_qubits()));

        // exchange only appears when the machine may be filled
        if (!in.config.allow_full) {
            CHECK(std::none_of(m.ops.begin(), m.ops.end(), [](const TimedOp& o) { return o.kind == OpKind::exchange; }));
        }
    }
}

TEST_CASE("map_circuit is deterministic") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Instance in = random_instance(seed + 1000);
        const MappedCircuit a = map_circuit(in.circuit, in.arch, in.config);
        const MappedCircuit b = map_circuit(in.circuit, in.arch, in.config);
        CHECK(a == b);
        CHECK(write_mapped(a) == write_mapped(b));
    }
}

TEST_CASE("map_circuit: 64-qubit QFT on the full 8x8 device") {
    const Architecture a = parse_arch_spec("8x8:alltoall/alltoall");
    const Circuit qft = gen_qft(64);
    CHECK_THROWS_AS(map_circuit(qft, a, MapperConfig{}), CapacityError);
    const MappedCircuit m = map_circuit(qft, a, full_config());
    const VerificationReport r = verify_mapped(m);
    CHECK_MESSAGE(r.ok, r.violation);
    const RoutingCounts rc = routing_counts(m.ops);
    CHECK(rc.swaps == 0);  // all-to-all cores never need swaps
    CHECK(rc.teleports > 0);
    // a full machine can only exchange
    CHECK(std::all_of(m.ops.begin(), m.ops.end(),
                      [](const TimedOp& o) { return o.kind == OpKind::gate || o.kind == OpKind::exchange; }));
}

TEST_CASE("final_permutation") {
    const Architecture a = Architecture::build(2, 2, IntraTopology::all_to_all, InterTopology::all_to_all);

    const MappedCircuit none = map_circuit(Circuit(2, {Gate::cnot(0, 1)}), a, MapperConfig{});
    CHECK(final_permutation(none) == none.initial);

    MappedCircuit swapped = none;
    swapped.ops = {op(0, OpKind::swap, 0, 1)};
    swapped.final_placement = Placement(4, {1, 0});
    CHECK(final_permutation(swapped) == Placement(4, {1, 0}));

    MappedCircuit moved = none;
    moved.ops = {op(0, OpKind::teleport, 0, 2)};
    moved.final_placement = Placement(4, {2, 1});
    CHECK(final_permutation(moved).physical_of(0) == 2);

    moved.final_placement = none.initial;
    CHECK_THROWS(final_permutation(moved));
}

TEST_CASE("mapper config validation") {
    MapperConfig cfg;
    cfg.lookahead = -1;
    CHECK_THROWS(cfg.validate());
    cfg.lookahead = 0;
    cfg.cost.dur_teleport = 0;
    CHECK_THROWS(cfg.validate());
}
