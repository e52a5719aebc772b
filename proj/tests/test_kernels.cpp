#include "fixtures.hpp"

#include "qmap/batch.hpp"
#include "qmap/kernels.hpp"
#include "qmap/verify.hpp"

#include <doctest.h>

using namespace qmap;
using namespace qmap::testing;

namespace {

void check_kernels_agree(const MappedCircuit& m) {
    const VerificationReport rep = verify_mapped(m);
    REQUIRE(rep.ok);
    const CostModel& cost = m.config.cost;
    CHECK(kernels::serial::core_matrix(m.ops, m.arch) == kernels::omp::core_matrix(m.ops, m.arch));
    CHECK(kernels::serial::qubit_loads(m.ops, rep.op_virtuals, m.circuit.n_qubits(), cost.swap_primitive_count) ==
          kernels::omp::qubit_loads(m.ops, rep.op_virtuals, m.circuit.n_qubits(), cost.swap_primitive_count));
    CHECK(kernels::serial::raster(m.ops, m.depth, m.arch.n_physical()) ==
          kernels::omp::raster(m.ops, m.depth, m.arch.n_physical()));
    CHECK(kernels::serial::vertical(m.ops, m.circuit, m.depth, cost) ==
          kernels::omp::vertical(m.ops, m.circuit, m.depth, cost));
}

}  // namespace

TEST_CASE("kernels: omp matches serial on random mappings") {
    CHECK(kernels::max_threads() >= 1);
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const Instance in = random_instance(seed + 20'000);
        CAPTURE(in.describe());
        check_kernels_agree(map_circuit(in.circuit, in.arch, in.config));
    }
}

TEST_CASE("kernels: omp matches serial on the 64-qubit QFT") {
    MapperConfig cfg;
    cfg.allow_full = true;
    check_kernels_agree(map_circuit(gen_qft(64), parse_arch_spec("8x8:alltoall/alltoall"), cfg));
}

TEST_CASE("kernels: empty schedules") {
    const Architecture a = Architecture::build(2, 2, IntraTopology::all_to_all, InterTopology::all_to_all);
    check_kernels_agree(map_circuit(Circuit(2, {}), a, MapperConfig{}));
    CHECK(kernels::omp::vertical({}, Circuit(1, {}), 0, CostModel{}) == VerticalSeries{});
}

TEST_CASE("batch: omp matches serial, including failures") {
    std::vector<MapJob> jobs;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Instance in = random_instance(seed + 30'000);
        jobs.push_back({in.circuit, in.arch, in.config});
    }
    const Architecture tiny = Architecture::build(2, 2, IntraTopology::all_to_all, InterTopology::all_to_all);
    jobs.push_back({gen_qft(5), tiny, MapperConfig{}});
    jobs.push_back({gen_qft(2), Architecture::build(2, 1, IntraTopology::all_to_all, InterTopology::all_to_all),
                    [] {
                        MapperConfig c;
                        c.allow_full = true;
                        return c;
                    }()});

    const std::vector<MapOutcome> serial = serial::map_batch(jobs);
    REQUIRE(serial.size() == jobs.size());
    CHECK(omp::map_batch(jobs) == serial);
    CHECK(omp::map_batch(jobs, 1) == serial);
    CHECK(omp::map_batch(jobs, 4) == serial);

    CHECK(serial[60].status == MapStatus::capacity);
    CHECK_FALSE(serial[60].mapped.has_value());
    CHECK(serial[61].status == MapStatus::routing);
    for (std::size_t i = 0; i < 60; ++i) {
        CHECK(serial[i].status == MapStatus::ok);
        REQUIRE(serial[i].mapped.has_value());
        CHECK(*serial[i].mapped == map_circuit(jobs[i].circuit, jobs[i].arch, jobs[i].config));
    }
}
