// Serial reference vs OpenMP kernels on the 64-qubit QFT mapped to 8x8.

#include "qmap/arch.hpp"
#include "qmap/batch.hpp"
#include "qmap/generators.hpp"
#include "qmap/kernels.hpp"
#include "qmap/mapper.hpp"
#include "qmap/verify.hpp"

#include <benchmark/benchmark.h>

using namespace qmap;

namespace {

struct Fixture {
    MappedCircuit mapped;
    std::vector<kernels::OpVirtuals> virtuals;

    Fixture() : mapped(make()), virtuals(verify_mapped(mapped).op_virtuals) {}

    static MappedCircuit make() {
        MapperConfig cfg;
        cfg.allow_full = true;
        return map_circuit(gen_qft(64), parse_arch_spec("8x8:alltoall/alltoall"), cfg);
    }
};

const Fixture& fixture() {
    static const Fixture f;
    return f;
}

template <auto Kernel>
void bm_core_matrix(benchmark::State& state) {
    const MappedCircuit& m = fixture().mapped;
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(m.ops, m.arch));
}

template <auto Kernel>
void bm_qubit_loads(benchmark::State& state) {
    const Fixture& f = fixture();
    for (auto _ : state)
        benchmark::DoNotOptimize(Kernel(f.mapped.ops, f.virtuals, f.mapped.circuit.n_qubits(),
                                        f.mapped.config.cost.swap_primitive_count));
}

template <auto Kernel>
void bm_raster(benchmark::State& state) {
    const MappedCircuit& m = fixture().mapped;
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(m.ops, m.depth, m.arch.n_physical()));
}

template <auto Kernel>
void bm_vertical(benchmark::State& state) {
    const MappedCircuit& m = fixture().mapped;
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(m.ops, m.circuit, m.depth, m.config.cost));
}

std::vector<MapJob> batch_jobs() {
    std::vector<MapJob> jobs;
    const Architecture a = parse_arch_spec("4x6:line/ring");
    for (std::uint64_t seed = 0; seed < 32; ++seed) jobs.push_back({gen_random(20, 400, 0.5, seed), a, MapperConfig{}});
    return jobs;
}

void bm_batch_serial(benchmark::State& state) {
    const auto jobs = batch_jobs();
    for (auto _ : state) benchmark::DoNotOptimize(serial::map_batch(jobs));
}

void bm_batch_omp(benchmark::State& state) {
    const auto jobs = batch_jobs();
    for (auto _ : state) benchmark::DoNotOptimize(omp::map_batch(jobs));
    state.counters["threads"] = kernels::max_threads();
}

}  // namespace

BENCHMARK(bm_core_matrix<kernels::serial::core_matrix>)->Name("core_matrix/serial");
BENCHMARK(bm_core_matrix<kernels::omp::core_matrix>)->Name("core_matrix/omp");
BENCHMARK(bm_qubit_loads<kernels::serial::qubit_loads>)->Name("qubit_loads/serial");
BENCHMARK(bm_qubit_loads<kernels::omp::qubit_loads>)->Name("qubit_loads/omp");
BENCHMARK(bm_raster<kernels::serial::raster>)->Name("raster/serial");
BENCHMARK(bm_raster<kernels::omp::raster>)->Name("raster/omp");
BENCHMARK(bm_vertical<kernels::serial::vertical>)->Name("vertical/serial");
BENCHMARK(bm_vertical<kernels::omp::vertical>)->Name("vertical/omp");
BENCHMARK(bm_batch_serial)->Name("map_batch/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(bm_batch_omp)->Name("map_batch/omp")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
