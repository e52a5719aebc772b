#include "qmap/batch.hpp"

#ifdef QMAP_HAVE_OPENMP
#include <omp.h>
#endif

namespace qmap {

MapOutcome map_and_verify(const MapJob& job) {
    MapOutcome out;
    try {
        MappedCircuit m = map_circuit(job.circuit, job.arch, job.config);
        VerificationReport r = verify_mapped(m);
        if (!r.ok) {
            out.status = MapStatus::verification;
            out.error = r.violation;
            return out;
        }
        out.status = MapStatus::ok;
        out.mapped = std::move(m);
    } catch (const CapacityError& e) {
        out.status = MapStatus::capacity;
        out.error = e.what();
    } catch (const RoutingError& e) {
        out.status = MapStatus::routing;
        out.error = e.what();
    } catch (const std::exception& e) {
        out.status = MapStatus::invalid;
        out.error = e.what();
    }
    return out;
}

namespace serial {

std::vector<MapOutcome> map_batch(std::span<const MapJob> jobs) {
    std::vector<MapOutcome> out;
    out.reserve(jobs.size());
    for (const MapJob& j : jobs) out.push_back(map_and_verify(j));
    return out;
}

}  // namespace serial

namespace omp {

std::vector<MapOutcome> map_batch(std::span<const MapJob> jobs, int threads) {
    std::vector<MapOutcome> out(jobs.size());
    const auto n = static_cast<long>(jobs.size());
#ifdef QMAP_HAVE_OPENMP
    const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(team)
#else
    (void)threads;
#endif
    for (long i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = map_and_verify(jobs[static_cast<std::size_t>(i)]);
    }
    return out;
}

}  // namespace omp
}  // namespace qmap
