#pragma once

#include "qmap/mapper.hpp"
#include "qmap/verify.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qmap {

struct MapJob {
    Circuit circuit;
    Architecture arch;
    MapperConfig config;
};

enum class MapStatus : std::uint8_t { ok, capacity, routing, verification, invalid };

struct MapOutcome {
    MapStatus status = MapStatus::invalid;
    std::optional<MappedCircuit> mapped;  // set only when verified
    std::string error;

    bool operator==(const MapOutcome&) const = default;
};

/// Maps and verifies one job; never throws for mapping failures.
MapOutcome map_and_verify(const MapJob& job);

namespace serial {
std::vector<MapOutcome> map_batch(std::span<const MapJob> jobs);
}

namespace omp {
/// Independent jobs mapped concurrently; `threads` <= 0 uses the OpenMP default.
std::vector<MapOutcome> map_batch(std::span<const MapJob> jobs, int threads = 0);
}

}  // namespace qmap
