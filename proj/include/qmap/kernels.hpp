#pragma once

// Data-parallel analysis kernels. `serial` is the reference implementation;
// `omp` must produce identical results and is what the analyzers call.

#include "qmap/traffic.hpp"

#include <array>
#include <span>

namespace qmap::kernels {

using OpVirtuals = std::array<VirtualId, 2>;

namespace serial {

CoreMatrix core_matrix(std::span<const TimedOp> ops, const Architecture& a);
std::vector<QubitLoad> qubit_loads(std::span<const TimedOp> ops, std::span<const OpVirtuals> virtuals,
                                   int n_virtual, int swap_primitive_count);
Raster raster(std::span<const TimedOp> ops, int depth, int n_physical);
VerticalSeries vertical(std::span<const TimedOp> ops, const Circuit& c, int depth, const CostModel& cost);

}  // namespace serial

namespace omp {

CoreMatrix core_matrix(std::span<const TimedOp> ops, const Architecture& a);
std::vector<QubitLoad> qubit_loads(std::span<const TimedOp> ops, std::span<const OpVirtuals> virtuals,
                                   int n_virtual, int swap_primitive_count);
/// Requires ops with pairwise-disjoint occupancy (a verified schedule).
Raster raster(std::span<const TimedOp> ops, int depth, int n_physical);
VerticalSeries vertical(std::span<const TimedOp> ops, const Circuit& c, int depth, const CostModel& cost);

}  // namespace omp

/// Worker threads the omp kernels will use (1 without OpenMP).
int max_threads();

}  // namespace qmap::kernels
