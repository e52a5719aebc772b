#pragma once

#include "qmap/circuit.hpp"

#include <vector>

namespace qmap {

/// Immediate-dependency DAG over gate indices with ASAP layers.
struct DependencyDag {
    std::vector<std::vector<int>> predecessors;
    std::vector<std::vector<int>> successors;
    std::vector<int> layer;

    std::size_t size() const { return layer.size(); }
    int max_layer() const;
};

DependencyDag build_dag(const Circuit& c);

}  // namespace qmap
