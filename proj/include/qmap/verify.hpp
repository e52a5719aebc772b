#pragma once

#include "qmap/mapper.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmap {

struct VerificationReport {
    bool ok = true;
    std::string violation;  // first failure, empty when ok
    long op_index = -1;     // offending op, -1 for whole-mapping checks

    /// Virtual qubits touched by each op (kFree for an empty slot). For a
    /// teleport, only the moved state. Filled only when ok.
    std::vector<std::array<VirtualId, 2>> op_virtuals;
};

/**
 * Checks every MappedCircuit invariant: sorted schedule, durations matching
 * the cost model, no qubit in two ops at once, gates on adjacent same-core
 * slots, teleports into free slots of another core, each source gate exactly
 * once after its dependencies, and the replayed final placement and depth.
 *
 * Replaying placements also checks that every gate acts on the slots holding
 * exactly its original virtual operands.
 */
VerificationReport verify_mapped(const MappedCircuit& m);

class VerificationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A MappedCircuit that passed verify_mapped. The analyzers only accept this.
class VerifiedMapping {
  public:
    /// Throws VerificationError on the first violation.
    static VerifiedMapping check(MappedCircuit m);

    const MappedCircuit& mapped() const { return mapped_; }
    const std::vector<std::array<VirtualId, 2>>& op_virtuals() const { return op_virtuals_; }

  private:
    VerifiedMapping(MappedCircuit m, std::vector<std::array<VirtualId, 2>> v)
        : mapped_(std::move(m)), op_virtuals_(std::move(v)) {}

    MappedCircuit mapped_;
    std::vector<std::array<VirtualId, 2>> op_virtuals_;
};

}  // namespace qmap
