#pragma once

#include "qmap/arch.hpp"
#include "qmap/circuit.hpp"
#include "qmap/placement.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmap {

/// Circuit does not fit the device (or its reserved headroom).
class CapacityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// No legal routing step exists for a gate.
class RoutingError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct MapperConfig {
    PlacementStrategy placement = PlacementStrategy::block;
    std::uint64_t seed = 0;
    // Lift the one-free-slot-per-core reservation and allow the exchange primitive.
    bool allow_full = false;
    // Reserved for lookahead routing; 0 is plain greedy.
    int lookahead = 0;
    CostModel cost;

    void validate() const;
    /// Canonical one-line form, also used for digests.
    std::string canonical() const;
    bool operator==(const MapperConfig&) const = default;
};

enum class OpKind : std::uint8_t {
    gate,
    swap,      // intra-core exchange of two adjacent slots
    teleport,  // move a state into a free slot of another core
    exchange,  // symmetric cross-core state exchange; counts as two teleports
};

std::string_view op_kind_name(OpKind k);

/**
 * A scheduled physical operation occupying `qubits` during
 * [timestep, timestep + duration).
 *
 * gate:      gate_id indexes the source circuit; qubits[1] unused for 1q gates.
 * teleport:  qubits = {source, destination}.
 * exchange:  qubits = {first operand's slot, partner slot}.
 */
struct TimedOp {
    int timestep = 0;
    int duration = 1;
    OpKind kind = OpKind::gate;
    int gate_id = -1;
    std::array<PhysicalId, 2> qubits{-1, -1};

    int arity() const { return qubits[1] < 0 ? 1 : 2; }
    int end() const { return timestep + duration; }
    bool is_routing() const { return kind != OpKind::gate; }
    bool operator==(const TimedOp&) const = default;
};

struct MappedCircuit {
    Architecture arch;
    Circuit circuit;
    MapperConfig config;
    Placement initial;
    std::vector<TimedOp> ops;  // sorted by timestep, stable in emission order
    Placement final_placement;
    int depth = 0;

    bool operator==(const MappedCircuit&) const = default;
};

struct RoutingCounts {
    std::size_t swaps = 0;
    std::size_t teleports = 0;  // exchange ops contribute 2
    std::size_t total() const { return swaps + teleports; }
};

RoutingCounts routing_counts(const std::vector<TimedOp>& ops);

/// Capacity check used by initial_placement and map_circuit.
void check_capacity(const Circuit& c, const Architecture& a, const MapperConfig& cfg);

Placement initial_placement(const Circuit& c, const Architecture& a, const MapperConfig& cfg);

/**
 * Greedy mapping in program order. Two-qubit gates across cores teleport
 * one operand into the partner core (lowest free slot); same-core gates
 * walk the first operand along a shortest path (lowest-index ties) until
 * adjacent. Ops are scheduled ASAP per physical qubit.
 */
MappedCircuit map_circuit(const Circuit& c, const Architecture& a, const MapperConfig& cfg);

/// Same, but starting from a caller-supplied placement (no capacity check).
MappedCircuit map_circuit(const Circuit& c, const Architecture& a, const MapperConfig& cfg,
                          const Placement& initial);

/// Replays ops from the initial placement; throws if the stored final
/// placement disagrees.
Placement final_permutation(const MappedCircuit& m);

Placement replay(const Placement& initial, const std::vector<TimedOp>& ops);

}  // namespace qmap
