#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qmap {

using PhysicalId = std::int32_t;
using CoreId = std::int32_t;

enum class IntraTopology : std::uint8_t { all_to_all, line, grid };
enum class InterTopology : std::uint8_t { all_to_all, line, ring, grid };

std::string_view topology_name(IntraTopology t);
std::string_view topology_name(InterTopology t);
IntraTopology parse_intra_topology(std::string_view s);
InterTopology parse_inter_topology(std::string_view s);

class InvalidArchitecture : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Near-square factorisation r x c (r <= c, r maximal) used for grid
/// topologies. Throws for primes above 3.
std::pair<int, int> grid_shape(int count);

/// Operation durations (timesteps) and vertical-traffic rates.
struct CostModel {
    int dur_1q = 1;
    int dur_2q = 1;
    int dur_swap = 1;
    int dur_teleport = 1;
    int swap_primitive_count = 3;
    std::uint64_t readout_rate = 1'000'000;       // bits/s per measured qubit
    std::uint64_t control_bits_per_gate = 1'000;  // bits per op start

    void validate() const;
    bool operator==(const CostModel&) const = default;
};

/**
 * A modular processor: `n_cores` identical cores of `qubits_per_core`
 * physical qubits. Physical qubit p lives in core p / qubits_per_core.
 *
 * Two-qubit gates need both operands in the same core and coupled in the
 * intra-core graph; cores exchange states over the inter-core link graph.
 * All distances are precomputed at construction.
 */
class Architecture {
  public:
    static Architecture build(int n_cores, int qubits_per_core, IntraTopology intra,
                              InterTopology inter);

    int n_cores() const { return n_cores_; }
    int qubits_per_core() const { return qubits_per_core_; }
    int n_physical() const { return n_cores_ * qubits_per_core_; }
    IntraTopology intra() const { return intra_; }
    InterTopology inter() const { return inter_; }

    CoreId core_of(PhysicalId p) const;
    int local_slot(PhysicalId p) const { return p % qubits_per_core_; }
    PhysicalId first_in_core(CoreId c) const { return c * qubits_per_core_; }

    bool are_adjacent(PhysicalId p, PhysicalId q) const;
    int intra_distance(PhysicalId p, PhysicalId q) const;
    int core_distance(CoreId a, CoreId b) const;
    bool cores_linked(CoreId a, CoreId b) const;

    /// Intra-core neighbours of p, ascending physical index.
    std::vector<PhysicalId> neighbors(PhysicalId p) const;
    std::vector<std::pair<CoreId, CoreId>> inter_links() const;

    /// Shorthand form `CxQ:intra/inter`, e.g. `8x8:alltoall/alltoall`.
    std::string spec_string() const;

    bool operator==(const Architecture& o) const {
        return n_cores_ == o.n_cores_ && qubits_per_core_ == o.qubits_per_core_ &&
               intra_ == o.intra_ && inter_ == o.inter_;
    }

  private:
    Architecture() = default;
    void check_physical(PhysicalId p) const;
    void check_core(CoreId c) const;

    int n_cores_ = 0;
    int qubits_per_core_ = 0;
    IntraTopology intra_ = IntraTopology::all_to_all;
    InterTopology inter_ = InterTopology::all_to_all;
    std::vector<std::vector<int>> local_adj_;
    std::vector<int> local_dist_;  // qubits_per_core^2
    std::vector<std::vector<int>> core_adj_;
    std::vector<int> core_dist_;   // n_cores^2
};

struct ArchDescription {
    Architecture arch;
    CostModel cost;
};

/// Parses `CxQ:intra/inter`.
Architecture parse_arch_spec(std::string_view spec);

/**
 * Parses the key/value architecture file:
 *
 *     n_cores = 8
 *     qubits_per_core = 8
 *     intra = alltoall
 *     inter = ring
 *     dur_teleport = 4      # optional cost overrides
 */
ArchDescription parse_arch_file(std::string_view text);
std::string to_arch_file(const ArchDescription& d);

}  // namespace qmap
