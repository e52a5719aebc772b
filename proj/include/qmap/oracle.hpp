#pragma once

#include "qmap/arch.hpp"
#include "qmap/circuit.hpp"
#include "qmap/placement.hpp"

#include <stdexcept>

namespace qmap {

inline constexpr int kOracleMaxPhysical = 8;
inline constexpr int kOracleMaxGates = 6;

class OracleGuardError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/**
 * Exact minimum number of routing ops (swaps + teleports, an exchange
 * counting as two) needed to run every gate of `c` from placement `pl`.
 *
 * Shortest path over (placement, executed-gate set) states. Gates run in
 * any dependency-respecting order once their operands are adjacent; moves
 * are one intra-core swap, one teleport into a free slot of any other core,
 * or one cross-core exchange of two live states.
 *
 * Limited to kOracleMaxPhysical physical qubits and kOracleMaxGates gates.
 */
int oracle_min_route(const Circuit& c, const Architecture& a, const Placement& pl);

}  // namespace qmap
