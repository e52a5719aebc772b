#pragma once

#include "qmap/circuit.hpp"

#include <cstdint>
#include <random>

namespace qmap {

/**
 * Textbook QFT on `n` qubits: for each qubit i, a Hadamard followed by
 * controlled-phase(pi / 2^(j-i)) between qubits j and i for every j > i.
 * The final bit-reversal SWAP stage is only emitted when requested.
 */
Circuit gen_qft(int n, bool with_reversal = false);

/**
 * Seeded random circuit with exactly `gates` gates, round(p2 * gates) of them
 * two-qubit. Output is bit-identical for a given seed on every platform.
 */
Circuit gen_random(int n, int gates, double p2, std::uint64_t seed);

/// Portable bounded draws on top of std::mt19937_64 (the standard
/// distributions are not reproducible across library implementations).
class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed);

    std::uint64_t next();
    /// Uniform integer in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound);

  private:
    std::mt19937_64 engine_;
};

}  // namespace qmap
