#pragma once

#include "qmap/mapper.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace qmap {

class MappedFormatError : public std::runtime_error {
  public:
    MappedFormatError(const std::string& what, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

/**
 * Text serialization of a MappedCircuit. Field order is fixed so files can
 * be diffed:
 *
 *     qmap-mapped 1
 *     arch 2x2:alltoall/alltoall
 *     config placement=block seed=0 allow_full=1 ...
 *     circuit_digest <sha256 of the embedded circuit text>
 *     config_digest <sha256 of arch + config lines>
 *     circuit_begin <name>
 *     ...circuit in the QASM subset...
 *     circuit_end
 *     initial 0 1 2
 *     final 3 1 2
 *     depth 2
 *     ops 2
 *     t=0 teleport q=0,3 cores=0,1 d=1
 *     t=1 gate g=0 q=3,2 d=1
 */
std::string write_mapped(const MappedCircuit& m);

/// Parses write_mapped output; checks the embedded digests.
MappedCircuit read_mapped(std::string_view text);

/// Digest of the `arch` and `config` header lines.
std::string config_digest(const Architecture& a, const MapperConfig& cfg);

}  // namespace qmap
