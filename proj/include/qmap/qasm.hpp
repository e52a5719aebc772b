#pragma once

#include "qmap/circuit.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace qmap {

/// Syntax or semantic error in circuit text, with a 1-based source position.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, int line, int column);

    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

/**
 * Parses the supported OpenQASM 2 subset:
 *
 *     OPENQASM 2.0;            // optional, ignored
 *     qreg q[4];
 *     h q[0]; x q[1];
 *     cx q[0],q[1]; cp(0.785) q[1],q[2]; swap q[2],q[3];
 *     measure q[0];
 *
 * Exactly one register. `include "...";` lines are accepted and ignored.
 */
Circuit parse_circuit(std::string_view text, std::string name = "circuit");

/// Inverse of parse_circuit; angles are printed with round-trip precision.
std::string to_qasm(const Circuit& c);

}  // namespace qmap
