// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qcopt/ir.hpp"

namespace qcopt {

struct SourcePos {
    unsigned line = 0;
    unsigned col = 0;
};

class ParseError : public std::runtime_error {
public:
    ParseError(SourcePos pos, const std::string& message)
        : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.col) +
                             ": " + message),
          pos_(pos) {}
    SourcePos pos() const { return pos_; }

private:
    SourcePos pos_;
};

/// A gate or statement outside the supported OpenQASM 2.0 subset.
class UnsupportedError : public ParseError {
public:
    using ParseError::ParseError;
};

/// Raised when a non-unitary statement reaches a unitary-only consumer.
class NonUnitaryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct QasmStatement {
    enum class Kind { Gate, Measure, Reset, Barrier };
    Kind kind = Kind::Gate;
    std::string name;           // gate name for Kind::Gate
    std::vector<Angle> params;  // rz rotation parameter
    std::vector<Qubit> args;    // flattened global register indices
    SourcePos pos;
};

/// Parsed program. Multiple quantum registers are flattened into one global
/// register in declaration order.
struct QasmProgram {
    std::vector<std::pair<std::string, unsigned>> qregs;
    std::vector<std::pair<std::string, unsigned>> cregs;
    std::vector<QasmStatement> statements;

    unsigned total_qubits() const;
    bool has_nonunitary() const;
};

/// Recognizes the OPENQASM 2.0 header, qreg/creg declarations, and the gate
/// subset {h, x, z, s, sdg, t, tdg, rz, cx, ccx, ccz, measure, reset,
/// barrier}. Rz parameters must be rational multiples of pi.
QasmProgram parse(std::string_view text);
QasmProgram parse_file(const std::string& path);

/// Lowers a unitary program onto the {H, X, Rz, CNOT} gate set. z/s/sdg/t/tdg
/// become fixed Rz rotations, ccz expands to its 13-gate decomposition, ccx
/// to H-conjugated ccz, and barriers are dropped. Throws NonUnitaryError when
/// the program contains measure or reset.
Circuit decompose(const QasmProgram& p);

/// The 13-gate {Rz, CNOT} expansion of the doubly-controlled Z gate.
GateList ccz_decomposition(Qubit a, Qubit b, Qubit c);

/// Serializes a circuit as OpenQASM 2.0. Angles print exactly ("m*pi/n").
std::string emit(const Circuit& c);
void emit_file(const Circuit& c, const std::string& path);

} // namespace qcopt
