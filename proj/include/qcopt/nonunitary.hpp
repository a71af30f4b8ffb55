// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <variant>
#include <vector>

#include "qcopt/qasm.hpp"
#include "qcopt/semantics.hpp"

namespace qcopt {

using DensityMatrix = ComplexMatrix;

inline constexpr unsigned kMaxDensityQubits = 10;

struct Block;

/// Branching measurement: measure q, run if_one on outcome 1 and if_zero on
/// outcome 0. `measure q` is Meas(q, {}, {}); `reset q` is Meas(q, {X q}, {}).
struct MeasBlock {
    Qubit q = 0;
    std::vector<Block> if_one;
    std::vector<Block> if_zero;
};

/// Either a run of unitary gates or a branching measurement.
struct Block {
    std::variant<GateList, MeasBlock> node;

    bool is_unitary() const { return std::holds_alternative<GateList>(node); }
    const GateList& gates() const { return std::get<GateList>(node); }
    const MeasBlock& meas() const { return std::get<MeasBlock>(node); }

    static Block unitary(GateList gates) { return Block{std::move(gates)}; }
    static Block measure(Qubit q, std::vector<Block> if_one, std::vector<Block> if_zero) {
        return Block{MeasBlock{q, std::move(if_one), std::move(if_zero)}};
    }
};

/// A full program: a block list over a global register.
struct Program {
    unsigned dim = 0;
    std::vector<Block> body;
};

bool well_typed(const Program& p);

/// Density-matrix semantics: unitaries conjugate, measurements apply the
/// two-projector sum (|0>q<0| branch to if_zero, |1>q<1| branch to if_one).
DensityMatrix denote_program(const Program& p, const DensityMatrix& rho);

/// Deletes Rz rotations that reach a measurement of the same qubit with no
/// intervening gate on that qubit (diagonal gates cannot change outcomes).
Program remove_z_rotations_before_measure(const Program& p);

/// One round of classical-state propagation for qubit q known to be |i>:
/// Rz preserves the tracked bit, X flips it, CNOT from q is removed (i=0) or
/// becomes X on the target (i=1), Meas on q collapses to the taken branch,
/// and H on q or CNOT onto q ends tracking. Sound for inputs satisfying
/// |i>q<i| rho |i>q<i| = rho.
Program propagate_classical_state(const Program& p, Qubit q, bool one);

/// Builds a Program from parsed OpenQASM; measure/reset become Meas blocks.
Program program_from_qasm(const QasmProgram& p);

/// The three-qubit teleportation protocol: sends qubit 0's state to qubit 2
/// and resets the first two qubits.
Program teleport();

} // namespace qcopt
