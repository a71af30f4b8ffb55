// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qcopt/ir.hpp"

namespace qcopt {

/// A hardware topology: which directed CNOTs the machine admits, plus an
/// undirected path finder between any two physical qubits.
struct Architecture {
    std::string name;
    unsigned num_qubits = 0;
    std::vector<std::vector<Qubit>> directed;  // directed[c] = admissible targets

    bool is_directed_edge(Qubit control, Qubit target) const;
    bool connected_either_way(Qubit a, Qubit b) const;
    /// Shortest undirected path from a to b (BFS, smallest-index tie-break),
    /// endpoints included. Throws when no path exists.
    std::vector<Qubit> path(Qubit a, Qubit b) const;
};

/// The five-qubit machine with directed edges 1->0, 2->0, 2->1, 3->2, 3->4,
/// 4->2.
Architecture tenerife();
/// Linear nearest neighbor: i <-> i+1, both directions.
Architecture lnn(unsigned n);
/// LNN closed into a ring.
Architecture lnn_ring(unsigned n);
/// rows x cols grid, row-major indices, bidirectional edges.
Architecture grid(unsigned rows, unsigned cols);

/// Parses "tenerife" | "lnn:N" | "lnn_ring:N" | "grid:RxC".
Architecture make_architecture(const std::string& spec);

/// Logical-to-physical qubit correspondence (a bijection with its inverse).
struct Layout {
    std::vector<Qubit> log_to_phys;
    std::vector<Qubit> phys_to_log;

    static Layout identity(unsigned n);
    Qubit phys(Qubit logical) const { return log_to_phys[logical]; }
    Qubit log(Qubit physical) const { return phys_to_log[physical]; }
    void swap_physical(Qubit p1, Qubit p2);
    bool is_bijection() const;
};

/// Rewrites `c` (over logical qubits) into a circuit over physical qubits in
/// which every CNOT sits on an admissible directed edge. SWAPs are inserted
/// one hop at a time along arch.path, moving the control toward the target;
/// wrong-direction CNOTs are fixed by H conjugation. Returns the rewritten
/// circuit and the final correspondence.
std::pair<Circuit, Layout> map_circuit(const Circuit& c, const Architecture& arch,
                                       const Layout& initial);

/// True iff every CNOT lies on an admissible directed edge.
bool respects_constraints(const Circuit& c, const Architecture& arch);

} // namespace qcopt
