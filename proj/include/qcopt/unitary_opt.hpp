// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qcopt/ir.hpp"

namespace qcopt {

/// One commutation or cancellation rule used by the propagate loop.
///
/// The matcher is a partial function over (g, rest) where g is the gate being
/// propagated and rest is the list following its current position:
///   - cancellation: yields the full replacement for rest (g is consumed);
///   - commutation: yields (window, remainder) with g; rest ~ window; g;
///     remainder, so the caller emits the window and keeps moving g.
struct RewriteRule {
    enum class Kind { Commutation, Cancellation };

    struct Match {
        GateList gates;      // replacement (cancellation) or window (commutation)
        GateList remainder;  // unused for cancellation
    };

    Kind kind;
    bool phase_exact;  // holds with zero global phase
    const char* name;
    std::function<std::optional<Match>(const GateApp& g, std::span<const GateApp> rest)> match;
};

/// Propagate-and-cancel loop: starting from the gate at `start`, try
/// cancellation rules first; otherwise commute rightward and repeat; give up
/// (returning nothing, meaning the gate stays put) when no rule applies or
/// after max_steps commutations.
std::optional<GateList> propagate(std::span<const GateApp> gates, std::size_t start,
                                  const std::vector<RewriteRule>& rules,
                                  std::size_t max_steps);

std::vector<RewriteRule> single_qubit_rules();
std::vector<RewriteRule> two_qubit_rules();

/// Pushes X gates rightward, cancelling pairs; surviving X gates settle at
/// the end of the circuit and Rz angles flip k -> 2 - k along the way.
Circuit not_propagation(const Circuit& c);

/// Propagates H/X/Rz gates to cancellation or merge sites. Never increases
/// the gate count.
Circuit cancel_single_qubit_gates(const Circuit& c);

/// Propagates CNOTs across shared-control/shared-target/H-sandwich patterns
/// and cancels adjacent identical pairs. Never increases the gate count.
Circuit cancel_two_qubit_gates(const Circuit& c);

/// Applies the five H-elimination rewrites (P = Rz(1/2), Pdg = Rz(3/2)).
/// Never increases the H count.
Circuit hadamard_reduction(const Circuit& c);

/// Merges Rz gates across {Rz, CNOT} subcircuits whose qubits carry equal
/// boolean functions of the subcircuit inputs. Subcircuit growth stops at H
/// and X gates. Never increases the Rz count or the T count.
Circuit merge_rotations(const Circuit& c);

/// The full pass schedule 0,1,3,2,3,1,2,4,3,2 (0 = not propagation,
/// 1 = Hadamard reduction, 2 = single-qubit cancellation, 3 = two-qubit
/// cancellation, 4 = rotation merging).
Circuit optimize(const Circuit& c);

inline constexpr std::string_view kDefaultSchedule = "0132312432";

/// Runs the passes named by a digit string such as "0132312432".
Circuit optimize_with_schedule(const Circuit& c, std::string_view schedule);

struct LcrTriple {
    Circuit l;
    Circuit c;
    Circuit r;
};

/// Factors the optimization of an n-fold loop body into L; C^(n-2); R.
/// Returns nothing when the optimized double/triple iterations cannot be
/// split along a matching prefix/suffix.
std::optional<LcrTriple> optimize_lcr(const Circuit& c);

/// One catalogued circuit identity, stated at canonical minimal indices.
struct EquivalenceIdentity {
    enum class Source { NotPropagation, Commutation, HadamardReduction, Cancellation };
    const char* name;
    Source source;
    bool phase_exact;
    unsigned min_dim;
    GateList lhs;
    GateList rhs;
};

/// Every equivalence the passes rely on, for exhaustive matrix validation.
std::vector<EquivalenceIdentity> rule_catalog();

} // namespace qcopt
