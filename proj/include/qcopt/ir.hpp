// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "qcopt/angle.hpp"

namespace qcopt {

using Qubit = unsigned;

enum class GateKind : std::uint8_t { H, X, Rz, CNOT };

/// One gate applied to concrete indices of the global register.
/// For CNOT, q0 is the control and q1 the target.
struct GateApp {
    GateKind kind;
    Angle angle;  // meaningful for Rz only
    Qubit q0 = 0;
    Qubit q1 = 0;

    static GateApp h(Qubit q) { return {GateKind::H, Angle(), q, 0}; }
    static GateApp x(Qubit q) { return {GateKind::X, Angle(), q, 0}; }
    static GateApp rz(Angle a, Qubit q) { return {GateKind::Rz, a, q, 0}; }
    static GateApp cnot(Qubit control, Qubit target) {
        return {GateKind::CNOT, Angle(), control, target};
    }

    bool is_rz() const { return kind == GateKind::Rz; }
    bool is_cnot() const { return kind == GateKind::CNOT; }
    unsigned arity() const { return kind == GateKind::CNOT ? 2 : 1; }
    bool touches(Qubit q) const {
        return q0 == q || (kind == GateKind::CNOT && q1 == q);
    }
    /// True when the two gates act on disjoint qubit sets.
    bool disjoint_from(const GateApp& other) const;

    friend bool operator==(const GateApp& a, const GateApp& b) {
        if (a.kind != b.kind || a.q0 != b.q0) return false;
        if (a.kind == GateKind::CNOT && a.q1 != b.q1) return false;
        if (a.kind == GateKind::Rz && !(a.angle == b.angle)) return false;
        return true;
    }
};

using GateList = std::vector<GateApp>;

/// A flat program over a global register of `dim` qubits.
struct Circuit {
    unsigned dim = 0;
    GateList gates;

    friend bool operator==(const Circuit&, const Circuit&) = default;
};

struct GateCounts {
    std::size_t total = 0;
    std::size_t h = 0;
    std::size_t x = 0;
    std::size_t rz = 0;
    std::size_t cnot = 0;
    std::size_t t_count = 0;   // Rz gates at odd multiples of pi/4
    std::size_t other_rz = 0;  // remaining Rz gates
};

/// Every index in bounds and no CNOT with control == target.
bool well_typed(const Circuit& c);

GateCounts count_gates(const Circuit& c);

using GatePredicate = std::function<bool(const GateApp&)>;

/// Finds the first gate at or after `start` that touches `q` and satisfies
/// `pred`. If a gate touching `q` satisfies `block` before a match is found,
/// the search stops and returns nothing. Gates not touching `q` are skipped.
std::optional<std::pair<std::size_t, GateApp>> next_gate(
    std::span<const GateApp> gates, Qubit q, const GatePredicate& pred,
    std::size_t start = 0, const GatePredicate& block = nullptr);

struct PrefixSplit {
    GateList prefix;
    GateList rest_a;
    GateList rest_b;
};

/// Computes a maximal common prefix of `a` and `b`, allowing gates on
/// disjoint qubits to commute while matching. `prefix ++ rest_a` denotes the
/// same program as `a`, and likewise for `b`.
PrefixSplit matching_prefix(std::span<const GateApp> a, std::span<const GateApp> b);

} // namespace qcopt
