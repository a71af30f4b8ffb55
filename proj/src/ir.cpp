// SPDX-License-Identifier: Apache-2.0
#include "qcopt/ir.hpp"

#include <algorithm>

namespace qcopt {

bool GateApp::disjoint_from(const GateApp& other) const {
    if (other.touches(q0)) return false;
    if (kind == GateKind::CNOT && other.touches(q1)) return false;
    return true;
}

bool well_typed(const Circuit& c) {
    for (const auto& g : c.gates) {
        if (g.q0 >= c.dim) return false;
        if (g.kind == GateKind::CNOT) {
            if (g.q1 >= c.dim || g.q0 == g.q1) return false;
        }
    }
    return true;
}

GateCounts count_gates(const Circuit& c) {
    GateCounts counts;
    counts.total = c.gates.size();
    for (const auto& g : c.gates) {
        switch (g.kind) {
        case GateKind::H: counts.h++; break;
        case GateKind::X: counts.x++; break;
        case GateKind::CNOT: counts.cnot++; break;
        case GateKind::Rz:
            counts.rz++;
            if (g.angle.is_t_angle()) counts.t_count++;
            else counts.other_rz++;
            break;
        }
    }
    return counts;
}

std::optional<std::pair<std::size_t, GateApp>> next_gate(
    std::span<const GateApp> gates, Qubit q, const GatePredicate& pred,
    std::size_t start, const GatePredicate& block) {
    for (std::size_t i = start; i < gates.size(); ++i) {
        if (!gates[i].touches(q)) continue;
        if (pred(gates[i])) return std::make_pair(i, gates[i]);
        if (block && block(gates[i])) return std::nullopt;
    }
    return std::nullopt;
}

PrefixSplit matching_prefix(std::span<const GateApp> a, std::span<const GateApp> b) {
    PrefixSplit out;
    GateList rest_b(b.begin(), b.end());
    for (const auto& g : a) {
        // g can only move to the front of what is left of `a` if it commutes
        // (disjointly) with every gate already left behind.
        const bool movable = std::all_of(out.rest_a.begin(), out.rest_a.end(),
                                         [&](const GateApp& s) { return g.disjoint_from(s); });
        std::size_t match = rest_b.size();
        if (movable) {
            for (std::size_t j = 0; j < rest_b.size(); ++j) {
                if (rest_b[j] == g) {
                    match = j;
                    break;
                }
                if (!g.disjoint_from(rest_b[j])) break;
            }
        }
        if (match < rest_b.size()) {
            out.prefix.push_back(g);
            rest_b.erase(rest_b.begin() + static_cast<std::ptrdiff_t>(match));
        } else {
            out.rest_a.push_back(g);
        }
    }
    out.rest_b = std::move(rest_b);
    return out;
}

} // namespace qcopt
