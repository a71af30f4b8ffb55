// SPDX-License-Identifier: Apache-2.0
#include "qcopt/mapping.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace qcopt {

bool Architecture::is_directed_edge(Qubit control, Qubit target) const {
    if (control >= num_qubits || target >= num_qubits) return false;
    const auto& out = directed[control];
    return std::find(out.begin(), out.end(), target) != out.end();
}

bool Architecture::connected_either_way(Qubit a, Qubit b) const {
    return is_directed_edge(a, b) || is_directed_edge(b, a);
}

std::vector<Qubit> Architecture::path(Qubit a, Qubit b) const {
    if (a >= num_qubits || b >= num_qubits)
        throw std::invalid_argument("path: qubit out of range");
    std::vector<int> parent(num_qubits, -1);
    std::deque<Qubit> frontier{a};
    parent[a] = static_cast<int>(a);
    while (!frontier.empty()) {
        const Qubit cur = frontier.front();
        frontier.pop_front();
        if (cur == b) break;
        for (Qubit next = 0; next < num_qubits; ++next) {
            if (parent[next] >= 0 || !connected_either_way(cur, next)) continue;
            parent[next] = static_cast<int>(cur);
            frontier.push_back(next);
        }
    }
    if (parent[b] < 0)
        throw std::runtime_error("architecture is disconnected: no path " +
                                 std::to_string(a) + " -> " + std::to_string(b));
    std::vector<Qubit> out{b};
    while (out.back() != a) out.push_back(static_cast<Qubit>(parent[out.back()]));
    std::reverse(out.begin(), out.end());
    return out;
}

namespace {

Architecture with_edges(std::string name, unsigned n,
                        const std::vector<std::pair<Qubit, Qubit>>& edges, bool both_ways) {
    Architecture arch;
    arch.name = std::move(name);
    arch.num_qubits = n;
    arch.directed.resize(n);
    for (const auto& [a, b] : edges) {
        arch.directed[a].push_back(b);
        if (both_ways) arch.directed[b].push_back(a);
    }
    return arch;
}

void check_size(unsigned n) {
    if (n < 2) throw std::invalid_argument("architecture needs at least 2 qubits");
}

} // namespace

Architecture tenerife() {
    return with_edges("tenerife", 5, {{1, 0}, {2, 0}, {2, 1}, {3, 2}, {3, 4}, {4, 2}}, false);
}

Architecture lnn(unsigned n) {
    check_size(n);
    std::vector<std::pair<Qubit, Qubit>> edges;
    for (Qubit i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return with_edges("lnn:" + std::to_string(n), n, edges, true);
}

Architecture lnn_ring(unsigned n) {
    check_size(n);
    std::vector<std::pair<Qubit, Qubit>> edges;
    for (Qubit i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    if (n > 2) edges.emplace_back(n - 1, 0);
    return with_edges("lnn_ring:" + std::to_string(n), n, edges, true);
}

Architecture grid(unsigned rows, unsigned cols) {
    if (rows * cols < 2) throw std::invalid_argument("architecture needs at least 2 qubits");
    std::vector<std::pair<Qubit, Qubit>> edges;
    for (unsigned r = 0; r < rows; ++r) {
        for (unsigned c = 0; c < cols; ++c) {
            const Qubit here = r * cols + c;
            if (c + 1 < cols) edges.emplace_back(here, here + 1);
            if (r + 1 < rows) edges.emplace_back(here, here + cols);
        }
    }
    return with_edges("grid:" + std::to_string(rows) + "x" + std::to_string(cols),
                      rows * cols, edges, true);
}

Architecture make_architecture(const std::string& spec) {
    if (spec == "tenerife") return tenerife();
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    try {
        if (kind == "lnn") return lnn(static_cast<unsigned>(std::stoul(rest)));
        if (kind == "lnn_ring") return lnn_ring(static_cast<unsigned>(std::stoul(rest)));
        if (kind == "grid") {
            const auto xpos = rest.find('x');
            if (xpos == std::string::npos) throw std::invalid_argument(spec);
            return grid(static_cast<unsigned>(std::stoul(rest.substr(0, xpos))),
                        static_cast<unsigned>(std::stoul(rest.substr(xpos + 1))));
        }
    } catch (const std::logic_error&) {
        throw std::invalid_argument("bad architecture spec: " + spec);
    }
    throw std::invalid_argument("unknown architecture: " + spec);
}

Layout Layout::identity(unsigned n) {
    Layout l;
    l.log_to_phys.resize(n);
    l.phys_to_log.resize(n);
    std::iota(l.log_to_phys.begin(), l.log_to_phys.end(), 0);
    std::iota(l.phys_to_log.begin(), l.phys_to_log.end(), 0);
    return l;
}

void Layout::swap_physical(Qubit p1, Qubit p2) {
    const Qubit l1 = phys_to_log[p1];
    const Qubit l2 = phys_to_log[p2];
    std::swap(phys_to_log[p1], phys_to_log[p2]);
    log_to_phys[l1] = p2;
    log_to_phys[l2] = p1;
}

bool Layout::is_bijection() const {
    if (log_to_phys.size() != phys_to_log.size()) return false;
    for (Qubit l = 0; l < log_to_phys.size(); ++l) {
        if (log_to_phys[l] >= phys_to_log.size()) return false;
        if (phys_to_log[log_to_phys[l]] != l) return false;
    }
    return true;
}

namespace {

// CNOT control->target on hardware, flipping via H conjugation when only the
// reverse edge exists: CNOT b a = H a; H b; CNOT a b; H a; H b.
void emit_cnot(GateList& out, const Architecture& arch, Qubit control, Qubit target) {
    if (arch.is_directed_edge(control, target)) {
        out.push_back(GateApp::cnot(control, target));
        return;
    }
    if (!arch.is_directed_edge(target, control))
        throw std::logic_error("emit_cnot: qubits not adjacent");
    out.push_back(GateApp::h(target));
    out.push_back(GateApp::h(control));
    out.push_back(GateApp::cnot(target, control));
    out.push_back(GateApp::h(target));
    out.push_back(GateApp::h(control));
}

// SWAP as three direction-fixed CNOTs.
void emit_swap(GateList& out, const Architecture& arch, Qubit p1, Qubit p2) {
    emit_cnot(out, arch, p1, p2);
    emit_cnot(out, arch, p2, p1);
    emit_cnot(out, arch, p1, p2);
}

} // namespace

std::pair<Circuit, Layout> map_circuit(const Circuit& c, const Architecture& arch,
                                       const Layout& initial) {
    if (!well_typed(c)) throw std::invalid_argument("map_circuit: ill-typed circuit");
    if (c.dim != arch.num_qubits)
        throw std::invalid_argument("map_circuit: circuit dimension does not match architecture");
    if (initial.log_to_phys.size() != c.dim || !initial.is_bijection())
        throw std::invalid_argument("map_circuit: initial layout is not a bijection");

    Layout layout = initial;
    Circuit out;
    out.dim = arch.num_qubits;
    for (const auto& g : c.gates) {
        if (g.kind != GateKind::CNOT) {
            GateApp placed = g;
            placed.q0 = layout.phys(g.q0);
            out.gates.push_back(placed);
            continue;
        }
        Qubit pc = layout.phys(g.q0);
        const Qubit pt = layout.phys(g.q1);
        if (!arch.connected_either_way(pc, pt)) {
            // Walk the control toward the target, one SWAP per hop.
            const auto route = arch.path(pc, pt);
            for (std::size_t hop = 1; hop + 1 < route.size(); ++hop) {
                emit_swap(out.gates, arch, pc, route[hop]);
                layout.swap_physical(pc, route[hop]);
                pc = route[hop];
            }
        }
        emit_cnot(out.gates, arch, pc, pt);
    }
    return {std::move(out), std::move(layout)};
}

bool respects_constraints(const Circuit& c, const Architecture& arch) {
    for (const auto& g : c.gates) {
        if (g.kind != GateKind::CNOT) continue;
        if (!arch.is_directed_edge(g.q0, g.q1)) return false;
    }
    return true;
}

} // namespace qcopt
