// SPDX-License-Identifier: Apache-2.0
#include "qcopt/unitary_opt.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace qcopt {

namespace {

bool is_h_on(const GateApp& g, Qubit q) { return g.kind == GateKind::H && g.q0 == q; }
bool is_x_on(const GateApp& g, Qubit q) { return g.kind == GateKind::X && g.q0 == q; }
bool is_rz_on(const GateApp& g, Qubit q) { return g.kind == GateKind::Rz && g.q0 == q; }

bool touches_any(const GateApp& g, const GateApp& h) { return !g.disjoint_from(h); }

// Index of the first gate at or after `start` touching q, if any.
std::optional<std::size_t> first_on(std::span<const GateApp> gates, Qubit q,
                                    std::size_t start = 0) {
    for (std::size_t i = start; i < gates.size(); ++i)
        if (gates[i].touches(q)) return i;
    return std::nullopt;
}

bool range_touches(std::span<const GateApp> gates, std::size_t lo, std::size_t hi, Qubit q) {
    for (std::size_t i = lo; i < hi; ++i)
        if (gates[i].touches(q)) return true;
    return false;
}

GateList erase_at(std::span<const GateApp> gates, std::size_t idx) {
    GateList out(gates.begin(), gates.end());
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(idx));
    return out;
}

// Rz(k); Rz(k') on one qubit combine to Rz(k+k'), vanishing at zero.
GateList combine_rotations(std::span<const GateApp> gates, std::size_t idx, const Angle& k) {
    GateList out(gates.begin(), gates.end());
    const Angle sum = k + out[idx].angle;
    if (sum.is_zero())
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(idx));
    else
        out[idx].angle = sum;
    return out;
}

RewriteRule::Match window_to(std::span<const GateApp> rest, std::size_t last) {
    RewriteRule::Match m;
    m.gates.assign(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(last) + 1);
    m.remainder.assign(rest.begin() + static_cast<std::ptrdiff_t>(last) + 1, rest.end());
    return m;
}

// --- cancellation matchers ---------------------------------------------

std::optional<RewriteRule::Match> match_self_cancel_1q(const GateApp& g,
                                                       std::span<const GateApp> rest) {
    if (g.kind != GateKind::H && g.kind != GateKind::X) return std::nullopt;
    const auto i = first_on(rest, g.q0);
    if (i && rest[*i] == g) return RewriteRule::Match{erase_at(rest, *i), {}};
    return std::nullopt;
}

std::optional<RewriteRule::Match> match_rz_merge(const GateApp& g,
                                                 std::span<const GateApp> rest) {
    if (g.kind != GateKind::Rz) return std::nullopt;
    const auto i = first_on(rest, g.q0);
    if (i && is_rz_on(rest[*i], g.q0))
        return RewriteRule::Match{combine_rotations(rest, *i, g.angle), {}};
    return std::nullopt;
}

std::optional<RewriteRule::Match> match_cnot_cancel(const GateApp& g,
                                                    std::span<const GateApp> rest) {
    if (g.kind != GateKind::CNOT) return std::nullopt;
    for (std::size_t i = 0; i < rest.size(); ++i) {
        if (!touches_any(rest[i], g)) continue;
        if (rest[i] == g) return RewriteRule::Match{erase_at(rest, i), {}};
        return std::nullopt;
    }
    return std::nullopt;
}

// --- commutation matchers (Rz propagation) ------------------------------

// Rz(k) q commutes through a CNOT control.
std::optional<RewriteRule::Match> match_rz_past_control(const GateApp& g,
                                                        std::span<const GateApp> rest) {
    if (g.kind != GateKind::Rz) return std::nullopt;
    const auto i = first_on(rest, g.q0);
    if (i && rest[*i].is_cnot() && rest[*i].q0 == g.q0) return window_to(rest, *i);
    return std::nullopt;
}

// Rz(k) q commutes through H q; CNOT c q; H q.
std::optional<RewriteRule::Match> match_rz_past_h_sandwich(const GateApp& g,
                                                           std::span<const GateApp> rest) {
    if (g.kind != GateKind::Rz) return std::nullopt;
    const Qubit q = g.q0;
    const auto i = first_on(rest, q);
    if (!i || !is_h_on(rest[*i], q)) return std::nullopt;
    const auto j = first_on(rest, q, *i + 1);
    if (!j || !rest[*j].is_cnot() || rest[*j].q1 != q) return std::nullopt;
    const auto k = first_on(rest, q, *j + 1);
    if (!k || !is_h_on(rest[*k], q)) return std::nullopt;
    return window_to(rest, *k);
}

// Rz(k) q commutes through CNOT c q; Rz(k') q; CNOT c q, provided nothing in
// between touches the control c.
std::optional<RewriteRule::Match> match_rz_past_cnot_sandwich(const GateApp& g,
                                                              std::span<const GateApp> rest) {
    if (g.kind != GateKind::Rz) return std::nullopt;
    const Qubit q = g.q0;
    const auto i = first_on(rest, q);
    if (!i || !rest[*i].is_cnot() || rest[*i].q1 != q) return std::nullopt;
    const Qubit c = rest[*i].q0;
    const auto j = first_on(rest, q, *i + 1);
    if (!j || !is_rz_on(rest[*j], q)) return std::nullopt;
    const auto k = first_on(rest, q, *j + 1);
    if (!k || !(rest[*k].is_cnot() && rest[*k].q0 == c && rest[*k].q1 == q)) return std::nullopt;
    if (range_touches(rest, *i + 1, *j, c) || range_touches(rest, *j + 1, *k, c))
        return std::nullopt;
    return window_to(rest, *k);
}

// --- commutation matchers (CNOT propagation) ----------------------------

std::optional<std::size_t> first_on_pair(std::span<const GateApp> gates, const GateApp& g,
                                         std::size_t start = 0) {
    for (std::size_t i = start; i < gates.size(); ++i)
        if (touches_any(gates[i], g)) return i;
    return std::nullopt;
}

// CNOT a b commutes with CNOT a t (shared control, distinct targets).
std::optional<RewriteRule::Match> match_cnot_shared_control(const GateApp& g,
                                                            std::span<const GateApp> rest) {
    if (g.kind != GateKind::CNOT) return std::nullopt;
    const auto i = first_on_pair(rest, g);
    if (!i) return std::nullopt;
    const GateApp& w = rest[*i];
    if (w.is_cnot() && w.q0 == g.q0 && w.q1 != g.q1 && w.q1 != g.q0) return window_to(rest, *i);
    return std::nullopt;
}

// CNOT a b commutes with CNOT c b (shared target, distinct controls).
std::optional<RewriteRule::Match> match_cnot_shared_target(const GateApp& g,
                                                           std::span<const GateApp> rest) {
    if (g.kind != GateKind::CNOT) return std::nullopt;
    const auto i = first_on_pair(rest, g);
    if (!i) return std::nullopt;
    const GateApp& w = rest[*i];
    if (w.is_cnot() && w.q1 == g.q1 && w.q0 != g.q0 && w.q0 != g.q1) return window_to(rest, *i);
    return std::nullopt;
}

// CNOT a b commutes with H b; CNOT b c; H b, provided nothing in the window
// touches a.
std::optional<RewriteRule::Match> match_cnot_past_h_sandwich(const GateApp& g,
                                                             std::span<const GateApp> rest) {
    if (g.kind != GateKind::CNOT) return std::nullopt;
    const Qubit a = g.q0;
    const Qubit b = g.q1;
    const auto i = first_on_pair(rest, g);
    if (!i || !is_h_on(rest[*i], b)) return std::nullopt;
    const auto j = first_on(rest, b, *i + 1);
    if (!j || !rest[*j].is_cnot() || rest[*j].q0 != b || rest[*j].q1 == a) return std::nullopt;
    const auto k = first_on(rest, b, *j + 1);
    if (!k || !is_h_on(rest[*k], b)) return std::nullopt;
    if (range_touches(rest, *i + 1, *j, a) || range_touches(rest, *j + 1, *k, a))
        return std::nullopt;
    return window_to(rest, *k);
}

// --- not propagation -----------------------------------------------------

// Pushes one X gate (on qubit q) through the list, rewriting as it goes. The
// X either cancels against another X, turns into a trailing Z after an H, or
// survives to the end of the list.
GateList propagate_not(GateList t, Qubit q) {
    for (std::size_t i = 0; i < t.size(); ++i) {
        GateApp& g = t[i];
        if (is_x_on(g, q)) {
            t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
            return t;
        }
        if (is_h_on(g, q)) {
            // X q; H q = H q; Z q
            t.insert(t.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                     GateApp::rz(Angle(1, 1), q));
            return t;
        }
        if (is_rz_on(g, q)) {
            g.angle = reflect_angle(g.angle);
            continue;
        }
        if (g.is_cnot() && g.q0 == q) {
            // X on the control fans out to both wires.
            GateList tail(t.begin() + static_cast<std::ptrdiff_t>(i) + 1, t.end());
            tail = propagate_not(std::move(tail), g.q1);
            tail = propagate_not(std::move(tail), q);
            t.resize(i + 1);
            t.insert(t.end(), tail.begin(), tail.end());
            return t;
        }
        // CNOT with q as target, or a gate on other qubits: X passes through.
    }
    t.push_back(GateApp::x(q));
    return t;
}

Angle p_angle() { return Angle(1, 2); }
Angle pdg_angle() { return Angle(3, 2); }

} // namespace

std::optional<GateList> propagate(std::span<const GateApp> gates, std::size_t start,
                                  const std::vector<RewriteRule>& rules,
                                  std::size_t max_steps) {
    if (start >= gates.size()) throw std::invalid_argument("propagate: bad start position");
    const GateApp g = gates[start];
    GateList acc(gates.begin(), gates.begin() + static_cast<std::ptrdiff_t>(start));
    GateList rest(gates.begin() + static_cast<std::ptrdiff_t>(start) + 1, gates.end());

    for (std::size_t step = 0;; ++step) {
        for (const auto& rule : rules) {
            if (rule.kind != RewriteRule::Kind::Cancellation) continue;
            if (auto m = rule.match(g, rest)) {
                acc.insert(acc.end(), m->gates.begin(), m->gates.end());
                return acc;
            }
        }
        if (step >= max_steps) return std::nullopt;
        bool commuted = false;
        for (const auto& rule : rules) {
            if (rule.kind != RewriteRule::Kind::Commutation) continue;
            if (auto m = rule.match(g, rest)) {
                acc.insert(acc.end(), m->gates.begin(), m->gates.end());
                rest = std::move(m->remainder);
                commuted = true;
                break;
            }
        }
        if (!commuted) return std::nullopt;
    }
}

std::vector<RewriteRule> single_qubit_rules() {
    using K = RewriteRule::Kind;
    return {
        {K::Cancellation, true, "HH/XX cancel", match_self_cancel_1q},
        {K::Cancellation, true, "Rz merge", match_rz_merge},
        {K::Commutation, true, "Rz past H;CNOT;H", match_rz_past_h_sandwich},
        {K::Commutation, true, "Rz past CNOT;Rz;CNOT", match_rz_past_cnot_sandwich},
        {K::Commutation, true, "Rz past control", match_rz_past_control},
    };
}

std::vector<RewriteRule> two_qubit_rules() {
    using K = RewriteRule::Kind;
    return {
        {K::Cancellation, true, "CNOT CNOT cancel", match_cnot_cancel},
        {K::Commutation, true, "CNOT shared control", match_cnot_shared_control},
        {K::Commutation, true, "CNOT shared target", match_cnot_shared_target},
        {K::Commutation, true, "CNOT past H;CNOT;H", match_cnot_past_h_sandwich},
    };
}

Circuit not_propagation(const Circuit& c) {
    GateList work = c.gates;
    GateList out;
    out.reserve(work.size());
    // X gates can leapfrog each other forever on disjoint wires; the fuel
    // bound cuts the loop while keeping every performed rewrite sound.
    std::size_t fuel = 2 * work.size() + 8;
    while (!work.empty()) {
        GateApp g = work.front();
        work.erase(work.begin());
        if (g.kind == GateKind::X && !work.empty() && fuel > 0) {
            --fuel;
            work = propagate_not(std::move(work), g.q0);
        } else {
            out.push_back(g);
        }
    }
    return Circuit{c.dim, std::move(out)};
}

namespace {

Circuit cancel_pass(const Circuit& c, const std::vector<RewriteRule>& rules, unsigned arity) {
    GateList gates = c.gates;
    std::size_t i = 0;
    while (i < gates.size()) {
        if (gates[i].arity() == arity) {
            if (auto next = propagate(gates, i, rules, gates.size())) {
                gates = std::move(*next);
                continue;  // revisit the gate that slid into position i
            }
        }
        ++i;
    }
    return Circuit{c.dim, std::move(gates)};
}

} // namespace

Circuit cancel_single_qubit_gates(const Circuit& c) {
    return cancel_pass(c, single_qubit_rules(), 1);
}

Circuit cancel_two_qubit_gates(const Circuit& c) {
    return cancel_pass(c, two_qubit_rules(), 2);
}

namespace {

// H q; Rz(+-1/2) q; H q  ->  Rz(-+1/2) q; H q; Rz(-+1/2) q
bool try_h_rule_12(GateList& gates, std::size_t i) {
    const Qubit q = gates[i].q0;
    const auto j = first_on(gates, q, i + 1);
    if (!j || !is_rz_on(gates[*j], q)) return false;
    const Angle a = gates[*j].angle;
    Angle flipped;
    if (a == p_angle()) flipped = pdg_angle();
    else if (a == pdg_angle()) flipped = p_angle();
    else return false;
    const auto k = first_on(gates, q, *j + 1);
    if (!k || !is_h_on(gates[*k], q)) return false;
    gates[i] = GateApp::rz(flipped, q);
    gates[*j] = GateApp::h(q);
    gates[*k] = GateApp::rz(flipped, q);
    return true;
}

// H q; Rz(-+1/2) q; CNOT c q; Rz(+-1/2) q; H q -> Rz(+-1/2) q; CNOT c q; Rz(-+1/2) q
bool try_h_rule_34(GateList& gates, std::size_t i) {
    const Qubit q = gates[i].q0;
    const auto j = first_on(gates, q, i + 1);
    if (!j || !is_rz_on(gates[*j], q)) return false;
    const Angle a = gates[*j].angle;
    if (!(a == p_angle() || a == pdg_angle())) return false;
    const Angle flipped = a == p_angle() ? pdg_angle() : p_angle();
    const auto k = first_on(gates, q, *j + 1);
    if (!k || !gates[*k].is_cnot() || gates[*k].q1 != q) return false;
    const auto m = first_on(gates, q, *k + 1);
    if (!m || !is_rz_on(gates[*m], q) || !(gates[*m].angle == flipped)) return false;
    const auto n = first_on(gates, q, *m + 1);
    if (!n || !is_h_on(gates[*n], q)) return false;
    gates[*j].angle = flipped;
    gates[*m].angle = a;
    // Delete the outer H gates, higher index first.
    gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(*n));
    gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(i));
    return true;
}

// H a; H b; CNOT a b; H a; H b -> CNOT b a. The scanned H at position i may
// sit on either wire of the CNOT.
bool try_h_rule_5(GateList& gates, std::size_t i) {
    const Qubit s = gates[i].q0;
    const auto j = first_on(gates, s, i + 1);
    if (!j || !gates[*j].is_cnot()) return false;
    const Qubit a = gates[*j].q0;
    const Qubit b = gates[*j].q1;
    const Qubit o = s == a ? b : a;  // the CNOT wire the scan did not follow
    // The last gate touching o before the CNOT must be its H.
    std::optional<std::size_t> p;
    for (std::size_t k = 0; k < *j; ++k)
        if (gates[k].touches(o)) p = k;
    if (!p || *p == i || !is_h_on(gates[*p], o)) return false;
    const auto m = first_on(gates, a, *j + 1);
    if (!m || !is_h_on(gates[*m], a)) return false;
    const auto n = first_on(gates, b, *j + 1);
    if (!n || !is_h_on(gates[*n], b)) return false;
    gates[*j] = GateApp::cnot(b, a);
    // Delete the four H gates, higher indices first.
    std::size_t idx[4] = {i, *p, *m, *n};
    std::sort(idx, idx + 4, std::greater<>());
    for (std::size_t d : idx) gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(d));
    return true;
}

} // namespace

Circuit hadamard_reduction(const Circuit& c) {
    GateList gates = c.gates;
    std::size_t i = 0;
    while (i < gates.size()) {
        if (gates[i].kind == GateKind::H) {
            if (try_h_rule_34(gates, i) || try_h_rule_12(gates, i) || try_h_rule_5(gates, i))
                continue;  // each rewrite strictly lowers the H count
        }
        ++i;
    }
    return Circuit{c.dim, std::move(gates)};
}

namespace {

// Parity vector over the circuit inputs; constants never arise because the
// tracked subcircuits contain no X gates.
struct ParityVec {
    std::vector<std::uint64_t> words;

    static ParityVec unit(unsigned dim, Qubit q) {
        ParityVec v;
        v.words.assign((dim + 63) / 64, 0);
        v.words[q / 64] |= std::uint64_t{1} << (q % 64);
        return v;
    }
    void operator^=(const ParityVec& o) {
        for (std::size_t w = 0; w < words.size(); ++w) words[w] ^= o.words[w];
    }
    friend bool operator==(const ParityVec&, const ParityVec&) = default;
};

} // namespace

Circuit merge_rotations(const Circuit& c) {
    if (!well_typed(c)) return c;
    GateList gates = c.gates;
    std::size_t i = 0;
    while (i < gates.size()) {
        if (!gates[i].is_rz()) {
            ++i;
            continue;
        }
        // Track the boolean function on every wire, starting fresh at this
        // rotation; wires hit by H or X fall out of the subcircuit.
        std::vector<ParityVec> wire(c.dim);
        std::vector<bool> dead(c.dim, false);
        for (Qubit q = 0; q < c.dim; ++q) wire[q] = ParityVec::unit(c.dim, q);
        const ParityVec target = wire[gates[i].q0];

        bool merged = false;
        for (std::size_t j = i + 1; j < gates.size(); ++j) {
            const GateApp& g = gates[j];
            if (g.is_cnot()) {
                if (dead[g.q0]) dead[g.q1] = true;
                else if (!dead[g.q1]) wire[g.q1] ^= wire[g.q0];
                continue;
            }
            if (g.is_rz()) {
                if (!dead[g.q0] && wire[g.q0] == target) {
                    const Angle sum = gates[i].angle + g.angle;
                    if (sum.is_zero()) {
                        gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(j));
                    } else {
                        gates[j].angle = sum;
                    }
                    gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(i));
                    merged = true;
                    break;
                }
                continue;
            }
            dead[g.q0] = true;  // H or X ends tracking for that wire
        }
        if (!merged) ++i;
    }
    return Circuit{c.dim, std::move(gates)};
}

Circuit optimize_with_schedule(const Circuit& c, std::string_view schedule) {
    Circuit out = c;
    for (const char ch : schedule) {
        switch (ch) {
        case '0': out = not_propagation(out); break;
        case '1': out = hadamard_reduction(out); break;
        case '2': out = cancel_single_qubit_gates(out); break;
        case '3': out = cancel_two_qubit_gates(out); break;
        case '4': out = merge_rotations(out); break;
        default:
            throw std::invalid_argument("unknown pass id in schedule: " + std::string(1, ch));
        }
    }
    return out;
}

Circuit optimize(const Circuit& c) {
    return optimize_with_schedule(c, kDefaultSchedule);
}

namespace {

GateList concat(std::initializer_list<const GateList*> parts) {
    GateList out;
    for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
    return out;
}

// Strips `suffix` from the tail of `gates`, commuting across disjoint gates.
// A trailing rotation may be split: matching Rz(r) against Rz(m) on the same
// qubit leaves Rz(m - r) behind. Fails when a gate cannot be matched.
std::optional<GateList> remove_suffix_splitting_rz(GateList gates, const GateList& suffix) {
    for (auto it = suffix.rbegin(); it != suffix.rend(); ++it) {
        const GateApp& g = *it;
        bool matched = false;
        for (std::size_t j = gates.size(); j-- > 0;) {
            GateApp& w = gates[j];
            if (w == g) {
                gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(j));
                matched = true;
                break;
            }
            if (w.is_rz() && g.is_rz() && w.q0 == g.q0) {
                w.angle = w.angle - g.angle;
                matched = true;
                break;
            }
            if (!w.disjoint_from(g)) break;
        }
        if (!matched) return std::nullopt;
    }
    return gates;
}

} // namespace

std::optional<LcrTriple> optimize_lcr(const Circuit& c) {
    const Circuit empty{c.dim, {}};
    if (c.gates.empty()) return LcrTriple{empty, empty, empty};

    const Circuit o = optimize(c);
    const Circuit o2 = optimize(Circuit{c.dim, concat({&o.gates, &o.gates})});
    const Circuit o3 = optimize(Circuit{c.dim, concat({&o.gates, &o.gates, &o.gates})});

    // O2 splits as L ++ R where L is the part of the first iteration the
    // boundary did not disturb.
    auto s1 = matching_prefix(o2.gates, o.gates);
    const GateList l = std::move(s1.prefix);
    const GateList r = std::move(s1.rest_a);

    // O3 must then have the shape L ++ C ++ R.
    auto s2 = matching_prefix(o3.gates, l);
    if (!s2.rest_b.empty()) return std::nullopt;
    auto middle = remove_suffix_splitting_rz(std::move(s2.rest_a), r);
    if (!middle) return std::nullopt;

    return LcrTriple{Circuit{c.dim, l}, Circuit{c.dim, std::move(*middle)}, Circuit{c.dim, r}};
}

std::vector<EquivalenceIdentity> rule_catalog() {
    using S = EquivalenceIdentity::Source;
    const Qubit a = 0, b = 1, q2 = 2;
    const Angle k(1, 4), k2(3, 4);
    const auto h = GateApp::h;
    const auto x = GateApp::x;
    const auto cnot = GateApp::cnot;
    const auto rz = GateApp::rz;
    const Angle p = p_angle(), pdg = pdg_angle();

    return {
        // Not propagation (the Z output is encoded as Rz(1)).
        {"X;H = H;Z", S::NotPropagation, true, 1, {x(a), h(a)}, {h(a), rz(Angle(1, 1), a)}},
        {"X;Rz(k) ~ Rz(2-k);X", S::NotPropagation, false, 1,
         {x(a), rz(k, a)}, {rz(reflect_angle(k), a), x(a)}},
        {"X(ctl);CNOT = CNOT;X;X", S::NotPropagation, true, 2,
         {x(a), cnot(a, b)}, {cnot(a, b), x(a), x(b)}},
        {"X(tgt);CNOT = CNOT;X(tgt)", S::NotPropagation, true, 2,
         {x(b), cnot(a, b)}, {cnot(a, b), x(b)}},

        // Commutation rules used by the cancellation passes.
        {"Rz past H;CNOT;H", S::Commutation, true, 2,
         {rz(k, b), h(b), cnot(a, b), h(b)}, {h(b), cnot(a, b), h(b), rz(k, b)}},
        {"CNOT shared target", S::Commutation, true, 3,
         {cnot(a, q2), cnot(b, q2)}, {cnot(b, q2), cnot(a, q2)}},
        {"Rz past CNOT;Rz;CNOT", S::Commutation, true, 2,
         {rz(k, b), cnot(a, b), rz(k2, b), cnot(a, b)},
         {cnot(a, b), rz(k2, b), cnot(a, b), rz(k, b)}},
        {"CNOT shared control", S::Commutation, true, 3,
         {cnot(a, q2), cnot(a, b)}, {cnot(a, b), cnot(a, q2)}},
        {"Rz past control", S::Commutation, true, 2,
         {rz(k, a), cnot(a, b)}, {cnot(a, b), rz(k, a)}},
        {"CNOT past H;CNOT;H", S::Commutation, true, 3,
         {cnot(a, b), h(b), cnot(b, q2), h(b)}, {h(b), cnot(b, q2), h(b), cnot(a, b)}},

        // Hadamard reduction.
        {"H;P;H ~ Pdg;H;Pdg", S::HadamardReduction, false, 1,
         {h(a), rz(p, a), h(a)}, {rz(pdg, a), h(a), rz(pdg, a)}},
        {"H;Pdg;H ~ P;H;P", S::HadamardReduction, false, 1,
         {h(a), rz(pdg, a), h(a)}, {rz(p, a), h(a), rz(p, a)}},
        {"H;Pdg;CNOT;P;H = P;CNOT;Pdg", S::HadamardReduction, true, 2,
         {h(b), rz(pdg, b), cnot(a, b), rz(p, b), h(b)},
         {rz(p, b), cnot(a, b), rz(pdg, b)}},
        {"H;P;CNOT;Pdg;H = Pdg;CNOT;P", S::HadamardReduction, true, 2,
         {h(b), rz(p, b), cnot(a, b), rz(pdg, b), h(b)},
         {rz(pdg, b), cnot(a, b), rz(p, b)}},
        {"HH;CNOT;HH = reversed CNOT", S::HadamardReduction, true, 2,
         {h(a), h(b), cnot(a, b), h(a), h(b)}, {cnot(b, a)}},

        // Self-cancellation and rotation merging.
        {"H;H = id", S::Cancellation, true, 1, {h(a), h(a)}, {}},
        {"X;X = id", S::Cancellation, true, 1, {x(a), x(a)}, {}},
        {"CNOT;CNOT = id", S::Cancellation, true, 2, {cnot(a, b), cnot(a, b)}, {}},
        {"Rz(k);Rz(k') = Rz(k+k')", S::Cancellation, true, 1,
         {rz(k, a), rz(k2, a)}, {rz(k + k2, a)}},
    };
}

} // namespace qcopt
