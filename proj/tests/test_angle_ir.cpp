// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qcopt/ir.hpp"

using namespace qcopt;

TEST_CASE("angles normalize into [0,2) in lowest terms") {
    CHECK(Angle(1, 4).num() == 1);
    CHECK(Angle(1, 4).den() == 4);
    CHECK(Angle(2, 8) == Angle(1, 4));
    CHECK(Angle(9, 4) == Angle(1, 4));       // k and k+2 coincide
    CHECK(Angle(-1, 4) == Angle(7, 4));      // wrap negatives
    CHECK(Angle(4, 2) == Angle(0, 1));       // 2 pi is the identity
    CHECK(Angle(3, -2) == Angle(1, 2));      // sign moves to the numerator
    CHECK(Angle(0, 7).den() == 1);
}

TEST_CASE("angle arithmetic is exact and associative under normalization") {
    CHECK(Angle(1, 4) + Angle(7, 4) == Angle(0, 1));
    CHECK(Angle(1, 4) + Angle(1, 4) == Angle(1, 2));
    CHECK(reflect_angle(Angle(1, 4)) == Angle(7, 4));
    CHECK(reflect_angle(Angle(0, 1)) == Angle(0, 1));

    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        const Angle a(static_cast<std::int64_t>(rng() % 64) - 32,
                      static_cast<std::int64_t>(rng() % 16) + 1);
        const Angle b(static_cast<std::int64_t>(rng() % 64) - 32,
                      static_cast<std::int64_t>(rng() % 16) + 1);
        const Angle sum = a + b;
        CHECK(sum.den() > 0);
        CHECK(sum.num() >= 0);
        CHECK(sum.num() < 2 * sum.den());
        // Normalizing inputs first cannot change the normalized sum.
        CHECK(sum == Angle(a.num(), a.den()) + Angle(b.num(), b.den()));
    }
}

TEST_CASE("t-count recognizes odd multiples of pi/4") {
    CHECK(Angle(1, 4).is_t_angle());
    CHECK(Angle(7, 4).is_t_angle());
    CHECK_FALSE(Angle(1, 2).is_t_angle());
    CHECK_FALSE(Angle(2, 4).is_t_angle());  // simplifies to pi/2
    CHECK_FALSE(Angle(0, 1).is_t_angle());
}

TEST_CASE("angle serialization") {
    CHECK(Angle(0, 1).to_string() == "0");
    CHECK(Angle(1, 1).to_string() == "pi");
    CHECK(Angle(3, 2).to_string() == "3*pi/2");
    CHECK(Angle(1, 4).to_string() == "pi/4");
}

TEST_CASE("well_typed checks bounds and repeated indices") {
    CHECK(well_typed(Circuit{2, {GateApp::cnot(0, 1)}}));
    CHECK_FALSE(well_typed(Circuit{2, {GateApp::cnot(0, 0)}}));
    CHECK_FALSE(well_typed(Circuit{1, {GateApp::h(1)}}));
    CHECK(well_typed(Circuit{1, {}}));
}

TEST_CASE("next_gate skips other qubits and honors predicates") {
    const GateList a = {GateApp::h(0), GateApp::rz(Angle(1, 4), 0)};
    auto hit = next_gate(a, 0, [](const GateApp& g) { return g.is_rz(); });
    REQUIRE(hit.has_value());
    CHECK(hit->first == 1);
    CHECK(hit->second == GateApp::rz(Angle(1, 4), 0));

    const GateList b = {GateApp::h(1), GateApp::x(0)};
    auto hitb = next_gate(b, 0, [](const GateApp& g) { return g.kind == GateKind::X; });
    REQUIRE(hitb.has_value());
    CHECK(hitb->first == 1);

    CHECK_FALSE(next_gate(GateList{}, 0, [](const GateApp&) { return true; }).has_value());

    // A blocking gate on the same qubit stops the search.
    auto blocked = next_gate(a, 0, [](const GateApp& g) { return g.is_rz(); }, 0,
                             [](const GateApp& g) { return g.kind == GateKind::H; });
    CHECK_FALSE(blocked.has_value());
}

TEST_CASE("matching_prefix finds literal and commuting prefixes") {
    const GateList a1 = {GateApp::h(0), GateApp::x(1)};
    const GateList b1 = {GateApp::h(0), GateApp::rz(Angle(1, 1), 1)};
    auto s1 = matching_prefix(a1, b1);
    CHECK(s1.prefix == GateList{GateApp::h(0)});
    CHECK(s1.rest_a == GateList{GateApp::x(1)});
    CHECK(s1.rest_b == GateList{GateApp::rz(Angle(1, 1), 1)});

    auto s2 = matching_prefix(GateList{}, GateList{GateApp::h(0)});
    CHECK(s2.prefix.empty());

    // Disjoint gates commute while matching; simulation confirms both orders
    // denote the same unitary.
    const GateList a3 = {GateApp::x(1), GateApp::h(0)};
    const GateList b3 = {GateApp::h(0), GateApp::x(1)};
    auto s3 = matching_prefix(a3, b3);
    CHECK(s3.prefix == a3);
    CHECK(s3.rest_a.empty());
    CHECK(s3.rest_b.empty());
    CHECK(oracle::max_abs_diff(denote_unitary(Circuit{2, a3}), denote_unitary(Circuit{2, b3})) <
          1e-12);
}

TEST_CASE("matching_prefix splits denote the original programs") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        // Build two lists sharing a scrambled prefix.
        GateList shared, ta, tb;
        for (int i = 0; i < 6; ++i)
            shared.push_back(GateApp::rz(Angle(static_cast<std::int64_t>(rng() % 8), 4),
                                         static_cast<Qubit>(rng() % 4)));
        ta = shared;
        tb = shared;
        ta.push_back(GateApp::h(static_cast<Qubit>(rng() % 4)));
        tb.push_back(GateApp::x(static_cast<Qubit>(rng() % 4)));
        const auto split = matching_prefix(ta, tb);
        GateList rejoined = split.prefix;
        rejoined.insert(rejoined.end(), split.rest_a.begin(), split.rest_a.end());
        CHECK(oracle::max_abs_diff(denote_unitary(Circuit{4, rejoined}),
                                   denote_unitary(Circuit{4, ta})) < 1e-10);
        GateList rejoined_b = split.prefix;
        rejoined_b.insert(rejoined_b.end(), split.rest_b.begin(), split.rest_b.end());
        CHECK(oracle::max_abs_diff(denote_unitary(Circuit{4, rejoined_b}),
                                   denote_unitary(Circuit{4, tb})) < 1e-10);
    }
}

TEST_CASE("count_gates matches the documented breakdown") {
    SUBCASE("empty circuit") {
        const GateCounts counts = count_gates(Circuit{3, {}});
        CHECK(counts.total == 0);
        CHECK(counts.t_count == 0);
    }
    SUBCASE("pi/2 rotation is not a T gate") {
        const GateCounts counts = count_gates(Circuit{1, {GateApp::rz(Angle(1, 2), 0)}});
        CHECK(counts.total == 1);
        CHECK(counts.rz == 1);
        CHECK(counts.t_count == 0);
        CHECK(counts.other_rz == 1);
    }
    SUBCASE("totals always equal the flat gate list length") {
        std::mt19937_64 rng(5);
        for (int i = 0; i < 20; ++i) {
            GateList gates;
            const std::size_t len = rng() % 30;
            for (std::size_t k = 0; k < len; ++k)
                gates.push_back(GateApp::rz(Angle(static_cast<std::int64_t>(rng() % 8), 4),
                                            static_cast<Qubit>(rng() % 3)));
            const GateCounts counts = count_gates(Circuit{3, gates});
            CHECK(counts.total == gates.size());
            CHECK(counts.total == counts.h + counts.x + counts.rz + counts.cnot);
            CHECK(counts.rz == counts.t_count + counts.other_rz);
        }
    }
}
