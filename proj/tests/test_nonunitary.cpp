// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qcopt/nonunitary.hpp"
#include "qcopt/validate.hpp"

using namespace qcopt;
using oracle::max_abs_diff;

namespace {

DensityMatrix pure(const ComplexVector& psi) {
    return psi * psi.adjoint();
}

DensityMatrix basis_density(unsigned d, Eigen::Index x) {
    ComplexVector e = ComplexVector::Zero(Eigen::Index{1} << d);
    e(x) = 1;
    return pure(e);
}

// A random program interleaving unitary runs with (possibly nested)
// measurements.
Program random_program(unsigned dim, std::mt19937_64& rng, unsigned depth = 1) {
    Program p;
    p.dim = dim;
    const unsigned blocks = 1 + rng() % 3;
    for (unsigned b = 0; b < blocks; ++b) {
        if (rng() % 3 == 0) {
            const Qubit q = static_cast<Qubit>(rng() % dim);
            std::vector<Block> one, zero;
            if (depth > 0 && rng() % 2) {
                one = random_program(dim, rng, depth - 1).body;
                zero = random_program(dim, rng, depth - 1).body;
            }
            p.body.push_back(Block::measure(q, std::move(one), std::move(zero)));
        } else {
            p.body.push_back(Block::unitary(random_circuit(dim, 2 + rng() % 8, rng()).gates));
        }
    }
    return p;
}

// Embeds a (d-1)-qubit density matrix with |bit> at position q.
DensityMatrix with_classical_qubit(const DensityMatrix& rest, unsigned d, Qubit q, bool bit) {
    ComplexMatrix qubit = ComplexMatrix::Zero(2, 2);
    qubit(bit ? 1 : 0, bit ? 1 : 0) = 1;
    // Tensor with q at the front, then permute it into position.
    const DensityMatrix front = kron(qubit, rest);
    std::vector<Qubit> perm(d);
    perm[0] = q;
    for (unsigned l = 1, next = 0; l < d; ++l, ++next) {
        if (next == q) ++next;
        perm[l] = next;
    }
    const ComplexMatrix pm = permutation_matrix(perm, d);
    return pm * front * pm.adjoint();
}

} // namespace

TEST_CASE("denote_program basics") {
    SUBCASE("measurement dephases a plus state") {
        ComplexVector plus(2);
        plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
        Program measure;
        measure.dim = 1;
        measure.body.push_back(Block::measure(0, {}, {}));
        const DensityMatrix out = denote_program(measure, pure(plus));
        ComplexMatrix expect = ComplexMatrix::Zero(2, 2);
        expect(0, 0) = 0.5;
        expect(1, 1) = 0.5;
        CHECK(max_abs_diff(out, expect) < 1e-12);
    }
    SUBCASE("reset returns |1> to |0>") {
        Program reset;
        reset.dim = 1;
        reset.body.push_back(Block::measure(0, {Block::unitary({GateApp::x(0)})}, {}));
        const DensityMatrix out = denote_program(reset, basis_density(1, 1));
        CHECK(max_abs_diff(out, basis_density(1, 0)) < 1e-12);
    }
    SUBCASE("sequencing composes and skip is identity") {
        Program skip;
        skip.dim = 2;
        skip.body.push_back(Block::unitary({}));
        const DensityMatrix rho = basis_density(2, 2);
        CHECK(max_abs_diff(denote_program(skip, rho), rho) < 1e-15);
    }
    SUBCASE("dimension guard") {
        Program big;
        big.dim = 11;
        CHECK_THROWS_AS(denote_program(big, ComplexMatrix::Identity(2048, 2048)),
                        std::invalid_argument);
    }
}

TEST_CASE("teleport moves qubit 0 to qubit 2 and clears the ancillas") {
    const Program tele = teleport();
    CHECK(well_typed(tele));
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 25; ++trial) {
        const DensityMatrix rho = oracle::random_density(1, rng);
        const DensityMatrix input = kron(kron(rho, basis_density(1, 0)), basis_density(1, 0));
        const DensityMatrix expect = kron(kron(basis_density(1, 0), basis_density(1, 0)), rho);
        CHECK(max_abs_diff(denote_program(tele, input), expect) < 1e-9);
    }
}

TEST_CASE("measurement-free programs agree with the unitary semantics") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 20; ++trial) {
        const unsigned dim = 1 + rng() % 4;
        const Circuit c = random_circuit(dim, 15, rng());
        Program p;
        p.dim = dim;
        p.body.push_back(Block::unitary(c.gates));
        const DensityMatrix rho = oracle::random_density(dim, rng);
        const ComplexMatrix u = denote_unitary(c);
        CHECK(max_abs_diff(denote_program(p, rho), u * rho * u.adjoint()) < 1e-9);
    }
}

TEST_CASE("remove_z_rotations_before_measure") {
    SUBCASE("rotation directly before its measurement is deleted") {
        Program p;
        p.dim = 1;
        p.body.push_back(Block::unitary({GateApp::rz(Angle(1, 4), 0)}));
        p.body.push_back(Block::measure(0, {}, {}));
        const Program out = remove_z_rotations_before_measure(p);
        CHECK(out.body[0].gates().empty());
    }
    SUBCASE("a rotation on another qubit stays") {
        Program p;
        p.dim = 2;
        p.body.push_back(Block::unitary({GateApp::rz(Angle(1, 4), 1)}));
        p.body.push_back(Block::measure(0, {}, {}));
        const Program out = remove_z_rotations_before_measure(p);
        CHECK(out.body[0].gates().size() == 1);
    }
    SUBCASE("H is not diagonal and stays") {
        Program p;
        p.dim = 1;
        p.body.push_back(Block::unitary({GateApp::h(0)}));
        p.body.push_back(Block::measure(0, {}, {}));
        const Program out = remove_z_rotations_before_measure(p);
        CHECK(out.body[0].gates().size() == 1);
    }
    SUBCASE("an intervening gate on q blocks removal") {
        Program p;
        p.dim = 2;
        p.body.push_back(Block::unitary({GateApp::rz(Angle(1, 4), 0), GateApp::h(0)}));
        p.body.push_back(Block::measure(0, {}, {}));
        const Program out = remove_z_rotations_before_measure(p);
        CHECK(out.body[0].gates().size() == 2);
    }
    SUBCASE("removal may cross a block that does not touch q") {
        Program p;
        p.dim = 2;
        p.body.push_back(Block::unitary({GateApp::rz(Angle(1, 4), 0)}));
        p.body.push_back(Block::unitary({GateApp::h(1)}));
        p.body.push_back(Block::measure(0, {}, {}));
        const Program out = remove_z_rotations_before_measure(p);
        CHECK(out.body[0].gates().empty());
    }
}

TEST_CASE("propagate_classical_state applies the five rules") {
    SUBCASE("CNOT from a |0> control disappears") {
        Program p;
        p.dim = 2;
        p.body.push_back(Block::unitary({GateApp::cnot(0, 1)}));
        const Program out = propagate_classical_state(p, 0, false);
        CHECK(out.body.empty());
    }
    SUBCASE("CNOT from a |1> control becomes X on the target") {
        Program p;
        p.dim = 2;
        p.body.push_back(Block::unitary({GateApp::cnot(0, 1)}));
        const Program out = propagate_classical_state(p, 0, true);
        REQUIRE(out.body.size() == 1);
        CHECK(out.body[0].gates() == GateList{GateApp::x(1)});
    }
    SUBCASE("H halts the analysis") {
        Program p;
        p.dim = 2;
        p.body.push_back(Block::unitary({GateApp::h(0), GateApp::cnot(0, 1)}));
        const Program out = propagate_classical_state(p, 0, false);
        CHECK(out.body[0].gates() == GateList{GateApp::h(0), GateApp::cnot(0, 1)});
    }
    SUBCASE("X flips the tracked bit") {
        Program p;
        p.dim = 2;
        p.body.push_back(Block::unitary({GateApp::x(0), GateApp::cnot(0, 1)}));
        const Program out = propagate_classical_state(p, 0, false);
        REQUIRE(out.body.size() == 1);
        CHECK(out.body[0].gates() == GateList{GateApp::x(0), GateApp::x(1)});
    }
    SUBCASE("a measurement of q collapses to the known branch") {
        Program p;
        p.dim = 1;
        p.body.push_back(Block::measure(0, {Block::unitary({GateApp::x(0)})}, {}));
        const Program out = propagate_classical_state(p, 0, true);  // reset of |1>
        REQUIRE(out.body.size() == 1);
        CHECK(out.body[0].gates() == GateList{GateApp::x(0)});
    }
}

TEST_CASE("both non-unitary passes preserve the semantics") {
    std::mt19937_64 rng(83);
    int admissible_checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned dim = 2 + rng() % 3;
        const Program p = random_program(dim, rng);
        REQUIRE(well_typed(p));
        const DensityMatrix rho = oracle::random_density(dim, rng);

        const DensityMatrix expected = denote_program(p, rho);
        CHECK(std::abs(expected.trace() - rho.trace()) < 1e-9);  // trace preserved

        const Program no_rz = remove_z_rotations_before_measure(p);
        CHECK(max_abs_diff(denote_program(no_rz, rho), expected) < 1e-9);

        // Classical propagation is only claimed for inputs where q is
        // classically |i>.
        const Qubit q = static_cast<Qubit>(rng() % dim);
        const bool bit = rng() % 2;
        const DensityMatrix rest = oracle::random_density(dim - 1, rng);
        const DensityMatrix classical = with_classical_qubit(rest, dim, q, bit);
        const Program propagated = propagate_classical_state(p, q, bit);
        CHECK(max_abs_diff(denote_program(propagated, classical),
                           denote_program(p, classical)) < 1e-9);
        ++admissible_checked;
    }
    CHECK(admissible_checked == 40);
}

TEST_CASE("programs from qasm route measure and reset into blocks") {
    const auto qp = parse(
        "OPENQASM 2.0;\nqreg q[2];\ncreg c[2];\nh q[0];\nmeasure q[0] -> c[0];\nreset "
        "q[1];\n");
    const Program p = program_from_qasm(qp);
    REQUIRE(p.body.size() == 3);
    CHECK(p.body[0].is_unitary());
    CHECK_FALSE(p.body[1].is_unitary());
    CHECK(p.body[1].meas().if_one.empty());
    CHECK(p.body[1].meas().if_zero.empty());
    const auto& reset = p.body[2].meas();
    REQUIRE(reset.if_one.size() == 1);
    CHECK(reset.if_one[0].gates() == GateList{GateApp::x(1)});
}
