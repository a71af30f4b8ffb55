// SPDX-License-Identifier: Apache-2.0
#include "qcopt/semantics.hpp"

#include <cmath>
#include <stdexcept>

namespace qcopt {

namespace {

using Complex = std::complex<double>;

Eigen::Index dimension_size(unsigned d) {
    return Eigen::Index{1} << d;
}

void check_dim_guard(unsigned d, unsigned max) {
    if (d > max) {
        throw std::invalid_argument("dimension too large for dense denotation: " +
                                    std::to_string(d) + " qubits");
    }
}

// Bit of qubit q within a basis index; qubit 0 is the most significant bit,
// matching the Kronecker-product ordering of apply1.
Eigen::Index qubit_mask(Qubit q, unsigned d) {
    return Eigen::Index{1} << (d - 1 - q);
}

// In-place U <- (u on qubit q) * U.
void apply_single_left(ComplexMatrix& m, const ComplexMatrix& u, Qubit q, unsigned d) {
    const Eigen::Index mask = qubit_mask(q, d);
    const Eigen::Index n = m.rows();
    const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
    Eigen::RowVectorXcd tmp(m.cols());
    for (Eigen::Index r = 0; r < n; ++r) {
        if (r & mask) continue;
        tmp = m.row(r);
        m.row(r) = u00 * tmp + u01 * m.row(r | mask);
        m.row(r | mask) = u10 * tmp + u11 * m.row(r | mask);
    }
}

// In-place U <- CNOT(qc, qt) * U.
void apply_cnot_left(ComplexMatrix& m, Qubit qc, Qubit qt, unsigned d) {
    const Eigen::Index cmask = qubit_mask(qc, d);
    const Eigen::Index tmask = qubit_mask(qt, d);
    const Eigen::Index n = m.rows();
    for (Eigen::Index r = 0; r < n; ++r) {
        if ((r & cmask) && !(r & tmask)) m.row(r).swap(m.row(r | tmask));
    }
}

void apply_gate_left(ComplexMatrix& m, const GateApp& g, unsigned d) {
    if (g.kind == GateKind::CNOT) {
        apply_cnot_left(m, g.q0, g.q1, d);
    } else {
        apply_single_left(m, base_matrix(*gate_to_base(g)), g.q0, d);
    }
}

} // namespace

ComplexMatrix base_matrix(const BaseRotation& r) {
    const double c = std::cos(r.theta / 2);
    const double s = std::sin(r.theta / 2);
    ComplexMatrix m(2, 2);
    m(0, 0) = c;
    m(0, 1) = -std::polar(1.0, r.lambda) * s;
    m(1, 0) = std::polar(1.0, r.phi) * s;
    m(1, 1) = std::polar(1.0, r.phi + r.lambda) * c;
    return m;
}

std::optional<BaseRotation> gate_to_base(const GateApp& g) {
    switch (g.kind) {
    case GateKind::H: return BaseRotation{M_PI / 2, 0, M_PI};
    case GateKind::X: return BaseRotation{M_PI, 0, M_PI};
    case GateKind::Rz: return BaseRotation{0, 0, g.angle.radians()};
    case GateKind::CNOT: return std::nullopt;
    }
    return std::nullopt;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

ComplexMatrix apply1(const ComplexMatrix& u, Qubit q, unsigned d) {
    if (q >= d) throw std::invalid_argument("apply1: qubit index out of range");
    const auto left = ComplexMatrix::Identity(dimension_size(q), dimension_size(q));
    const auto right = ComplexMatrix::Identity(dimension_size(d - q - 1),
                                               dimension_size(d - q - 1));
    return kron(kron(left, u), right);
}

ComplexMatrix apply2(Qubit q1, Qubit q2, unsigned d) {
    if (q1 == q2 || q1 >= d || q2 >= d)
        throw std::invalid_argument("apply2: invalid qubit indices");
    ComplexMatrix proj0 = ComplexMatrix::Zero(2, 2);
    proj0(0, 0) = 1;
    ComplexMatrix proj1 = ComplexMatrix::Zero(2, 2);
    proj1(1, 1) = 1;
    ComplexMatrix sigma_x = ComplexMatrix::Zero(2, 2);
    sigma_x(0, 1) = 1;
    sigma_x(1, 0) = 1;
    const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);

    // Tensor the per-qubit factors in register order; the control carries the
    // projector and the target carries I or sigma_x.
    auto place = [&](const ComplexMatrix& at_control, const ComplexMatrix& at_target) {
        ComplexMatrix acc = ComplexMatrix::Identity(1, 1);
        for (Qubit pos = 0; pos < d; ++pos) {
            if (pos == q1) acc = kron(acc, at_control);
            else if (pos == q2) acc = kron(acc, at_target);
            else acc = kron(acc, id2);
        }
        return acc;
    };
    return place(proj0, id2) + place(proj1, sigma_x);
}

ComplexMatrix gate_unitary(const GateApp& g, unsigned d) {
    if (g.kind == GateKind::CNOT) return apply2(g.q0, g.q1, d);
    return apply1(base_matrix(*gate_to_base(g)), g.q0, d);
}

ComplexMatrix denote_unitary(const Circuit& c) {
    check_dim_guard(c.dim, kMaxDenoteQubits);
    const Eigen::Index n = dimension_size(c.dim);
    if (!well_typed(c)) return ComplexMatrix::Zero(n, n);
    ComplexMatrix u = ComplexMatrix::Identity(n, n);
    for (const auto& g : c.gates) apply_gate_left(u, g, c.dim);
    return u;
}

ComplexVector apply_to_state(const Circuit& c, ComplexVector state) {
    check_dim_guard(c.dim, 24);
    const Eigen::Index n = dimension_size(c.dim);
    if (state.size() != n) throw std::invalid_argument("apply_to_state: bad state size");
    if (!well_typed(c)) return ComplexVector::Zero(n);
    ComplexMatrix m = std::move(state);
    for (const auto& g : c.gates) apply_gate_left(m, g, c.dim);
    return m.col(0);
}

std::optional<Phase> equiv_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b,
                                       double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("equiv_up_to_phase: dimension mismatch");
    if ((a.array() == b.array()).all()) return Phase{0.0};

    Eigen::Index bi = 0, bj = 0;
    const double bmax = b.cwiseAbs().maxCoeff(&bi, &bj);
    if (bmax == 0.0) {
        if (a.cwiseAbs().maxCoeff() <= tol) return Phase{0.0};
        return std::nullopt;
    }
    const Complex aa = a(bi, bj);
    const Complex bb = b(bi, bj);
    if (std::abs(std::abs(aa) - bmax) > tol) return std::nullopt;
    // Test a = (aa/bb) b in cross-product form; unlike reconstructing
    // e^{i theta} through a complex division, this stays exact when a is an
    // exact quarter-turn multiple of b, so tol = 0 behaves as stated.
    const double dev = (a * bb - aa * b).cwiseAbs().maxCoeff() / bmax;
    if (dev <= tol) return Phase{std::arg(aa / bb)};
    return std::nullopt;
}

ComplexMatrix permutation_matrix(const std::vector<Qubit>& perm, unsigned d) {
    if (perm.size() != d) throw std::invalid_argument("permutation size mismatch");
    std::vector<bool> seen(d, false);
    for (Qubit p : perm) {
        if (p >= d || seen[p]) throw std::invalid_argument("not a permutation");
        seen[p] = true;
    }
    const Eigen::Index n = dimension_size(d);
    ComplexMatrix p = ComplexMatrix::Zero(n, n);
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index row = 0;
        for (Qubit l = 0; l < d; ++l) {
            if (col & qubit_mask(l, d)) row |= qubit_mask(perm[l], d);
        }
        p(row, col) = 1;
    }
    return p;
}

bool equiv_up_to_permutation(const Circuit& a, const Circuit& b,
                             const std::vector<Qubit>& perm_in,
                             const std::vector<Qubit>& perm_out, double tol) {
    if (a.dim != b.dim) throw std::invalid_argument("equiv_up_to_permutation: dim mismatch");
    const ComplexMatrix ua = denote_unitary(a);
    const ComplexMatrix ub = denote_unitary(b);
    const ComplexMatrix pin = permutation_matrix(perm_in, a.dim);
    const ComplexMatrix pout = permutation_matrix(perm_out, a.dim);
    const ComplexMatrix expected = pout * ua * pin.adjoint();
    return (ub - expected).cwiseAbs().maxCoeff() <= tol;
}

bool equiv_up_to_permutation(const Circuit& a, const Circuit& b,
                             const std::vector<Qubit>& perm, double tol) {
    return equiv_up_to_permutation(a, b, perm, perm, tol);
}

} // namespace qcopt
