// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qcopt/ir.hpp"

namespace qcopt {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Dense denotation is limited to this many qubits (4096^2 complex entries).
inline constexpr unsigned kMaxDenoteQubits = 12;

/// The general single-qubit rotation R(theta, phi, lambda), in radians.
struct BaseRotation {
    double theta = 0;
    double phi = 0;
    double lambda = 0;
};

/// A global phase, defined modulo 2*pi.
struct Phase {
    double theta = 0;
};

/// [[cos(t/2), -e^{il} sin(t/2)], [e^{ip} sin(t/2), e^{i(p+l)} cos(t/2)]]
ComplexMatrix base_matrix(const BaseRotation& r);

/// H -> R(pi/2, 0, pi), X -> R(pi, 0, pi), Rz(k) -> R(0, 0, k*pi).
/// CNOT has no single-qubit translation and yields an empty result.
std::optional<BaseRotation> gate_to_base(const GateApp& g);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// I_{2^q} (x) u (x) I_{2^(d-q-1)}. Requires q < d.
ComplexMatrix apply1(const ComplexMatrix& u, Qubit q, unsigned d);

/// The CNOT unitary on qubits (q1=control, q2=target) extended to dimension
/// d as the two-term projector sum. Requires q1 != q2, both < d.
ComplexMatrix apply2(Qubit q1, Qubit q2, unsigned d);

/// Single gate extended to the full register (dispatches to apply1/apply2).
ComplexMatrix gate_unitary(const GateApp& g, unsigned d);

/// Right-to-left product of the per-gate matrices; the all-zero matrix when
/// the circuit is ill-typed. Throws when c.dim exceeds kMaxDenoteQubits.
ComplexMatrix denote_unitary(const Circuit& c);

/// Applies the circuit to a state vector of length 2^dim (zero vector for
/// ill-typed circuits). Cheaper than denote_unitary for single columns.
ComplexVector apply_to_state(const Circuit& c, ComplexVector state);

/// If there is a theta with max|a - e^{i theta} b| <= tol, returns it
/// (anchored at b's maximum-magnitude entry); exact equality gives theta=0.
std::optional<Phase> equiv_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b,
                                       double tol);

/// The permutation matrix P with P|x_logical> = |x_physical> where logical
/// qubit l maps to physical qubit perm[l].
ComplexMatrix permutation_matrix(const std::vector<Qubit>& perm, unsigned d);

/// True iff [[b]] = P_out [[a]] P_in^dagger within tol, for the permutation
/// matrices induced by the input/output qubit correspondences.
bool equiv_up_to_permutation(const Circuit& a, const Circuit& b,
                             const std::vector<Qubit>& perm_in,
                             const std::vector<Qubit>& perm_out, double tol);

/// Same correspondence on both sides (a static relabeling of qubits).
bool equiv_up_to_permutation(const Circuit& a, const Circuit& b,
                             const std::vector<Qubit>& perm, double tol);

} // namespace qcopt
