// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qcopt/semantics.hpp"

namespace qcopt {

/// An affine boolean function of the circuit inputs: a parity over a subset
/// of variables plus a constant bit.
struct AffineBool {
    std::vector<std::uint64_t> parity;  // bit l set <=> x_l participates
    bool constant = false;

    static AffineBool variable(unsigned dim, unsigned index);
    void operator^=(const AffineBool& o);
    bool eval(std::uint64_t basis_index, unsigned dim) const;

    friend bool operator==(const AffineBool&, const AffineBool&) = default;
    friend auto operator<=>(const AffineBool&, const AffineBool&) = default;
};

/// The normal form of an {Rz, CNOT} circuit: on basis state |x> it produces
/// e^{i pi sum_i theta_i f_i(x)} |h(x)| with h affine reversible.
struct PhasePolynomial {
    std::vector<AffineBool> outputs;        // h, one function per qubit
    std::map<AffineBool, Angle> terms;      // theta_i by f_i; no zero angles

    friend bool operator==(const PhasePolynomial&, const PhasePolynomial&) = default;
};

/// Builds the phase polynomial of an {Rz, CNOT} circuit. Throws on any other
/// gate and on ill-typed circuits.
PhasePolynomial phase_poly_of(const Circuit& c);

/// Reconstructs the unitary described by a phase polynomial: diagonal phases
/// over the permutation induced by h.
ComplexMatrix phase_poly_unitary(const PhasePolynomial& poly, unsigned dim);

struct EquivVerdict {
    enum class Kind { Equal, EqualUpToPhase, NotEquivalent };
    Kind kind = Kind::Equal;
    double theta = 0;                        // for EqualUpToPhase
    std::optional<std::uint64_t> witness;    // basis state exposing a deviation
    double max_deviation = 0;
};

enum class EquivMode { Matrix, PhasePoly };

/// Matrix mode compares dense denotations up to global phase; phase_poly
/// mode compares {Rz, CNOT} normal forms for exact equality. Throws on
/// dimension mismatch or (in phase_poly mode) gates outside {Rz, CNOT}.
EquivVerdict check_equiv(const Circuit& c1, const Circuit& c2, EquivMode mode, double tol);

struct GateMix {
    double h = 1;
    double x = 1;
    double rz = 1;
    double cnot = 1;
};

/// Deterministic under (dim, len, seed, mix); well-typed by construction.
/// Rz angles are drawn from multiples of pi/4.
Circuit random_circuit(unsigned dim, std::size_t len, std::uint64_t seed,
                       const GateMix& mix = {});

/// H 0 followed by a CNOT chain; prepares (|0...0> + |1...1>)/sqrt(2).
/// Rejects n = 0.
Circuit ghz(unsigned n);

} // namespace qcopt
