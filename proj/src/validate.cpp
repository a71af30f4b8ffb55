// SPDX-License-Identifier: Apache-2.0
#include "qcopt/validate.hpp"

#include <random>
#include <stdexcept>

namespace qcopt {

AffineBool AffineBool::variable(unsigned dim, unsigned index) {
    AffineBool f;
    f.parity.assign((dim + 63) / 64, 0);
    f.parity[index / 64] |= std::uint64_t{1} << (index % 64);
    return f;
}

void AffineBool::operator^=(const AffineBool& o) {
    for (std::size_t w = 0; w < parity.size(); ++w) parity[w] ^= o.parity[w];
    constant ^= o.constant;
}

bool AffineBool::eval(std::uint64_t basis_index, unsigned dim) const {
    bool acc = constant;
    for (unsigned l = 0; l < dim; ++l) {
        if (!(parity[l / 64] >> (l % 64) & 1)) continue;
        // Qubit 0 is the most significant bit of a basis index.
        if (basis_index >> (dim - 1 - l) & 1) acc = !acc;
    }
    return acc;
}

PhasePolynomial phase_poly_of(const Circuit& c) {
    if (!well_typed(c)) throw std::invalid_argument("phase_poly_of: ill-typed circuit");
    PhasePolynomial poly;
    poly.outputs.reserve(c.dim);
    for (unsigned q = 0; q < c.dim; ++q) poly.outputs.push_back(AffineBool::variable(c.dim, q));
    for (const auto& g : c.gates) {
        switch (g.kind) {
        case GateKind::CNOT:
            poly.outputs[g.q1] ^= poly.outputs[g.q0];
            break;
        case GateKind::Rz: {
            auto [it, inserted] = poly.terms.try_emplace(poly.outputs[g.q0], g.angle);
            if (!inserted) {
                it->second = it->second + g.angle;
                if (it->second.is_zero()) poly.terms.erase(it);
            } else if (it->second.is_zero()) {
                poly.terms.erase(it);
            }
            break;
        }
        default:
            throw std::invalid_argument("phase_poly_of: circuit contains a non-{Rz,CNOT} gate");
        }
    }
    return poly;
}

ComplexMatrix phase_poly_unitary(const PhasePolynomial& poly, unsigned dim) {
    if (dim > kMaxDenoteQubits)
        throw std::invalid_argument("phase_poly_unitary: dimension too large");
    const Eigen::Index n = Eigen::Index{1} << dim;
    ComplexMatrix u = ComplexMatrix::Zero(n, n);
    for (Eigen::Index x = 0; x < n; ++x) {
        Eigen::Index y = 0;
        for (unsigned q = 0; q < dim; ++q) {
            if (poly.outputs[q].eval(static_cast<std::uint64_t>(x), dim))
                y |= Eigen::Index{1} << (dim - 1 - q);
        }
        double phase = 0;
        for (const auto& [f, theta] : poly.terms)
            if (f.eval(static_cast<std::uint64_t>(x), dim)) phase += theta.radians();
        u(y, x) = std::polar(1.0, phase);
    }
    return u;
}

namespace {

EquivVerdict matrix_verdict(const Circuit& c1, const Circuit& c2, double tol) {
    const ComplexMatrix a = denote_unitary(c1);
    const ComplexMatrix b = denote_unitary(c2);
    EquivVerdict v;

    Eigen::Index di = 0, dj = 0;
    const double raw_dev = (a - b).cwiseAbs().maxCoeff(&di, &dj);
    if (raw_dev <= tol) {
        v.kind = EquivVerdict::Kind::Equal;
        return v;
    }
    if (const auto phase = equiv_up_to_phase(a, b, tol)) {
        v.kind = EquivVerdict::Kind::EqualUpToPhase;
        v.theta = phase->theta;
        return v;
    }
    // The column of the largest raw deviation is a reproducible witness: both
    // circuits evaluated on that basis state differ beyond tol somewhere.
    v.kind = EquivVerdict::Kind::NotEquivalent;
    v.witness = static_cast<std::uint64_t>(dj);
    v.max_deviation = raw_dev;
    return v;
}

EquivVerdict phase_poly_verdict(const Circuit& c1, const Circuit& c2, double tol) {
    const PhasePolynomial p1 = phase_poly_of(c1);
    const PhasePolynomial p2 = phase_poly_of(c2);
    EquivVerdict v;
    if (p1 == p2) {
        v.kind = EquivVerdict::Kind::Equal;
        return v;
    }
    // Distinct normal forms: hunt for a basis state where the two unitaries
    // visibly differ. Exhaustive at small dimension, sampled above that;
    // distinct forms that agree pointwise everywhere are reported Equal.
    v.kind = EquivVerdict::Kind::NotEquivalent;
    const unsigned dim = c1.dim;
    auto column_deviation = [&](std::uint64_t x) {
        std::uint64_t y1 = 0, y2 = 0;
        for (unsigned q = 0; q < dim; ++q) {
            if (p1.outputs[q].eval(x, dim)) y1 |= std::uint64_t{1} << (dim - 1 - q);
            if (p2.outputs[q].eval(x, dim)) y2 |= std::uint64_t{1} << (dim - 1 - q);
        }
        if (y1 != y2) return 1.0;
        double ph1 = 0, ph2 = 0;
        for (const auto& [f, theta] : p1.terms)
            if (f.eval(x, dim)) ph1 += theta.radians();
        for (const auto& [f, theta] : p2.terms)
            if (f.eval(x, dim)) ph2 += theta.radians();
        return std::abs(std::polar(1.0, ph1) - std::polar(1.0, ph2));
    };
    if (dim <= 20) {
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << dim); ++x) {
            const double dev = column_deviation(x);
            if (dev > tol) {
                v.witness = x;
                v.max_deviation = dev;
                return v;
            }
        }
        v.kind = EquivVerdict::Kind::Equal;
        return v;
    }
    if (dim >= 64) return v;  // basis indices no longer fit a witness word
    std::mt19937_64 rng(0x7a5e);
    for (unsigned probe = 0; probe < 4096; ++probe) {
        const std::uint64_t x = rng() & ((std::uint64_t{1} << dim) - 1);
        const double dev = column_deviation(x);
        if (dev > tol) {
            v.witness = x;
            v.max_deviation = dev;
            return v;
        }
    }
    return v;  // distinct forms, no witness found
}

} // namespace

EquivVerdict check_equiv(const Circuit& c1, const Circuit& c2, EquivMode mode, double tol) {
    if (c1.dim != c2.dim) throw std::invalid_argument("check_equiv: dimension mismatch");
    if (mode == EquivMode::Matrix) return matrix_verdict(c1, c2, tol);
    return phase_poly_verdict(c1, c2, tol);
}

Circuit random_circuit(unsigned dim, std::size_t len, std::uint64_t seed,
                       const GateMix& mix) {
    if (dim < 1) throw std::invalid_argument("random_circuit: dim must be positive");
    GateMix w = mix;
    if (dim < 2) w.cnot = 0;
    const double total = w.h + w.x + w.rz + w.cnot;
    if (!(total > 0)) throw std::invalid_argument("random_circuit: empty gate mix");

    std::mt19937_64 rng(seed);
    auto uniform = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    Circuit c;
    c.dim = dim;
    c.gates.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
        const double r = uniform() * total;
        const Qubit q = static_cast<Qubit>(rng() % dim);
        if (r < w.h) {
            c.gates.push_back(GateApp::h(q));
        } else if (r < w.h + w.x) {
            c.gates.push_back(GateApp::x(q));
        } else if (r < w.h + w.x + w.rz) {
            c.gates.push_back(GateApp::rz(Angle(static_cast<std::int64_t>(rng() % 8), 4), q));
        } else {
            Qubit t = static_cast<Qubit>(rng() % (dim - 1));
            if (t >= q) ++t;
            c.gates.push_back(GateApp::cnot(q, t));
        }
    }
    return c;
}

Circuit ghz(unsigned n) {
    if (n == 0) throw std::invalid_argument("ghz: need at least one qubit");
    Circuit c;
    c.dim = n;
    c.gates.push_back(GateApp::h(0));
    for (unsigned q = 1; q < n; ++q) c.gates.push_back(GateApp::cnot(q - 1, q));
    return c;
}

} // namespace qcopt
