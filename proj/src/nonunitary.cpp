// SPDX-License-Identifier: Apache-2.0
#include "qcopt/nonunitary.hpp"

#include <deque>
#include <stdexcept>

namespace qcopt {

namespace {

bool gates_well_typed(const GateList& gates, unsigned dim) {
    return well_typed(Circuit{dim, gates});
}

bool blocks_well_typed(const std::vector<Block>& blocks, unsigned dim) {
    for (const auto& b : blocks) {
        if (b.is_unitary()) {
            if (!gates_well_typed(b.gates(), dim)) return false;
        } else {
            const auto& m = b.meas();
            if (m.q >= dim) return false;
            if (!blocks_well_typed(m.if_one, dim) || !blocks_well_typed(m.if_zero, dim))
                return false;
        }
    }
    return true;
}

ComplexMatrix projector(bool one, Qubit q, unsigned d) {
    ComplexMatrix p2 = ComplexMatrix::Zero(2, 2);
    p2(one ? 1 : 0, one ? 1 : 0) = 1;
    return apply1(p2, q, d);
}

DensityMatrix denote_blocks(const std::vector<Block>& blocks, unsigned dim,
                            DensityMatrix rho) {
    for (const auto& b : blocks) {
        if (b.is_unitary()) {
            const ComplexMatrix u = denote_unitary(Circuit{dim, b.gates()});
            rho = u * rho * u.adjoint();
        } else {
            const auto& m = b.meas();
            const ComplexMatrix p0 = projector(false, m.q, dim);
            const ComplexMatrix p1 = projector(true, m.q, dim);
            rho = denote_blocks(m.if_zero, dim, p0 * rho * p0) +
                  denote_blocks(m.if_one, dim, p1 * rho * p1);
        }
    }
    return rho;
}

} // namespace

bool well_typed(const Program& p) {
    return blocks_well_typed(p.body, p.dim);
}

DensityMatrix denote_program(const Program& p, const DensityMatrix& rho) {
    if (p.dim > kMaxDensityQubits)
        throw std::invalid_argument("denote_program: dimension too large");
    const Eigen::Index n = Eigen::Index{1} << p.dim;
    if (rho.rows() != n || rho.cols() != n)
        throw std::invalid_argument("denote_program: density matrix has wrong size");
    return denote_blocks(p.body, p.dim, rho);
}

namespace {

bool blocks_touch(const std::vector<Block>& blocks, Qubit q);

bool gates_touch(const GateList& gates, Qubit q) {
    for (const auto& g : gates)
        if (g.touches(q)) return true;
    return false;
}

bool blocks_touch(const std::vector<Block>& blocks, Qubit q) {
    for (const auto& b : blocks) {
        if (b.is_unitary()) {
            if (gates_touch(b.gates(), q)) return true;
        } else {
            const auto& m = b.meas();
            if (m.q == q || blocks_touch(m.if_one, q) || blocks_touch(m.if_zero, q))
                return true;
        }
    }
    return false;
}

// Does an Rz on q, sitting at `gate_idx` within block `block_idx`, run into a
// measurement of q before anything else touches q?
bool rz_hits_measure(const std::vector<Block>& blocks, std::size_t block_idx,
                     std::size_t gate_idx, Qubit q) {
    const GateList& gates = blocks[block_idx].gates();
    for (std::size_t i = gate_idx + 1; i < gates.size(); ++i)
        if (gates[i].touches(q)) return false;
    for (std::size_t b = block_idx + 1; b < blocks.size(); ++b) {
        const Block& blk = blocks[b];
        if (blk.is_unitary()) {
            if (gates_touch(blk.gates(), q)) return false;
            continue;
        }
        const auto& m = blk.meas();
        if (m.q == q) return true;
        // A measurement of another qubit is transparent only if neither
        // branch acts on q.
        if (blocks_touch(m.if_one, q) || blocks_touch(m.if_zero, q)) return false;
    }
    return false;
}

std::vector<Block> remove_z_rotations_in(const std::vector<Block>& blocks) {
    std::vector<Block> out;
    out.reserve(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (!blocks[b].is_unitary()) {
            const auto& m = blocks[b].meas();
            out.push_back(Block::measure(m.q, remove_z_rotations_in(m.if_one),
                                         remove_z_rotations_in(m.if_zero)));
            continue;
        }
        GateList kept;
        const GateList& gates = blocks[b].gates();
        for (std::size_t i = 0; i < gates.size(); ++i) {
            if (gates[i].is_rz() && rz_hits_measure(blocks, b, i, gates[i].q0)) continue;
            kept.push_back(gates[i]);
        }
        out.push_back(Block::unitary(std::move(kept)));
    }
    return out;
}

} // namespace

Program remove_z_rotations_before_measure(const Program& p) {
    return Program{p.dim, remove_z_rotations_in(p.body)};
}

namespace {

struct Tracking {
    bool active = true;
    bool bit = false;
};

std::vector<Block> propagate_blocks(std::vector<Block> blocks, Qubit q, Tracking& tr,
                                    unsigned dim) {
    std::vector<Block> out;
    std::deque<Block> work(std::make_move_iterator(blocks.begin()),
                           std::make_move_iterator(blocks.end()));
    while (!work.empty()) {
        Block b = std::move(work.front());
        work.pop_front();
        if (!tr.active) {
            out.push_back(std::move(b));
            continue;
        }
        if (b.is_unitary()) {
            GateList kept;
            for (const auto& g : b.gates()) {
                if (!tr.active || !g.touches(q)) {
                    kept.push_back(g);
                    continue;
                }
                switch (g.kind) {
                case GateKind::Rz:
                    kept.push_back(g);
                    break;
                case GateKind::X:
                    kept.push_back(g);
                    tr.bit = !tr.bit;
                    break;
                case GateKind::H:
                    kept.push_back(g);
                    tr.active = false;
                    break;
                case GateKind::CNOT:
                    if (g.q0 == q) {
                        if (tr.bit) kept.push_back(GateApp::x(g.q1));
                        // dropped entirely when the control is |0>
                    } else {
                        kept.push_back(g);
                        tr.active = false;  // CNOT onto q makes it non-classical
                    }
                    break;
                }
            }
            if (!kept.empty()) out.push_back(Block::unitary(std::move(kept)));
            continue;
        }
        MeasBlock m = std::get<MeasBlock>(std::move(b.node));
        if (m.q == q) {
            // The measured value is already known; splice in the taken branch
            // and keep tracking through it.
            auto& branch = tr.bit ? m.if_one : m.if_zero;
            for (auto it = branch.rbegin(); it != branch.rend(); ++it)
                work.push_front(std::move(*it));
            continue;
        }
        // Another qubit's measurement: q stays classical inside both
        // branches, but they may leave different X parities behind, so
        // top-level tracking stops after the block.
        Tracking t1{true, tr.bit};
        Tracking t0{true, tr.bit};
        m.if_one = propagate_blocks(std::move(m.if_one), q, t1, dim);
        m.if_zero = propagate_blocks(std::move(m.if_zero), q, t0, dim);
        out.push_back(Block{std::move(m)});
        tr.active = false;
    }
    return out;
}

} // namespace

Program propagate_classical_state(const Program& p, Qubit q, bool one) {
    Tracking tr{true, one};
    Program out;
    out.dim = p.dim;
    out.body = propagate_blocks(p.body, q, tr, p.dim);
    return out;
}

Program program_from_qasm(const QasmProgram& p) {
    Program prog;
    prog.dim = p.total_qubits();
    GateList pending;
    auto flush = [&] {
        if (!pending.empty()) {
            prog.body.push_back(Block::unitary(std::move(pending)));
            pending = {};
        }
    };
    for (const auto& st : p.statements) {
        switch (st.kind) {
        case QasmStatement::Kind::Barrier:
            break;
        case QasmStatement::Kind::Measure:
            flush();
            prog.body.push_back(Block::measure(st.args[0], {}, {}));
            break;
        case QasmStatement::Kind::Reset:
            flush();
            prog.body.push_back(Block::measure(
                st.args[0], {Block::unitary({GateApp::x(st.args[0])})}, {}));
            break;
        case QasmStatement::Kind::Gate: {
            QasmProgram single;
            single.qregs = p.qregs;
            single.statements = {st};
            const Circuit c = decompose(single);
            pending.insert(pending.end(), c.gates.begin(), c.gates.end());
            break;
        }
        }
    }
    flush();
    return prog;
}

Program teleport() {
    Program prog;
    prog.dim = 3;
    // Bell pair on qubits 1,2; Alice entangles and measures; Bob applies
    // CNOT 1->2 and CZ 0->2 (H-conjugated CNOT), then both ancillas reset.
    prog.body.push_back(Block::unitary({
        GateApp::h(1), GateApp::cnot(1, 2),            // bell
        GateApp::cnot(0, 1), GateApp::h(0),            // alice
    }));
    prog.body.push_back(Block::measure(0, {}, {}));
    prog.body.push_back(Block::measure(1, {}, {}));
    prog.body.push_back(Block::unitary({
        GateApp::cnot(1, 2),
        GateApp::h(2), GateApp::cnot(0, 2), GateApp::h(2),  // CZ 0 2
    }));
    prog.body.push_back(Block::measure(0, {Block::unitary({GateApp::x(0)})}, {}));
    prog.body.push_back(Block::measure(1, {Block::unitary({GateApp::x(1)})}, {}));
    return prog;
}

} // namespace qcopt
