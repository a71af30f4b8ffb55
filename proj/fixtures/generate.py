#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""Regenerates the benchmark fixtures in this directory.

These are the multiply-controlled-NOT ladders (tof_n), the Barenco-style
V-decompositions (barenco_tof_n), and the Vedral-Barenco-Ekert ripple
adder (vbe_adder_3) from the standard Clifford+T arithmetic benchmark
suite of Amy, Maslov, Mosca, and Roetteler. Toffoli gates are written as
H-conjugated ccz statements, with trivially adjacent H pairs cancelled,
matching the published gate counts exactly (see fixtures/README.md).
"""

import sys
from pathlib import Path


def ccx(a, b, c):
    return [("h", [c]), ("ccz", [a, b, c]), ("h", [c])]


def cancel_adjacent(gates):
    """Cancels h-h pairs separated only by gates not touching that qubit."""
    gates = list(gates)
    changed = True
    while changed:
        changed = False
        for i, (name, args) in enumerate(gates):
            if name != "h":
                continue
            q = args[0]
            for j in range(i + 1, len(gates)):
                jname, jargs = gates[j]
                if q not in jargs:
                    continue
                if jname == "h":
                    del gates[j]
                    del gates[i]
                    changed = True
                break
            if changed:
                break
    return gates


def tof_ladder(n):
    """n-controlled NOT via a clean-ancilla Toffoli ladder (2n-1 qubits)."""
    anc = lambda i: n + i
    up = [ccx(0, 1, anc(0))]
    for i in range(n - 2):
        up.append(ccx(i + 2, anc(i), anc(i + 1)))
    seq = up + up[-2::-1]
    return 2 * n - 1, [g for blk in seq for g in blk]


def barenco_tof(n):
    """n-controlled NOT via the Barenco V-construction (2n-1 qubits)."""
    anc = lambda k: n + k - 2  # a_2 .. a_{n-1}
    target = 2 * n - 2
    down = [ccx(n - 1, anc(n - 1), target)]
    for k in range(n - 2, 1, -1):
        down.append(ccx(k, anc(k), anc(k + 1)))
    down.append(ccx(0, 1, anc(2)))
    up = down[-2:0:-1]
    seq = down + up + down + up
    return 2 * n - 1, [g for blk in seq for g in blk]


def vbe_adder_3():
    """3-bit ripple-carry adder; qubits interleave as c_i, a_i, b_i, high bit last."""
    gates = []

    def carry(c, a, b, cn):
        gates.extend(ccx(a, b, cn))
        gates.append(("cx", [a, b]))
        gates.extend(ccx(c, b, cn))

    def rcarry(c, a, b, cn):
        gates.extend(ccx(c, b, cn))
        gates.append(("cx", [a, b]))
        gates.extend(ccx(a, b, cn))

    def sum_(c, a, b):
        gates.append(("cx", [a, b]))
        gates.append(("cx", [c, b]))

    carry(0, 1, 2, 3)
    carry(3, 4, 5, 6)
    carry(6, 7, 8, 9)
    gates.append(("cx", [7, 8]))
    sum_(6, 7, 8)
    rcarry(3, 4, 5, 6)
    sum_(3, 4, 5)
    rcarry(0, 1, 2, 3)
    sum_(0, 1, 2)

    # The published file cancels the back-to-back cx pair at the midpoint.
    out = []
    for g in gates:
        if out and out[-1] == g and g[0] == "cx":
            out.pop()
        else:
            out.append(g)
    return 10, out


def emit(path, qubits, gates):
    lines = ["OPENQASM 2.0;", 'include "qelib1.inc";', f"qreg q[{qubits}];"]
    for name, args in cancel_adjacent(gates):
        lines.append(f"{name} {','.join(f'q[{a}]' for a in args)};")
    path.write_text("\n".join(lines) + "\n")
    print(f"wrote {path} ({len(lines) - 3} statements)")


def main():
    here = Path(__file__).parent
    for n in (3, 4, 5, 10):
        qubits, gates = tof_ladder(n)
        emit(here / f"tof_{n}.qasm", qubits, gates)
        qubits, gates = barenco_tof(n)
        emit(here / f"barenco_tof_{n}.qasm", qubits, gates)
    qubits, gates = vbe_adder_3()
    emit(here / "vbe_adder_3.qasm", qubits, gates)
    return 0


if __name__ == "__main__":
    sys.exit(main())
