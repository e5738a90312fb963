#!/usr/bin/env python3
"""Smoke test for the nws_py extension module.

Build the extension and copy it next to this script first:

    cargo build --release -p nws-py
    cp target/release/libnws_py.so python/nws_py.so

then run `python3 python/smoke_test.py`.
"""

import sys

import nws_py

TRIANGLE = """\
p nws 3 3 1
w stars
e 1 2
e 1 3 2.5
e 2 3
s 3 1 2 3
l 2
b 3.5
"""


def main() -> int:
    ins = nws_py.Instance.parse(TRIANGLE)
    assert ins.vertex_count == 3 and ins.edge_count == 3
    assert ins.property == "stars" and ins.ell == 2 and ins.budget == "3.5"
    assert ins.feedback_edge_parameter() == 0

    best = nws_py.solve(ins, algo="oracle", mode="optimize")
    assert best is not None
    assert best.edge_count == 2 and best.total_weight == "2"
    report = ins.verify(best.edges)
    assert report["valid"], report

    # the two exact algorithms must agree
    by_xp = nws_py.solve(ins, algo="stars-xp")
    assert by_xp is not None and ins.verify(by_xp.edges)["valid"]

    # infeasible: a spanning star needs two edges
    tight = ins.with_budgets(1, "inf")
    assert nws_py.solve(tight, algo="oracle") is None

    # round trip through the text format
    again = nws_py.Instance.parse(ins.to_text())
    assert again.to_text() == ins.to_text()

    # seeded generation is deterministic
    a = nws_py.random_instance(6, 0.7, 3, (2, 4), (1, 3), "conn", seed=11)
    b = nws_py.random_instance(6, 0.7, 3, (2, 4), (1, 3), "conn", seed=11)
    assert a.to_text() == b.to_text()
    name, why = nws_py.auto_algorithm(a)
    assert name, why

    # a 4-cycle has a Hamiltonian cycle, a path does not
    cycle = nws_py.hamiltonian_cycle_instance(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert cycle.feedback_edge_parameter() == 1
    assert nws_py.solve(cycle, algo="oracle") is not None
    path = nws_py.hamiltonian_cycle_instance(4, [(0, 1), (1, 2), (2, 3)])
    assert nws_py.solve(path, algo="oracle") is None

    # satisfiable vs unsatisfiable tiny formulas
    sat = nws_py.sat_stars_instance("p cnf 1 1\n1 1 1 0\n")
    assert nws_py.solve(sat, algo="branch-ell") is not None
    unsat = nws_py.sat_stars_instance("p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n")
    assert nws_py.solve(unsat, algo="branch-ell") is None

    print("nws_py smoke test: OK")
    return 0


if __name__ == "__main__":
    sys.exit(main())
