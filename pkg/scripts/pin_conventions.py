"""Which loop Schur convention and which rho-leg placement agree with box counting.

Prints one line per candidate with the number of test cases it matches.
Exactly one candidate in each table should match every case.
"""
import argparse
from itertools import permutations

from orbivertex.box_oracle import Legs, box_series, NoConsistentOffset, oracle_match, reduced_series
from orbivertex.dt_vertex import vertex_P_shape
from orbivertex.partitions import ColoredDiagram, multipartitions_of, quotient_to_diagram
from orbivertex.schur import LOOP_SCHUR_CONVENTIONS, loop_schur


def _matches(red, vertex):
    try:
        return oracle_match(red, vertex)["matched"]
    except NoConsistentOffset:
        return False


def loop_schur_table(D):
    cases = [(n, quotient_to_diagram(mu)) for n in (2, 3) for k in (1, 2) for mu in multipartitions_of(k, n)
             if sum(map(sum, mu)) * n <= 6]
    score = dict.fromkeys(LOOP_SCHUR_CONVENTIONS, 0)
    for n, shape in cases:
        red = reduced_series(n, ((), (), shape), D)
        d = ColoredDiagram(n, shape)
        for conv in LOOP_SCHUR_CONVENTIONS:
            v = loop_schur(d, D + 2 * sum(shape), conv).valuation()
            score[conv] += _matches(red, loop_schur(d, v + D, conv))
    return score, len(cases)


def leg_axes_table(D):
    cases = [((2,), (1, 1), ()), ((1, 1), (2,), ()), ((2,), (), (1,)), ((), (1, 1), (2,))]
    # rho+ runs along axis 0 so its cross-section sits on axes {1, 2}; rho- likewise on {0, 2}
    placements = [(p, m) for p in permutations((1, 2)) for m in permutations((0, 2))]
    score = dict.fromkeys(placements, 0)
    for rp, rm, shape in cases:
        vertex = vertex_P_shape(rp, rm, shape, 1, D + 12)
        vertex = vertex_P_shape(rp, rm, shape, 1, vertex.valuation() + D)
        empty = box_series(1, ((), (), ()), D)
        for pm in placements:
            full = box_series(1, Legs(rp, rm, shape, *pm), D)
            score[pm] += _matches(full / empty, vertex)
    return score, len(cases)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--boxes", type=int, default=5)
    D = ap.parse_args().boxes
    score, total = loop_schur_table(D)
    for conv, k in score.items():
        print(f"loop Schur {conv:8s} {k}/{total}")
    score, total = leg_axes_table(D)
    for (p, m), k in score.items():
        print(f"rho+ on axes {p}  rho- on axes {m}  {k}/{total}")


if __name__ == "__main__":
    main()
