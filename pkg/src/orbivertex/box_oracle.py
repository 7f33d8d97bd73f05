"""Colored box counting with up to three infinite legs.

A configuration is a finite set B of boxes such that B together with the
three leg cylinders is an order ideal of N^3.  Box (x1, x2, x3) has color
(x1 - x2) mod n.  Legs: rho+ runs along axis 1, rho- along axis 2 and the
colored diagram along axis 3.  A cell (i, j) of the axis-3 diagram sits at
(x1, x2) = (j, i) so that its color j - i matches the diagram coloring.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .partitions import cells, partition
from .series import Series, make_mono, mono_mul, mono_pow, q_grading


class NoConsistentOffset(ValueError):
    pass


# Cross-section placement of the rho legs, as the axes carrying (row, column)
# of a cell.  rho+ rows run along axis 2 and columns along axis 3; rho- rows
# run along axis 1 and columns along axis 3.  Among the four placements this
# is the only one matching the vertex formula on two-box legs.
RHO_PLUS_AXES = (1, 2)
RHO_MINUS_AXES = (0, 2)


@dataclass(frozen=True)
class LeggedBoxConfig:
    n: int
    legs: tuple  # (rho_plus, rho_minus, diagram)
    boxes: frozenset

    def color_counts(self) -> tuple:
        counts = [0] * self.n
        for x1, x2, _ in self.boxes:
            counts[(x1 - x2) % self.n] += 1
        return tuple(counts)


class Legs:
    """Membership test for the union of the three leg cylinders."""

    def __init__(self, rho_plus=(), rho_minus=(), diagram=(), plus_axes=RHO_PLUS_AXES,
                 minus_axes=RHO_MINUS_AXES):
        self.rho_plus = partition(rho_plus)
        self.rho_minus = partition(rho_minus)
        self.diagram = partition(diagram)
        self.plus_axes = plus_axes
        self.minus_axes = minus_axes
        self._plus = set(cells(self.rho_plus))
        self._minus = set(cells(self.rho_minus))
        self._diag = set(cells(self.diagram))

    def __contains__(self, b) -> bool:
        r, c = self.plus_axes
        if (b[r], b[c]) in self._plus:
            return True
        r, c = self.minus_axes
        if (b[r], b[c]) in self._minus:
            return True
        return (b[1], b[0]) in self._diag

    def extent(self) -> int:
        sizes = [len(p) for p in (self.rho_plus, self.rho_minus, self.diagram)]
        sizes += [p[0] for p in (self.rho_plus, self.rho_minus, self.diagram) if p]
        return max(sizes + [0])

    def key(self) -> tuple:
        return (self.rho_plus, self.rho_minus, self.diagram)


def _preds(b):
    for i in range(3):
        if b[i] > 0:
            yield b[:i] + (b[i] - 1,) + b[i + 1:]


def _addable(b, legs: Legs, boxes, bound):
    if b in legs or b in boxes:
        return False
    if bound is not None and max(b) >= bound:
        return False
    return all(p in legs or p in boxes for p in _preds(b))


def _seed_candidates(legs: Legs, bound):
    R = legs.extent() + 1
    out = set()
    for x1 in range(R + 1):
        for x2 in range(R + 1):
            for x3 in range(R + 1):
                b = (x1, x2, x3)
                if _addable(b, legs, frozenset(), bound):
                    out.add(b)
    return out


def enumerate_configs(n: int, legs, max_boxes: int, bound: int | None = None):
    """Yield every configuration with at most ``max_boxes`` extra boxes,
    level by level (by box count) and in sorted order inside a level."""
    if not isinstance(legs, Legs):
        legs = Legs(*legs)
    seeds = _seed_candidates(legs, bound)
    level = {frozenset()}
    for k in range(max_boxes + 1):
        for boxes in sorted(level, key=lambda s: sorted(s)):
            yield LeggedBoxConfig(n, legs.key(), boxes)
        if k == max_boxes:
            break
        nxt = set()
        for boxes in level:
            cand = set(seeds)
            for b in boxes:
                for i in range(3):
                    cand.add(b[:i] + (b[i] + 1,) + b[i + 1:])
            for c in cand:
                if _addable(c, legs, boxes, bound):
                    nxt.add(boxes | {c})
        level = nxt


def config_counts(n: int, legs, max_boxes: int) -> Counter:
    """Multiset of colored counts, as Counter of color-count tuples."""
    return Counter(cfg.color_counts() for cfg in enumerate_configs(n, legs, max_boxes))


def box_series(n: int, legs, max_boxes: int) -> Series:
    """Unreduced generating series sum_B prod_c q_c^{#boxes of color c}."""
    g = q_grading(n, max_boxes)
    terms = {}
    for counts, mult in config_counts(n, legs, max_boxes).items():
        m = make_mono({f"q{c}": e for c, e in enumerate(counts)})
        terms[m] = terms.get(m, 0) + mult
    return Series(terms, [g])


def reduced_series(n: int, legs, max_boxes: int) -> Series:
    """Box series divided by the empty-leg series, exact through max_boxes."""
    full = box_series(n, legs, max_boxes)
    empty = box_series(n, ((), (), ()), max_boxes)
    return full / empty


def renormalized_counts(n: int, legs, boxes, N: int) -> tuple:
    """Per-color count of (legs + boxes) inside [0, N)^3 minus N times the
    per-color cross-section of each leg.  Differs from the plain box count by
    a constant depending only on the legs once N exceeds the leg extents."""
    if not isinstance(legs, Legs):
        legs = Legs(*legs)
    counts = [0] * n
    for x1 in range(N):
        for x2 in range(N):
            for x3 in range(N):
                b = (x1, x2, x3)
                if b in legs or b in boxes:
                    counts[(x1 - x2) % n] += 1
    # leg cross-sections: rho+ is translation invariant along axis 1, whose
    # shifts run through all colors; count N boxes per cross-section cell,
    # distributed along the axis
    for x in range(N):
        for i, j in cells(legs.rho_plus):
            b = [0, 0, 0]
            b[legs.plus_axes[0]], b[legs.plus_axes[1]] = i, j
            b[0] = x
            counts[(b[0] - b[1]) % n] -= 1
        for i, j in cells(legs.rho_minus):
            b = [0, 0, 0]
            b[legs.minus_axes[0]], b[legs.minus_axes[1]] = i, j
            b[1] = x
            counts[(b[0] - b[1]) % n] -= 1
        for i, j in cells(legs.diagram):
            counts[(j - i) % n] -= 1
    return tuple(counts)


def macmahon_series(max_degree: int) -> Series:
    """prod_{k>=1} (1 - q^k)^(-k) in the variable q0, through max_degree."""
    g = q_grading(1, max_degree)
    coeffs = [1] + [0] * max_degree
    for k in range(1, max_degree + 1):
        for _ in range(k):
            # multiply by 1 / (1 - q^k)
            for d in range(k, max_degree + 1):
                coeffs[d] += coeffs[d - k]
    return Series({make_mono({"q0": d}): c for d, c in enumerate(coeffs)}, [g])


def oracle_match(reduced: Series, vertex: Series) -> dict:
    """Find the monomial offset m with reduced = m * vertex and check every
    coefficient inside the common window."""
    if reduced.is_zero() or vertex.is_zero():
        raise NoConsistentOffset("empty series")
    vr, vv = reduced.valuation(), vertex.valuation()
    lead_r = min((m for m in reduced.terms if reduced.degrees(m)[0] == vr))
    first = None
    for lead_v in sorted(m for m in vertex.terms if vertex.degrees(m)[0] == vv):
        if reduced.terms[lead_r] != vertex.terms[lead_v]:
            continue
        offset = mono_mul(lead_r, mono_pow(lead_v, -1))
        bad = (reduced - vertex.shift(offset)).items()
        report = {"offset": offset, "matched": not bad, "first_mismatch": bad[0] if bad else None}
        if not bad:
            return report
        first = first or report
    if first is None:
        raise NoConsistentOffset("no lowest-degree term of the vertex matches the box series")
    return first


def match_legs(n: int, legs, max_boxes: int) -> dict:
    """Compare the reduced box series with the vertex formula for the legs
    (rho+, rho-, colored diagram shape)."""
    from .dt_vertex import vertex_P_shape
    rp, rm, shape = (partition(x) for x in legs)
    red = reduced_series(n, legs, max_boxes)
    probe = vertex_P_shape(rp, rm, shape, n, max_boxes + 2 * sum(shape) + 2)
    v = probe.valuation()
    vert = vertex_P_shape(rp, rm, shape, n, v + max_boxes)
    out = oracle_match(red, vert)
    out["max_boxes"] = max_boxes
    return out
