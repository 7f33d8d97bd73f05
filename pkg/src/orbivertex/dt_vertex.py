"""The orbifold DT vertex, its framing, smooth framed vertices and the
A_{n-1} chain gluing."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import ceil

from .characters import char_rect, dim_wreath
from .cyclotomic import CycloNumber, root_power, simplify, xi
from .partitions import (ColoredDiagram, cells, conjugate, contains, mp_size, partition,
                         partitions_of, quotient_to_diagram, subpartitions)
from .schur import SpecializationSet, loop_schur, skew_schur_at_spec
from .series import Series, grading, make_mono, mono_mul, mono_pow, q_grading
from .weights import EquivWeights


@dataclass(frozen=True)
class VertexLegs:
    rho_plus: tuple = ()
    rho_minus: tuple = ()
    lam: tuple = ((),)

    def __post_init__(self):
        object.__setattr__(self, "rho_plus", partition(self.rho_plus))
        object.__setattr__(self, "rho_minus", partition(self.rho_minus))
        object.__setattr__(self, "lam", tuple(partition(c) for c in self.lam))

    @property
    def n(self) -> int:
        return len(self.lam)

    @classmethod
    def empty(cls, n: int) -> "VertexLegs":
        return cls((), (), ((),) * n)

    def diagram(self) -> ColoredDiagram:
        return ColoredDiagram(self.n, quotient_to_diagram(self.lam))

    def to_json(self) -> dict:
        return {"rho_plus": list(self.rho_plus), "rho_minus": list(self.rho_minus),
                "lambda": [list(c) for c in self.lam]}


def q_total(n: int) -> dict:
    """Exponents of q = q_0 q_1 ... q_{n-1}."""
    return {f"q{c}": 1 for c in range(n)}


def q_power(n: int, e) -> dict:
    return {f"q{c}": Fraction(e) for c in range(n)}


def bar(s: Series, n: int) -> Series:
    """Interchange q_i and q_{-i}."""
    return s.rename({f"q{c}": f"q{(-c) % n}" for c in range(n)})


def _val_bound(rp, rm, shape) -> int:
    """A lower bound for minus the valuation of the omega-sum part."""
    lam0 = shape[0] if shape else 0
    return sum(rp) * lam0 + sum(rm) * len(shape) + sum(rp) + sum(rm)


def vertex_P_shape(rho_plus, rho_minus, shape, n: int, top) -> Series:
    """P for legs (rho+, rho-) and the colored diagram ``shape`` (empty n-core),
    exact through total q-degree ``top``."""
    rp, rm, shape = partition(rho_plus), partition(rho_minus), partition(shape)
    d = ColoredDiagram(n, shape).require_empty_core()
    g = q_grading(n, top)
    Sp = SpecializationSet(n, shape)
    Sm = SpecializationSet(n, conjugate(shape))
    slack = _val_bound(rp, rm, shape) + 1
    while True:
        T = ceil(top) + slack
        total = Series({}, [g.with_prec(T)])
        for om in subpartitions(rp):
            if not contains(rm, om):
                continue
            a = bar(skew_schur_at_spec(rp, om, Sp, T), n)
            b = skew_schur_at_spec(rm, om, Sm, T)
            total = total + (a * b).shift({"q0": -sum(om)})
        out = loop_schur(d, T) * total
        if out.prec("q") >= top:
            return out.truncate("q", top)
        slack += ceil(top - out.prec("q")) + 1


def vertex_P(legs: VertexLegs, top) -> Series:
    return vertex_P_shape(legs.rho_plus, legs.rho_minus, legs.diagram().shape, legs.n, top)


# -- framing ---------------------------------------------------------------------

@dataclass(frozen=True)
class Prefactor:
    """An invertible single term coeff * monomial."""

    coeff: object = 1
    mono: tuple = ()

    def __mul__(self, other: "Prefactor") -> "Prefactor":
        return Prefactor(simplify(self.coeff * other.coeff), mono_mul(self.mono, other.mono))

    def inverse(self) -> "Prefactor":
        c = self.coeff
        c = simplify(c.inverse()) if isinstance(c, CycloNumber) else simplify(Fraction(1) / c)
        return Prefactor(c, mono_pow(self.mono, -1))

    def apply(self, s: Series) -> Series:
        return s.shift(self.mono, self.coeff)

    def degree(self):
        return sum(e for v, e in self.mono if v.startswith("q"))


def framing_root_block(lam, weights: EquivWeights):
    """((-xi_{2n})^{-|lam|} prod_k xi_n^{-k |lam^k|}) ** (n w1/w3), principal branch."""
    n = len(lam)
    base = (-xi(2 * n)) ** (-mp_size(lam))
    for k, comp in enumerate(lam):
        base = base * xi(n, -k * sum(comp))
    return simplify(root_power(base, n * weights.s))


def frame_prefactor(legs: VertexLegs, weights: EquivWeights) -> Prefactor:
    """The full framing factor multiplying P."""
    weights.check()
    n = legs.n
    lam = legs.lam
    m = mp_size(lam)
    shape = legs.diagram().shape
    s = weights.s
    w1, w2, w3 = weights.w
    coeff = (-1) ** m * Fraction(char_rect(shape, n), dim_wreath(lam))
    coeff = simplify(coeff * framing_root_block(lam, weights))
    coeff = coeff * (-1) ** (sum(legs.rho_plus) + sum(legs.rho_minus))
    exps = {f"q{c}": Fraction(0) for c in range(n)}

    def add_q(e):
        for c in range(n):
            exps[f"q{c}"] += e

    add_q(Fraction(m, 2))
    for rho, sign in ((legs.rho_plus, 1), (legs.rho_minus, -1)):
        size = sum(rho)
        add_q(Fraction(size, 2))
        for c in range(1, n):
            frac = Fraction(c, n) if sign == 1 else Fraction(n - c, n)
            exps[f"q{c}"] -= frac * size
    add_q(sum(i - j for i, j in cells(legs.rho_plus)) * w3 / (n * w1))
    add_q(sum(i - j for i, j in cells(legs.rho_minus)) * w3 / (n * w2))
    for i, j in cells(shape):
        exps[f"q{(j - i) % n}"] += (i - j) * s
    return Prefactor(simplify(coeff), make_mono(exps))


@dataclass
class FramedSeries:
    legs: VertexLegs
    weights: EquivWeights
    series: Series
    framed: bool = True
    prefactor: Prefactor = field(default_factory=Prefactor)

    def unframe(self) -> "FramedSeries":
        if not self.framed:
            return self
        return FramedSeries(self.legs, self.weights, self.prefactor.inverse().apply(self.series), False,
                            Prefactor())

    def to_json(self) -> dict:
        from .io import coeff_to_json
        return {"legs": self.legs.to_json(), "weights": self.weights.to_json(), "framed": self.framed,
                "prefactor": {"coeff": coeff_to_json(self.prefactor.coeff),
                              "exp": {v: str(e) for v, e in self.prefactor.mono}},
                "series": self.series.to_json()}


def frame_dt(P: Series, legs: VertexLegs, weights: EquivWeights) -> FramedSeries:
    pre = frame_prefactor(legs, weights)
    return FramedSeries(legs, weights, pre.apply(P), True, pre)


def framed_vertex(legs: VertexLegs, weights: EquivWeights, top) -> FramedSeries:
    """The framed vertex, exact through total q-degree ``top``."""
    pre = frame_prefactor(legs, weights)
    shift = pre.degree()
    P = vertex_P(legs, top - shift)
    return FramedSeries(legs, weights, pre.apply(P), True, pre)


# -- smooth vertices and the chain --------------------------------------------------

def smooth_framed_vertex(rho_out, rho_in, lam_leg, j: int, weights: EquivWeights, top) -> FramedSeries:
    """The n = 1 framed vertex at chain site j, weights w^j, in the variable q0."""
    w = weights.edge_weights(j)
    legs = VertexLegs(rho_out, rho_in, (partition(lam_leg),))
    return framed_vertex(legs, w, top)


def v_grading(n: int, prec=None, substituted: bool = True):
    """Degree in the chain variables v_1 .. v_{n-1}.  After v_j -> q_j and
    q -> q_0 ... q_{n-1} a monomial prod q_c^{e_c} has v-degree
    sum_{j>0} e_j - (n-1) e_0."""
    if substituted:
        weights = {f"q{c}": (1 if c else -(n - 1)) for c in range(n)}
    else:
        weights = {f"v{j}": 1 for j in range(1, n)}
    return grading("v", weights, prec)


def _spread(s: Series, n: int, gradings) -> Series:
    """Send q0 (the smooth variable q) to q_0 q_1 ... q_{n-1}."""
    def f(m):
        e = dict(m).get("q0", 0)
        return make_mono([(f"q{c}", e) for c in range(n)])
    return Series({f(m): c for m, c in s.terms.items()}, gradings)


class _Sites:
    """Smooth framed vertices along the chain, cached with their precision.
    Degrees are measured in the output grading: n per power of the smooth q
    when substituting, one otherwise."""

    def __init__(self, weights: EquivWeights, substituted: bool):
        self.weights = weights
        self.n = weights.n
        self.unit = self.n if substituted else 1
        self.substituted = substituted
        self.cache = {}

    def gradings(self, prec):
        if self.substituted:
            return [q_grading(self.n, prec), v_grading(self.n, None, True)]
        return [q_grading(1, prec), v_grading(self.n, None, False)]

    def get(self, key, need) -> Series:
        s = self.cache.get(key)
        while s is None or s.prec("q") < need or s.is_zero():
            p = need if s is None else max(need, s.prec("q") + 2 * self.unit)
            s = self._compute(key, p)
        self.cache[key] = s
        return s

    def _compute(self, key, prec) -> Series:
        rho_out, rho_in, lam_leg, j = key
        fv = smooth_framed_vertex(rho_out, rho_in, lam_leg, j, self.weights, Fraction(prec) / self.unit)
        gs = self.gradings(fv.series.prec() * self.unit)
        if self.substituted:
            return _spread(fv.series, self.n, gs)
        return fv.series.regrade(gs)


def glue_PY(rho_plus, rho_minus, lam_legs, weights: EquivWeights, top, dv: int,
            substitute_v: bool = True) -> Series:
    """The chain sum over intermediate partitions rho^1 .. rho^{n-1} of total
    size at most dv, with rho^0 = rho- and rho^n = rho+.

    With substitute_v, v_j becomes q_j and the smooth q becomes q_0 ... q_{n-1};
    otherwise the result is in the smooth q (named q0) and v_1 .. v_{n-1}.
    The result carries a "q" grading exact through ``top`` and a "v" grading
    exact through ``dv``: a monomial of larger v-degree needs more chain terms."""
    n = weights.n
    lam_legs = [partition(x) for x in lam_legs]
    if len(lam_legs) != n:
        raise ValueError(f"need {n} smooth legs")
    sites = _Sites(weights, substitute_v)
    total = Series({}, sites.gradings(top))
    for inner in _intermediate(n - 1, dv):
        chain = [partition(rho_minus)] + list(inner) + [partition(rho_plus)]
        keys = [(chain[j + 1], chain[j], lam_legs[j], j) for j in range(n)]
        vmono = make_mono({(f"q{j}" if substitute_v else f"v{j}"): sum(chain[j]) for j in range(1, n)})
        shift = total.gradings[0].degree(vmono)
        parts = [sites.get(k, top - shift) for k in keys]
        for _ in range(2):
            vals = [p.valuation("q") for p in parts]
            parts = [sites.get(k, top - shift - (sum(vals) - vals[i])) for i, k in enumerate(keys)]
        term = parts[0]
        for p in parts[1:]:
            term = term * p
        total = total + term.shift(vmono).require("q", top)
    return total.truncate("q", top).truncate("v", dv)


def _intermediate(count: int, dv: int):
    """Tuples of ``count`` partitions of total size <= dv."""
    if count == 0:
        yield ()
        return
    for sizes in product(range(dv + 1), repeat=count):
        if sum(sizes) > dv:
            continue
        for parts in product(*(partitions_of(k) for k in sizes)):
            yield tuple(parts)
