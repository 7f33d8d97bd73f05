"""The GW side: part classifiers, disk factors, framing signs and the
predicted framed GW vertex obtained from the DT vertex by the character
transform and the exponential change of variables."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, floor

from .characters import char_sym, char_wreath
from .cyclotomic import I, is_rational, simplify, xi
from .dt_vertex import VertexLegs
from .partitions import aut_order, multipartitions_of, partition, partitions_of, partitions_upto, z_order, z_partition
from .rational import ExpSubstitution, rf_framed_vertex, ux_gradings
from .series import LegSeriesFamily, Series, _inv, connected_from_disconnected
from .weights import EquivWeights, ZeroWeight


class NonIntegerGammaGap(ValueError):
    pass


class ZeroDiskFactor(ZeroDivisionError):
    pass


R = (1, -1, 0)  # orbifold weights r_1, r_2, r_3


def _frac_part(x: Fraction) -> Fraction:
    return x - floor(x)


@dataclass(frozen=True)
class Part:
    """The tuple (i, m, k, d) attached to one part, with the weights it sees."""

    i: int
    m: int
    k: int
    d: int
    weights: EquivWeights


def delta(tau_plus, tau_minus, mu, weights: EquivWeights) -> list:
    n = weights.n
    out = [Part(1, n, t % n, t, weights) for t in partition(tau_plus)]
    out += [Part(2, n, (-t) % n, t, weights) for t in partition(tau_minus)]
    for j, comp in enumerate(mu):
        out += [Part(3, 1, j, x, weights) for x in partition(comp)]
    return out


def delta_tilde(tau_plus, tau_minus, mu, weights: EquivWeights) -> list:
    """Smooth data on the resolution: k = 0, m = 1 and the edge weights of the leg."""
    n = weights.n
    out = [Part(1, 1, 0, t, weights.edge_weights(n - 1)) for t in partition(tau_plus)]
    out += [Part(2, 1, 0, t, weights.edge_weights(0)) for t in partition(tau_minus)]
    for j, comp in enumerate(mu):
        out += [Part(3, 1, 0, x, weights.edge_weights(j)) for x in partition(comp)]
    return out


def gamma_ratio(a: Fraction, b: Fraction) -> Fraction:
    """Gamma(a) / Gamma(b) for a - b an integer, as a finite product."""
    gap = a - b
    if gap.denominator != 1:
        raise NonIntegerGammaGap(f"Gamma arguments {a} and {b} differ by {gap}")
    gap = int(gap)
    out = Fraction(1)
    if gap >= 0:
        for t in range(gap):
            out *= b + t
        return out
    for t in range(-gap):
        if a + t == 0:
            raise ZeroDivisionError(f"Gamma({a}) / Gamma({b}) has a pole")
        out /= a + t
    return out


def disk(i: int, m: int, k: int, d: int, weights: EquivWeights, n: int | None = None) -> Fraction:
    """The positively oriented disk function D^n(i, m, k, d; w)."""
    n = weights.n if n is None else n
    if m not in (1, n) or not 0 <= k < n or d < 1:
        raise ValueError(f"bad disk data {(i, m, k, d)} for n = {n}")
    w = weights.w
    wi, wi1 = w[(i - 1) % 3], w[i % 3]
    if wi == 0:
        raise ZeroWeight(f"w{i} vanishes")
    r1, r2 = R[i % 3], R[(i + 1) % 3]
    x = Fraction(d) * wi1 / (m * wi)
    a = x + _frac_part(Fraction(-k * r2, n)) + Fraction(d, m)
    b = x - _frac_part(Fraction(-k * r1, n)) + 1
    out = Fraction(m) * weights.w3 / (d * factorial(d // m)) * gamma_ratio(a, b)
    if k == 0:
        out *= d * weights.w1 * weights.w2 / (m * wi)
    return out


def gw_frame_factor(tau_plus, tau_minus, mu):
    """(-1)^{|mu| + sum floor(-tau-_i/n)} i^{-l(tau+)-l(tau-)} prod_k (i xi_{2n}^k)^{l_k(mu)}."""
    n = len(mu)
    tp, tm = partition(tau_plus), partition(tau_minus)
    size = sum(sum(c) for c in mu)
    sign = (-1) ** ((size + sum(floor(Fraction(-t, n)) for t in tm)) % 2)
    out = sign * I ** ((-len(tp) - len(tm)) % 4)
    for k, comp in enumerate(mu):
        out = out * (I * xi(2 * n, k)) ** len(partition(comp))
    return simplify(out)


# -- the predicted series -------------------------------------------------------------

@dataclass
class PredictedGWSeries:
    legs: tuple
    n: int
    series: Series
    framed: bool = True

    @property
    def leg_count(self) -> int:
        tp, tm, mu = self.legs
        return len(tp) + len(tm) + sum(len(c) for c in mu)

    def unframe(self) -> "PredictedGWSeries":
        if not self.framed:
            return self
        f = gw_frame_factor(*self.legs)
        return PredictedGWSeries(self.legs, self.n, self.series.scale(_inv(f)), False)

    def to_json(self) -> dict:
        tp, tm, mu = self.legs
        return {"tau_plus": list(tp), "tau_minus": list(tm), "mu": [list(c) for c in mu],
                "framed": self.framed, "series": self.series.to_json()}


@lru_cache(maxsize=None)
def _framed_rf(rp, rm, lam, s, n):
    return rf_framed_vertex(VertexLegs(rp, rm, lam), EquivWeights(s, n))


def predicted_framed_gw(tau_plus, tau_minus, mu, weights: EquivWeights, u_order: int, x_order: int,
                        subst: ExpSubstitution | None = None, cache: dict | None = None) -> PredictedGWSeries:
    """sum over (rho+, rho-, lambda) of the framed DT vertex times the three
    character ratios, after q -> e^{iu} and q_j -> xi^{-1} exp(L_j(x))."""
    n = weights.n
    tp, tm = partition(tau_plus), partition(tau_minus)
    mu = tuple(partition(c) for c in mu)
    subst = subst or ExpSubstitution(n, u_order, x_order, 1)
    cache = {} if cache is None else cache
    gs = ux_gradings(n, u_order, x_order)
    total = Series({}, gs)
    zp, zm, zmu = z_partition(tp), z_partition(tm), z_order(mu)
    for rp in partitions_of(sum(tp)):
        cp = Fraction(char_sym(rp, tp), zp)
        if not cp:
            continue
        for rm in partitions_of(sum(tm)):
            cm = Fraction(char_sym(rm, tm), zm)
            if not cm:
                continue
            for lam in multipartitions_of(sum(sum(c) for c in mu), n):
                cl = simplify(char_wreath(lam, mu) * Fraction(1, zmu))
                if not cl:
                    continue
                key = (rp, rm, lam)
                if key not in cache:
                    cache[key] = subst.apply(_framed_rf(rp, rm, lam, weights.s, n))
                total = total + cache[key].scale(simplify(cp * cm * cl))
    return PredictedGWSeries((tp, tm, mu), n, total, True)


def leg_triples(n: int, max_size: int):
    """All (tau+, tau-, mu) with each of |tau+|, |tau-|, |mu| at most max_size."""
    for tp in partitions_upto(max_size):
        for tm in partitions_upto(max_size):
            for k in range(max_size + 1):
                for mu in multipartitions_of(k, n):
                    yield tp, tm, mu


def predicted_family(weights: EquivWeights, max_size: int, u_order: int, x_order: int,
                     framed: bool = False) -> LegSeriesFamily:
    n = weights.n
    subst = ExpSubstitution(n, u_order, x_order, 1)
    fam = LegSeriesFamily(n)
    cache = {}
    for t in leg_triples(n, max_size):
        v = predicted_framed_gw(*t, weights, u_order, x_order, subst, cache)
        fam[t] = (v if framed else v.unframe()).series
    return fam


def connected_family(weights: EquivWeights, max_size: int, u_order: int, x_order: int) -> LegSeriesFamily:
    """Connected predicted GW series; unframing commutes with taking the
    connected part because the framing factor is multiplicative over parts."""
    return connected_from_disconnected(predicted_family(weights, max_size, u_order, x_order))


def u_support_ok(s: Series, leg_count: int) -> bool:
    """Every u-exponent has the form 2g - 2 + l with g >= 0."""
    for m in s.terms:
        e = dict(m).get("u", 0)
        g2 = e + 2 - leg_count
        if g2 < 0 or Fraction(g2).denominator != 1 or int(g2) % 2:
            return False
    return True


def coefficients_rational(s: Series) -> bool:
    return all(is_rational(c) for c in s.terms.values())


def strip_disks(connected: Series, legs, weights: EquivWeights) -> dict:
    """Predicted correlator values J_{g, gamma}: divide by the disk factors,
    restore the automorphism orders and undo x^gamma / gamma!."""
    tp, tm, mu = legs
    parts = delta(tp, tm, mu, weights)
    if not parts:
        return {}
    dprod = Fraction(1)
    for p in parts:
        dv = disk(p.i, p.m, p.k, p.d, weights)
        if dv == 0:
            raise ZeroDiskFactor(f"disk factor vanishes for {p}")
        dprod *= dv
    aut = aut_order(partition(tp)) * aut_order(partition(tm)) * aut_order(tuple(partition(c) for c in mu))
    l = len(parts)
    out = {}
    for m, c in connected.terms.items():
        e = dict(m)
        g = (e.get("u", 0) + 2 - l) / 2
        gamma = tuple((v, int(x)) for v, x in m if v != "u")
        fact = 1
        for _, x in gamma:
            fact *= factorial(x)
        out[(Fraction(g), gamma)] = simplify(c * fact * aut / dprod)
    return out
