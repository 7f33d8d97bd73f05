"""Exact rational forms N / prod (1 - m) for the vertex, and the exponential
change of variables q -> e^{iu}, q_j -> xi^{-1} exp(...) applied to them.

A q-series cannot be re-expanded in u term by term, so the vertex is first
assembled as a rational function: every denominator that shows up is either
a pure power of q = q_0 ... q_{n-1} (a pole in u after the substitution) or
carries a nontrivial root of unity (a unit in the u, x power series ring).
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import permutations
from math import factorial

from .cyclotomic import I, root_power, simplify, xi
from .partitions import ColoredDiagram, cells, conjugate, contains, partition, subpartitions
from .schur import hook_color_monomial, jacobi_trudi_indices, qfrak, _perm_sign
from .series import DivergentSubstitution, Series, _inv, grading, make_mono, mono_mul, mono_pow


class RationalForm:
    """num / prod_m (1 - m)^den[m] with num an exact Laurent polynomial."""

    __slots__ = ("num", "den")

    def __init__(self, num=None, den=None):
        if num is None:
            num = Series({})
        elif not isinstance(num, Series):
            num = Series(dict(num))
        self.num = num
        self.den = Counter({m: k for m, k in (den or {}).items() if k})

    @classmethod
    def const(cls, c) -> "RationalForm":
        return cls(Series.const(c))

    @classmethod
    def monomial(cls, m, c=1) -> "RationalForm":
        return cls(Series({make_mono(m): c}))

    @classmethod
    def geometric(cls, m, power: int = 1) -> "RationalForm":
        """1 / (1 - m)^power."""
        return cls(Series.const(1), {make_mono(m): power})

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __mul__(self, other):
        if not isinstance(other, RationalForm):
            return RationalForm(self.num * other, self.den)
        return RationalForm(self.num * other.num, self.den + other.den)

    __rmul__ = __mul__

    def _lifted(self, den: Counter) -> Series:
        num = self.num
        for m, k in den.items():
            extra = k - self.den.get(m, 0)
            if extra:
                num = num * (Series.const(1) - Series({m: 1})) ** extra
        return num

    def __add__(self, other):
        if not isinstance(other, RationalForm):
            other = RationalForm.const(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        den = self.den | other.den
        return RationalForm(self._lifted(den) + other._lifted(den), den)

    __radd__ = __add__

    def __neg__(self):
        return RationalForm(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def shift(self, m, c=1) -> "RationalForm":
        return RationalForm(self.num.shift(m, c), self.den)

    def rename(self, mapping: dict) -> "RationalForm":
        def ren(m):
            return make_mono((mapping.get(v, v), e) for v, e in m)
        return RationalForm(self.num.rename(mapping), Counter({ren(m): k for m, k in self.den.items()}))

    def to_series(self, gradings) -> Series:
        """Expand every 1/(1 - m) geometrically inside ``gradings``."""
        out = Series(self.num.terms, gradings)
        for m, k in self.den.items():
            out = out * Series.geometric(m, gradings) ** k
        return out

    def __repr__(self):
        den = " ".join(f"(1-{m})^{k}" for m, k in self.den.items())
        return f"RationalForm({self.num!r} / {den or '1'})"


def q_monomial(n: int, e=1) -> tuple:
    return make_mono({f"q{c}": e for c in range(n)})


# -- vertex pieces ------------------------------------------------------------------

def rf_loop_schur(diagram: ColoredDiagram) -> RationalForm:
    """prod_s q_{c(s)}^{row(s)} / prod_hooks (1 - hook color monomial)."""
    diagram = diagram.require_empty_core()
    n, shape = diagram.n, diagram.shape
    e = [0] * n
    for i, j in cells(shape):
        e[(j - i) % n] += i
    den = Counter(hook_color_monomial(shape, c, n) for c in cells(shape))
    return RationalForm(Series({make_mono({f"q{c}": x for c, x in enumerate(e)}): 1}), den)


def _head_h(xs, kmax: int) -> list:
    H = [{(): 1}] + [{} for _ in range(kmax)]
    for x in xs:
        out = [dict(h) for h in H]
        for j in range(1, kmax + 1):
            acc = dict(H[j])
            for m, c in out[j - 1].items():
                mm = mono_mul(m, x)
                acc[mm] = acc.get(mm, 0) + c
            out[j] = {m: c for m, c in acc.items() if c}
        H = out
    return [RationalForm(Series(h)) for h in H]


def rf_h_values(n: int, shape, kmax: int) -> list:
    """[h_0 .. h_kmax] of the alphabet q-frak_{i - shape_i}, i >= 0."""
    shape = partition(shape)
    L = len(shape)
    head = [qfrak(i - shape[i], n) for i in range(L)]
    H = _head_h(head, kmax)
    q = q_monomial(n)
    for r in range(n):
        y = qfrak(L + r, n)
        tail = [RationalForm.const(1)]
        for a in range(1, kmax + 1):
            tail.append(RationalForm(tail[-1].num.shift(y), tail[-1].den + Counter({mono_pow(q, a): 1})))
        H = [sum((H[k - a] * tail[a] for a in range(k + 1)), RationalForm()) for k in range(kmax + 1)]
    return H


def rf_skew_schur(rho, omega, n: int, shape) -> RationalForm:
    rho, omega = partition(rho), partition(omega)
    if not contains(rho, omega):
        return RationalForm()
    if rho == omega:
        return RationalForm.const(1)
    idx = jacobi_trudi_indices(rho, omega)
    kmax = max(max(r) for r in idx)
    hs = rf_h_values(n, shape, kmax)
    L = len(idx)
    total = RationalForm()
    for p in permutations(range(L)):
        if any(idx[i][p[i]] < 0 for i in range(L)):
            continue
        term = RationalForm.const(_perm_sign(p))
        for i in range(L):
            term = term * hs[idx[i][p[i]]]
        total = total + term
    return total


def rf_bar(f: RationalForm, n: int) -> RationalForm:
    return f.rename({f"q{c}": f"q{(-c) % n}" for c in range(n)})


def rf_vertex_P(rho_plus, rho_minus, shape, n: int) -> RationalForm:
    rp, rm, shape = partition(rho_plus), partition(rho_minus), partition(shape)
    d = ColoredDiagram(n, shape)
    total = RationalForm()
    for om in subpartitions(rp):
        if not contains(rm, om):
            continue
        a = rf_bar(rf_skew_schur(rp, om, n, shape), n)
        b = rf_skew_schur(rm, om, n, conjugate(shape))
        total = total + (a * b).shift({"q0": -sum(om)})
    return rf_loop_schur(d) * total


def rf_framed_vertex(legs, weights) -> RationalForm:
    from .dt_vertex import frame_prefactor
    pre = frame_prefactor(legs, weights)
    P = rf_vertex_P(legs.rho_plus, legs.rho_minus, legs.diagram().shape, legs.n)
    return P.shift(pre.mono, pre.coeff)


# -- the exponential change of variables ------------------------------------------------

def x_linear_forms(n: int) -> dict:
    """L_j(x) = -sum_k (xi_n^{-jk}/n)(xi_{2n}^k - xi_{2n}^{-k}) x_k, j = 1..n-1,
    as {j: {k: coefficient}}."""
    out = {}
    for j in range(1, n):
        out[j] = {k: simplify(-(xi(n, -j * k) * (xi(2 * n, k) - xi(2 * n, -k))) * Fraction(1, n))
                  for k in range(1, n)}
    return out


def ux_gradings(n: int, u_prec, x_prec) -> list:
    return [grading("u", {"u": 1}, u_prec), grading("x", {f"x{k}": 1 for k in range(1, n)}, x_prec)]


class ExpSubstitution:
    """q -> sign * e^{iu}, q_j -> xi_n^{-1} e^{L_j(x)} (j > 0), q_0 = q / prod_{j>0} q_j.

    Fractional powers of the scalar parts use the principal branch, taken
    separately for the q-part and each q_j-part of a monomial."""

    def __init__(self, n: int, u_order: int, x_order: int, sign: int = 1):
        self.n = n
        self.u_order = u_order
        self.x_order = x_order
        self.sign = sign
        self.L = x_linear_forms(n)
        self._cache = {}

    def split(self, m) -> tuple:
        """(scalar, a, b) with m -> scalar * exp(i a u + sum_j b_j L_j)."""
        e = dict(m)
        a = Fraction(e.get("q0", 0))
        scalar = root_power(self.sign, a) if self.sign != 1 else 1
        b = {}
        for j in range(1, self.n):
            bj = Fraction(e.get(f"q{j}", 0)) - a
            if bj:
                b[j] = bj
                scalar = scalar * root_power(xi(self.n, -1), bj)
        for v in e:
            if not v.startswith("q") or not 0 <= int(v[1:]) < self.n:
                raise ValueError(f"unexpected variable {v}")
        return simplify(scalar), a, b

    def exponent(self, a, b, gradings) -> Series:
        terms = {}
        if a:
            terms[(("u", 1),)] = simplify(I * a)
        for j, bj in b.items():
            for k, c in self.L[j].items():
                key = ((f"x{k}", 1),)
                terms[key] = simplify(terms.get(key, 0) + c * bj)
        return Series(terms, gradings)

    def image(self, m, gradings) -> Series:
        key = (m, tuple((g.name, g.prec) for g in gradings))
        if key not in self._cache:
            scalar, a, b = self.split(m)
            self._cache[key] = self.exponent(a, b, gradings).exp().scale(scalar)
        return self._cache[key]

    def denominator_inverse(self, m, power: int, gradings) -> Series:
        """1 / (1 - image(m))^power."""
        scalar, a, b = self.split(m)
        if scalar != 1:
            body = Series.const(1, gradings) - self.image(m, gradings)
            return body.inverse() ** power
        if b and any(self.L[j][k] for j in b for k in self.L[j]):
            raise DivergentSubstitution(f"1 - {m} has no invertible image")
        if not a:
            raise ZeroDivisionError(f"denominator 1 - {m} vanishes")
        # 1 - e^y = -y g(y), g(y) = sum y^k/(k+1)!,  y = i a u
        y = simplify(I * a)
        top = gradings[0].prec
        g = Series({(("u", k),) if k else (): simplify(y ** k * Fraction(1, factorial(k + 1)))
                    for k in range(int(top) + 2 * power + 2)}, gradings)
        base = g.inverse().shift({"u": -1}, -_inv(y))
        return base ** power

    def apply(self, f: RationalForm) -> Series:
        poles = sum(k for m, k in f.den.items() if self.split(m)[0] == 1)
        work = ux_gradings(self.n, self.u_order + 2 * poles + 1, self.x_order)
        out = Series({}, work)
        for m, c in f.num.terms.items():
            out = out + self.image(m, work).scale(c)
        for m, k in f.den.items():
            out = out * self.denominator_inverse(m, k, work)
        return out.truncate("u", self.u_order).require("u", self.u_order)
