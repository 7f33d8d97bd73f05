"""Truncated multivariate Laurent-Puiseux series with exact coefficients.

Monomials are sorted tuples of (variable, exponent) pairs with rational
exponents.  A series carries a window made of gradings; a grading weights
some variables and has a precision ``prec``.  Every coefficient of a monomial
whose degree is <= prec in each grading is exact and nothing above is stored.
``prec=None`` means exact in that grading.  Products track precision through
valuations, so multiplying by negative-degree factors shrinks the window
instead of silently producing wrong coefficients.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .cyclotomic import CycloNumber, root_power, simplify


class WindowUnderflow(ArithmeticError):
    """The requested precision is not available from the inputs."""


class NonUnitConstantTerm(ArithmeticError):
    pass


class DivergentSubstitution(ArithmeticError):
    pass


SCALARS = (int, Fraction, CycloNumber)
ONE = ()


def _num(e):
    e = Fraction(e)
    return e.numerator if e.denominator == 1 else e


def make_mono(exps) -> tuple:
    items = exps.items() if isinstance(exps, dict) else exps
    acc = {}
    for v, e in items:
        acc[v] = acc.get(v, 0) + e
    return tuple(sorted((v, _num(e)) for v, e in acc.items() if e))


def mono_mul(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    acc = dict(a)
    for v, e in b:
        s = acc.get(v, 0) + e
        if s:
            acc[v] = s
        else:
            del acc[v]
    return tuple(sorted(acc.items()))


def mono_pow(a: tuple, r) -> tuple:
    if r == 0:
        return ()
    return tuple((v, _num(e * Fraction(r))) for v, e in a)


def mono_exp(a: tuple, var: str):
    for v, e in a:
        if v == var:
            return e
    return 0


def mono_str(m: tuple) -> str:
    if not m:
        return "1"
    return "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)


@dataclass(frozen=True)
class Grading:
    name: str
    weights: tuple  # ((var, weight), ...)
    prec: object = None

    def degree(self, m: tuple):
        w = dict(self.weights)
        return sum((w[v] * e for v, e in m if v in w), 0)

    def with_prec(self, prec) -> "Grading":
        return Grading(self.name, self.weights, None if prec is None else _num(prec))


def grading(name: str, weights, prec=None) -> Grading:
    if isinstance(weights, dict):
        weights = weights.items()
    return Grading(name, tuple(sorted((v, _num(w)) for v, w in weights)),
                   None if prec is None else _num(prec))


def q_grading(n: int, prec=None, name: str = "q") -> Grading:
    """Total degree in q0..q{n-1}, each variable of weight one."""
    return grading(name, {f"q{c}": 1 for c in range(n)}, prec)


def _pmin(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _inv(c):
    if isinstance(c, CycloNumber):
        return simplify(c.inverse())
    return simplify(Fraction(1) / c)


class Series:
    __slots__ = ("terms", "gradings", "_deg")

    def __init__(self, terms=None, gradings=()):
        self.gradings = tuple(gradings)
        self._deg = {}
        clean = {}
        for m, c in (terms or {}).items():
            c = simplify(c)
            if c and self.in_window(m):
                clean[m] = c
        self.terms = clean

    # -- construction ---------------------------------------------------------
    @classmethod
    def const(cls, c, gradings=()) -> "Series":
        return cls({ONE: c}, gradings)

    @classmethod
    def monomial(cls, exps, coeff=1, gradings=()) -> "Series":
        return cls({make_mono(exps): coeff}, gradings)

    @classmethod
    def var(cls, name: str, gradings=()) -> "Series":
        return cls({((name, 1),): 1}, gradings)

    @classmethod
    def geometric(cls, m, gradings, coeff=1) -> "Series":
        """1 / (1 - coeff * m) expanded inside the window."""
        return (cls.const(1, gradings) - cls({make_mono(m): coeff}, gradings)).inverse()

    # -- inspection -------------------------------------------------------------
    def degrees(self, m):
        d = self._deg.get(m)
        if d is None:
            d = tuple(g.degree(m) for g in self.gradings)
            self._deg[m] = d
        return d

    def in_window(self, m) -> bool:
        for g, d in zip(self.gradings, self.degrees(m)):
            if g.prec is not None and d > g.prec:
                return False
        return True

    def _index(self, name):
        if name is None:
            return 0 if self.gradings else None
        for i, g in enumerate(self.gradings):
            if g.name == name:
                return i
        return None

    def prec(self, name: str | None = None):
        i = self._index(name)
        return None if i is None else self.gradings[i].prec

    def valuation(self, name: str | None = None):
        """Lowest degree present; the precision for a truncated zero; None for exact zero."""
        i = self._index(name)
        if i is None:
            return 0 if self.terms else None
        if not self.terms:
            return self.gradings[i].prec
        return min(self.degrees(m)[i] for m in self.terms)

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def coeff(self, exps=None, **kw):
        return self.terms.get(make_mono(exps if exps is not None else kw), 0)

    def constant_term(self):
        return self.terms.get(ONE, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def is_exact(self) -> bool:
        return all(g.prec is None for g in self.gradings)

    def __len__(self):
        return len(self.terms)

    def items(self):
        """Terms in canonical (sorted) order."""
        return sorted(self.terms.items(), key=lambda kv: _sort_key(kv[0]))

    def __iter__(self):
        return iter(self.items())

    # -- windows ----------------------------------------------------------------
    def truncate(self, name: str | None = None, prec=None) -> "Series":
        """Lower the precision of one grading (default: the first)."""
        i = self._index(name)
        gs = list(self.gradings)
        gs[i] = gs[i].with_prec(_pmin(gs[i].prec, prec))
        return Series(self.terms, gs)

    def regrade(self, gradings) -> "Series":
        return Series(self.terms, gradings)

    def require(self, name: str | None, prec) -> "Series":
        have = self.prec(name)
        if have is not None and have < prec:
            raise WindowUnderflow(f"series exact only through degree {have} in {name}, need {prec}")
        return self

    def _aligned(self, other: "Series"):
        """Union of gradings as (grading, prec_self, prec_other); absent means exact."""
        mine = {g.name: g for g in self.gradings}
        theirs = {g.name: g for g in other.gradings}
        out = []
        for name in list(mine) + [k for k in theirs if k not in mine]:
            g = mine.get(name) or theirs[name]
            if name in mine and name in theirs and mine[name].weights != theirs[name].weights:
                raise ValueError(f"grading {name} has conflicting weights")
            pa = mine[name].prec if name in mine else None
            pb = theirs[name].prec if name in theirs else None
            out.append((g, pa, pb))
        return out

    # -- arithmetic -------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Series):
            return other
        if isinstance(other, SCALARS):
            return Series.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        gs = [g.with_prec(_pmin(pa, pb)) for g, pa, pb in self._aligned(other)]
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return Series(terms, gs)

    __radd__ = __add__

    def __neg__(self):
        return Series({m: -c for m, c in self.terms.items()}, self.gradings)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Series":
        if c == 0:
            return Series({}, self.gradings)
        return Series({m: c * v for m, v in self.terms.items()}, self.gradings)

    def shift(self, m, c=1) -> "Series":
        """Exact multiplication by the single term c * m."""
        m = make_mono(m)
        gs = [g if g.prec is None else g.with_prec(g.prec + g.degree(m)) for g in self.gradings]
        return Series({mono_mul(k, m): c * v for k, v in self.terms.items()}, gs)

    def __mul__(self, other):
        if isinstance(other, SCALARS):
            return self.scale(other)
        if not isinstance(other, Series):
            return NotImplemented
        aligned = self._aligned(other)
        if (not self.terms and self.is_exact()) or (not other.terms and other.is_exact()):
            return Series({}, [g.with_prec(None) for g, _, _ in aligned])
        gs = []
        for g, pa, pb in aligned:
            cands = []
            if pa is not None:
                cands.append(pa + _val_in(other, g))
            if pb is not None:
                cands.append(pb + _val_in(self, g))
            gs.append(g.with_prec(min(cands) if cands else None))
        probe = Series({}, gs)
        terms = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = mono_mul(ma, mb)
                if probe.in_window(m):
                    terms[m] = terms.get(m, 0) + ca * cb
        return Series(terms, gs)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, SCALARS):
            return self.scale(_inv(other))
        if isinstance(other, Series):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if isinstance(k, int):
            if k < 0:
                return self.inverse() ** (-k)
            result = Series.const(1)
            base = self
            while k:
                if k & 1:
                    result = result * base
                k >>= 1
                if k:
                    base = base * base
            return result if result.gradings else result.regrade(self.gradings)
        return self.fractional_power(k)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def agrees_with(self, other: "Series") -> bool:
        """Equality on the common window."""
        return (self - other).is_zero()

    # -- unit-part machinery -------------------------------------------------------
    def _nilpotent(self) -> bool:
        """Powers of self eventually leave the window."""
        for m in self.terms:
            ok = False
            for g, d in zip(self.gradings, self.degrees(m)):
                if g.prec is None:
                    continue
                if d < 0:
                    return False
                if d > 0:
                    ok = True
            if not ok:
                return False
        return True

    def split_leading(self):
        """Write self = c * m * (1 - h) with h nilpotent in the window."""
        if not self.terms:
            raise ZeroDivisionError("leading term of a zero series")
        lead = min(self.terms, key=lambda m: (self.degrees(m), _sort_key(m)))
        c = self.terms[lead]
        ci = _inv(c)
        inv_m = mono_pow(lead, -1)
        gs = [g if g.prec is None else g.with_prec(g.prec - g.degree(lead)) for g in self.gradings]
        h = Series({mono_mul(m, inv_m): -v * ci for m, v in self.terms.items() if m != lead}, gs)
        if not h._nilpotent():
            raise NonUnitConstantTerm(f"leading term {mono_str(lead)} does not dominate the series")
        return c, lead, h

    def power_series(self, coeffs, limit: int = 100_000) -> "Series":
        """sum_k coeffs(k) * self**k for nilpotent self."""
        if not self._nilpotent():
            raise NonUnitConstantTerm("argument is not nilpotent in the window")
        result = Series.const(coeffs(0), self.gradings)
        power = Series.const(1, self.gradings)
        for k in range(1, limit):
            power = (power * self).regrade(self.gradings)
            if power.is_zero():
                break
            ck = coeffs(k)
            if ck:
                result = result + power.scale(ck)
        else:
            raise WindowUnderflow("power series did not terminate")
        return result.regrade(self.gradings)

    def inverse(self) -> "Series":
        c, lead, h = self.split_leading()
        body = h.power_series(lambda k: 1)
        gs = [g if g.prec is None else g.with_prec(g.prec - 2 * g.degree(lead)) for g in self.gradings]
        return Series(body.shift(mono_pow(lead, -1), _inv(c)).terms, gs)

    def fractional_power(self, r) -> "Series":
        """self ** r for rational r.  The leading coefficient must be a
        positive rational with an exact root or a root of unity (principal branch)."""
        r = Fraction(r)
        if r.denominator == 1:
            return self ** r.numerator
        c, lead, h = self.split_leading()
        body = (-h).power_series(_binomial(r))
        gs = [g if g.prec is None else g.with_prec(g.prec + (r - 1) * g.degree(lead)) for g in self.gradings]
        return Series(body.shift(mono_pow(lead, r), scalar_power(c, r)).terms, gs)

    def exp(self) -> "Series":
        if self.constant_term():
            raise NonUnitConstantTerm("exp needs a series without constant term")
        return self.power_series(lambda k: Fraction(1, factorial(k)))

    def log(self) -> "Series":
        if self.constant_term() != 1:
            raise NonUnitConstantTerm("log needs constant term 1")
        return (self - 1).power_series(lambda k: Fraction((-1) ** (k + 1), k) if k else 0)

    # -- maps ---------------------------------------------------------------------
    def map_monomials(self, f, gradings=None) -> "Series":
        terms = {}
        for m, c in self.terms.items():
            mm = f(m)
            terms[mm] = terms.get(mm, 0) + c
        return Series(terms, self.gradings if gradings is None else gradings)

    def map_coeffs(self, f) -> "Series":
        return Series({m: f(c) for m, c in self.terms.items()}, self.gradings)

    def rename(self, mapping: dict) -> "Series":
        """Rename variables; must not change any grading degree."""
        return self.map_monomials(lambda m: make_mono((mapping.get(v, v), e) for v, e in m))

    def substitute(self, images: dict, gradings) -> "Series":
        """Ring homomorphism sending variables to Series or scalars.

        Unmapped variables are kept.  Fractional exponents go through
        fractional_power.  The result lives in ``gradings``; an image power
        that cannot be expanded there raises DivergentSubstitution.
        """
        cache = {}

        def image_power(v, e):
            key = (v, e)
            if key not in cache:
                img = images.get(v)
                if img is None:
                    val = Series.monomial({v: e}, 1, gradings)
                else:
                    if not isinstance(img, Series):
                        img = Series.const(img)
                    img = Series(img.terms, [g.with_prec(_pmin(g.prec, img.prec(g.name))) for g in gradings])
                    try:
                        val = img ** e if Fraction(e).denominator == 1 else img.fractional_power(e)
                    except (NonUnitConstantTerm, ZeroDivisionError) as exc:
                        raise DivergentSubstitution(f"cannot expand {v}^{e}: {exc}") from exc
                cache[key] = val
            return cache[key]

        total = Series({}, gradings)
        for m, c in self.terms.items():
            t = Series.const(c, gradings)
            for v, e in m:
                t = t * image_power(v, int(e) if Fraction(e).denominator == 1 else e)
            total = total + t
        return total

    # -- output -------------------------------------------------------------------
    def to_json(self) -> dict:
        from .io import coeff_to_json, frac_str
        return {
            "window": [{"grading": g.name, "weights": {v: frac_str(w) for v, w in g.weights},
                        "prec": None if g.prec is None else frac_str(g.prec)} for g in self.gradings],
            "terms": [{"exp": {v: frac_str(e) for v, e in m}, "coeff": coeff_to_json(c)}
                      for m, c in self.items()],
        }

    @classmethod
    def from_json(cls, d) -> "Series":
        from .io import coeff_from_json
        gs = [grading(w["grading"], {v: Fraction(x) for v, x in w["weights"].items()},
                      None if w["prec"] is None else Fraction(w["prec"])) for w in d["window"]]
        terms = {make_mono({v: Fraction(e) for v, e in t["exp"].items()}): coeff_from_json(t["coeff"])
                 for t in d["terms"]}
        return cls(terms, gs)

    def __repr__(self):
        items = self.items()
        body = " + ".join(f"({c})*{mono_str(m)}" for m, c in items[:12]) or "0"
        if len(items) > 12:
            body += " + ..."
        p = ", ".join(f"{g.name}<={g.prec}" for g in self.gradings)
        return f"Series[{p}]({body})"


def _val_in(s: Series, g: Grading):
    """Valuation of s in grading g (0 if s does not carry g but has terms)."""
    if not s.terms:
        i = s._index(g.name)
        return s.gradings[i].prec if i is not None else 0
    return min(g.degree(m) for m in s.terms)


def _binomial(r: Fraction):
    cache = [Fraction(1)]

    def c(k):
        while len(cache) <= k:
            j = len(cache)
            cache.append(cache[-1] * (r - j + 1) / j)
        return cache[k]

    return c


def scalar_power(c, r):
    """c ** r for rational r: exact roots of positive rationals, or roots of
    unity on the principal branch."""
    r = Fraction(r)
    if r.denominator == 1:
        return simplify(c ** r.numerator if isinstance(c, CycloNumber) else Fraction(c) ** r.numerator)
    if isinstance(c, (int, Fraction)) and c > 0:
        c = Fraction(c)
        num = _exact_root(c.numerator, r.denominator)
        den = _exact_root(c.denominator, r.denominator)
        if num is None or den is None:
            raise ValueError(f"{c}^{r} is not rational")
        return simplify(Fraction(num, den) ** r.numerator)
    return simplify(root_power(c, r))


def _exact_root(a: int, k: int):
    x = round(a ** (1.0 / k))
    for y in (x - 1, x, x + 1):
        if y >= 0 and y ** k == a:
            return y
    return None


def _sort_key(m):
    return tuple((v, Fraction(e)) for v, e in m)


# -- leg-indexed families -------------------------------------------------------
#
# A leg triple (tau+, tau-, mu) is flattened into a multiset of atoms
# ('+', part), ('-', part), ('c<k>', part); the product p_{tau+} p_{tau-} p_mu
# of power-sum variables is the monomial of that multiset.

def triple_atoms(triple) -> tuple:
    tp, tm, mu = triple
    atoms = [("+", x) for x in tp] + [("-", x) for x in tm]
    for c, comp in enumerate(mu):
        atoms += [(f"c{c}", x) for x in comp]
    return tuple(sorted(atoms))


def atoms_triple(atoms, n: int) -> tuple:
    def part(tag):
        return tuple(sorted((x for k, x in atoms if k == tag), reverse=True))
    return part("+"), part("-"), tuple(part(f"c{c}") for c in range(n))


def sub_multisets(atoms: tuple):
    counts = Counter(atoms)
    keys = sorted(counts)

    def rec(i):
        if i == len(keys):
            yield ()
            return
        for k in range(counts[keys[i]] + 1):
            for rest in rec(i + 1):
                yield tuple(sorted((keys[i],) * k + rest))

    yield from rec(0)


def _minus(a: tuple, b: tuple) -> tuple:
    c = Counter(a)
    c.subtract(Counter(b))
    return tuple(sorted(c.elements()))


def _exp_coeff(target: tuple, connected, cache: dict):
    """[p_target] exp(sum_S connected(S) p_S), via the recursion
    m_a(T) E(T) = sum over S containing a of m_a(S) c(S) E(T - S)."""
    if not target:
        return 1
    if target in cache:
        return cache[target]
    a = target[0]
    total = 0
    for S in sub_multisets(target):
        if a not in S:
            continue
        cS = connected(S)
        if cS is None:
            continue
        total = total + cS * (Counter(S)[a] * _exp_coeff(_minus(target, S), connected, cache))
    out = total * Fraction(1, Counter(target)[a])
    cache[target] = out
    return out


class LegSeriesFamily:
    """Values indexed by leg triples (tau+, tau-, mu) with mu an n-tuple."""

    def __init__(self, n: int, data=None):
        self.n = n
        self.data = {}
        for t, v in (data or {}).items():
            self[t] = v

    def __setitem__(self, triple, value):
        self.data[triple_atoms(triple)] = value

    def __getitem__(self, triple):
        return self.data[triple_atoms(triple)]

    def get(self, triple, default=None):
        return self.data.get(triple_atoms(triple), default)

    def __contains__(self, triple):
        return triple_atoms(triple) in self.data

    def __len__(self):
        return len(self.data)

    def items(self):
        return [(atoms_triple(k, self.n), v) for k, v in sorted(self.data.items())]

    def triples(self):
        return [t for t, _ in self.items()]


def disconnected_from_connected(connected: LegSeriesFamily, targets=None) -> LegSeriesFamily:
    """The monoid exponential, evaluated at ``targets`` (default: the keys)."""
    conn = {k: v for k, v in connected.data.items() if k}
    cache = {}
    keys = list(connected.data) if targets is None else [triple_atoms(t) for t in targets]
    out = LegSeriesFamily(connected.n)
    for k in keys:
        out.data[k] = _exp_coeff(k, conn.get, cache)
    return out


def connected_from_disconnected(disconnected: LegSeriesFamily) -> LegSeriesFamily:
    """Inverse of the monoid exponential.

    The family must be closed under sub-multisets of legs; the empty triple,
    if present, must hold 1 and maps to 0.
    """
    data = disconnected.data
    keys = sorted((k for k in data if k), key=lambda k: (len(k), k))
    conn = {}
    for key in keys:
        for S in sub_multisets(key):
            if S and S not in data:
                raise KeyError(f"family is not closed under sub-multisets: missing {S}")
        partial = _exp_coeff(key, lambda S, key=key: conn.get(S) if S != key else None, {})
        conn[key] = data[key] - partial
    out = LegSeriesFamily(disconnected.n)
    out.data.update(conn)
    if () in data:
        out.data[()] = 0
    return out
