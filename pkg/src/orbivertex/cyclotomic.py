"""Exact arithmetic in cyclotomic fields Q(xi_N).

A CycloNumber stores rational coordinates in the power basis
1, xi, ..., xi^(phi(N)-1) of Q(xi_N), reduced modulo the N-th cyclotomic
polynomial.  Numbers of different orders are promoted to the lcm order on
contact, and ints / Fractions mix in freely.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
import cmath


class IncompatibleOrder(ValueError):
    pass


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@lru_cache(maxsize=None)
def cyclotomic_poly(N: int) -> tuple:
    """Integer coefficients of Phi_N, lowest degree first."""
    num = [-1] + [0] * (N - 1) + [1]  # x^N - 1
    for d in range(1, N):
        if N % d == 0:
            num = _poly_div_exact(num, cyclotomic_poly(d))
    return tuple(num)


def _poly_div_exact(num, den):
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1] // den[-1]
        out[k] = c
        for i, d in enumerate(den):
            num[k + i] -= c * d
    assert not any(num), "inexact cyclotomic division"
    return out


@lru_cache(maxsize=None)
def _power_table(N: int) -> tuple:
    """Row e gives the coordinates of xi_N^e, for 0 <= e < N."""
    phi = cyclotomic_poly(N)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(N):
        rows.append(tuple(cur))
        # multiply by x, then reduce the x^deg term
        top = cur[-1]
        nxt = [0] + cur[:-1]
        if top:
            for i in range(deg):
                nxt[i] -= top * phi[i]
        cur = nxt
    return tuple(rows)


def degree(N: int) -> int:
    return len(cyclotomic_poly(N)) - 1


class CycloNumber:
    __slots__ = ("order", "coords")

    def __init__(self, order: int, coords):
        self.order = order
        self.coords = tuple(Fraction(c) for c in coords)
        assert len(self.coords) == degree(order)

    # -- constructors -------------------------------------------------------
    @classmethod
    def rational(cls, value, order: int = 1) -> "CycloNumber":
        c = [Fraction(0)] * degree(order)
        c[0] = Fraction(value)
        return cls(order, c)

    @classmethod
    def root(cls, M: int, a: int = 1) -> "CycloNumber":
        """xi_M ** a."""
        return cls(M, _power_table(M)[a % M])

    @classmethod
    def from_powers(cls, M: int, powers: dict) -> "CycloNumber":
        """sum of c * xi_M**e over the dict {e: c}."""
        table = _power_table(M)
        acc = [Fraction(0)] * degree(M)
        for e, c in powers.items():
            c = Fraction(c)
            if c:
                for i, t in enumerate(table[e % M]):
                    if t:
                        acc[i] += c * t
        return cls(M, acc)

    # -- structure ----------------------------------------------------------
    def promote(self, M: int) -> "CycloNumber":
        if M == self.order:
            return self
        if M % self.order:
            raise IncompatibleOrder(f"Q(xi_{self.order}) does not embed in Q(xi_{M})")
        step = M // self.order
        return CycloNumber.from_powers(M, {step * i: c for i, c in enumerate(self.coords) if c})

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coords[0]

    def conjugate(self) -> "CycloNumber":
        """Complex conjugation, xi -> xi^(N-1)."""
        N = self.order
        return CycloNumber.from_powers(N, {(-i) % N: c for i, c in enumerate(self.coords) if c})

    def galois(self, k: int) -> "CycloNumber":
        N = self.order
        if gcd(k, N) != 1:
            raise ValueError("Galois exponent must be a unit mod N")
        return CycloNumber.from_powers(N, {(k * i) % N: c for i, c in enumerate(self.coords) if c})

    def __complex__(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.order)
        return sum(float(c) * z ** i for i, c in enumerate(self.coords))

    def as_root_of_unity(self):
        """Return (M, a) with self == xi_M**a and 0 <= a < M, or None."""
        M = lcm(self.order, 2)
        x = self.promote(M)
        table = _power_table(M)
        for a in range(M):
            if table[a] == x.coords:
                return M, a
        return None

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, CycloNumber):
            if other.order == self.order:
                return self, other
            M = lcm(self.order, other.order)
            return self.promote(M), other.promote(M)
        if isinstance(other, (int, Fraction)):
            return self, CycloNumber.rational(other, self.order)
        return None

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycloNumber(a.order, [x + y for x, y in zip(a.coords, b.coords)])

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber(self.order, [-x for x in self.coords])

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycloNumber(a.order, [x - y for x, y in zip(a.coords, b.coords)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloNumber(self.order, [x * other for x in self.coords])
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        N = a.order
        table = _power_table(N)
        acc = [Fraction(0)] * len(a.coords)
        conv = {}
        for i, x in enumerate(a.coords):
            if not x:
                continue
            for j, y in enumerate(b.coords):
                if y:
                    e = (i + j) % N
                    conv[e] = conv.get(e, 0) + x * y
        for e, c in conv.items():
            if c:
                for k, t in enumerate(table[e]):
                    if t:
                        acc[k] += c * t
        return CycloNumber(N, acc)

    __rmul__ = __mul__

    def inverse(self) -> "CycloNumber":
        if not any(self.coords):
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return CycloNumber.rational(1 / self.coords[0], self.order)
        # solve (self * y) = 1 as a linear system on coordinates
        N, d = self.order, len(self.coords)
        cols = []
        for k in range(d):
            basis = [0] * d
            basis[k] = 1
            cols.append((self * CycloNumber(N, basis)).coords)
        rhs = [Fraction(1)] + [Fraction(0)] * (d - 1)
        sol = _solve([[cols[k][r] for k in range(d)] for r in range(d)], rhs)
        return CycloNumber(N, sol)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloNumber(self.order, [x / other for x in self.coords])
        if isinstance(other, CycloNumber):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloNumber.rational(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a.coords == b.coords

    def __hash__(self):
        if self.is_rational():
            return hash(self.coords[0])
        z = complex(self)
        return hash((round(z.real, 8), round(z.imag, 8)))

    def __bool__(self):
        return any(self.coords)

    def __repr__(self):
        if self.is_rational():
            return f"CycloNumber({self.coords[0]})"
        terms = [f"{c}*z{self.order}^{i}" for i, c in enumerate(self.coords) if c]
        return "CycloNumber(" + " + ".join(terms) + ")"

    def to_json(self) -> dict:
        return {"order": self.order, "coords": [_frac_str(c) for c in self.coords]}

    @classmethod
    def from_json(cls, d) -> "CycloNumber":
        return cls(int(d["order"]), [Fraction(c) for c in d["coords"]])


def _frac_str(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _solve(A, b):
    n = len(A)
    M = [list(row) + [b[i]] for i, row in enumerate(A)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col])
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col]
        M[col] = [x * inv for x in M[col]]
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return [M[r][n] for r in range(n)]


# -- public helpers -----------------------------------------------------------

def xi(M: int, a: int = 1) -> CycloNumber:
    """The root of unity exp(2 pi i a / M)."""
    return CycloNumber.root(M, a)


I = xi(4)  # sqrt(-1)


def simplify(c):
    """Collapse a rational CycloNumber to a Fraction/int; pass others through."""
    if isinstance(c, CycloNumber) and c.is_rational():
        c = c.coords[0]
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def is_rational(c) -> bool:
    if isinstance(c, CycloNumber):
        return c.is_rational()
    return isinstance(c, (int, Fraction))


def conj(c):
    if isinstance(c, CycloNumber):
        return simplify(c.conjugate())
    return c


def cyclo_embed(N: int, factors, promote: bool = True) -> CycloNumber:
    """Evaluate a formal product into Q(xi_N).

    ``factors`` is an iterable of items, each either a rational or a pair
    ``(a, b)`` meaning xi_a ** b.  With promote=False every a must divide N.
    """
    order = N
    if promote:
        for f in factors:
            if isinstance(f, tuple):
                order = lcm(order, f[0])
    out = CycloNumber.rational(1, order)
    for f in factors:
        if isinstance(f, tuple):
            a, b = f
            if order % a:
                raise IncompatibleOrder(f"xi_{a} does not live in Q(xi_{order})")
            out = out * xi(a, b)
        else:
            out = out * Fraction(f)
    return out


def root_power(base, r) -> CycloNumber:
    """Fractional power of a root of unity on the principal branch.

    ``base`` is a root of unity (CycloNumber, or +-1), written as
    exp(2 pi i theta) with theta in [0, 1); the result is exp(2 pi i theta r).
    """
    r = Fraction(r)
    if not isinstance(base, CycloNumber):
        base = CycloNumber.rational(base, 2)
    found = base.as_root_of_unity()
    if found is None:
        raise ValueError(f"{base!r} is not a root of unity")
    M, a = found
    theta = Fraction(a, M) * r
    theta -= theta.numerator // theta.denominator
    return xi(theta.denominator, theta.numerator) if theta else CycloNumber.rational(1, 4)
