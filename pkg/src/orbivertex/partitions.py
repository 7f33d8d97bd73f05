"""Partitions, n-tuples of partitions, colored Young diagrams and the
n-core / n-quotient bijection.

Partitions are plain tuples of positive ints in weakly decreasing order and
n-tuples of partitions ("multipartitions") are tuples of such tuples.  Cells
are 0-indexed as (row, column); the cell (i, j) of an n-colored diagram has
color (j - i) mod n.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod


class NonEmptyCore(ValueError):
    """Raised where only diagrams with empty n-core are allowed."""


def partition(parts) -> tuple:
    """Normalize an iterable of ints into a partition tuple (zeros dropped)."""
    p = tuple(sorted((int(x) for x in parts if int(x) != 0), reverse=True))
    if p and p[-1] < 0:
        raise ValueError(f"negative part in {parts!r}")
    return p


def multipartition(components, n: int | None = None) -> tuple:
    mp = tuple(partition(c) for c in components)
    if n is not None and len(mp) != n:
        raise ValueError(f"expected {n} components, got {len(mp)}")
    return mp


def size(p) -> int:
    if p and isinstance(p[0], tuple):
        return sum(sum(c) for c in p)
    return sum(p)


def mp_size(mu) -> int:
    return sum(sum(c) for c in mu)


def mp_length(mu) -> int:
    return sum(len(c) for c in mu)


def conjugate(p) -> tuple:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def cells(p):
    for i, row in enumerate(p):
        for j in range(row):
            yield i, j


def content_sum(p) -> int:
    """Sum of (j - i) over the cells of p."""
    return sum(j - i for i, j in cells(p))


def hook_lengths(p):
    pc = conjugate(p)
    return {(i, j): p[i] - j + pc[j] - i - 1 for i, j in cells(p)}


def multiplicities(p) -> Counter:
    return Counter(p)


def z_partition(p) -> int:
    """Centralizer order of a permutation of cycle type p."""
    return prod(k ** m * factorial(m) for k, m in Counter(p).items())


def z_order(mu) -> int:
    """Centralizer order z_mu in the wreath product Z_n wr S_|mu|."""
    n = len(mu)
    return prod(z_partition(c) * n ** len(c) for c in mu)


def aut_order(mu) -> int:
    """Number of permutations of equal parts within each component."""
    if mu and not isinstance(mu[0], tuple):
        mu = (mu,)
    return prod(factorial(m) for c in mu for m in Counter(c).values())


@lru_cache(maxsize=None)
def partitions_of(m: int, max_part: int | None = None) -> tuple:
    """All partitions of m in reverse-lexicographic order."""
    if max_part is None:
        max_part = m
    if m == 0:
        return ((),)
    out = []
    for first in range(min(m, max_part), 0, -1):
        for rest in partitions_of(m - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_upto(m: int):
    for k in range(m + 1):
        yield from partitions_of(k)


@lru_cache(maxsize=None)
def multipartitions_of(m: int, n: int) -> tuple:
    """All n-tuples of partitions of total size m."""
    if n == 1:
        return tuple((p,) for p in partitions_of(m))
    out = []
    for k in range(m + 1):
        for head in partitions_of(k):
            for tail in multipartitions_of(m - k, n - 1):
                out.append((head,) + tail)
    return tuple(out)


def contains(outer, inner) -> bool:
    if len(inner) > len(outer):
        return False
    return all(a >= b for a, b in zip(outer, inner))


def subpartitions(p):
    """All partitions whose diagram sits inside p."""
    if not p:
        yield ()
        return

    def rec(i, bound):
        if i == len(p):
            yield ()
            return
        for v in range(min(p[i], bound), -1, -1):
            if v == 0:
                yield ()
            else:
                for rest in rec(i + 1, v):
                    yield (v,) + rest

    yield from rec(0, p[0])


# --- abacus ------------------------------------------------------------------

# Abacus convention: beta numbers are lambda_i + (L - 1 - i) with the bead
# count L padded to a multiple of n, and the beads on runner r (beta = r mod n)
# give quotient slot r.  This is the only convention under which the content
# identity in correspondence.lemma1_monomial holds for n = 2, 3, 4.
def _slot(r: int, n: int) -> int:
    return r % n


def _beads_to_partition(positions) -> tuple:
    pos = sorted(positions, reverse=True)
    count = len(pos)
    return partition(b - (count - 1 - i) for i, b in enumerate(pos))


def diagram_to_quotient(shape, n: int):
    """Return (core, quotient) of a partition via the n-abacus.

    The quotient is an n-tuple indexed by abacus runner.
    """
    shape = partition(shape)
    L = len(shape) + (-len(shape)) % n
    beta = [(shape[i] if i < len(shape) else 0) + L - 1 - i for i in range(L)]
    runners = [[] for _ in range(n)]
    for b in beta:
        runners[b % n].append(b // n)
    quotient = [()] * n
    core_beta = []
    for r, beads in enumerate(runners):
        quotient[_slot(r, n)] = _beads_to_partition(beads)
        core_beta.extend(r + n * k for k in range(len(beads)))
    core = _beads_to_partition(core_beta)
    return core, tuple(quotient)


def quotient_to_diagram(mu, core=()) -> tuple:
    """Inverse of diagram_to_quotient for the given core (default empty)."""
    n = len(mu)
    mu = tuple(partition(c) for c in mu)
    core = partition(core)
    Lc = len(core) + (-len(core)) % n
    # pad so that every runner holds at least as many beads as its quotient part
    pad = n * max([len(c) for c in mu] + [0])
    L = Lc + pad
    core_beta = [(core[i] if i < len(core) else 0) + L - 1 - i for i in range(L)]
    runners = [[] for _ in range(n)]
    for b in core_beta:
        runners[b % n].append(b // n)
    beta = []
    for r, beads in enumerate(runners):
        beads = sorted(beads, reverse=True)
        part = mu[_slot(r, n)]
        if len(part) > len(beads):
            raise ValueError("abacus padding too small")
        for i, pos in enumerate(beads):
            shift = part[i] if i < len(part) else 0
            beta.append(r + n * (pos + shift))
    return _beads_to_partition(beta)


def n_core(shape, n: int) -> tuple:
    return diagram_to_quotient(shape, n)[0]


@dataclass(frozen=True)
class ColoredDiagram:
    """Young diagram with cell colors (j - i) mod n."""

    n: int
    shape: tuple

    def __post_init__(self):
        object.__setattr__(self, "shape", partition(self.shape))

    @classmethod
    def from_quotient(cls, mu) -> "ColoredDiagram":
        return cls(len(mu), quotient_to_diagram(mu))

    def color(self, i: int, j: int) -> int:
        return (j - i) % self.n

    def cells(self):
        return cells(self.shape)

    def color_counts(self) -> list:
        counts = [0] * self.n
        for i, j in cells(self.shape):
            counts[(j - i) % self.n] += 1
        return counts

    @property
    def core(self) -> tuple:
        return diagram_to_quotient(self.shape, self.n)[0]

    @property
    def quotient(self) -> tuple:
        return diagram_to_quotient(self.shape, self.n)[1]

    def has_empty_core(self) -> bool:
        return not self.core

    def require_empty_core(self):
        if self.core:
            raise NonEmptyCore(f"{self.shape} has {self.n}-core {self.core}")
        return self

    def conjugate(self) -> "ColoredDiagram":
        return ColoredDiagram(self.n, conjugate(self.shape))

    def to_json(self) -> dict:
        return {"n": self.n, "shape": list(self.shape)}

    @classmethod
    def from_json(cls, d) -> "ColoredDiagram":
        return cls(int(d["n"]), tuple(d["shape"]))
