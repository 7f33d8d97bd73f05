"""Torus weights (w1, w2, w3) with w1 + w2 + w3 = 0, normalized by w3 = 1."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class ZeroWeight(ValueError):
    pass


@dataclass(frozen=True)
class EquivWeights:
    """Weights stored through s = w1/w3; then w2/w3 = -1 - s.

    Only ratios ever enter the formulas, so (w1, w2, w3) = (s, -1-s, 1).
    """

    s: Fraction
    n: int = 1

    def __post_init__(self):
        object.__setattr__(self, "s", Fraction(self.s))
        if self.n < 1:
            raise ValueError("modulus must be positive")

    @classmethod
    def parse(cls, s, n: int = 1) -> "EquivWeights":
        return cls(Fraction(str(s)), n)

    @property
    def w(self) -> tuple:
        return (self.s, -1 - self.s, Fraction(1))

    @property
    def w1(self):
        return self.s

    @property
    def w2(self):
        return -1 - self.s

    @property
    def w3(self):
        return Fraction(1)

    def check(self) -> "EquivWeights":
        if self.w1 == 0:
            raise ZeroWeight("w1 vanishes (s = 0)")
        if self.w2 == 0:
            raise ZeroWeight("w2 vanishes (s = -1)")
        return self

    # ratios used by the framing factors
    def ratio(self, a: int, b: int) -> Fraction:
        """w_a / w_b with 1-based cyclic indices (w4 = w1, w5 = w2)."""
        w = self.w
        den = w[(b - 1) % 3]
        if den == 0:
            raise ZeroWeight(f"w{(b - 1) % 3 + 1} vanishes")
        return w[(a - 1) % 3] / den

    def edge(self, j: int) -> tuple:
        """The weight triple (-n w2 - (j+1) w3, n w2 + j w3, w3) at chain site j."""
        if not 0 <= j < self.n:
            raise ValueError(f"edge index {j} outside 0..{self.n - 1}")
        n, w2, w3 = self.n, self.w2, self.w3
        return (-n * w2 - (j + 1) * w3, n * w2 + j * w3, w3)

    def edge_s(self, j: int) -> Fraction:
        """s-parameter (first weight over third) of the smooth weights at site j."""
        a, b, c = self.edge(j)
        if a == 0:
            raise ZeroWeight(f"first weight of edge {j} vanishes for s = {self.s}")
        if b == 0:
            raise ZeroWeight(f"second weight of edge {j} vanishes for s = {self.s}")
        return a / c

    def edge_weights(self, j: int) -> "EquivWeights":
        return EquivWeights(self.edge_s(j), 1)

    def to_json(self) -> dict:
        from .io import frac_str
        return {"s": frac_str(self.s), "n": self.n}
