"""JSON helpers shared by the library and the command line."""
from __future__ import annotations

import json
from fractions import Fraction

from .cyclotomic import CycloNumber

SCHEMA = "orbivertex/1"


def frac_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def coeff_to_json(c):
    if isinstance(c, CycloNumber):
        if c.is_rational():
            return frac_str(c.coords[0])
        return c.to_json()
    return frac_str(c)


def coeff_from_json(d):
    if isinstance(d, dict):
        return CycloNumber.from_json(d)
    x = Fraction(d)
    return x.numerator if x.denominator == 1 else x


def dumps(doc) -> str:
    """Canonical serialization: sorted keys, fixed separators."""
    return json.dumps(doc, sort_keys=True, indent=1, separators=(",", ": "))


def partition_json(p) -> list:
    return [int(x) for x in p]


def multipartition_json(mu) -> list:
    return [partition_json(c) for c in mu]
