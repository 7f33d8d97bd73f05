import math
from fractions import Fraction

from hypothesis import assume, given, strategies as st
from pytest import raises

from orbivertex.cyclotomic import I
from orbivertex.gw_side import (NonIntegerGammaGap, delta, delta_tilde, disk, gamma_ratio, gw_frame_factor,
                                predicted_framed_gw, strip_disks, u_support_ok, coefficients_rational)
from orbivertex.series import Series, connected_from_disconnected
from orbivertex.weights import EquivWeights, ZeroWeight


def test_disk_examples():
    assert disk(3, 1, 0, 1, EquivWeights(1, 1)) == -2
    # w1 w2 / w3^2 at s = 1/3
    assert disk(3, 1, 0, 1, EquivWeights(Fraction(1, 3), 1)) == Fraction(1, 3) * Fraction(-4, 3)
    assert disk(1, 2, 1, 1, EquivWeights(1, 2)) == 2
    with raises(NonIntegerGammaGap):
        disk(1, 3, 1, 1, EquivWeights(1, 3))


def test_disk_against_float_gamma():
    w = EquivWeights(Fraction(2), 2)
    i, m, k, d = 1, 2, 1, 3
    wi, wi1 = w.w[0], w.w[1]
    x = Fraction(d) * wi1 / (m * wi)
    a = x + Fraction(d, m)  # r_3 = 0 kills the fractional shift
    b = x - Fraction(1, 2) + 1
    expect = m * w.w3 / (d * math.factorial(d // m)) * math.gamma(a) / math.gamma(b)
    assert abs(float(disk(i, m, k, d, w)) - expect) < 1e-9


@given(st.fractions(min_value=Fraction(1, 7), max_value=5, max_denominator=7), st.integers(-3, 3))
def test_gamma_ratio(b, gap):
    a = b + gap
    assume(a > 0)
    assert abs(float(gamma_ratio(a, b)) - math.gamma(a) / math.gamma(b)) < 1e-9 * max(1, math.gamma(a) / math.gamma(b))


def test_zero_weight():
    with raises(ZeroWeight):
        disk(1, 1, 0, 1, EquivWeights(0, 1))


def test_frame_factor_examples():
    assert gw_frame_factor((), (), ((), ())) == 1
    assert gw_frame_factor((), (1,), ((), ())) == I
    assert gw_frame_factor((), (), ((1,), ())) == -I


def test_part_classifiers():
    w = EquivWeights(1, 2)
    parts = delta((3,), (1,), ((2,), (1,)), w)
    assert [(p.i, p.m, p.k, p.d) for p in parts] == [(1, 2, 1, 3), (2, 2, 1, 1), (3, 1, 0, 2), (3, 1, 1, 1)]
    assert all(p.m == 1 and p.k == 0 for p in delta_tilde((3,), (1,), ((2,), (1,)), w))


def test_one_leg_series_n1():
    """1/(2 sin(u/2)) = 1/u + u/24 + 7u^3/5760, up to the framing constant."""
    v = predicted_framed_gw((), (), ((1,),), EquivWeights(1, 1), 3, 0).unframe().series
    c = v.coeff(u=-1)
    assert c != 0
    assert v.coeff(u=1) == c * Fraction(1, 24)
    assert v.coeff(u=3) == c * Fraction(7, 5760)
    assert u_support_ok(v, 1) and coefficients_rational(v)


def test_u_support():
    assert u_support_ok(Series({(("u", -1),): 1, (("u", 1),): 1}), 1)
    assert not u_support_ok(Series({(("u", 0),): 1}), 1)
    assert not u_support_ok(Series({(("u", -2),): 1}), 1)


def test_strip_disks():
    w = EquivWeights(1, 1)
    assert strip_disks(Series({}), ((), (), ((),)), w) == {}
    s = Series({(("u", -1),): 4})
    assert strip_disks(s, ((), (), ((1,),)), w) == {(Fraction(0), ()): -2}
    # automorphisms of mu = ((1, 1),) give a factor 2
    s = Series({(): 4})
    assert strip_disks(s, ((), (), ((1, 1),)), w) == {(Fraction(0), ()): 2}
