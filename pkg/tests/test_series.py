from fractions import Fraction

from hypothesis import given, settings, strategies as st
from pytest import raises

from orbivertex.cyclotomic import xi
from orbivertex.partitions import multipartitions_of, partitions_upto
from orbivertex.series import (LegSeriesFamily, NonUnitConstantTerm, Series, connected_from_disconnected,
                               disconnected_from_connected, grading, make_mono, q_grading)

G = [q_grading(1, 6)]


def q(e=1, c=1, gs=G):
    return Series({make_mono({"q0": e}): c}, gs)


small = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@st.composite
def series(draw, constant=None):
    terms = draw(st.dictionaries(st.integers(1, 6), small, max_size=4))
    out = {make_mono({"q0": k}): c for k, c in terms.items()}
    if constant is not None:
        out[()] = constant
    return Series(out, G)


def test_examples():
    assert (1 + q()) * (1 - q()) == 1 - q(2)
    half = Series({make_mono({"q0": Fraction(1, 2)}): 1}, G)
    assert half * half == q()
    geo = Series.geometric(make_mono({"q0": 1}), G)
    assert geo * (1 - q()) == 1


@given(series(constant=0))
def test_exp_log_round_trip(s):
    assert s.exp().log() == s


@given(series(constant=1))
def test_log_exp_round_trip(s):
    assert s.log().exp() == s


def test_exp_needs_zero_constant():
    with raises(NonUnitConstantTerm):
        (1 + q()).exp()
    with raises(NonUnitConstantTerm):
        (2 + q()).log()


@settings(max_examples=40)
@given(series(constant=1), series(constant=2))
def test_substitution_is_a_homomorphism(a, b):
    image = {"q0": q(1) + q(2, Fraction(1, 2))}
    sub = lambda s: s.substitute(image, G)
    assert sub(a * b) == sub(a) * sub(b)
    assert sub(a + b) == sub(a) + sub(b)


def test_cyclotomic_coefficients():
    s = Series({(): xi(3), make_mono({"q0": 1}): xi(3, 2)}, G)
    t = s * s.inverse()
    assert t == 1


@given(st.integers(2, 6))
def test_window_monotonicity(top):
    """Lower precision computations are truncations of higher ones."""
    geo = lambda p: Series.geometric(make_mono({"q0": 1}), [q_grading(1, p)]) ** 3
    lo, hi = geo(top), geo(top + 2)
    assert hi.truncate("q", top) == lo


def test_two_variable_gradings():
    gs = [grading("u", {"u": 1}, 3), grading("x", {"x1": 1}, 1)]
    s = Series({make_mono({"u": 1}): 1, make_mono({"x1": 1}): 1}, gs)
    e = s.exp()
    assert e.coeff(u=3) == Fraction(1, 6)
    assert e.coeff(u=2, x1=1) == Fraction(1, 2)
    assert e.coeff(x1=2) == 0


def _leg_family(n, size, gs):
    fam = LegSeriesFamily(n)
    for tp in partitions_upto(size):
        for k in range(size + 1):
            for mu in multipartitions_of(k, n):
                if tp or k:
                    w = len(tp) + sum(len(c) for c in mu)
                    fam[(tp, (), mu)] = Series({make_mono({"u": w}): Fraction(1, 1 + sum(tp)), (): k}, gs)
    return fam


def test_leg_family_exp_log_round_trip():
    gs = [grading("u", {"u": 1}, 6)]
    conn = _leg_family(2, 2, gs)
    dis = disconnected_from_connected(conn)
    back = connected_from_disconnected(dis)
    for t, v in conn.items():
        assert back[t] == v
