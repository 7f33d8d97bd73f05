import cmath
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from orbivertex.correspondence import (PI_I, chain_expansion, crc_parameter_map, delta_transform, divisor_factor,
                                       dtcrc_check, lemma1_monomial, lemma2_check, ocrc_prefactor)
from orbivertex.rational import RationalForm
from orbivertex.series import make_mono
from orbivertex.dt_vertex import VertexLegs
from orbivertex.partitions import multipartitions_of
from orbivertex.weights import EquivWeights


def test_delta_examples():
    assert delta_transform(((), (1,)), ((), (1,))) == -1
    assert delta_transform(((2,),), ((2,),)) == 1
    assert delta_transform(((1,), ()), ((1, 1), ())) == 0


def test_ocrc_examples():
    assert ocrc_prefactor(((), ()), EquivWeights(1, 2)).coeff == 1
    assert ocrc_prefactor(((1,), ()), EquivWeights(1, 2)).coeff == Fraction(1, 2)
    assert ocrc_prefactor(((1,),), EquivWeights(1, 1)).coeff == -1


def test_divisor_examples():
    w = EquivWeights(1, 3)
    empty = ((), (), ())
    assert divisor_factor((), (), empty, (0, 0), w) == {1: 0, 2: 0}
    assert divisor_factor((3,), (), empty, (0, 0), w) == {1: -1, 2: -2}
    assert divisor_factor((), (), empty, (1, 0), w)[1] == 1


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 4).flatmap(lambda n: st.sampled_from([l for k in range(4) for l in multipartitions_of(k, n)])))
def test_lemma1(lam):
    assert lemma1_monomial(lam) == ()


def test_lemma1_literal_signs_fail():
    assert any(lemma1_monomial(l, literal=True) != () for l in multipartitions_of(1, 2))


def test_lemma2_small():
    for lam in multipartitions_of(1, 2):
        for mu in multipartitions_of(1, 2):
            assert lemma2_check(lam, mu)
    for lam in multipartitions_of(2, 3):
        for mu in multipartitions_of(2, 3):
            assert lemma2_check(lam, mu)


def test_dtcrc_small():
    assert dtcrc_check((), (), ((),), EquivWeights(1, 1)).passed
    assert dtcrc_check((), (), ((), ()), EquivWeights(1, 2)).passed
    assert dtcrc_check((1,), (), ((1,), ()), EquivWeights(1, 2), window=(-3, 3), dv=2).passed


def _d_coeff(n, j, k):
    w = cmath.exp(2j * cmath.pi / n)
    z = cmath.exp(1j * cmath.pi / n)
    return w ** (-j * k) * (z ** k - z ** -k) / n


def test_crc_map():
    geo = [(2, 0), (3, 1), (1, 0)]
    out = crc_parameter_map(geo)
    for i, (n, m) in enumerate(geo, start=1):
        assert out[f"T_B{i}"] == {f"t_B{i}": 1}
        for j in range(1, n):
            D = out[f"T_D{i}_{j}"]
            assert D[PI_I] == Fraction(2, n)
            for k in range(1, n):
                assert abs(complex(D[f"x{i}_{k}"]) - _d_coeff(n, j, k)) < 1e-12
        tc = out[f"T_C{i}"]
        assert tc[f"t_A{i}"] == 1
        assert tc.get(PI_I, 0) == -(m + 2) * sum((n - l) * Fraction(2, n) for l in range(1, n))
    assert out["T_C3"] == {"t_A3": 1}


def test_crc_map_at_origin():
    zero = {"x1_1": 0, "x1_2": 0, "t_A1": 0, "t_B1": 0}
    out = crc_parameter_map([(3, 0)], zero)
    assert out["T_D1_1"] == {PI_I: Fraction(2, 3)}
    assert out["T_B1"] == {}


def test_chain_expansion_directions():
    up = make_mono({"q0": -1, "q1": 1})  # v-degree 2, total degree 0
    got = chain_expansion(RationalForm.geometric(up), 2, 0, 4)
    assert got == {(): 1, up: 1, make_mono({"q0": -2, "q1": 2}): 1}
    down = make_mono({"q0": 1})  # v-degree -1: expand in 1/q0
    got = chain_expansion(RationalForm.geometric(down), 2, 0, 3)
    assert got == {make_mono({"q0": -k}): -1 for k in range(1, 4)}


def test_divergent_case_needs_the_chain_domain():
    w = EquivWeights(1, 2)
    lam = ((), (1, 1))
    assert not dtcrc_check((), (), lam, w).passed
    assert dtcrc_check((), (), lam, w, expansion="chain").passed
