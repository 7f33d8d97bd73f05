import cmath
from fractions import Fraction

from hypothesis import given, strategies as st
from pytest import raises

from orbivertex.cyclotomic import (I, CycloNumber, IncompatibleOrder, conj, cyclo_embed, is_rational,
                                   root_power, simplify, xi)

orders = st.sampled_from([1, 2, 3, 4, 5, 6, 8, 12])


def elements(order):
    coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=6)
    return st.dictionaries(st.integers(0, order - 1), coeffs, max_size=4).map(
        lambda d: CycloNumber.from_powers(order, d))


def close(a, b):
    return abs(complex(a) - complex(b)) < 1e-9


def test_basic_identities():
    assert I * I == -1
    assert xi(6) ** 6 == 1
    assert simplify(xi(2)) == -1
    assert simplify(xi(3) + xi(3, 2)) == -1
    assert xi(4) * xi(6) == xi(12, 5)


@given(orders.flatmap(lambda N: st.tuples(elements(N), elements(N))))
def test_field_ops_match_complex(pair):
    a, b = pair
    assert close(a + b, complex(a) + complex(b))
    assert close(a * b, complex(a) * complex(b))
    if b:
        assert close(a / b, complex(a) / complex(b))
        assert simplify(b * b.inverse()) == 1


@given(orders.flatmap(elements))
def test_conjugation(a):
    assert close(a.conjugate(), complex(a).conjugate())
    norm = simplify(a * conj(a))
    assert simplify(conj(norm) - norm) == 0
    assert is_rational(simplify(a + conj(a))) or a.order not in (1, 2, 3, 4, 6)


def test_root_power_principal_branch():
    assert root_power(xi(4), 2) == -1
    assert root_power(-1, Fraction(1, 2)) == I
    assert root_power(xi(4, 3), Fraction(1, 3)) == xi(4)
    assert root_power(1, Fraction(5, 7)) == 1


@given(st.integers(1, 12).flatmap(lambda M: st.tuples(st.just(M), st.integers(0, M - 1))),
       st.fractions(min_value=-3, max_value=3, max_denominator=5))
def test_root_power_angle(root, r):
    M, a = root
    z = complex(root_power(xi(M, a), r))
    assert abs(z - cmath.exp(2j * cmath.pi * Fraction(a, M) * r)) < 1e-9


def test_embedding():
    assert cyclo_embed(4, [(2, 1), Fraction(1, 2)]) == Fraction(-1, 2)
    with raises(IncompatibleOrder):
        cyclo_embed(4, [(3, 1)], promote=False)
    with raises(IncompatibleOrder):
        xi(4).promote(6)


def test_json_round_trip():
    a = xi(12, 5) + Fraction(1, 3)
    assert CycloNumber.from_json(a.to_json()) == a
