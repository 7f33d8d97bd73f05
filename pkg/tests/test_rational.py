from fractions import Fraction

from orbivertex.cyclotomic import I, conj, simplify
from orbivertex.dt_vertex import VertexLegs, framed_vertex, vertex_P_shape
from orbivertex.partitions import ColoredDiagram
from orbivertex.rational import (ExpSubstitution, RationalForm, rf_framed_vertex, rf_loop_schur, rf_vertex_P,
                                 x_linear_forms)
from orbivertex.schur import loop_schur
from orbivertex.series import q_grading
from orbivertex.weights import EquivWeights

CASES = [((1,), (), (), 1), ((2,), (1,), (1,), 1), ((1,), (1,), (2,), 2), ((), (1,), (1, 1), 2),
         ((1,), (), (2, 1), 3)]


def test_rational_forms_expand_to_the_series():
    for rp, rm, shape, n in CASES:
        top = 5
        exact = vertex_P_shape(rp, rm, shape, n, top)
        rf = rf_vertex_P(rp, rm, shape, n).to_series([q_grading(n, top + 12)]).truncate("q", top)
        assert rf == exact, (rp, rm, shape, n)


def test_loop_schur_form():
    d = ColoredDiagram(2, (2, 2))
    assert rf_loop_schur(d).to_series([q_grading(2, 12)]).truncate("q", 7) == loop_schur(d, 7)


def test_framed_form():
    legs, w = VertexLegs((1,), (), ((1,), ())), EquivWeights(Fraction(1, 2), 2)
    top = 4
    rf = rf_framed_vertex(legs, w).to_series([q_grading(2, top + 10)]).truncate("q", top)
    assert rf == framed_vertex(legs, w, top).series


def test_algebra():
    a = RationalForm.geometric((("q0", 1),))
    b = RationalForm.const(1) - RationalForm.monomial((("q0", 1),))
    assert (a * b).to_series([q_grading(1, 5)]) == 1


def test_geometric_pole():
    """1 / (1 - e^{iu}) = i/u + 1/2 - iu/12 + ..."""
    sub = ExpSubstitution(1, 1, 0)
    s = sub.apply(RationalForm.geometric((("q0", 1),)))
    assert s.coeff(u=-1) == I
    assert s.coeff(()) == Fraction(1, 2)
    assert s.coeff(u=1) == -I * Fraction(1, 12)


def test_linear_forms_rational_combination():
    L = x_linear_forms(3)
    assert set(L) == {1, 2}
    # complex conjugation sends L_j to -L_{n-j}
    for k in (1, 2):
        assert simplify(conj(L[1][k]) + L[2][k]) == 0
