from hypothesis import given, settings, strategies as st

from orbivertex.partitions import ColoredDiagram, partitions_upto, subpartitions
from orbivertex.schur import (LOOP_SCHUR_CONVENTIONS, SpecializationSet, h_at_spec, loop_schur,
                              loop_schur_hook, qfrak, skew_schur_at_spec, skew_schur_jt_finite,
                              skew_schur_tableaux)
from orbivertex.series import make_mono

XS = [make_mono({f"x{k}": 1}) for k in range(3)]


def test_jacobi_trudi_matches_tableaux():
    for rho in partitions_upto(4):
        for omega in subpartitions(rho):
            assert skew_schur_jt_finite(rho, omega, XS) == skew_schur_tableaux(rho, omega, XS), (rho, omega)


def test_schur_examples():
    s21 = skew_schur_tableaux((2, 1), (), XS[:2])
    assert s21 == {make_mono({"x0": 2, "x1": 1}): 1, make_mono({"x0": 1, "x1": 2}): 1}
    assert skew_schur_tableaux((2,), (2,), XS) == {(): 1}
    assert skew_schur_tableaux((1,), (2,), XS) == {}


def test_qfrak():
    assert qfrak(0, 3) == ()
    assert qfrak(2, 3) == make_mono({"q1": 1, "q2": 1})
    assert qfrak(-1, 3) == make_mono({"q0": -1})
    assert qfrak(-2, 2) == make_mono({"q0": -1, "q1": -1})


def test_h1_at_empty_spec_is_geometric():
    # h_1(1, q, q^2, ...) = 1/(1 - q) at n = 1
    h = h_at_spec(1, SpecializationSet(1, (), 6), 5)
    assert all(h.coeff(q0=k) == 1 for k in range(6))


def test_jt_at_spec_matches_finite_alphabet():
    # with an empty shape the specialization is 1, q, q^2, ...; truncate the alphabet
    top = 4
    xs = [make_mono({"q0": k}) for k in range(top + 1)]
    for rho in partitions_upto(3):
        for omega in subpartitions(rho):
            a = skew_schur_at_spec(rho, omega, SpecializationSet(1, ()), top)
            exact = skew_schur_tableaux(rho, omega, xs)
            for m, c in exact.items():
                if sum(e for _, e in m) <= top:
                    assert a.coeff(m) == c


diagrams = st.sampled_from([(n, s) for n in (1, 2, 3) for s in partitions_upto(6)
                            if ColoredDiagram(n, s).has_empty_core()])


@settings(max_examples=30, deadline=None)
@given(diagrams)
def test_loop_schur_tableaux_match_hook_product(d):
    n, shape = d
    D = ColoredDiagram(n, shape)
    top = sum(shape) + 3
    assert loop_schur(D, top) == loop_schur_hook(D, top)


def test_conventions_collapse_at_n1():
    D = ColoredDiagram(1, (2, 1))
    vals = {c: loop_schur(D, 6, c) for c in LOOP_SCHUR_CONVENTIONS}
    assert len({repr(sorted(v.terms.items())) for v in vals.values()}) == 1
