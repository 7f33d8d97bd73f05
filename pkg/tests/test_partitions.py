from hypothesis import given, settings, strategies as st
from pytest import raises

from orbivertex.characters import z_order_brute
from orbivertex.partitions import (ColoredDiagram, NonEmptyCore, aut_order, conjugate, diagram_to_quotient,
                                   multipartitions_of, n_core, partition, partitions_of, quotient_to_diagram,
                                   subpartitions, z_order)


def partitions_st(max_size=8):
    return st.integers(0, max_size).flatmap(lambda m: st.sampled_from(partitions_of(m)))


def multipartitions_st(n, max_size=6):
    return st.integers(0, max_size).flatmap(lambda m: st.sampled_from(multipartitions_of(m, n)))


def test_partition_counts():
    assert [len(partitions_of(m)) for m in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    # sum over k of p(k) p(m - k)
    assert len(multipartitions_of(3, 2)) == 10


def test_small_quotients():
    core, quot = diagram_to_quotient((2,), 2)
    assert core == ()
    assert sorted(quot) == [(), (1,)]
    assert {quotient_to_diagram(((1,), ())), quotient_to_diagram(((), (1,)))} == {(2,), (1, 1)}


def test_core_of_hook():
    assert n_core((2, 1, 1), 2) == ()
    assert n_core((2, 1), 2) == (2, 1)
    with raises(NonEmptyCore):
        ColoredDiagram(2, (2, 1)).require_empty_core()


@given(st.integers(1, 4).flatmap(lambda n: multipartitions_st(n)))
@settings(max_examples=150, deadline=None)
def test_quotient_round_trip(mu):
    n = len(mu)
    shape = quotient_to_diagram(mu)
    assert sum(shape) == n * sum(sum(c) for c in mu)
    assert diagram_to_quotient(shape, n) == ((), mu)


@given(partitions_st(10), st.integers(1, 4))
@settings(max_examples=150, deadline=None)
def test_diagram_round_trip(shape, n):
    core, quot = diagram_to_quotient(shape, n)
    assert quotient_to_diagram(quot, core) == shape


@given(partitions_st())
def test_conjugate_involution(p):
    assert conjugate(conjugate(p)) == p
    assert sum(conjugate(p)) == sum(p)


@given(partitions_st(6))
def test_subpartitions_are_contained(p):
    subs = list(subpartitions(p))
    assert () in subs and p in subs
    assert len(set(subs)) == len(subs)


def test_color_counts_balanced_for_empty_core():
    for mu in multipartitions_of(2, 3):
        d = ColoredDiagram.from_quotient(mu)
        assert d.color_counts() == [2, 2, 2]


def test_z_order_matches_group_count():
    for m in range(4):
        for mu in multipartitions_of(m, 2):
            assert z_order(mu) == z_order_brute(mu)


def test_aut_order():
    assert aut_order((2, 2, 1)) == 2
    assert aut_order(((1, 1), (1, 1, 1))) == 12
    assert partition([0, 1, 3]) == (3, 1)
