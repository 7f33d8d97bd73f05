from hypothesis import given, settings, strategies as st
from pytest import raises

from orbivertex.characters import (ModulusMismatch, SizeMismatch, bialternant_char, char_rect, char_sym,
                                   char_wreath, class_sizes_brute, column_orthogonality, dim_sym, dim_wreath,
                                   group_order, row_orthogonality, sum_dim_squares, z_order_brute)
from orbivertex.partitions import multipartitions_of, partitions_of, z_order

shapes = st.integers(1, 6).flatmap(lambda k: st.sampled_from(partitions_of(k)))


def test_s3_table():
    assert char_sym((3,), (1, 1, 1)) == 1
    assert char_sym((2, 1), (1, 1, 1)) == 2
    assert char_sym((2, 1), (3,)) == -1
    assert char_sym((1, 1, 1), (2, 1)) == -1
    assert dim_sym((3, 2)) == 5


@settings(max_examples=60)
@given(shapes.flatmap(lambda s: st.tuples(st.just(s), st.sampled_from(partitions_of(sum(s))))))
def test_murnaghan_nakayama_vs_bialternant(pair):
    shape, ct = pair
    assert char_sym(shape, ct) == bialternant_char(shape, ct)


def test_rectangular_class():
    assert char_rect((2,), 2) == 1
    assert char_rect((1, 1), 2) == -1
    assert char_rect((2, 2), 2) == 2


def test_wreath_tables():
    for n in (1, 2, 3):
        for m in range(4 if n < 3 else 3):
            assert row_orthogonality(n, m)
            assert column_orthogonality(n, m)
            assert sum_dim_squares(n, m) == group_order(n, m)


def test_class_sizes_match_centralizers():
    for n, m in ((1, 3), (2, 2), (2, 3)):
        sizes = class_sizes_brute(n, m)
        for mu in multipartitions_of(m, n):
            assert sizes[mu] * z_order(mu) == group_order(n, m)
            assert z_order_brute(mu) == z_order(mu)


def test_dimensions():
    assert dim_wreath(((1,), (1,))) == 2
    assert dim_wreath(((2,), ())) == 1
    lam = ((1, 1), ())
    assert char_wreath(lam, ((1, 1), ())) == dim_wreath(lam)


def test_errors():
    with raises(SizeMismatch):
        char_wreath(((1,), ()), ((1, 1), ()))
    with raises(ModulusMismatch):
        char_wreath(((1,), ()), ((1,), (), ()))
