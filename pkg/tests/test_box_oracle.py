import sys
from pathlib import Path

from hypothesis import given, settings, strategies as st
from pytest import raises

from orbivertex.box_oracle import (NoConsistentOffset, box_series, config_counts, enumerate_configs,
                                   macmahon_series, match_legs, oracle_match, renormalized_counts)
from orbivertex.series import Series, make_mono, q_grading

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "scripts"))
import pin_conventions  # noqa: E402

PLANE_PARTITIONS = [1, 1, 3, 6, 13, 24, 48, 86]


def test_macmahon_two_ways():
    boxes = box_series(1, ((), (), ()), 7)
    assert [boxes.coeff(q0=k) for k in range(8)] == PLANE_PARTITIONS
    assert boxes == macmahon_series(7)


def test_colored_counts_sum_to_total():
    c = config_counts(2, ((), (), ()), 4)
    assert sum(c.values()) == sum(PLANE_PARTITIONS[:5])
    assert c[(1, 0)] == 1 and c[(0, 1)] == 0


@settings(max_examples=10, deadline=None)
@given(st.sampled_from([((1,), (), ()), ((), (1,), ()), ((), (), (2, 1)), ((1,), (1,), (1,))]),
       st.integers(0, 3))
def test_configs_are_order_ideals(legs, k):
    from orbivertex.box_oracle import Legs
    L = Legs(*legs)
    for cfg in enumerate_configs(1, legs, k):
        assert len(cfg.boxes) <= k
        for b in cfg.boxes:
            for i in range(3):
                if b[i]:
                    p = b[:i] + (b[i] - 1,) + b[i + 1:]
                    assert p in L or p in cfg.boxes


def test_renormalized_count_offset_is_constant():
    legs = ((1,), (), (1,))
    cfgs = list(enumerate_configs(2, legs, 2))
    offsets = {tuple(a - b for a, b in zip(renormalized_counts(2, legs, c.boxes, 6), c.color_counts()))
               for c in cfgs}
    assert len(offsets) == 1


def test_one_leg_n1():
    assert match_legs(1, ((1,), (), ()), 6)["matched"]
    assert match_legs(1, ((), (), (2,)), 5)["matched"]


def test_colored_two_legs():
    assert match_legs(2, ((1,), (), (2,)), 4)["matched"]


def test_no_offset():
    g = [q_grading(1, 3)]
    with raises(NoConsistentOffset):
        oracle_match(Series({(): 1}, g), Series({(): 2}, g))


def test_convention_pinning():
    score, total = pin_conventions.loop_schur_table(4)
    assert score == {"power": total, "shift+": score["shift+"], "shift-": score["shift-"]}
    assert score["shift+"] < total and score["shift-"] < total
    score, total = pin_conventions.leg_axes_table(4)
    assert [pm for pm, k in score.items() if k == total] == [((1, 2), (0, 2))]
