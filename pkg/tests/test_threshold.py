"""Level expansion, pair-count coefficient, threshold search and tables."""
from __future__ import annotations

import math

import pytest
from hypothesis import given, settings, strategies as st

from steanesim import pinned
from steanesim.depth import BlockDepth, aux_block_depth, data_block_depth
from steanesim.threshold import (
    ThresholdQuery,
    coefficient_c,
    coefficient_c0,
    coefficient_c0_literal,
    curve,
    evaluate_p_th,
    expand_levels,
    generate_table_1,
    generate_table_2,
    optimize_x,
)

DATA = BlockDepth(pinned.DATA_BLOCK_R)
AUX = BlockDepth(pinned.AUX_BLOCK_R)


def step17_by_hand(depths: tuple[int, ...], gamma: int, x: int, lineage: int) -> int:
    """Independent oracle: sum of all unordered qubit-pair depth products."""
    d = [lineage + gamma * x] + [depths[i] + gamma * x for i in (1, 2, 3, 4, 5, 6)]
    return sum(d[i] * d[j] for i in range(7) for j in range(i + 1, 7))


def test_expand_levels_examples():
    assert expand_levels(DATA, 1).expanded == DATA.R
    lvl2 = expand_levels(DATA, 2).expanded
    assert len(lvl2) == 49
    for m in range(7):
        assert lvl2[7 * m] == DATA.R[m] + 7
        assert lvl2[7 * m + 1: 7 * m + 7] == DATA.R[1:]
    with pytest.raises(ValueError):
        expand_levels(DATA, 0)


def test_coefficient_anchors():
    assert coefficient_c0(DATA, 1, 3, gamma=4) == 11786
    assert coefficient_c0(AUX, 1, 2, gamma=4) == 4722
    # the same anchors recovered from the level-1 table: p_th = x / c
    assert round(3 / pinned.TABLE_1A_DATA[1][1]) == 11786
    assert round(2 / pinned.TABLE_1B_AUX[1][1]) == 4722


def test_coefficient_matches_pairwise_oracle():
    # the pair-sum formula is exactly the sum over qubit-pair products,
    # with the first-position depth walking the expanded lineage
    for block in (DATA, AUX):
        for x in (1, 2, 5):
            want = step17_by_hand(block.R, 4, x, block.R[0])
            assert coefficient_c0(block, 1, x, gamma=4) == want


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5), st.integers(1, 9))
def test_literal_expansion_equals_closed_form(k, x):
    for block in (DATA, AUX):
        profile = expand_levels(block, k)
        assert coefficient_c0_literal(profile, x, block.gamma) == coefficient_c0(block, k, x)


def test_evaluate_p_th_examples():
    assert evaluate_p_th(ThresholdQuery(1, None, "transversal", 3), 11786.0) == pytest.approx(
        3 / 11786, rel=1e-15
    )
    got = evaluate_p_th(ThresholdQuery(1, 1, "t", 2), 4722.0)
    assert got == pytest.approx((2 / 20) / 4722, rel=1e-15)
    assert evaluate_p_th(ThresholdQuery(1, 1, "transversal", 1), 1.0) == 1.0
    with pytest.raises(ZeroDivisionError):
        evaluate_p_th(ThresholdQuery(1, 1, "transversal", 1), 0.0)


def test_exponent_is_linear_at_level_one():
    q = ThresholdQuery(1, None, "transversal", 7)
    assert evaluate_p_th(q, 2.0) == pytest.approx(7 / 2, rel=1e-15)


def test_optimize_x_anchors():
    res = optimize_x(DATA, 1)
    assert (res.x_star, res.max_p_th) == (3, pytest.approx(2.545392838961480e-04, rel=1e-12))
    res = optimize_x(AUX, 2)
    assert (res.x_star, res.max_p_th) == (1, pytest.approx(3.325573661456601e-04, rel=1e-12))
    res = optimize_x(DATA, 6)
    assert (res.x_star, res.max_p_th) == (1, pytest.approx(1.534938383096437e-04, rel=1e-12))


def test_table_1_reproduction_against_pinned_values():
    for block, expect in ((DATA, pinned.TABLE_1A_DATA), (AUX, pinned.TABLE_1B_AUX)):
        for res in generate_table_1(block):
            x_star, p = expect[res.k]
            assert res.x_star == x_star
            assert res.max_p_th == pytest.approx(p, rel=1e-9)


def test_table_2_reproduction_against_pinned_values():
    for gate, expect in (("t", pinned.TABLE_2A_T_GATE), ("toffoli3", pinned.TABLE_2B_TOFFOLI_TARGET)):
        for res in generate_table_2(AUX, gate):
            assert res.max_p_th == pytest.approx(expect[(res.k, res.r)], rel=1e-9)


def test_limit_rows_equal_transversal_values():
    for k in range(1, 7):
        limit = optimize_x(AUX, k, r=None, gate_class="t").max_p_th
        assert limit == pytest.approx(pinned.TABLE_1B_AUX[k][1], rel=1e-12)


def test_p_th_strictly_decreasing_in_x_for_deeper_levels():
    for block in (DATA, AUX):
        for k in (2, 3, 4):
            values = [p for _, _, p in curve(block, k, x_max=40)]
            assert all(a > b for a, b in zip(values, values[1:]))


def test_max_p_th_nondecreasing_in_r_and_bounded_by_limit():
    rs = (1, 10, 100, 1000, 10000)
    for gate in ("t", "toffoli1", "toffoli2", "toffoli3"):
        for k in (1, 2, 3):
            vals = [optimize_x(AUX, k, r=r, gate_class=gate).max_p_th for r in rs]
            assert all(a <= b + 1e-18 for a, b in zip(vals, vals[1:]))
            limit = optimize_x(AUX, k, r=None, gate_class=gate).max_p_th
            assert all(v <= limit + 1e-18 for v in vals)


def test_limit_behavior_in_k():
    diffs = []
    prev = None
    for k in range(1, 11):
        val = optimize_x(DATA, k, x_max=5).max_p_th
        if prev is not None:
            diffs.append(abs(prev - val))
        prev = val
    assert all(a > b for a, b in zip(diffs, diffs[1:]))


def test_optimize_x_edge_cases():
    assert optimize_x(DATA, 1, x_max=1).x_star == 1
    with pytest.raises(ValueError):
        optimize_x(DATA, 1, x_max=0)
    with pytest.raises(ValueError):
        optimize_x(DATA, 1, gate_class="hadamard")
    # with zero gamma the coefficient is constant in x, so p_th grows with x
    block = BlockDepth((1, 1, 1, 1, 1, 1, 1), gamma=0)
    assert optimize_x(block, 1, x_max=10).x_star == 10
    values = [evaluate_p_th(ThresholdQuery(1, None, "transversal", x), coefficient_c(block, 1, x))
              for x in (1, 2)]
    assert values[0] < values[1]


def test_derived_block_depths_feed_the_tables():
    assert data_block_depth().R == DATA.R
    assert aux_block_depth().R == AUX.R


def test_curve_rows_shape():
    rows = curve(DATA, 3, x_max=5)
    assert [(k, x) for k, x, _ in rows] == [(3, x) for x in range(1, 6)]
    assert all(math.isfinite(p) for _, _, p in rows)
