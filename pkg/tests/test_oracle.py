import pytest
from hypothesis import assume, given, strategies as st

from dtcurves.intersection_map import f_full, f_reduced, h_full
from dtcurves.oracle import (ChordModel, PreconditionViolated, chord_crossings, chord_crossings_lifts,
                             has_bigon, oracle_case1_general, oracle_case1_reduced,
                             oracle_case1_reduced_slow, oracle_case2, presentation_count, presentations)
from test_intersection_map import reduced_inputs


def test_reduced_pinned():
    assert oracle_case1_reduced(2, -1, 0, 0, 0, 0) == 0
    assert oracle_case1_reduced(0, 3, 0, 0, 0, 0) == 6
    assert oracle_case1_reduced(3, 1, 1, 1, 0, 2) == 4


def test_general_pinned():
    assert oracle_case1_general(2, 0, 2, 0, 0, 2) == 2


def test_case2_pinned():
    assert [oracle_case2(0, t, 0) for t in range(5)] == [0, 1, 2, 3, 4]
    assert oracle_case2(1, 2, 0) == 2
    assert oracle_case2(1, 0, 4) == 1


def test_reduced_precondition():
    with pytest.raises(PreconditionViolated):
        oracle_case1_reduced(2, 0, 2, 0, 0, 2)


def test_presentations_cover_all_splits():
    ps = list(presentations(6, 2, 0, 2, 0))
    assert len(ps) == presentation_count(6, 2, 0, 2, 0) == 9
    assert len(set(ps)) == 9
    assert all(p.x1 + p.x4 == 2 and p.x2 + p.x3 == 2 for p in ps)


def test_parallel_families_do_not_cross():
    assert [chord_crossings(ChordModel(4, 0, (L, L))) for L in range(4)] == [0] * 4


def test_slope_two_per_twist():
    for n in (1, 2, 3, 5):
        c = [chord_crossings(ChordModel(n, T, (1, 2))) for T in range(20, 26)]
        assert [b - a for a, b in zip(c, c[1:])] == [2] * 5
        c = [chord_crossings(ChordModel(n, -T, (1, 2))) for T in range(20, 26)]
        assert [b - a for a, b in zip(c, c[1:])] == [2] * 5


@given(n=st.integers(1, 6), T=st.integers(-9, 9), lo=st.integers(-4, 4), hi=st.integers(-4, 4),
       bl=st.integers(-4, 4), bh=st.integers(-4, 4), w=st.integers(-1, 1))
def test_chord_count_two_ways(n, T, lo, hi, bl, bh, w):
    m = ChordModel(n, T, (lo, hi), (bl, bh), w)
    assert chord_crossings(m) == chord_crossings_lifts(m)


@given(reduced_inputs(4), st.integers(-6, 6))
def test_fast_and_slow_oracle(inp, t):
    n, a, b, c, d = inp
    assert oracle_case1_reduced(n, t, a, b, c, d) == oracle_case1_reduced_slow(n, t, a, b, c, d)


@given(reduced_inputs(4), st.integers(-6, 6))
def test_bigon_free_presentations_are_minimal(inp, t):
    # a presentation without a bigon realizes the minimum
    n, a, b, c, d = inp
    assume(n > 0)
    best = oracle_case1_reduced(n, t, a, b, c, d)
    for p in presentations(n, a, b, c, d):
        if not has_bigon(p, a, b, c, d, p.T(t)):
            lp, _, lm, _ = p.blocks(a, b, c, d)
            assert chord_crossings(ChordModel(n, p.T(t), (lm, lp))) == best


@given(reduced_inputs(5), st.integers(-8, 8))
def test_reduced_formula_matches(inp, t):
    n, a, b, c, d = inp
    assert f_reduced(n, t, a, b, c, d) == oracle_case1_reduced(n, t, a, b, c, d)
    assert f_reduced(n, t - n, a, b, c, d) == oracle_case1_reduced(n, t, a, b, c, d, winding=1)


@given(n=st.integers(0, 6), n1=st.integers(0, 6), n2=st.integers(0, 6), n3=st.integers(0, 6),
       n4=st.integers(0, 6), t=st.integers(-6, 6))
def test_general_formula_matches(n, n1, n2, n3, n4, t):
    n1 += (n + n1 + n4) % 2
    n2 += (n + n2 + n3) % 2
    assert f_full(n, t, n1, n2, n3, n4) == oracle_case1_general(n, t, n1, n2, n3, n4)


@given(n=st.integers(0, 8), n1=st.integers(0, 4).map(lambda x: 2 * x), t=st.integers(-8, 8))
def test_case2_formula_matches(n, n1, t):
    assert h_full(n, t, n1) == oracle_case2(n, t, n1) == oracle_case2(n, -t, n1)
    assert h_full(n, t - n, n1) == oracle_case2(n, t, n1, winding=1)
