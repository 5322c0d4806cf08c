from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from dtcurves.dt_coords import (DTVector, NegativeTwistAtZero, ParityViolation, apply_cone_convention,
                                from_modified, is_valid, normalize_standard, pants_arcs, to_modified,
                                twist_offsets, twist_offsets_batch, validate_dt)
from dtcurves.surface_datum import generate_standard_datum

DATA = [generate_standard_datum(g, s) for g in (2, 3) for s in ("chain", "handles")]


@st.composite
def valid_dt(draw, datum, nmax=12, tmax=15):
    k = datum.n_curves
    n = list(draw(st.lists(st.integers(0, nmax), min_size=k, max_size=k)))
    # repair parity pants by pants on a curve that is free to move
    for p in datum.pants:
        if sum(n[c] for c in p) % 2:
            n[p[0]] += 1
    assume(all(sum(n[c] for c in p) % 2 == 0 for p in datum.pants))
    t = draw(st.lists(st.integers(-tmax, tmax), min_size=k, max_size=k))
    return normalize_standard(DTVector(tuple(n), tuple(t)))


def test_worked_example_valid(chain2):
    validate_dt(chain2, DTVector((2, 0, 0), (0, 0, 0)))


def test_parity_violation(chain2):
    with pytest.raises(ParityViolation):
        validate_dt(chain2, DTVector((1, 0, 0), (0, 0, 0)))


def test_negative_twist_at_zero(chain2):
    with pytest.raises(NegativeTwistAtZero):
        validate_dt(chain2, DTVector((0, 0, 0), (-1, 0, 0)))


def test_string_and_fraction_entries():
    v = DTVector(("1/2", Fraction(4, 2)), (0, "3"))
    assert v.n == (Fraction(1, 2), 2) and isinstance(v.n[1], int) and v.t == (0, 3)
    assert not v.integral


def test_pants_arcs_regions():
    # dominant slot: (n - n1 - n4)/2 arcs return to the dominant boundary
    beta, u = pants_arcs((4, 1, 1))
    assert u == [1, 0, 0] and beta[(0, 1)] == 1 and beta[(0, 2)] == 1 and beta[(1, 2)] == 0
    beta, u = pants_arcs((2, 1, 1))
    assert u == [0, 0, 0] and beta == {(0, 1): 1, (0, 2): 1, (1, 2): 0}


def test_modified_worked_example_local(chain2):
    # the worked example reads the offset off the pants carrying the arc only
    m = DTVector((2, 0, 0), (0, 0, 0))
    assert to_modified(chain2, m, pants={1}) == DTVector((2, 0, 0), (0, 1, 0))
    assert from_modified(chain2, DTVector((2, 0, 0), (0, 1, 0)), pants={1}) == m


def test_modified_worked_example_global(chain2):
    # both pants contribute a U-arc offset to curves 1 and 2
    assert twist_offsets(chain2, (2, 0, 0)) == (0, 1, 1)
    assert to_modified(chain2, DTVector((2, 0, 0), (0, 0, 0))) == DTVector((2, 0, 0), (0, 1, 1))


def test_triangle_region_offset_zero(chain2):
    v = DTVector((2, 1, 1), (1, 0, -1))
    assert to_modified(chain2, v) == v
    w = DTVector((2, 1, 1), (0, 1, 0))
    assert from_modified(chain2, w) == w


def test_cone_convention_flip(chain2):
    v = DTVector((0, 2, 2), (3, 1, 1))
    out = apply_cone_convention(chain2, v, (-1, 1, 1))
    assert out.t == (-3, 1, 1)
    assert apply_cone_convention(chain2, out, (-1, 1, 1)) == out


@pytest.mark.parametrize("datum", DATA, ids=lambda d: f"g{d.genus}")
@given(data=st.data())
def test_modified_roundtrip(datum, data):
    v = data.draw(valid_dt(datum))
    assert is_valid(datum, v)
    assert from_modified(datum, to_modified(datum, v)) == v


@pytest.mark.parametrize("datum", DATA[:2], ids=["chain", "handles"])
@given(data=st.data(), signs=st.lists(st.sampled_from([-1, 1]), min_size=3, max_size=3))
def test_convention_idempotent_and_only_at_zero(datum, data, signs):
    v = data.draw(valid_dt(datum))
    out = apply_cone_convention(datum, v, signs)
    assert apply_cone_convention(datum, out, signs) == out
    for n, t, t2 in zip(v.n, v.t, out.t):
        assert t2 == t if n else abs(t2) == abs(t)
    assert normalize_standard(out) == v


@pytest.mark.parametrize("datum", DATA, ids=lambda d: f"g{d.genus}-{d.pants}")
def test_offsets_batch_matches_scalar(datum):
    rng = np.random.default_rng(0)
    N = rng.integers(0, 9, size=(400, datum.n_curves))
    ok = np.array([all(sum(r[c] for c in p) % 2 == 0 for p in datum.pants) for r in N])
    N = N[ok]
    got = twist_offsets_batch(datum, N)
    for row, g in zip(N, got):
        assert tuple(g) == twist_offsets(datum, tuple(int(x) for x in row))
