import itertools

import pytest
from hypothesis import given, strategies as st

from dtcurves.polyhedral import (NotPointed, dot, extreme_rays, face_lattice, is_full_dimensional, nullspace,
                                 primitive, rank)


def test_primitive():
    assert primitive(["1/2", 1, "3/4"]) == (2, 4, 3)
    assert primitive([0, -6, 4]) == (0, -3, 2)


def test_orthant():
    rays = extreme_rays([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert rays == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]


def test_square_cone():
    # z >= |x|, z >= |y|: four rays, faces 4 rays + 4 facets + apex-free whole
    ineqs = [[1, 0, 1], [-1, 0, 1], [0, 1, 1], [0, -1, 1]]
    rays = extreme_rays(ineqs)
    assert sorted(rays) == sorted([(1, 1, 1), (1, -1, 1), (-1, 1, 1), (-1, -1, 1)])
    lat = face_lattice(rays, ineqs)
    assert sorted(lat.values()) == [1] * 4 + [2] * 4 + [3]


def test_line_is_not_pointed():
    with pytest.raises(NotPointed):
        extreme_rays([[1, 0, 0], [0, 1, 0]])


def test_equalities():
    rays = extreme_rays([[1, 0, 0], [0, 1, 0], [0, 0, 1]], eqs=[[1, 1, -1]])
    assert sorted(rays) == [(0, 1, 1), (1, 0, 1)]


def test_full_dimensional():
    assert is_full_dimensional([[1, 0], [0, 1]], 2)
    assert not is_full_dimensional([[1, 0], [-1, 0], [0, 1]], 2)


@given(st.integers(2, 5))
def test_simplicial_face_count(d):
    ineqs = [[int(i == j) for j in range(d)] for i in range(d)]
    lat = face_lattice(extreme_rays(ineqs), ineqs)
    assert len(lat) == 2 ** d - 1


@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=4, max_size=8))
def test_rays_satisfy_and_are_extreme(rows):
    ineqs = [r for r in rows if any(r)] + [[1, 1, 1]]
    if rank(ineqs) < 3:
        return
    rays = extreme_rays(ineqs)
    for r in rays:
        assert all(dot(a, r) >= 0 for a in ineqs)
        tight = [a for a in ineqs if dot(a, r) == 0]
        assert rank(tight) == 2


def test_nullspace():
    ns = nullspace([[1, 2, 3]], 3)
    assert len(ns) == 2 and all(dot([1, 2, 3], v) == 0 for v in ns)
