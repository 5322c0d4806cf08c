import itertools
import random
from fractions import Fraction

import pytest

from dtcurves.dt_coords import DTVector
from dtcurves.intersection_map import iota_C
from dtcurves.pl_cones import (ConeIndex, PolyComplex, SignVector, build_complex, complex_from_json_obj,
                               complex_from_poset_csv, complex_to_json_obj, cones_from_json_obj,
                               cones_to_json_obj, enumerate_sign_cells, locate, poset_csv)
from dtcurves.polyhedral import extreme_rays
from dtcurves.verify import _random_real_dt

# regression constants from exhaustive enumeration at genus 2
FINE_CELLS = {"chain": 256}
MAX_CONES = {"chain": 108, "handles": 108}


@pytest.fixture(scope="module")
def chain_cx(chain_cones):
    return build_complex(chain_cones)


def test_cone_counts(chain_cones, handles_cones):
    assert len(chain_cones) == MAX_CONES["chain"]
    assert len(handles_cones) == MAX_CONES["handles"]
    assert all(c.dim == 6 for c in chain_cones + handles_cones)


def test_fine_cell_count(chain2):
    assert len(enumerate_sign_cells(chain2)) == FINE_CELLS["chain"]


def test_top_cells_have_dim_6g_minus_7(chain_cx):
    assert max(chain_cx.cells_by_dim()) == 5
    assert len(chain_cx.top_cells()) == 108


def test_euler_characteristic(chain_cx, handles_cones):
    assert chain_cx.euler_characteristic() == 0
    assert build_complex(handles_cones).euler_characteristic() == 0


def test_locate_apex_and_generic(chain2, chain_cones):
    idx = ConeIndex(chain_cones)
    assert locate(chain2, chain_cones, DTVector.zero(3), idx) == {c.id for c in chain_cones}
    rng = random.Random(5)
    for _ in range(50):
        v = _random_real_dt(rng, 3, den=997)
        if 0 in v.n:
            continue
        assert len(locate(chain2, chain_cones, v, idx)) == 1


def test_locate_image_point(chain2, chain_cones):
    # strict triangle inequalities and n' != n'' on every curve
    v = DTVector((4, 3, 3), (1, 5, -2))
    w = iota_C(chain2, v)
    assert all(a != b for a, b in zip(w.nprime, w.ndprime))
    assert locate(chain2, chain_cones, w) == locate(chain2, chain_cones, v)
    assert len(locate(chain2, chain_cones, v)) == 1


def test_cover_and_linearity(chain2, chain_cones):
    idx = ConeIndex(chain_cones)
    by_id = {c.id: c for c in chain_cones}
    rng = random.Random(0)
    for _ in range(300):
        v = _random_real_dt(rng, 3)
        ids = locate(chain2, chain_cones, v, idx)
        assert ids
        w = iota_C(chain2, v, real=True).as_tuple()
        x = v.n + v.t
        for i in ids:
            c = by_id[i]
            if c.contains(x):
                assert c.apply(x) == w


def test_twist_flip_walls_lie_on_equal_counts(chain2):
    # fine cells differing only by the side of the n' = n'' line on one curve
    # meet inside that locus
    cells = enumerate_sign_cells(chain2)
    k = 3
    by_key = {}
    for c in cells:
        by_key[(c.signs.regions, c.signs.bsigns, c.signs.intervals)] = c
    checked = 0
    for c in cells:
        for i in range(k):
            if c.signs.intervals[i] != "I3-":
                continue
            iv = list(c.signs.intervals)
            iv[i] = "I3+"
            other = by_key.get((c.signs.regions, c.signs.bsigns, tuple(iv)))
            if other is None:
                continue
            for r in extreme_rays(list(c.ineqs) + list(other.ineqs), d=2 * k):
                assert c.apply(r)[k + i] == c.apply(r)[2 * k + i]
            checked += 1
    assert checked > 0


def test_cones_json_roundtrip(chain2, chain_cones):
    back = cones_from_json_obj(cones_to_json_obj(chain2, chain_cones))
    for a, b in zip(chain_cones, back):
        assert (a.ineqs, a.param, a.rays, a.twist_signs) == (b.ineqs, b.param, b.rays, b.twist_signs)


def test_signvector_roundtrip(chain_cones):
    s = chain_cones[0].signs
    assert SignVector.from_json_obj(s.to_json_obj()) == s


def test_poset_export_roundtrip(chain_cx, chain_cones):
    poset = complex_from_poset_csv(poset_csv(chain_cx))
    assert poset == {i: (d, chain_cx.faces.get(i, [])) for i, (_, d) in enumerate(chain_cx.cells)}
    o = complex_to_json_obj(chain_cx, chain_cones)
    back = complex_from_json_obj(o)
    assert back.cells == chain_cx.cells and back.faces == chain_cx.faces
    assert all("/" in x or x.lstrip("-").isdigit() for c in o["cells"] for r in c.get("inequalities", [])
               for x in r)


def test_dual_complex_and_graph(chain_cx):
    top = chain_cx.top_cells()
    verts = sorted({v for s in chain_cx.dual_complex() for v in s})
    assert verts == sorted(top)
    nodes, edges = chain_cx.dual_graph()
    assert len(nodes) == len(top)
    seen, stack = {nodes[0]}, [nodes[0]]
    adj = {v: set() for v in nodes}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    while stack:
        for w in adj[stack.pop()] - seen:
            seen.add(w)
            stack.append(w)
    assert seen == set(nodes)


def test_partial_complex_is_marked(chain_cones):
    cx = build_complex(chain_cones, max_cells=10)
    assert cx.partial


@pytest.mark.parametrize("which", ["chain", "handles"])
def test_zero_curve_sits_in_both_twist_signs(which, chain2, handles2, chain_cones, handles_cones):
    # at n_i = 0 the two signs of t_i are identified, so both sides' cones contain
    # the point and their linear maps agree there
    d, cones = (chain2, chain_cones) if which == "chain" else (handles2, handles_cones)
    by_id = {c.id: c for c in cones}
    rng = random.Random(3)
    seen = 0
    while seen < 60:
        i = rng.randrange(3)
        n = [rng.randint(1, 5) for _ in range(3)]
        n[i] = 0
        if any(sum(n[q] for q in p) % 2 for p in d.pants):
            continue
        t = [rng.randint(-5, 5) for _ in range(3)]
        t[i] = rng.randint(1, 5)
        v = DTVector(tuple(n), tuple(t))
        ids = locate(d, cones, v)
        assert {by_id[j].twist_signs[i] for j in ids} == {-1, 1}
        w = iota_C(d, v).as_tuple()
        for j in ids:
            x = list(v.n + v.t)
            x[3 + i] *= by_id[j].twist_signs[i]
            if by_id[j].contains(x):
                assert by_id[j].apply(x) == w
        seen += 1
