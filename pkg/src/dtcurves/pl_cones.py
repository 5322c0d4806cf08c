"""Linearity regions of the embedding and the cone complex they span.

A region is picked out by a sign vector:

* per pants, the standard-arc region (``"triangle"`` or the dominant slot),
* per two-pants curve, the signs of (n~1 + n~3 - n) and (n~2 + n~4 - n),
* per curve, the piece of t where n' and n'' are both linear.  The five
  pieces cut by the kinks of n' and n'' are further split where n' = n'', so
  every cone carries a well defined twist sign.

Inside one region every quantity in the formulas is a fixed linear form, so
the region is a rational cone in (n, t)-space and the embedding is one matrix.
"""
from __future__ import annotations

import itertools
import json
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .dt_coords import DTVector, pants_arcs
from .intersection_map import (IntersectionVector, NotInImage, coefficients, invert, iota_C)
from .polyhedral import (NotPointed, dot, extreme_rays, face_lattice, is_full_dimensional,
                         nullspace, primitive, rank, solve_square)
from .surface_datum import CoordinateDatum, OnePants, TwoPants


class NotInAnyCone(ValueError):
    pass


class ResourceLimit(RuntimeError):
    def __init__(self, msg, partial=None):
        super().__init__(msg)
        self.partial = partial


INTERVALS = ("I1", "I2", "I3-", "I3+", "I4", "I5")
PANTS_REGIONS = ("triangle", 0, 1, 2)
BSIGNS = ((-1, -1), (1, -1), (-1, 1))  # (sign(n~1+n~3-n), sign(n~2+n~4-n)); (+,+) is impossible


@dataclass(frozen=True)
class SignVector:
    regions: Tuple
    bsigns: Tuple  # None for folded curves
    intervals: Tuple

    @property
    def twist_signs(self) -> Tuple[int, ...]:
        """+1 where n' >= n'' on the whole cone, -1 where n'' >= n'."""
        return tuple(-1 if iv in ("I1", "I2", "I3-") else 1 for iv in self.intervals)

    def to_json_obj(self):
        return {"regions": [r if r == "triangle" else f"dom{r}" for r in self.regions],
                "bsigns": [list(b) if b else None for b in self.bsigns],
                "intervals": list(self.intervals)}

    @classmethod
    def from_json_obj(cls, o):
        return cls(tuple(r if r == "triangle" else int(r[3:]) for r in o["regions"]),
                   tuple(tuple(b) if b else None for b in o["bsigns"]),
                   tuple(o["intervals"]))


@dataclass
class Cone:
    id: int
    signs: SignVector
    ineqs: Tuple[Tuple[int, ...], ...]  # rows a with a . (n, t) >= 0
    param: Tuple[Tuple[Fraction, ...], ...]  # (9g-9) x (6g-6)
    dim: int
    rays: Tuple[Tuple[int, ...], ...] = ()
    pieces: Tuple[SignVector, ...] = ()  # sign cells merged into this region

    @property
    def twist_signs(self) -> Tuple[int, ...]:
        """Sign of t_i on the face n_i = 0 (only the outer pieces I1/I5 reach it
        with t_i != 0)."""
        out = []
        for i in range(len(self.signs.intervals)):
            ivs = {p.intervals[i] for p in (self.pieces or (self.signs,))}
            if "I1" in ivs and "I5" in ivs:
                raise AssertionError(f"cone {self.id}: both twist signs on curve {i}")
            out.append(-1 if "I1" in ivs else 1)
        return tuple(out)

    def contains(self, x) -> bool:
        return all(dot(a, x) >= 0 for a in self.ineqs)

    def apply(self, x) -> Tuple:
        return tuple(dot(r, x) for r in self.param)

    def image_rays(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(primitive(self.apply(r)) for r in self.rays)


# --------------------------------------------------------------------------
# linear forms

def _local_region(region, pos):
    """Pants region seen from the curve in slot ``pos``, in the (a, a_next, a_prev) order."""
    if region == "triangle":
        return "triangle"
    return {pos % 3: 0, (pos + 1) % 3: 1, (pos - 1) % 3: 2}[region]


def _unit(k, j):
    return tuple(Fraction(int(i == j)) for i in range(k))


def curve_forms(datum: CoordinateDatum, regions) -> List[dict]:
    """Per curve: linear forms (over n) of A, B2, C, and the slope s."""
    k = datum.n_curves
    out = []
    for m in datum.local_models():
        if isinstance(m, TwoPants):
            rp = _local_region(regions[m.plus.pants], m.plus.position)
            rm = _local_region(regions[m.minus.pants], m.minus.position)
            cols = []
            for j in range(k):
                e = _unit(k, j)
                nb = tuple(e[s.curve] for s in m.neighbors)
                cols.append(coefficients(e[m.curve], *nb, regions=(rp, rm)))
            A, B2, C = (tuple(c[i] for c in cols) for i in range(3))
            out.append({"s": 2, "A": A, "B2": B2, "C": C})
        else:
            dom_a1 = regions[m.pants] == m.a1.position
            C = [Fraction(0)] * k
            if dom_a1:
                C[m.a1.curve] += Fraction(1, 2)
                C[m.curve] -= 1
            zero = (Fraction(0),) * k
            out.append({"s": 1, "A": zero, "B2": zero, "C": tuple(C)})
    return out


def _lin(*terms):
    """Sum of (coefficient, vector) pairs."""
    out = None
    for c, v in terms:
        w = [c * x for x in v]
        out = w if out is None else [a + b for a, b in zip(out, w)]
    return tuple(out)


def _pants_ineqs(datum, regions, k):
    rows = []
    for p, reg in zip(datum.pants, regions):
        idx = range(3) if reg == "triangle" else [reg]
        for i in idx:
            row = [0] * k
            sgn = -1 if reg == "triangle" else 1
            row[p[i]] += sgn
            for j in range(3):
                if j != i:
                    row[p[j]] -= sgn
            rows.append(tuple(row))
    return rows


def _bplus(form, bs):
    zero = tuple(Fraction(0) for _ in form["A"])
    if bs is None or bs == (-1, -1):
        return zero
    if bs == (1, -1):
        return tuple(-x for x in form["A"])
    return form["B2"]


def _interval_data(form, bs, i, k):
    """Breakpoint forms over n for curve i: p1, p2, mid, and n_i."""
    s = form["s"]
    A = form["A"]
    B = _bplus(form, bs)
    ni = _unit(k, i)
    p1 = tuple((-b - a) / s for a, b in zip(A, B))
    p2 = tuple((b - a) / s for a, b in zip(A, B))
    mid = tuple(x / 2 - a / s for x, a in zip(ni, A))
    return p1, p2, mid, ni, B


def _width(iv, p1, p2, mid, ni):
    if iv in ("I2", "I4"):
        return _lin((1, p2), (-1, p1))
    if iv == "I3-":
        return _lin((1, mid), (-1, p2))
    if iv == "I3+":
        return _lin((1, p1), (1, ni), (-1, mid))
    return None


def _t_bounds(iv, p1, p2, mid, ni):
    """(lower, upper) forms over n (None = unbounded)."""
    p1n = _lin((1, p1), (1, ni))
    p2n = _lin((1, p2), (1, ni))
    return {"I1": (None, p1), "I2": (p1, p2), "I3-": (p2, mid), "I3+": (mid, p1n),
            "I4": (p1n, p2n), "I5": (p2n, None)}[iv]


def _int_row(v):
    return primitive(v) if any(v) else tuple(0 for _ in v)


# --------------------------------------------------------------------------
# enumeration

def n_cells(datum: CoordinateDatum):
    """Feasible (regions, bsigns) pairs with their n-space inequalities and curve forms."""
    k = datum.n_curves
    models = datum.local_models()
    base = [tuple(int(i == j) for j in range(k)) for i in range(k)]
    bs_choices = [BSIGNS if isinstance(m, TwoPants) else (None,) for m in models]
    for regions in itertools.product(PANTS_REGIONS, repeat=datum.n_pants):
        pin = _pants_ineqs(datum, regions, k)
        if not is_full_dimensional(base + pin, k):
            continue
        forms = curve_forms(datum, regions)
        for bsigns in itertools.product(*bs_choices):
            rows = list(base + pin)
            for f, bs in zip(forms, bsigns):
                if bs is None:
                    continue
                rows.append(_int_row([bs[0] * -x for x in f["A"]]))
                rows.append(_int_row([bs[1] * x for x in f["B2"]]))
            rows = [r for r in rows if any(r)]
            if is_full_dimensional(rows, k):
                yield regions, bsigns, rows, forms


def _allowed_intervals(model):
    return INTERVALS if isinstance(model, TwoPants) else ("I1", "I3-", "I3+", "I5")


def enumerate_cones(datum: CoordinateDatum, merge=True) -> List[Cone]:
    """Maximal linearity regions (``merge=False``: the finer sign cells)."""
    cells = enumerate_sign_cells(datum)
    return merge_linear_pieces(cells) if merge else cells


def enumerate_sign_cells(datum: CoordinateDatum, with_rays=True) -> List[Cone]:
    k = datum.n_curves
    models = datum.local_models()
    cones = []
    seen = set()
    for regions, bsigns, nrows, forms in n_cells(datum):
        data = [_interval_data(f, bs, i, k) for i, (f, bs) in enumerate(zip(forms, bsigns))]
        # per curve, feasible interval choices given the n-cell (3-dim test only)
        width_ok = {}

        def feasible(choice):
            extra = []
            for i, iv in enumerate(choice):
                w = _width(iv, *data[i][:4])
                if w is None:
                    continue
                if not any(w):
                    return False
                extra.append(_int_row(w))
            key = tuple(sorted(set(extra)))
            if key not in width_ok:
                width_ok[key] = is_full_dimensional(list(nrows) + list(key), k)
            return width_ok[key]

        for choice in itertools.product(*(_allowed_intervals(m) for m in models)):
            if not feasible(choice):
                continue
            sv = SignVector(regions, bsigns, choice)
            cone = _make_cone(len(cones), sv, nrows, forms, data, k, with_rays)
            # sign choices whose forms vanish identically repeat a region
            key = frozenset(cone.rays) if with_rays else cone.ineqs
            if key not in seen:
                seen.add(key)
                cones.append(cone)
    return cones


def _facets(cone: Cone):
    """{facet ray set: inequality row} for a full-dimensional cone."""
    d = len(cone.rays[0])
    out = {}
    for a in cone.ineqs:
        z = frozenset(r for r in cone.rays if dot(a, r) == 0)
        if z not in out and len(z) >= d - 1 and rank(list(z)) == d - 1:
            out[z] = a
    return out


def merge_linear_pieces(cells: Sequence[Cone]) -> List[Cone]:
    """Glue cells that carry the same linear map across a common facet.

    Each glued component must be convex (every boundary facet supports the
    union); that is asserted, not assumed.
    """
    groups: Dict[tuple, List[Cone]] = {}
    for c in cells:
        groups.setdefault(c.param, []).append(c)
    out: List[Cone] = []
    for param, g in groups.items():
        facets = {c.id: _facets(c) for c in g}
        owner = defaultdict(list)
        for c in g:
            for f in facets[c.id]:
                owner[f].append(c.id)
        adj = defaultdict(set)
        for ids in owner.values():
            for a, b in itertools.combinations(ids, 2):
                adj[a].add(b)
                adj[b].add(a)
        by_id = {c.id: c for c in g}
        seen = set()
        for c in g:
            if c.id in seen:
                continue
            comp, stack = [], [c.id]
            seen.add(c.id)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in sorted(adj[x] - seen):
                    seen.add(y)
                    stack.append(y)
            comp.sort()
            pieces = [by_id[i] for i in comp]
            if len(pieces) == 1:
                p = pieces[0]
                out.append(Cone(len(out), p.signs, p.ineqs, param, p.dim, p.rays, (p.signs,)))
                continue
            all_rays = {r for p in pieces for r in p.rays}
            bound = sorted({a for p in pieces for f, a in facets[p.id].items() if len(owner[f]) == 1})
            for a in bound:
                if any(dot(a, r) < 0 for r in all_rays):
                    raise AssertionError(f"non-convex linearity region over cells {comp}")
            rays = tuple(extreme_rays(bound, d=pieces[0].dim))
            if not set(rays) <= all_rays:
                raise AssertionError(f"merged region over cells {comp} has new rays")
            out.append(Cone(len(out), pieces[0].signs, tuple(bound), param, pieces[0].dim, rays,
                            tuple(p.signs for p in pieces)))
    return out


def _make_cone(cid, sv, nrows, forms, data, k, with_rays):
    zero = (Fraction(0),) * k
    ineqs = [tuple(r) + (0,) * k for r in nrows]
    rows_p, rows_pp = [], []
    for i, (iv, f, dd) in enumerate(zip(sv.intervals, forms, data)):
        p1, p2, mid, ni, B = dd
        ti = _unit(k, i)
        lo, hi = _t_bounds(iv, p1, p2, mid, ni)
        if lo is not None:
            ineqs.append(_int_row(tuple(-x for x in lo) + ti))
        if hi is not None:
            ineqs.append(_int_row(hi + tuple(-x for x in ti)))
        s, A, C = f["s"], f["A"], f["C"]
        up = _lin((1, A + tuple(s * x for x in ti)), (1, C + zero))  # s t + A + C
        down = _lin((-1, A + tuple(s * x for x in ti)), (1, C + zero))  # -(s t + A) + C
        flat = _lin((1, B + zero), (1, C + zero))
        shift = _lin((s, ni + zero))  # s n, in (n, t) coordinates
        up2 = _lin((1, up), (-1, shift))
        down2 = _lin((1, down), (1, shift))
        rows_p.append(down if iv == "I1" else flat if iv == "I2" else up)
        rows_pp.append(up2 if iv == "I5" else flat if iv == "I4" else down2)
    nblock = [tuple(Fraction(int(i == j)) for j in range(2 * k)) for i in range(k)]
    param = tuple(nblock + rows_p + rows_pp)
    ineqs = tuple(sorted(set(r for r in ineqs if any(r))))
    rays = tuple(extreme_rays(ineqs, d=2 * k)) if with_rays else ()
    return Cone(cid, sv, ineqs, param, 2 * k, rays)


# --------------------------------------------------------------------------
# location

class ConeIndex:
    """Stacked integer inequality matrix for fast closed-membership tests."""

    def __init__(self, cones: Sequence[Cone]):
        self.cones = list(cones)
        rows, owner = [], []
        for c in self.cones:
            rows.extend(c.ineqs)
            owner.extend([c.id] * len(c.ineqs))
        self.M = np.array(rows, dtype=np.int64)
        self.owner = np.array(owner)
        self.starts = np.searchsorted(self.owner, [c.id for c in self.cones]) if len(rows) else []
        self.id_pos = {c.id: i for i, c in enumerate(self.cones)}
        self._bound = int(np.abs(self.M).sum(axis=1).max()) if len(rows) else 0

    def containing(self, x) -> List[int]:
        # a positive rescaling to integers keeps every sign
        fr = [Fraction(a) for a in x]
        den = reduce(lambda a, b: a * b // gcd(a, b), (a.denominator for a in fr), 1)
        ints = [int(a * den) for a in fr]
        if self._bound * max(map(abs, ints), default=0) < 2 ** 62:
            vals = self.M @ np.array(ints, dtype=np.int64)
        else:
            vals = self.M.astype(object).dot(np.array(ints, dtype=object))
        ok = (vals >= 0).astype(np.int64)
        good = np.minimum.reduceat(ok, self.starts)
        return [self.cones[i].id for i in np.nonzero(good)[0]]


def _flip_variants(x, k):
    n, t = x[:k], x[k:]
    zs = [i for i in range(k) if n[i] == 0 and t[i] != 0]
    for mask in itertools.product((1, -1), repeat=len(zs)):
        tt = list(t)
        for i, s in zip(zs, mask):
            tt[i] = s * tt[i]
        yield tuple(n) + tuple(tt)


def locate(datum: CoordinateDatum, cones, v, index: Optional[ConeIndex] = None) -> set:
    """Ids of every closed cone containing v (a DT vector, real or integral, or an
    intersection vector).  Twists of curves with n_i = 0 are tried with both signs."""
    if isinstance(v, IntersectionVector):
        try:
            v = invert(datum, v)
        except NotInImage as e:
            raise NotInAnyCone(str(e)) from e
    index = index or ConeIndex(cones)
    k = datum.n_curves
    x = tuple(v.n) + tuple(v.t)
    out = set()
    for y in _flip_variants(x, k):
        out.update(index.containing(y))
    return out


# --------------------------------------------------------------------------
# the complex

@dataclass
class PolyComplex:
    """Cells keyed by their primitive image rays.  ``dim`` is the projective
    dimension (cone dimension - 1)."""
    rays: List[Tuple[int, ...]]
    cells: List[Tuple[FrozenSet[int], int]]  # (ray ids, projective dim)
    faces: Dict[int, List[int]]  # cell id -> codim-1 face ids
    top_labels: Dict[int, List[int]]  # top cell id -> cone ids
    partial: bool = False

    def euler_characteristic(self) -> int:
        return sum((-1) ** d for _, d in self.cells)

    def cells_by_dim(self) -> Dict[int, int]:
        out: Dict[int, int] = defaultdict(int)
        for _, d in self.cells:
            out[d] += 1
        return dict(sorted(out.items()))

    def top_cells(self) -> List[int]:
        top = max(d for _, d in self.cells)
        return [i for i, (_, d) in enumerate(self.cells) if d == top]

    def dual_complex(self):
        """Maximal simplices of the nerve of the top cells (sets sharing a ray)."""
        top = self.top_cells()
        star = defaultdict(set)
        for c in top:
            for r in self.cells[c][0]:
                star[r].add(c)
        sims = {tuple(sorted(s)) for s in star.values()}
        sims = [s for s in sims if not any(set(s) < set(o) for o in sims)]
        return sorted(sims)

    def dual_graph(self):
        """Top cells adjacent through a common codim-1 face."""
        top = set(self.top_cells())
        by_face = defaultdict(list)
        for c in top:
            for f in self.faces.get(c, []):
                by_face[f].append(c)
        edges = set()
        for cs in by_face.values():
            for a, b in itertools.combinations(sorted(cs), 2):
                edges.add((a, b))
        return sorted(top), sorted(edges)


def build_complex(cones: Sequence[Cone], max_cells: Optional[int] = None) -> PolyComplex:
    ray_ids: Dict[Tuple[int, ...], int] = {}
    cell_ids: Dict[FrozenSet[int], int] = {}
    cells: List[Tuple[FrozenSet[int], int]] = []
    faces: Dict[int, set] = defaultdict(set)
    labels: Dict[int, List[int]] = defaultdict(list)
    partial = False

    def rid(r):
        return ray_ids.setdefault(r, len(ray_ids))

    def cid(key, d):
        if key not in cell_ids:
            cell_ids[key] = len(cells)
            cells.append((key, d))
        elif cells[cell_ids[key]][1] != d:
            raise AssertionError(f"cell {sorted(key)} seen with dims {cells[cell_ids[key]][1]} and {d}")
        return cell_ids[key]

    for cone in cones:
        if max_cells is not None and len(cells) > max_cells:
            partial = True
            break
        img = [rid(r) for r in cone.image_rays()]
        lat = face_lattice(cone.rays, cone.ineqs)
        keyed = {f: (frozenset(img[i] for i in f), d - 1) for f, d in lat.items()}
        for f, (key, d) in keyed.items():
            cid(key, d)
        for f, (key, d) in keyed.items():
            me = cell_ids[key]
            for g, (gk, gd) in keyed.items():
                if gd == d - 1 and g < f:
                    faces[me].add(cell_ids[gk])
        top_key = keyed[frozenset(range(len(cone.rays)))][0]
        labels[cell_ids[top_key]].append(cone.id)
    rays = [None] * len(ray_ids)
    for r, i in ray_ids.items():
        rays[i] = r
    return PolyComplex(rays, cells, {c: sorted(f) for c, f in faces.items()}, dict(labels), partial)


# --------------------------------------------------------------------------
# exact intersection of image cells

def image_hrep(cone: Cone):
    """(inequalities, equalities) of the image cone inside R^(9g-9)."""
    L = cone.param
    nrow, ncol = len(L), len(L[0])
    k = ncol // 2
    # left inverse from the n rows plus one twist-sensitive row per curve
    sel = list(range(k))
    for i in range(k):
        sel.append(k + i if L[k + i][k + i] != 0 else 2 * k + i)
    M = [L[r] for r in sel]
    # rows of M^{-1} P: solve M^T X = I column-wise, i.e. X = M^{-T}
    MT = [[M[r][c] for r in range(ncol)] for c in range(ncol)]
    inv_cols = solve_square(MT, [[int(i == j) for i in range(ncol)] for j in range(ncol)])
    # inv_cols[j] is column j of M^{-T} = row j of M^{-1}
    minv = inv_cols
    left = []
    for j in range(ncol):
        row = [Fraction(0)] * nrow
        for r, s in enumerate(sel):
            row[s] += minv[j][r]
        left.append(row)
    ineqs = [primitive([sum(a[j] * left[j][c] for j in range(ncol)) for c in range(nrow)])
             for a in cone.ineqs]
    LT = [[L[r][c] for r in range(nrow)] for c in range(ncol)]
    eqs = nullspace(LT, nrow)
    return ineqs, eqs


def intersect_cells(c1: Cone, c2: Cone, h1=None, h2=None):
    i1, e1 = h1 or image_hrep(c1)
    i2, e2 = h2 or image_hrep(c2)
    return extreme_rays(list(i1) + list(i2), eqs=list(e1) + list(e2), d=len(c1.param))


# --------------------------------------------------------------------------
# serialization

COMPLEX_SCHEMA = "dtcurves.complex/1"


def _frac_str(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def cones_to_json_obj(datum, cones):
    return {"schema": "dtcurves.cones/1", "datum": datum.to_json_obj(),
            "cones": [{"id": c.id, "signs": c.signs.to_json_obj(),
                       "ineqs": [[_frac_str(x) for x in r] for r in c.ineqs],
                       "param": [[_frac_str(x) for x in r] for r in c.param],
                       "rays": [list(r) for r in c.rays],
                       "pieces": [p.to_json_obj() for p in c.pieces]} for c in cones]}


def cones_from_json_obj(o):
    if o.get("schema", "dtcurves.cones/1") != "dtcurves.cones/1":
        raise ValueError(f"unknown schema {o.get('schema')!r}")
    out = []
    for c in o["cones"]:
        ineqs = tuple(tuple(int(Fraction(x)) for x in r) for r in c["ineqs"])
        param = tuple(tuple(Fraction(x) for x in r) for r in c["param"])
        rays = tuple(tuple(r) for r in c["rays"])
        pieces = tuple(SignVector.from_json_obj(p) for p in c.get("pieces", []))
        out.append(Cone(c["id"], SignVector.from_json_obj(c["signs"]), ineqs, param,
                        len(param[0]), rays, pieces))
    return out


def complex_to_json_obj(cx: PolyComplex, cones: Sequence[Cone]):
    """Cells carry the inequality list of their top cone when they are top cells."""
    by_id = {c.id: c for c in cones}
    cells = []
    for i, (key, d) in enumerate(cx.cells):
        entry = {"id": i, "dim": d, "rays": sorted(key), "faces": cx.faces.get(i, [])}
        if i in cx.top_labels:
            cone = by_id[cx.top_labels[i][0]]
            ineq, eq = image_hrep(cone)
            entry["cones"] = cx.top_labels[i]
            entry["inequalities"] = [[_frac_str(x) for x in r] for r in ineq]
            entry["equalities"] = [[_frac_str(x) for x in r] for r in eq]
        cells.append(entry)
    dual = cx.dual_complex()
    return {"schema": COMPLEX_SCHEMA, "partial": cx.partial,
            "rays": [list(r) for r in cx.rays], "cells": cells,
            "euler_characteristic": cx.euler_characteristic(),
            "cells_by_dim": {str(k): v for k, v in cx.cells_by_dim().items()},
            "dual_complex": {"vertices": cx.top_cells(), "maximal_simplices": [list(s) for s in dual]}}


def complex_from_json_obj(o) -> PolyComplex:
    if o.get("schema", COMPLEX_SCHEMA) != COMPLEX_SCHEMA:
        raise ValueError(f"unknown schema {o.get('schema')!r}")
    rays = [tuple(r) for r in o["rays"]]
    cells = [(frozenset(c["rays"]), c["dim"]) for c in o["cells"]]
    faces = {c["id"]: list(c["faces"]) for c in o["cells"] if c["faces"]}
    labels = {c["id"]: list(c["cones"]) for c in o["cells"] if "cones" in c}
    return PolyComplex(rays, cells, faces, labels, o.get("partial", False))


def poset_csv(cx: PolyComplex) -> str:
    lines = ["cell,dim,face"]
    for i, (_, d) in enumerate(cx.cells):
        fs = cx.faces.get(i, [])
        if not fs:
            lines.append(f"{i},{d},")
        for f in fs:
            lines.append(f"{i},{d},{f}")
    return "\n".join(lines) + "\n"


def complex_from_poset_csv(text: str, rays=None) -> Dict[int, Tuple[int, List[int]]]:
    """Poset only: cell id -> (dim, faces)."""
    out: Dict[int, Tuple[int, List[int]]] = {}
    for line in text.strip().splitlines()[1:]:
        c, d, f = line.split(",")
        dim, faces = out.get(int(c), (int(d), []))
        if f:
            faces.append(int(f))
        out[int(c)] = (dim, faces)
    return out
