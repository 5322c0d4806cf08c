"""Degree filtration by total intersection with the 9g-9 curves, and the
leading-term product on the associated graded algebra.

Within one cone the graded product is addition of coordinates; across cones
it vanishes.  Two routes are provided: through the embedding (add images and
invert) and through modified twist coordinates (add, then undo the shift).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

import numpy as np

from .dt_coords import (DTVector, apply_cone_convention, from_modified, normalize_standard,
                        to_modified)
from .intersection_map import NotInImage, f_full, h_full, invert, iota_C
from .pl_cones import Cone, ConeIndex, ResourceLimit, locate
from .surface_datum import CoordinateDatum, TwoPants


class InternalInconsistency(AssertionError):
    pass


class _Zero:
    def __repr__(self):
        return "Zero"

    def __bool__(self):
        return False


Zero = _Zero()


@dataclass(frozen=True)
class Term:
    coords: DTVector
    degree: int


def degree(datum: CoordinateDatum, v: DTVector) -> int:
    return iota_C(datum, v).total()


class ProductContext:
    """Cones plus a location index, built once per datum."""

    def __init__(self, datum: CoordinateDatum, cones: Sequence[Cone]):
        self.datum = datum
        self.cones = list(cones)
        self.by_id = {c.id: c for c in self.cones}
        self.index = ConeIndex(self.cones)
        self._memo: Dict[tuple, frozenset] = {}

    def locate(self, v) -> frozenset:
        key = (v.n, v.t)
        if key not in self._memo:
            self._memo[key] = frozenset(locate(self.datum, self.cones, v, self.index))
        return self._memo[key]

    def common(self, *vs) -> set:
        out = None
        for v in vs:
            ids = self.locate(v)
            out = ids if out is None else out & ids
        return out


def _ctx(datum, cones) -> ProductContext:
    return cones if isinstance(cones, ProductContext) else ProductContext(datum, cones)


def graded_product(datum: CoordinateDatum, cones, m: DTVector, mp: DTVector):
    ctx = _ctx(datum, cones)
    if not ctx.common(m, mp):
        return Zero
    w = iota_C(datum, m) + iota_C(datum, mp)
    try:
        v = invert(datum, w)
    except NotInImage as e:
        raise InternalInconsistency(f"common cone but {w} is not an image: {e}") from e
    d = degree(datum, m) + degree(datum, mp)
    if degree(datum, v) != d:
        raise InternalInconsistency("degree is not additive")
    return Term(v, d)


def graded_product_via_modified(datum: CoordinateDatum, cones, m: DTVector, mp: DTVector):
    ctx = _ctx(datum, cones)
    common = ctx.common(m, mp)
    if not common:
        return Zero
    cone = ctx.by_id[min(common)]
    signs = cone.twist_signs
    x = apply_cone_convention(datum, m, signs)
    xp = apply_cone_convention(datum, mp, signs)
    for y in (x, xp):
        if not cone.contains(y.n + y.t):
            raise InternalInconsistency(f"cone {cone.id}: convention representative {y} outside the cone")
    s = to_modified(datum, x) + to_modified(datum, xp)
    v = normalize_standard(from_modified(datum, s))
    return Term(v, degree(datum, v))


def leading_term(datum: CoordinateDatum, m: DTVector, mp: DTVector, local_pants=None) -> DTVector:
    """from_modified(nu'(m) + nu'(m')) without any cone test.

    ``local_pants`` restricts the U-arc offsets to the given pants, which is
    how a computation local to one pair of pants reads.
    """
    s = to_modified(datum, m, local_pants) + to_modified(datum, mp, local_pants)
    return from_modified(datum, s, local_pants)


# --------------------------------------------------------------------------
# census of the filtration

def _valid_n_vectors(datum: CoordinateDatum, budget: int):
    k = datum.n_curves
    for n in itertools.product(range(budget + 1), repeat=k):
        if sum(n) > budget:
            continue
        if all(sum(n[c] for c in p) % 2 == 0 for p in datum.pants):
            yield n


def _curve_degree_counts(datum, n, i, d):
    """Histogram over t_i of n'_i + n''_i, truncated at d."""
    m = datum.local_models()[i]
    a = n[i]
    lo = 0 if a == 0 else -d
    hist = np.zeros(d + 1, dtype=np.int64)
    for t in range(lo, d + 1):
        if isinstance(m, TwoPants):
            nb = tuple(n[s.curve] for s in m.neighbors)
            c = f_full(a, t, *nb) + f_full(a, t - a, *nb)
        else:
            c = h_full(a, t, n[m.a1.curve]) + h_full(a, t - a, n[m.a1.curve])
        if c <= d:
            hist[c] += 1
    return hist


def filtration_census(datum: CoordinateDatum, d_max: int, max_n_vectors: Optional[int] = None) -> List[int]:
    """Number of multicurves of degree <= d for d = 0..d_max.

    Degree bounds every coordinate: sum(n) <= d, and 2|t| <= n' + n forces
    |t| <= d.  Raises ResourceLimit (carrying the partial per-degree counts
    and the number of n-blocks done) when ``max_n_vectors`` is exceeded.
    """
    if d_max < 0:
        raise ValueError("d_max must be >= 0")
    exact = np.zeros(d_max + 1, dtype=object)
    for done, n in enumerate(_valid_n_vectors(datum, d_max)):
        if max_n_vectors is not None and done >= max_n_vectors:
            raise ResourceLimit(f"stopped after {done} n-blocks",
                                partial={"exact_counts": [int(x) for x in exact], "n_blocks": done})
        base = sum(n)
        rest = d_max - base
        acc = np.zeros(rest + 1, dtype=object)
        acc[0] = 1
        for i in range(datum.n_curves):
            h = _curve_degree_counts(datum, n, i, rest)
            acc = np.convolve(acc, h.astype(object))[: rest + 1]
        exact[base:] += acc
    return [int(x) for x in np.cumsum(exact)]
