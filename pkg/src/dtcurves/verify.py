"""Verification checks shared by the CLI, the experiment scripts and the
acceptance tests.  Each check returns a :class:`CheckResult` whose
``failures`` hold reproducible witnesses.
"""
from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

import numpy as np

from . import oracle
from .dt_coords import (DTVector, apply_cone_convention, is_valid, normalize_standard,
                        twist_offsets, twist_offsets_batch)
from .intersection_map import (IntersectionVector, NegativeReduced, f_full, f_reduced, h_full,
                               invert, invert_batch, iota_C, iota_batch, membership)
from .pl_cones import (ConeIndex, build_complex, enumerate_cones, face_lattice, image_hrep,
                       intersect_cells, locate)
from .polyhedral import dot, rank, solve_square
from .skein_graded import (ProductContext, Term, Zero, degree, graded_product,
                           graded_product_via_modified)
from .surface_datum import CoordinateDatum

MAX_WITNESSES = 20


@dataclass
class CheckResult:
    name: str
    passed: bool
    count: int
    failures: List[dict] = field(default_factory=list)
    info: Dict = field(default_factory=dict)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f", {len(self.failures)} failure(s) recorded" if self.failures else ""
        return f"[{status}] {self.name}: {self.count} cases{extra}"

    def to_json_obj(self):
        return asdict(self)


def _witness(out: list, item: dict):
    if len(out) < MAX_WITNESSES:
        out.append(item)


def _reduced_inputs(n, N):
    for n1, n4, n2, n3 in itertools.product(range(N + 1), repeat=4):
        if n < n1 + n4 or n < n2 + n3 or (n + n1 + n4) % 2 or (n + n2 + n3) % 2:
            continue
        yield n1, n2, n3, n4


def _reduced_block(args):
    n, N = args
    ts = list(range(-N, N + 1))
    count, fails = 0, []
    for n1, n2, n3, n4 in _reduced_inputs(n, N):
        o1 = oracle.oracle_case1_reduced_many(n, n1, n2, n3, n4, ts)
        o2 = oracle.oracle_case1_reduced_many(n, n1, n2, n3, n4, ts, winding=1)
        for t, a, b in zip(ts, o1, o2):
            count += 1
            fa, fb = f_reduced(n, t, n1, n2, n3, n4), f_reduced(n, t - n, n1, n2, n3, n4)
            if (fa, fb) != (a, b):
                fails.append({"input": [n, t, n1, n2, n3, n4], "formula": [fa, fb], "oracle": [a, b],
                              "reproduce": f"dtcurves oracle point --case 1 --n {n} --t {t} "
                                           f"--ni {n1} {n2} {n3} {n4}"})
    return count, fails


def _pmap(fn, items, parallelism):
    if parallelism and parallelism > 1:
        with ProcessPoolExecutor(max_workers=parallelism) as ex:
            return list(ex.map(fn, items))
    return [fn(x) for x in items]


def check_reduced(N=10, parallelism=1) -> CheckResult:
    """f_reduced against the chord oracle, for n' (twist t) and n'' (winding 1)."""
    count, fails = 0, []
    for c, f in _pmap(_reduced_block, [(n, N) for n in range(N + 1)], parallelism):
        count += c
        for w in f:
            _witness(fails, w)
    return CheckResult(f"reduced formula = oracle (n, n_i, |t| <= {N})", not fails, count, fails)


def _general_block(args):
    n, N = args
    count, fails, lit_neg, lit_diff, lit_w = 0, [], 0, 0, []
    for n1, n2, n3, n4 in itertools.product(range(N + 1), repeat=4):
        if (n + n1 + n4) % 2 or (n + n2 + n3) % 2:
            continue
        for t in range(-N, N + 1):
            count += 1
            o = oracle.oracle_case1_general(n, t, n1, n2, n3, n4)
            f = f_full(n, t, n1, n2, n3, n4)
            if o != f:
                fails.append({"input": [n, t, n1, n2, n3, n4], "formula": f, "oracle": o,
                              "reproduce": f"dtcurves oracle point --case 1 --general --n {n} --t {t} "
                                           f"--ni {n1} {n2} {n3} {n4}"})
            try:
                lit = f_full(n, t, n1, n2, n3, n4, strategy="literal")
                if lit != o:
                    lit_diff += 1
                    if len(lit_w) < 5:
                        lit_w.append({"input": [n, t, n1, n2, n3, n4], "literal": lit, "oracle": o})
            except NegativeReduced as e:
                lit_neg += 1
                if len(lit_w) < 5:
                    lit_w.append({"input": [n, t, n1, n2, n3, n4], "literal": "NegativeReduced",
                                  "n_tilde": [int(x) for x in e.reduction.n_tilde], "oracle": o})
    return count, fails, lit_neg, lit_diff, lit_w


def check_general(N=8, parallelism=1) -> CheckResult:
    count, fails, neg, diff, wit = 0, [], 0, 0, []
    for c, f, ln, ld, lw in _pmap(_general_block, [(n, N) for n in range(N + 1)], parallelism):
        count += c
        neg += ln
        diff += ld
        for w in f:
            _witness(fails, w)
        for w in lw:
            if len(wit) < 10:
                wit.append(w)
    info = {"literal_negative_reduced": neg, "literal_value_mismatch": diff, "literal_witnesses": wit}
    return CheckResult(f"arc-count formula = general oracle (n, n_i, |t| <= {N})", not fails, count, fails, info)


def check_case2(N=8) -> CheckResult:
    count, fails = 0, []
    for n in range(N + 1):
        for n1 in range(0, N + 1, 2):
            for t in range(-N, N + 1):
                count += 1
                h, hm, hs = h_full(n, t, n1), h_full(n, -t, n1), h_full(n, t - n, n1)
                o, o2 = oracle.oracle_case2(n, t, n1), oracle.oracle_case2(n, t, n1, winding=1)
                if not (h == o and hs == o2 and h == hm):
                    _witness(fails, {"input": [n, t, n1], "h": [h, hm, hs], "oracle": [o, o2],
                                     "reproduce": f"dtcurves oracle point --case 2 --n {n} --t {t} --ni {n1}"})
    return CheckResult(f"h = one-holed-torus oracle, h even in t, n'' = h(t-n) (n, n1, |t| <= {N})",
                       not fails, count, fails)


# --------------------------------------------------------------------------
# embedding

def valid_box(datum: CoordinateDatum, nmax: int, tmax: int, standard=True):
    """All valid (N, T) rows with n_i <= nmax, |t_i| <= tmax; standard convention
    keeps t_i >= 0 where n_i = 0."""
    k = datum.n_curves
    ns = np.array([n for n in itertools.product(range(nmax + 1), repeat=k)
                   if all(sum(n[c] for c in p) % 2 == 0 for p in datum.pants)], dtype=np.int64)
    ts = np.array(list(itertools.product(range(-tmax, tmax + 1), repeat=k)), dtype=np.int64)
    N = np.repeat(ns, len(ts), axis=0)
    T = np.tile(ts, (len(ns), 1))
    if standard:
        keep = ~((N == 0) & (T < 0)).any(axis=1)
        N, T = N[keep], T[keep]
    return N, T


def check_injectivity(datum: CoordinateDatum, box=6, scalar_stride=97) -> CheckResult:
    N, T = valid_box(datum, box, box)
    W = iota_batch(datum, N, T)
    uniq, inverse, counts = np.unique(W, axis=0, return_inverse=True, return_counts=True)
    fails = []
    for j in np.nonzero(counts > 1)[0][:MAX_WITNESSES]:
        rows = np.nonzero(inverse.ravel() == j)[0][:2]
        _witness(fails, {"collision": [[N[r].tolist(), T[r].tolist()] for r in rows]})
    N2, T2, ok = invert_batch(datum, W)
    bad = np.nonzero(~ok | (T2 != T).any(axis=1))[0]
    for r in bad[:MAX_WITNESSES]:
        _witness(fails, {"roundtrip": [N[r].tolist(), T[r].tolist()], "got": T2[r].tolist()})
    # the shipped scalar path on a deterministic slice
    for r in range(0, len(N), scalar_stride):
        v = DTVector(tuple(map(int, N[r])), tuple(map(int, T[r])))
        if invert(datum, iota_C(datum, v)) != v:
            _witness(fails, {"scalar_roundtrip": [list(v.n), list(v.t)]})
    return CheckResult(f"injectivity and invert o iota = id (n_i, |t_i| <= {box})", not fails, len(N), fails,
                       {"distinct_images": int(len(uniq)), "scalar_checked": (len(N) + scalar_stride - 1) // scalar_stride})


# --------------------------------------------------------------------------
# cones

def _random_real_dt(rng: random.Random, k, nmax=8, tmax=12, den=6):
    n = [Fraction(rng.randint(0, nmax * den), den) if rng.random() > 0.15 else Fraction(0) for _ in range(k)]
    t = [Fraction(rng.randint(-tmax * den, tmax * den), den) for _ in range(k)]
    t = [abs(x) if m == 0 else x for m, x in zip(n, t)]
    return DTVector(tuple(n), tuple(t))


def boundary_samples(datum: CoordinateDatum, rng: random.Random, per_kind=200):
    """Points on walls: n_i = 0, pants region walls, kinks of n' and n'', and n' = n''."""
    from .intersection_map import coefficients
    from .surface_datum import TwoPants
    k = datum.n_curves
    out = []
    models = datum.local_models()
    for _ in range(per_kind):
        v = _random_real_dt(rng, k)
        n, t = [Fraction(x) for x in v.n], [Fraction(x) for x in v.t]
        i = rng.randrange(k)
        kind = rng.randrange(4)
        if kind == 0:
            n[i] = Fraction(0)
            t[i] = abs(t[i])
        elif kind == 1:
            p = datum.pants[rng.randrange(datum.n_pants)]
            j = rng.randrange(3)
            others = [p[x] for x in range(3) if x != j]
            if p[j] not in others:
                n[p[j]] = n[others[0]] + n[others[1]]
        else:
            m = models[i]
            if isinstance(m, TwoPants):
                nb = tuple(n[s.curve] for s in m.neighbors)
                A, B2, C = coefficients(n[i], *nb)
                A, B = Fraction(A), Fraction(max(-A, B2, 0))
                targets = [(-B - A) / 2, (B - A) / 2, (-B - A) / 2 + n[i], (B - A) / 2 + n[i], n[i] / 2 - A / 2]
                targets = [Fraction(x) for x in targets]
            else:
                targets = [Fraction(0), n[i], Fraction(n[i]) / 2]
            t[i] = rng.choice(targets)
            if n[i] == 0:
                t[i] = abs(t[i])
        out.append(DTVector(tuple(n), tuple(t)))
    return out


def _cone_samples(cone, rng: random.Random, count):
    for _ in range(count):
        coeffs = [rng.randint(0, 5) for _ in cone.rays]
        if not any(coeffs):
            coeffs[rng.randrange(len(coeffs))] = 1
        yield tuple(sum(c * r[j] for c, r in zip(coeffs, cone.rays)) for j in range(len(cone.rays[0])))


def check_cones(datum: CoordinateDatum, cones=None, n_random=10_000, per_cone=1000, seed=0,
                complex_pairs="all") -> List[CheckResult]:
    rng = random.Random(seed)
    cones = cones if cones is not None else enumerate_cones(datum)
    index = ConeIndex(cones)
    by_id = {c.id: c for c in cones}
    k = datum.n_curves
    results = []

    # cover + linearity at located points
    fails, count = [], 0
    samples = [_random_real_dt(rng, k) for _ in range(n_random)] + boundary_samples(datum, rng)
    for v in samples:
        count += 1
        ids = locate(datum, cones, v, index)
        if not ids:
            _witness(fails, {"uncovered": [str(x) for x in v.n + v.t]})
            continue
        w = iota_C(datum, v, real=True).as_tuple()
        x = v.n + v.t
        from .pl_cones import _flip_variants
        for cid in sorted(ids):
            c = by_id[cid]
            if not any(c.contains(y) and c.apply(y) == w for y in _flip_variants(x, k)):
                _witness(fails, {"cone": cid, "point": [str(a) for a in x]})
    results.append(CheckResult("cover: every sampled point lies in a cone with matching linear map",
                               not fails, count, fails, {"random": n_random, "boundary": len(samples) - n_random}))

    # linearity on each cone; samples are doubled so parity holds, which is
    # harmless because iota is positively homogeneous
    fails, count = [], 0
    for c in cones:
        X = 2 * np.array(list(_cone_samples(c, rng, per_cone)), dtype=np.int64)
        count += len(X)
        outside = ~(X @ np.array(c.ineqs, dtype=np.int64).T >= 0).all(axis=1)
        for x in X[outside][:3]:
            _witness(fails, {"cone": c.id, "outside": x.tolist()})
        N, T = X[:, :k], X[:, k:]
        W = iota_batch(datum, N, np.where(N == 0, np.abs(T), T))
        L_num, L_den = _int_scaled(c.param)
        bad = (X @ L_num.T != W * L_den).any(axis=1)
        for x in X[bad][:3]:
            _witness(fails, {"cone": c.id, "point": x.tolist()})
    results.append(CheckResult(f"linearity: iota = L on {per_cone} samples per cone", not fails, count, fails,
                               {"cones": len(cones)}))

    # complex property and Euler characteristic
    cx = build_complex(cones)
    rid = {r: i for i, r in enumerate(cx.rays)}
    face_keys = {}
    for c in cones:
        img = [rid[r] for r in c.image_rays()]
        face_keys[c.id] = {frozenset(img[i] for i in f) for f in face_lattice(c.rays, c.ineqs)}
    H = {c.id: image_hrep(c) for c in cones}
    pairs = list(itertools.combinations([c.id for c in cones], 2))
    if complex_pairs != "all":
        pairs = rng.sample(pairs, min(int(complex_pairs), len(pairs)))
    fails = []
    for a, b in pairs:
        rays = intersect_cells(by_id[a], by_id[b], H[a], H[b])
        key = frozenset(rid.get(r, -1) for r in rays)
        if rays and not (key in face_keys[a] and key in face_keys[b]):
            _witness(fails, {"cells": [a, b], "intersection_rays": [list(r) for r in rays]})
    results.append(CheckResult("complex: pairwise cell intersections are common faces", not fails, len(pairs),
                               fails, {"pairs": "all" if complex_pairs == "all" else len(pairs)}))
    chi = cx.euler_characteristic()
    results.append(CheckResult("Euler characteristic of P is 0", chi == 0, len(cx.cells), [] if chi == 0 else
                               [{"euler": chi}], {"cells_by_dim": {str(a): b for a, b in cx.cells_by_dim().items()},
                                                  "top_cells": len(cx.top_cells()), "partial": cx.partial}))
    return results


# --------------------------------------------------------------------------
# finite index

def check_saturation(datum: CoordinateDatum, cones=None, max_sum=24) -> CheckResult:
    """Every point of the image cone in 4N^(9g-9) with coordinate sum <= max_sum
    is the image of a multicurve."""
    k = datum.n_curves
    cones = cones if cones is not None else enumerate_cones(datum)
    H = [image_hrep(c) for c in cones]
    budget = max_sum // 4
    count, in_cone, fails = 0, 0, []
    for y in _compositions(3 * k, budget):
        w = IntersectionVector.from_flat(tuple(4 * a for a in y))
        count += 1
        real_member = membership(datum, w, real=True)
        geo = any(all(dot(a, w.as_tuple()) >= 0 for a in ineq) and all(dot(e, w.as_tuple()) == 0 for e in eq)
                  for ineq, eq in H)
        if real_member != geo:
            _witness(fails, {"w": list(w.as_tuple()), "real_invert": real_member, "hrep": geo})
        if real_member:
            in_cone += 1
            if not membership(datum, w):
                _witness(fails, {"w": list(w.as_tuple()), "reason": "in the cone but not an image"})
    return CheckResult(f"Lambda cap 4N^{3 * k} (sum <= {max_sum}) lies in the image", not fails, count, fails,
                       {"points_in_lambda": in_cone})


def check_saturation_wide(datum: CoordinateDatum, nmax=12, tmax=12) -> CheckResult:
    """Wider slice reached from the domain side.

    A point w of the image in 4N^(9g-9) is iota(v) for a real v with n in 4N and
    t in (1/2)Z.  With u = 2v everything is integral: iota(u) = 2w lies in 8N,
    and w is an image of a multicurve iff u has even twists.
    """
    k = datum.n_curves
    ts = np.array(list(itertools.product(range(-2 * tmax, 2 * tmax + 1), repeat=k)), dtype=np.int64)
    fails, count, in_lambda = [], 0, 0
    for n in itertools.product(range(0, 2 * nmax + 1, 8), repeat=k):
        N = np.tile(np.array(n, dtype=np.int64), (len(ts), 1))
        T = ts[~((N == 0) & (ts < 0)).any(axis=1)]
        N = N[: len(T)]
        W = iota_batch(datum, N, T)
        hit = (W % 8 == 0).all(axis=1)
        count += len(T)
        in_lambda += int(hit.sum())
        for u in T[hit & (T % 2 != 0).any(axis=1)][:3]:
            _witness(fails, {"n_doubled": list(n), "t_doubled": u.tolist(), "reason": "image point, odd twist"})
    return CheckResult(f"Lambda cap 4N^{3 * k} from the domain (n_i <= {nmax}, |t_i| <= {tmax}, half twists)",
                       not fails, count, fails, {"points_in_lambda": in_lambda})


def _compositions(parts, budget):
    """All y in N^parts with sum(y) <= budget."""
    for total in range(budget + 1):
        for bars in itertools.combinations(range(total + parts - 1), parts - 1):
            prev, y = -1, []
            for b in bars:
                y.append(b - prev - 1)
                prev = b
            y.append(total + parts - 1 - prev - 1)
            yield tuple(y)


# --------------------------------------------------------------------------
# graded product

def _sample_cone_point(cone, rng, box_points=None):
    """A valid integral DT vector in the closed cone (convention representative)."""
    if box_points is not None and len(box_points) and rng.random() < 0.5:
        return tuple(int(a) for a in box_points[rng.randrange(len(box_points))])
    coeffs = [rng.randint(0, 3) for _ in cone.rays]
    if not any(coeffs):
        coeffs[rng.randrange(len(coeffs))] = 1
    return tuple(2 * sum(c * r[j] for c, r in zip(coeffs, cone.rays)) for j in range(len(cone.rays[0])))


def _box_points_in_cones(datum, cones, nmax, tmax):
    N, T = valid_box(datum, nmax, tmax, standard=False)
    X = np.concatenate([N, T], axis=1)
    out = {}
    for c in cones:
        A = np.array(c.ineqs, dtype=np.int64)
        out[c.id] = X[(X @ A.T >= 0).all(axis=1)]
    return out


def _offset_form(datum, cone):
    """Linear form O (k x k, rational) with twist_offsets(n) = O n on the cone."""
    k = datum.n_curves
    ns, cols = [], []
    for r in cone.rays:
        n = tuple(Fraction(x) for x in r[:k])
        trial = ns + [n]
        if rank(trial) > len(ns):
            ns.append(n)
            cols.append(twist_offsets(datum, n))
        if len(ns) == k:
            break
    # solve O * M = Off, with M columns = n vectors
    M = [[ns[j][i] for j in range(k)] for i in range(k)]
    Off = [[cols[j][i] for j in range(k)] for i in range(k)]
    # O = Off * M^{-1}: rows of O solve M^T o = row of Off
    MT = [[M[j][i] for j in range(k)] for i in range(k)]
    return solve_square(MT, [Off[i] for i in range(k)])


def _int_scaled(rows):
    """(integer matrix, common denominator) for a rational matrix."""
    den = int(np.lcm.reduce([Fraction(x).denominator for row in rows for x in row]))
    return np.array([[int(Fraction(x) * den) for x in row] for row in rows], dtype=np.int64), den


def check_product_additivity(datum: CoordinateDatum, cones=None, n_random=10_000, box=4, seed=0,
                             n_box_pairs=20_000) -> List[CheckResult]:
    rng = random.Random(seed)
    cones = cones if cones is not None else enumerate_cones(datum)
    ctx = ProductContext(datum, cones)
    k = datum.n_curves
    results = []
    box_pts = _box_points_in_cones(datum, cones, box, box)

    # literal API calls on random same-cone pairs
    def run_pairs(pairs, label):
        fails, count = [], 0
        for cid, x, y in pairs:
            m = normalize_standard(DTVector(x[:k], x[k:]))
            mp = normalize_standard(DTVector(y[:k], y[k:]))
            count += 1
            g = graded_product(datum, ctx, m, mp)
            h = graded_product_via_modified(datum, ctx, m, mp)
            ok = (isinstance(g, Term) and g == h
                  and iota_C(datum, g.coords) == iota_C(datum, m) + iota_C(datum, mp)
                  and g.degree == degree(datum, m) + degree(datum, mp))
            if not ok:
                _witness(fails, {"cone": cid, "m": [list(m.n), list(m.t)], "m'": [list(mp.n), list(mp.t)],
                                 "product": repr(g), "via_modified": repr(h)})
        return CheckResult(label, not fails, count, fails)

    rand_pairs = []
    for _ in range(n_random):
        c = cones[rng.randrange(len(cones))]
        rand_pairs.append((c.id, _sample_cone_point(c, rng, box_pts[c.id]), _sample_cone_point(c, rng, box_pts[c.id])))
    results.append(run_pairs(rand_pairs, f"C.1 additivity, both paths agree ({n_random} random same-cone pairs)"))

    box_pairs = []
    ids = [c.id for c in cones if len(box_pts[c.id])]
    for _ in range(n_box_pairs):
        cid = rng.choice(ids)
        P = box_pts[cid]
        box_pairs.append((cid, tuple(map(int, P[rng.randrange(len(P))])), tuple(map(int, P[rng.randrange(len(P))]))))
    results.append(run_pairs(box_pairs, f"C.1 additivity on {n_box_pairs} sampled pairs from the box |.| <= {box}"))

    # exhaustive box through the pair sums
    fails, count, npairs = [], 0, 0
    sums = _box_points_in_cones(datum, cones, 2 * box, 2 * box)
    for c in cones:
        X = box_pts[c.id]
        npairs += len(X) * (len(X) + 1) // 2
        Z = sums[c.id]
        if not len(Z):
            continue
        count += len(Z) + len(X)
        L_num, L_den = _int_scaled(c.param)
        O_num, O_den = _int_scaled(_offset_form(datum, c))
        for S, label in ((X, "point"), (Z, "sum")):
            LZ, rem = np.divmod(S @ L_num.T, L_den)
            if rem.any():
                _witness(fails, {"cone": c.id, "kind": label, "reason": "L z not integral"})
                continue
            Nz, Tz = S[:, :k], S[:, k:]
            Tn = np.where(Nz == 0, np.abs(Tz), Tz)
            W = iota_batch(datum, Nz, Tn)
            if not (W == LZ).all():
                _witness(fails, {"cone": c.id, "kind": label, "reason": "iota != L"})
                continue
            if label == "sum":
                _, T2, ok = invert_batch(datum, W)
                if not (ok.all() and (T2 == Tn).all()):
                    _witness(fails, {"cone": c.id, "reason": "invert(L z) != z"})
            got = twist_offsets_batch(datum, Nz)
            if not (Nz @ O_num.T == got * O_den).all():
                _witness(fails, {"cone": c.id, "kind": label, "reason": "offsets not linear on the cone"})
    results.append(CheckResult(f"C.1 exhaustive box |.| <= {box}: all same-cone pairs via their sums",
                               not fails, count, fails, {"pairs_covered": int(npairs)}))
    return results


def check_vanishing(datum: CoordinateDatum, cones=None, n_pairs=1000, seed=0) -> CheckResult:
    """Pairs separated by a twist far past every kink on opposite sides."""
    rng = random.Random(seed)
    cones = cones if cones is not None else enumerate_cones(datum)
    ctx = ProductContext(datum, cones)
    k = datum.n_curves

    def rand_n():
        while True:
            n = tuple(rng.randint(1, 6) for _ in range(k))
            if all(sum(n[c] for c in p) % 2 == 0 for p in datum.pants):
                return n

    fails, count, zero = [], 0, 0
    while count < n_pairs:
        i = rng.randrange(k)
        n, n2 = rand_n(), rand_n()
        t = [rng.randint(-6, 6) for _ in range(k)]
        t2 = [rng.randint(-6, 6) for _ in range(k)]
        K = rng.randint(1, 6)
        t[i] = 2 * n[i] + K + max(n)       # past both kinks of n' and n''
        t2[i] = -(n2[i] + K + max(n2))
        m, mp = DTVector(n, tuple(t)), DTVector(n2, tuple(t2))
        if ctx.common(m, mp):
            continue  # construction failed to separate; not counted
        count += 1
        g = graded_product(datum, ctx, m, mp)
        zero += g is Zero
        if membership(datum, iota_C(datum, m) + iota_C(datum, mp)) or g is not Zero:
            _witness(fails, {"m": [list(m.n), list(m.t)], "m'": [list(mp.n), list(mp.t)]})
    return CheckResult(f"C.2 vanishing on {n_pairs} constructed different-cone pairs", not fails, count, fails)


def check_monoid(datum: CoordinateDatum, cones=None, n_triples=1000, seed=0) -> CheckResult:
    rng = random.Random(seed)
    cones = cones if cones is not None else enumerate_cones(datum)
    ctx = ProductContext(datum, cones)
    k = datum.n_curves
    box_pts = _box_points_in_cones(datum, cones, 3, 3)
    empty = DTVector.zero(k)
    fails = []
    for _ in range(n_triples):
        c = cones[rng.randrange(len(cones))]
        a, b, d = (normalize_standard(DTVector(x[:k], x[k:]))
                   for x in (_sample_cone_point(c, rng, box_pts[c.id]) for _ in range(3)))
        ab, ba = graded_product(datum, ctx, a, b), graded_product(datum, ctx, b, a)
        bd = graded_product(datum, ctx, b, d)
        left = graded_product(datum, ctx, ab.coords, d) if isinstance(ab, Term) else Zero
        right = graded_product(datum, ctx, a, bd.coords) if isinstance(bd, Term) else Zero
        unit = graded_product(datum, ctx, a, empty)
        ok = (isinstance(ab, Term) and ab == ba and isinstance(left, Term) and left == right
              and isinstance(unit, Term) and unit.coords == a)
        if not ok:
            _witness(fails, {"cone": c.id, "triple": [[list(v.n), list(v.t)] for v in (a, b, d)]})
    return CheckResult(f"monoid laws on {n_triples} same-cone triples", not fails, n_triples, fails)
