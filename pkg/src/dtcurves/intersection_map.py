"""Intersection numbers of a multicurve with the dual curves a', a'' of each
pants curve, the resulting 9g-9 embedding, and its inverse.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .dt_coords import (DTVector, half, is_integral, pants_arcs, pants_region,
                        normalize_standard, _num)
from .surface_datum import CoordinateDatum, TwoPants

STRATEGIES = ("arc-count", "literal")


class PreconditionViolated(ValueError):
    pass


class NegativeReduced(ValueError):
    def __init__(self, rd):
        self.reduction = rd
        super().__init__(f"literal reduction produced negative n~: {rd.n_tilde}")


class NotInImage(ValueError):
    pass


class NonIntegralTwist(NotInImage):
    pass


@dataclass(frozen=True)
class ReductionData:
    delta14: object
    delta23: object
    u: Tuple  # (u1, u2, u3, u4)
    n_tilde: Tuple  # (n~1, n~2, n~3, n~4)

    @property
    def C(self):
        return self.delta14 + self.delta23 + 2 * sum(self.u)


@dataclass(frozen=True)
class IntersectionVector:
    n: Tuple
    nprime: Tuple
    ndprime: Tuple

    def __post_init__(self):
        for name in ("n", "nprime", "ndprime"):
            object.__setattr__(self, name, tuple(_num(x) for x in getattr(self, name)))

    def as_tuple(self) -> Tuple:
        return self.n + self.nprime + self.ndprime

    @classmethod
    def from_flat(cls, x) -> "IntersectionVector":
        k = len(x) // 3
        return cls(tuple(x[:k]), tuple(x[k:2 * k]), tuple(x[2 * k:]))

    def __add__(self, other):
        return IntersectionVector.from_flat([a + b for a, b in zip(self.as_tuple(), other.as_tuple())])

    def total(self):
        return sum(self.as_tuple())


# --------------------------------------------------------------------------
# case I

def _check_parity(n, n1, n2, n3, n4):
    vals = (n, n1, n2, n3, n4)
    if any(x < 0 for x in vals):
        raise PreconditionViolated(f"negative count in {vals}")
    if is_integral(vals):
        if (n + n1 + n4) % 2:
            raise PreconditionViolated(f"n + n1 + n4 = {n + n1 + n4} is odd")
        if (n + n2 + n3) % 2:
            raise PreconditionViolated(f"n + n2 + n3 = {n + n2 + n3} is odd")


def f_reduced(n, t, n1, n2, n3, n4):
    _check_parity(n, n1, n2, n3, n4)
    if n < n1 + n4:
        raise PreconditionViolated(f"n = {n} < n1 + n4 = {n1 + n4}")
    if n < n2 + n3:
        raise PreconditionViolated(f"n = {n} < n2 + n3 = {n2 + n3}")
    return max(abs(2 * t + n - n1 - n3), n1 + n3 - n, n2 + n4 - n)


def reduction(n, n1, n2, n3, n4, strategy="arc-count", regions=None) -> ReductionData:
    """Split off the arcs that avoid the annulus around a.

    ``regions`` optionally forces the pants branches (F+ counts ordered
    (a, a1, a4), F- counts (a, a2, a3)); only meaningful for arc-count.
    """
    if strategy == "arc-count":
        rp, rm = regions or (None, None)
        bp, up = pants_arcs((n, n1, n4), rp)
        bm, um = pants_arcs((n, n2, n3), rm)
        return ReductionData(bp[(1, 2)], bm[(1, 2)], (up[1], um[1], um[2], up[2]),
                             (bp[(0, 1)], bm[(0, 1)], bm[(0, 2)], bp[(0, 2)]))
    if strategy == "literal":
        def pos(x):
            return half(x) if x > 0 else 0 * n
        d14, d23 = pos(n1 + n4 - n), pos(n2 + n3 - n)
        u1, u4 = pos(n1 - n4 - n), pos(n4 - n1 - n)
        u2, u3 = pos(n2 - n3 - n), pos(n3 - n2 - n)
        rd = ReductionData(d14, d23, (u1, u2, u3, u4),
                           (n1 - 2 * u1 - d14, n2 - 2 * u2 - d23, n3 - 2 * u3 - d23, n4 - 2 * u4 - d14))
        if any(x < 0 for x in rd.n_tilde):
            raise NegativeReduced(rd)
        return rd
    raise ValueError(f"unknown strategy {strategy!r}")


def coefficients(n, n1, n2, n3, n4, strategy="arc-count", regions=None):
    """(A, B2, C) with f = max{|2t + A|, -A, B2} + C."""
    rd = reduction(n, n1, n2, n3, n4, strategy, regions)
    m1, m2, m3, m4 = rd.n_tilde
    return n - m1 - m3, m2 + m4 - n, rd.C


def f_full(n, t, n1, n2, n3, n4, strategy="arc-count"):
    _check_parity(n, n1, n2, n3, n4)
    A, B2, C = coefficients(n, n1, n2, n3, n4, strategy)
    return max(abs(2 * t + A), -A, B2) + C


# --------------------------------------------------------------------------
# case II

def _check_case2(n, n1):
    if n < 0 or n1 < 0:
        raise PreconditionViolated(f"negative count in {(n, n1)}")
    if isinstance(n1, int) and n1 % 2:
        raise PreconditionViolated(f"n1 = {n1} is odd")


def case2_offset(n, n1):
    d = half(n1) - n
    return d if d > 0 else 0 * d


def h_full(n, t, n1):
    _check_case2(n, n1)
    return abs(t) + case2_offset(n, n1)


# --------------------------------------------------------------------------
# the embedding

def _neighbor_counts(m, n):
    return tuple(n[s.curve] for s in m.neighbors)


def iota_C(datum: CoordinateDatum, v: DTVector, strategy="arc-count", real=None) -> IntersectionVector:
    """(n | n' | n'') for every pants curve.  Non-integral vectors go through
    exact rational arithmetic without parity checks."""
    if real is None:
        real = not v.integral
    n, ts = v.n, v.t
    if real:
        # DTVector stores integral fractions as ints; keep Fractions so no parity check fires
        n, ts = tuple(map(Fraction, n)), tuple(map(Fraction, ts))
    p, pp = [], []
    for m in datum.local_models():
        a, t = n[m.curve], ts[m.curve]
        if isinstance(m, TwoPants):
            nb = _neighbor_counts(m, n)
            p.append(f_full(a, t, *nb, strategy=strategy))
            pp.append(f_full(a, t - a, *nb, strategy=strategy))
        else:
            n1 = n[m.a1.curve]
            p.append(h_full(a, t, n1))
            pp.append(h_full(a, t - a, n1))
    return IntersectionVector(n, tuple(p), tuple(pp))


def invert_curve(m, n, n1p, n2p, strategy="arc-count"):
    """Twist of one curve from its (n', n'') and the n block."""
    a = n[m.curve]
    if isinstance(m, TwoPants):
        A, _, C = coefficients(a, *_neighbor_counts(m, n), strategy=strategy)
        lo = (n2p + A - C, lambda x: a - x)   # n' <= n''
        hi = (n1p - A - C, lambda x: x)       # n' >= n''
    else:
        C = case2_offset(a, n[m.a1.curve])
        lo = (2 * (n2p - C), lambda x: a - x)
        hi = (2 * (n1p - C), lambda x: x)
    cands = []
    if n1p <= n2p:
        cands.append(lo)
    if n1p >= n2p:
        cands.append(hi)
    ts = []
    for num, fin in cands:
        if isinstance(num, int) and num % 2:
            raise NonIntegralTwist(f"curve {m.curve}: odd numerator {num}")
        ts.append(fin(half(num)))
    if len(ts) == 2 and a > 0 and ts[0] != ts[1]:
        raise NotInImage(f"curve {m.curve}: branch formulas disagree ({ts[0]} vs {ts[1]})")
    # at n = 0 the two branches are t and -t; keep the standard representative
    return ts[-1]


def invert(datum: CoordinateDatum, w: IntersectionVector, strategy="arc-count", real=None) -> DTVector:
    k = datum.n_curves
    if len(w.n) != k or len(w.nprime) != k or len(w.ndprime) != k:
        raise NotInImage(f"expected blocks of length {k}")
    if any(x < 0 for x in w.as_tuple()):
        raise NotInImage("negative entry")
    if real is None:
        real = not is_integral(w.as_tuple())
    n = tuple(Fraction(x) for x in w.n) if real else w.n
    if not real:
        for i, p in enumerate(datum.pants):
            if sum(n[c] for c in p) % 2:
                raise NotInImage(f"pants {i}: odd slot sum")
    try:
        ts = tuple(invert_curve(m, n, w.nprime[m.curve], w.ndprime[m.curve], strategy)
                   for m in datum.local_models())
    except PreconditionViolated as e:
        raise NotInImage(str(e)) from e
    v = normalize_standard(DTVector(n, ts))
    if iota_C(datum, v, strategy, real=real) != w:
        raise NotInImage("re-embedding does not reproduce the input")
    return v


def membership(datum: CoordinateDatum, w: IntersectionVector, strategy="arc-count", real=None) -> bool:
    """Integral w: is it the image of a multicurve.  Real w: does it lie in the
    image cone (rational points only)."""
    try:
        invert(datum, w, strategy, real)
    except (NotInImage, NegativeReduced):
        return False
    return True


def to_json_obj(w: IntersectionVector) -> dict:
    enc = lambda xs: [x if isinstance(x, int) else str(x) for x in xs]
    return {"schema": IV_SCHEMA, "n": enc(w.n), "nprime": enc(w.nprime), "ndprime": enc(w.ndprime)}


IV_SCHEMA = "dtcurves.iota/1"


# --------------------------------------------------------------------------
# vectorized versions for sweeps (arc-count strategy, integer inputs)

def _arcs_batch(x, y, z):
    """Standard arcs for count arrays: (xy, xz, yz, ux, uy, uz)."""
    import numpy as np
    dx, dy, dz = x >= y + z, y >= x + z, z >= x + y
    dy &= ~dx
    dz &= ~(dx | dy)
    tri = ~(dx | dy | dz)
    xy = np.where(tri, (x + y - z) // 2, np.where(dx, y, np.where(dy, x, 0)))
    xz = np.where(tri, (x + z - y) // 2, np.where(dx, z, np.where(dz, x, 0)))
    yz = np.where(tri, (y + z - x) // 2, np.where(dy, z, np.where(dz, y, 0)))
    ux = np.where(dx, (x - y - z) // 2, 0)
    uy = np.where(dy, (y - x - z) // 2, 0)
    uz = np.where(dz, (z - x - y) // 2, 0)
    return xy, xz, yz, ux, uy, uz


def _coeff_batch(datum, N):
    """Per curve (kind, A, B2, C) arrays; kind 2 for two-pants, 1 for folded."""
    import numpy as np
    out = []
    for m in datum.local_models():
        a = N[:, m.curve]
        if isinstance(m, TwoPants):
            n1, n2, n3, n4 = (N[:, s.curve] for s in m.neighbors)
            m1, m4, d14, _, u1, u4 = _arcs_batch(a, n1, n4)
            m2, m3, d23, _, u2, u3 = _arcs_batch(a, n2, n3)
            A = a - m1 - m3
            B2 = m2 + m4 - a
            C = d14 + d23 + 2 * (u1 + u2 + u3 + u4)
            out.append((2, A, B2, C))
        else:
            C = np.maximum(N[:, m.a1.curve] - 2 * a, 0) // 2
            z = np.zeros_like(a)
            out.append((1, z, z, C))
    return out


def iota_batch(datum: CoordinateDatum, N, T):
    """(M, 3k) array of embeddings for (M, k) int arrays N, T (no validation)."""
    import numpy as np
    N = np.asarray(N, dtype=np.int64)
    T = np.asarray(T, dtype=np.int64)
    k = datum.n_curves
    P = np.empty_like(N)
    PP = np.empty_like(N)
    for i, (s, A, B2, C) in enumerate(_coeff_batch(datum, N)):
        t, a = T[:, i], N[:, i]
        if s == 2:
            P[:, i] = np.maximum(np.maximum(np.abs(2 * t + A), -A), B2) + C
            PP[:, i] = np.maximum(np.maximum(np.abs(2 * (t - a) + A), -A), B2) + C
        else:
            P[:, i] = np.abs(t) + C
            PP[:, i] = np.abs(t - a) + C
    return np.concatenate([N, P, PP], axis=1)


def invert_batch(datum: CoordinateDatum, W):
    """Vectorized :func:`invert`: returns (N, T, ok) with ok marking rows whose
    recomputed embedding reproduces W."""
    import numpy as np
    W = np.asarray(W, dtype=np.int64)
    k = datum.n_curves
    N, P, PP = W[:, :k], W[:, k:2 * k], W[:, 2 * k:]
    ok = np.ones(len(W), dtype=bool)
    for p in datum.pants:
        ok &= (N[:, list(p)].sum(axis=1) % 2) == 0
    T = np.zeros_like(N)
    for i, (s, A, B2, C) in enumerate(_coeff_batch(datum, N)):
        a = N[:, i]
        if s == 2:
            lo_num, hi_num = PP[:, i] + A - C, P[:, i] - A - C
        else:
            lo_num, hi_num = 2 * (PP[:, i] - C), 2 * (P[:, i] - C)
        use_hi = P[:, i] >= PP[:, i]
        num = np.where(use_hi, hi_num, lo_num)
        ok &= (num % 2) == 0
        t = np.where(use_hi, num // 2, a - num // 2)
        both = (P[:, i] == PP[:, i]) & (a > 0)
        ok &= ~both | (hi_num // 2 == a - lo_num // 2)
        T[:, i] = np.where(a == 0, np.abs(t), t)
    ok &= (N >= 0).all(axis=1)
    ok &= (iota_batch(datum, N, T) == W).all(axis=1)
    return N, T, ok
