"""Brute-force referee for the intersection formulas.

Case I: enumerate semi-standard presentations of the multiarc around a and
count crossings of straight chords with the two arcs of a' inside the annulus.
Case II: a one-holed torus model where a' is a single arc in the annulus plus
a fixed separating arc in the folded pants.

Geometry lives in doubled integer coordinates on a circle of length 2n: the
m-chords start at odd positions 2k+1, arcs of a' sit at even positions, so no
crossing ever lands on a marked point.  Nothing here calls into
``intersection_map``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence

import numpy as np


class PreconditionViolated(ValueError):
    pass


class DegenerateIncidence(RuntimeError):
    pass


@dataclass(frozen=True)
class SemiStandardPresentation:
    x1: int
    x2: int
    x3: int
    x4: int

    def blocks(self, n1, n2, n3, n4):
        """(L+, R+, L-, R-)."""
        return n1 + 2 * self.x1, n4 + 2 * self.x4, n2 + 2 * self.x2, n3 + 2 * self.x3

    def T(self, t):
        return t + self.x1 + self.x3


@dataclass(frozen=True)
class ChordModel:
    n: int
    T: int
    front: tuple  # (bottom, top) in undoubled positions: (L-, L+)
    back: tuple = (0, 0)
    winding: int = 0  # extra turns of both a' arcs (a'' is winding +1)


def _check_reduced(n, n1, n2, n3, n4):
    if min(n, n1, n2, n3, n4) < 0:
        raise PreconditionViolated("negative count")
    if n < n1 + n4 or n < n2 + n3:
        raise PreconditionViolated(f"not reduced: n={n}, n1+n4={n1 + n4}, n2+n3={n2 + n3}")
    if (n + n1 + n4) % 2 or (n + n2 + n3) % 2:
        raise PreconditionViolated("parity")


def presentations(n, n1, n2, n3, n4) -> Iterator[SemiStandardPresentation]:
    s14, s23 = (n - n1 - n4) // 2, (n - n2 - n3) // 2
    for x1 in range(s14 + 1):
        for x3 in range(s23 + 1):
            yield SemiStandardPresentation(x1, s23 - x3, x3, s14 - x1)


def presentation_count(n, n1, n2, n3, n4) -> int:
    return (1 + (n - n1 - n4) // 2) * (1 + (n - n2 - n3) // 2)


# --------------------------------------------------------------------------
# crossing kernel

def _arc_crossings(n, T, p, q):
    """Crossings of the n chords (2k+1 -> 2k+1+2T) with all lifts of the arc p -> q
    (doubled coordinates)."""
    P = 2 * n
    total = 0
    for k in range(n):
        b = 2 * k + 1
        total += abs((b + 2 * T - q) // P - (b - p) // P)
    return total


def chord_crossings(model: ChordModel) -> int:
    n, T = model.n, model.T
    if n == 0:
        return 0
    shift = 2 * n * model.winding
    total = 0
    for lo, hi in (model.front, model.back):
        total += _arc_crossings(n, T, 2 * lo, 2 * hi + shift)
    return total


def chord_crossings_lifts(model: ChordModel) -> int:
    """Same count by intersecting explicit segment lifts with exact rationals."""
    n, T = model.n, model.T
    if n == 0:
        return 0
    P = 2 * n
    shift = P * model.winding
    total = 0
    for lo, hi in (model.front, model.back):
        p, q = 2 * lo, 2 * hi + shift
        reach = (abs(2 * T) + abs(p) + abs(q) + P) // P + 2
        for k in range(n):
            b = 2 * k + 1
            for j in range(-reach, reach + 1):
                pj, qj = p + P * j, q + P * j
                denom = 2 * T - (qj - pj)
                if denom == 0:
                    continue  # parallel and distinct (b is odd, pj even)
                s = Fraction(pj - b, denom)
                if s in (0, 1):
                    raise DegenerateIncidence((k, j))
                if 0 < s < 1:
                    total += 1
    return total


def crossing_table(n, n1, n2, n3, n4, ts: Sequence[int], winding=0):
    """Crossing counts for every presentation (rows) and twist (columns)."""
    pres = list(presentations(n, n1, n2, n3, n4))
    P = 2 * n
    x1 = np.array([p.x1 for p in pres], dtype=np.int64)
    x3 = np.array([p.x3 for p in pres], dtype=np.int64)
    Lp = n1 + 2 * x1
    Lm = n2 + 2 * np.array([p.x2 for p in pres], dtype=np.int64)
    T = np.asarray(ts, dtype=np.int64)[None, :] + (x1 + x3)[:, None]  # (P, nt)
    b = (2 * np.arange(n, dtype=np.int64) + 1)[None, None, :]
    top = b + 2 * T[:, :, None]
    shift = P * winding
    front = np.abs(np.floor_divide(top - (2 * Lp + shift)[:, None, None], P)
                   - np.floor_divide(b - (2 * Lm)[:, None, None], P))
    back = np.abs(np.floor_divide(top - shift, P) - np.floor_divide(b, P))
    return pres, (front + back).sum(axis=2), T


# --------------------------------------------------------------------------
# bigon detection

def has_bigon(p: SemiStandardPresentation, n1, n2, n3, n4, T) -> bool:
    """Bigon between a' and a U-arc block, read off the block sizes and T."""
    Lp, _, Lm, _ = p.blocks(n1, n2, n3, n4)
    d = Lp - Lm
    return ((p.x4 > 0 and d < T < 0) or (p.x1 > 0 and d > T > 0)
            or (p.x3 > 0 and d > T > 0) or (p.x2 > 0 and d < T < 0))


class OracleInconsistency(AssertionError):
    pass


def oracle_case1_reduced_many(n, n1, n2, n3, n4, ts, winding=0, check_bigons=True):
    _check_reduced(n, n1, n2, n3, n4)
    ts = list(ts)
    if n == 0:
        return [2 * abs(t) for t in ts]
    pres, table, T = crossing_table(n, n1, n2, n3, n4, ts, winding)
    best = table.min(axis=0)
    if check_bigons and winding == 0:
        for j in range(len(ts)):
            free = [i for i, p in enumerate(pres) if not has_bigon(p, n1, n2, n3, n4, int(T[i, j]))]
            if not free:
                raise OracleInconsistency(f"no bigon-free presentation at {(n, ts[j], n1, n2, n3, n4)}")
            bad = [i for i in free if table[i, j] != best[j]]
            if bad:
                raise OracleInconsistency(
                    f"bigon-free presentation {pres[bad[0]]} above minimum at {(n, ts[j], n1, n2, n3, n4)}")
    return [int(x) for x in best]


def oracle_case1_reduced(n, t, n1, n2, n3, n4, winding=0):
    """Minimum crossing number of a' (winding 0) or a'' (winding 1) over presentations."""
    return oracle_case1_reduced_many(n, n1, n2, n3, n4, [t], winding)[0]


def oracle_case1_reduced_slow(n, t, n1, n2, n3, n4, winding=0):
    """Pure-Python, lift-enumeration version (double implementation)."""
    _check_reduced(n, n1, n2, n3, n4)
    if n == 0:
        return 2 * abs(t)
    return min(chord_crossings_lifts(ChordModel(n, p.T(t), (n2 + 2 * p.x2, n1 + 2 * p.x1), (0, 0), winding))
               for p in presentations(n, n1, n2, n3, n4))


# --------------------------------------------------------------------------
# general case I: peel off arcs that never enter the annulus

def _pants_standard(x, y, z):
    """Standard multiarc with counts (x, y, z): arcs xy, xz, yz and U-arcs at x, y, z."""
    if (x + y + z) % 2:
        raise PreconditionViolated("parity")
    if x >= y + z:
        return y, z, 0, ((x - y - z) // 2, 0, 0)
    if y >= x + z:
        return x, 0, z, (0, (y - x - z) // 2, 0)
    if z >= x + y:
        return 0, x, y, (0, 0, (z - x - y) // 2)
    return (x + y - z) // 2, (x + z - y) // 2, (y + z - x) // 2, (0, 0, 0)


def oracle_case1_general(n, t, n1, n2, n3, n4, winding=0):
    """Arcs a1-a4 and a2-a3 cross a' once, U-arcs at a_i twice; the rest is
    the reduced problem on the arcs that reach a."""
    if min(n, n1, n2, n3, n4) < 0:
        raise PreconditionViolated("negative count")
    a1, a4, d14, (_, u1, u4) = _pants_standard(n, n1, n4)
    a2, a3, d23, (_, u2, u3) = _pants_standard(n, n2, n3)
    extra = d14 + d23 + 2 * (u1 + u2 + u3 + u4)
    return extra + oracle_case1_reduced(n, t, a1, a2, a3, a4, winding)


# --------------------------------------------------------------------------
# case II: one-holed torus

def _case2_cost(n, t, n1, rp, rm, winding=0):
    """Crossings for the presentation that slides rp (rm) of the a1-a+ (a1-a-)
    arcs across the pants arc of a'."""
    u = max(n1 // 2 - n, 0)
    T = t + rp - rm
    # a' crosses the annulus once: a single arc at position 0
    annulus = _arc_crossings(n, T, 0, 2 * n * winding)
    return annulus + rp + rm + u


def oracle_case2(n, t, n1, winding=0):
    if n < 0 or n1 < 0:
        raise PreconditionViolated("negative count")
    if n1 % 2:
        raise PreconditionViolated(f"n1 = {n1} is odd")
    if n == 0:
        return abs(t) + n1 // 2
    u = max(n1 // 2 - n, 0)
    y = n1 // 2 - u  # a1-arcs ending on each copy of a
    return min(_case2_cost(n, t, n1, rp, rm, winding)
               for rp in range(y + 1) for rm in range(y + 1))
