"""Dehn-Thurston coordinate vectors, pants arc counts, and the modified (U-arc
shifted) twist coordinates.

Integer vectors are multicurves; vectors with :class:`fractions.Fraction`
entries stand for measured foliations and skip the parity check.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Dict, Optional, Sequence, Tuple

from .surface_datum import CoordinateDatum, OnePants, TwoPants


class DTError(ValueError):
    pass


class ParityViolation(DTError):
    def __init__(self, pants, total):
        self.pants = pants
        super().__init__(f"pants {pants}: slot counts sum to {total}, which is odd")


class NegativeTwistAtZero(DTError):
    def __init__(self, curve, t):
        self.curve = curve
        super().__init__(f"curve {curve}: n = 0 but t = {t} < 0")


class NonIntegralHalf(DTError):
    pass


def half(x):
    """Exact x/2: integer division for ints (odd input raises), Fraction otherwise."""
    if isinstance(x, int):
        if x % 2:
            raise NonIntegralHalf(f"{x} is odd")
        return x // 2
    return Fraction(x) / 2


def is_integral(values) -> bool:
    return all(isinstance(v, int) for v in values)


@dataclass(frozen=True)
class DTVector:
    n: Tuple
    t: Tuple

    def __post_init__(self):
        object.__setattr__(self, "n", tuple(_num(x) for x in self.n))
        object.__setattr__(self, "t", tuple(_num(x) for x in self.t))
        if len(self.n) != len(self.t):
            raise DTError("n and t must have the same length")
        if any(x < 0 for x in self.n):
            raise DTError(f"negative intersection number in {self.n}")

    @property
    def integral(self) -> bool:
        return is_integral(self.n) and is_integral(self.t)

    def __add__(self, other: "DTVector") -> "DTVector":
        return DTVector(tuple(a + b for a, b in zip(self.n, other.n)),
                        tuple(a + b for a, b in zip(self.t, other.t)))

    def scale(self, k) -> "DTVector":
        return DTVector(tuple(k * a for a in self.n), tuple(k * a for a in self.t))

    def as_tuple(self) -> Tuple:
        return self.n + self.t

    @classmethod
    def zero(cls, k: int) -> "DTVector":
        return cls((0,) * k, (0,) * k)

    @classmethod
    def from_flat(cls, x: Sequence) -> "DTVector":
        k = len(x) // 2
        return cls(tuple(x[:k]), tuple(x[k:]))


# Same shape, different meaning: the twist block holds t' instead of t.
ModifiedDTVector = DTVector
RealDTVector = DTVector


def _num(x):
    if isinstance(x, bool):
        raise TypeError("bool is not a coordinate")
    if isinstance(x, int):
        return x
    if isinstance(x, Rational):
        f = Fraction(x)
        return f.numerator if f.denominator == 1 else f
    if isinstance(x, str):
        return _num(Fraction(x))
    if hasattr(x, "__index__"):
        return int(x)
    raise TypeError(f"unsupported coordinate {x!r}; use int or Fraction")


# --------------------------------------------------------------------------
# standard multiarcs in a pair of pants

REGIONS = ("triangle", 0, 1, 2)


def pants_region(counts) -> Tuple:
    """All regions whose closed inequalities hold; 'triangle' or dominant slot index."""
    x = counts
    out = []
    if all(x[i] <= x[(i + 1) % 3] + x[(i + 2) % 3] for i in range(3)):
        out.append("triangle")
    for i in range(3):
        if x[i] >= x[(i + 1) % 3] + x[(i + 2) % 3]:
            out.append(i)
    return tuple(out)


def pants_arcs(counts, region=None):
    """Standard multiarc in a pants with slot counts ``counts``.

    Returns ``(beta, u)``: ``beta[(i, j)]`` (i < j) is the number of arcs joining
    slots i and j, ``u[i]`` the number of U-arcs with both ends on slot i.
    ``region`` forces a branch (used to read off the linear form of a region);
    by default the region containing ``counts`` is used.
    """
    if region is None:
        region = pants_region(counts)[0]
    x = counts
    beta = {}
    u = [0, 0, 0]
    if region == "triangle":
        for i in range(3):
            j, k = (i + 1) % 3, (i + 2) % 3
            beta[tuple(sorted((j, k)))] = half(x[j] + x[k] - x[i])
    else:
        i = region
        j, k = (i + 1) % 3, (i + 2) % 3
        beta[tuple(sorted((i, j)))] = x[j]
        beta[tuple(sorted((i, k)))] = x[k]
        beta[tuple(sorted((j, k)))] = 0 * x[i]
        u[i] = half(x[i] - x[j] - x[k])
    return beta, u


def slot_counts(datum: CoordinateDatum, n: Sequence, pants: int):
    return tuple(n[c] for c in datum.pants[pants])


def validate_dt(datum: CoordinateDatum, v: DTVector) -> None:
    if len(v.n) != datum.n_curves:
        raise DTError(f"expected {datum.n_curves} coordinates, got {len(v.n)}")
    if v.integral:
        for i in range(datum.n_pants):
            s = sum(slot_counts(datum, v.n, i))
            if s % 2:
                raise ParityViolation(i, s)
    for c, (n, t) in enumerate(zip(v.n, v.t)):
        if n == 0 and t < 0:
            raise NegativeTwistAtZero(c, t)


def is_valid(datum, v) -> bool:
    try:
        validate_dt(datum, v)
    except DTError:
        return False
    return True


# --------------------------------------------------------------------------
# modified twist coordinates

def twist_offsets(datum: CoordinateDatum, n: Sequence, pants: Optional[set] = None):
    """Number of U-arcs turning around each pants curve (depends on n only).

    For a two-pants curve: U-arcs at a1 in F+ plus U-arcs at a3 in F-.  For a
    folded curve: U-arcs at its a1 slot.  ``pants`` restricts the count to
    contributions coming from the given pants.
    """
    out = []
    for m in datum.local_models():
        a = n[m.curve]
        off = 0
        if isinstance(m, TwoPants):
            n1, n2, n3, n4 = (n[s.curve] for s in m.neighbors)
            if pants is None or m.f_plus in pants:
                off += max(half(n1 - a - n4), 0) if (n1 - a - n4) > 0 else 0
            if pants is None or m.f_minus in pants:
                off += max(half(n3 - a - n2), 0) if (n3 - a - n2) > 0 else 0
        else:
            n1 = n[m.a1.curve]
            if pants is None or m.pants in pants:
                off += half(n1 - 2 * a) if n1 - 2 * a > 0 else 0
        out.append(off)
    return tuple(out)


def to_modified(datum: CoordinateDatum, v: DTVector, pants: Optional[set] = None) -> DTVector:
    off = twist_offsets(datum, v.n, pants)
    return DTVector(v.n, tuple(t + o for t, o in zip(v.t, off)))


def from_modified(datum: CoordinateDatum, m: DTVector, pants: Optional[set] = None) -> DTVector:
    off = twist_offsets(datum, m.n, pants)
    return DTVector(m.n, tuple(t - o for t, o in zip(m.t, off)))


# --------------------------------------------------------------------------
# twist sign conventions at n_i = 0

def apply_cone_convention(datum: CoordinateDatum, v: DTVector, signs: Sequence[int]) -> DTVector:
    """Representative with t_i >= 0 (sign +1, n' >= n'') or t_i <= 0 (sign -1, n'' >= n')
    on every curve with n_i = 0.  Other entries are untouched."""
    t = list(v.t)
    for i, (n, s) in enumerate(zip(v.n, signs)):
        if n == 0:
            t[i] = abs(t[i]) if s >= 0 else -abs(t[i])
    return DTVector(v.n, tuple(t))


def normalize_standard(v: DTVector) -> DTVector:
    return DTVector(v.n, tuple(abs(t) if n == 0 else t for n, t in zip(v.n, v.t)))


def twist_offsets_batch(datum: CoordinateDatum, N):
    """Vectorized :func:`twist_offsets` for an (M, k) int array of n-blocks."""
    import numpy as np
    N = np.asarray(N, dtype=np.int64)
    out = np.zeros_like(N)
    for m in datum.local_models():
        a = N[:, m.curve]
        if isinstance(m, TwoPants):
            n1, n2, n3, n4 = (N[:, s.curve] for s in m.neighbors)
            out[:, m.curve] = np.maximum(n1 - a - n4, 0) // 2 + np.maximum(n3 - a - n2, 0) // 2
        else:
            out[:, m.curve] = np.maximum(N[:, m.a1.curve] - 2 * a, 0) // 2
    return out
