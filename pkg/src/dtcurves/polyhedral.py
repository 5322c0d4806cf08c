"""Exact rational polyhedral cones: double description, ranks, face lattices.

Everything is integer or Fraction arithmetic.  Cones are given in H-form as
lists of rows ``a`` meaning ``a . x >= 0`` plus optional equality rows.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Dict, FrozenSet, List, Sequence, Tuple


class NotPointed(ValueError):
    pass


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def primitive(v) -> Tuple[int, ...]:
    """Scale a rational vector to the primitive integer vector on its ray."""
    fr = [Fraction(x) for x in v]
    den = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in fr), 1)
    ints = [int(x * den) for x in fr]
    g = reduce(gcd, (abs(x) for x in ints), 0)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def row_echelon(rows: Sequence[Sequence], ncols=None):
    """Reduced row echelon form over Q.  Returns (rows, pivot columns)."""
    m = [[Fraction(x) for x in r] for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows) -> int:
    rows = list(rows)
    if not rows:
        return 0
    return len(_int_rank_rows(rows))


def _int_rank_rows(rows):
    # fraction-free elimination on primitive integer rows; faster than Fractions
    work = [list(primitive(r)) for r in rows]
    work = [r for r in work if any(r)]
    basis = []
    d = len(work[0]) if work else 0
    col = 0
    while work and col < d:
        piv = next((r for r in work if r[col] != 0), None)
        if piv is None:
            col += 1
            continue
        work.remove(piv)
        basis.append(piv)
        nxt = []
        for r in work:
            if r[col]:
                r = [piv[col] * x - r[col] * y for x, y in zip(r, piv)]
            if any(r):
                g = reduce(gcd, (abs(x) for x in r))
                nxt.append([x // g for x in r])
        work = nxt
        col += 1
    return basis


def nullspace(rows, d) -> List[Tuple[int, ...]]:
    """Integer basis of {x : rows . x = 0}."""
    if not rows:
        return [tuple(int(i == j) for j in range(d)) for i in range(d)]
    m, piv = row_echelon(rows, d)
    free = [c for c in range(d) if c not in piv]
    out = []
    for f in free:
        v = [Fraction(0)] * d
        v[f] = Fraction(1)
        for r, p in zip(m, piv):
            v[p] = -r[f]
        out.append(primitive(v))
    return out


def solve_square(rows, rhs_cols):
    """Solve M X = B for square invertible M; returns the columns of X."""
    d = len(rows)
    aug = [list(r) + [b[i] for b in rhs_cols] for i, r in enumerate(rows)]
    m, piv = row_echelon(aug, d)
    if piv != list(range(d)):
        raise ValueError("singular system")
    return [[m[i][d + j] for i in range(d)] for j in range(len(rhs_cols))]


def extreme_rays(ineqs: Sequence[Sequence[int]], eqs: Sequence[Sequence[int]] = (), d: int = None):
    """Extreme rays (primitive integer vectors) of {x : A x >= 0, E x = 0}.

    Double description with the combinatorial adjacency test.  Raises
    :class:`NotPointed` if the cone contains a line.
    """
    ineqs = [primitive(a) for a in ineqs]
    if d is None:
        d = len(ineqs[0]) if ineqs else len(eqs[0])
    basis = nullspace([primitive(e) for e in eqs], d) if eqs else None
    if basis is not None:
        # work in coordinates y with x = sum y_j basis_j
        k = len(basis)
        if k == 0:
            return []
        red = [primitive([dot(a, b) for b in basis]) for a in ineqs]
        rays_y = _dd(red, k)
        return sorted({primitive([sum(y[j] * basis[j][i] for j in range(k)) for i in range(d)])
                       for y in rays_y})
    return sorted(set(_dd(ineqs, d)))


def _dd(A, d):
    A = [a for a in A if any(a)]
    if rank(A) < d:
        raise NotPointed("constraint matrix has a nontrivial kernel")
    # initial simplicial cone from d independent rows
    chosen, basis = [], []
    for i, a in enumerate(A):
        if len(_int_rank_rows(basis + [a])) > len(basis):
            basis.append(a)
            chosen.append(i)
            if len(basis) == d:
                break
    cols = solve_square(basis, [[int(i == j) for i in range(d)] for j in range(d)])
    rays = [primitive(c) for c in cols]
    # zero sets are stored as bitmasks over processed constraint indices
    zs = []
    for r in rays:
        z = 0
        for i in chosen:
            if dot(A[i], r) == 0:
                z |= 1 << i
        zs.append(z)
    processed = set(chosen)
    for i, a in enumerate(A):
        if i in processed:
            continue
        vals = [dot(a, r) for r in rays]
        pos = [j for j, v in enumerate(vals) if v > 0]
        neg = [j for j, v in enumerate(vals) if v < 0]
        zer = [j for j, v in enumerate(vals) if v == 0]
        new_rays, new_zs = [], []
        for p in pos:
            for q in neg:
                common = zs[p] & zs[q]
                if bin(common).count("1") < d - 2:
                    continue
                if any((zs[r] & common) == common for r in range(len(rays)) if r != p and r != q):
                    continue
                v = [vals[p] * y - vals[q] * x for x, y in zip(rays[p], rays[q])]
                new_rays.append(primitive(v))
                new_zs.append(common | (1 << i))
        keep = pos + zer
        rays = [rays[j] for j in keep] + new_rays
        zs = [zs[j] | ((1 << i) if j in zer else 0) for j in keep] + new_zs
        processed.add(i)
    return rays


def is_full_dimensional(ineqs, d) -> bool:
    """True iff {A x >= 0} has nonempty interior (pointed cones only)."""
    ineqs = [a for a in ineqs if any(a)]
    lin = nullspace(ineqs, d) if ineqs else nullspace([], d)
    target = d - len(lin)
    if target == 0:
        return True
    # split off the lineality space and test the pointed part
    rays = extreme_rays(ineqs, eqs=[list(v) for v in lin], d=d) if lin else extreme_rays(ineqs, d=d)
    return bool(rays) and rank(rays) == target


def face_lattice(rays: Sequence[Tuple[int, ...]], ineqs: Sequence[Sequence[int]]):
    """All nonempty faces of a pointed cone as frozensets of ray indices.

    Faces are intersections of facet ray sets.  Returns a dict
    ``face -> dim`` (dimension as a cone), including the whole cone.
    """
    d_full = rank(rays)
    allset = frozenset(range(len(rays)))
    cand = set()
    for a in ineqs:
        z = frozenset(i for i, r in enumerate(rays) if dot(a, r) == 0)
        if z and z != allset:
            cand.add(z)
    # facets: maximal proper zero sets of rank d-1
    facets = [z for z in cand if rank([rays[i] for i in z]) == d_full - 1]
    facets = [z for z in facets if not any(z < w for w in facets)]
    faces = {allset: d_full}
    frontier = set(facets)
    while frontier:
        nxt = set()
        for f in frontier:
            if f in faces:
                continue
            faces[f] = rank([rays[i] for i in f])
            for g in facets:
                h = f & g
                if h and h not in faces:
                    nxt.add(h)
        frontier = nxt
    return faces
