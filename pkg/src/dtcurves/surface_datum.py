"""Coordinate data: a pants decomposition together with the slot cyclic orders
coming from an embedded dual graph.

A datum is stored as a list of pants, each pants being the triple of curve ids
sitting on its three boundary slots in counter-clockwise order around the
front hexagon.  A curve that appears twice in one pants is *folded*.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple


class DatumError(ValueError):
    """Invalid coordinate datum.  ``problems`` lists every violated invariant."""

    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join(f"{kind}: {msg}" for kind, msg in self.problems))


class NonTrivalent(DatumError):
    pass


class Disconnected(DatumError):
    pass


class BadSlotCount(DatumError):
    pass


class UnsupportedGenus(DatumError):
    def __init__(self, genus):
        super().__init__([("UnsupportedGenus", f"genus must be >= 2, got {genus}")])


_ERRORS = {"NonTrivalent": NonTrivalent, "Disconnected": Disconnected, "BadSlotCount": BadSlotCount}


@dataclass(frozen=True, order=True)
class Slot:
    pants: int
    position: int
    curve: int


@dataclass(frozen=True)
class TwoPants:
    """Local model of a curve lying on two distinct pants.

    ``plus`` and ``minus`` are the curve's own slots in F+ and F-.
    ``neighbors`` is (a1, a2, a3, a4): a1, a4 in F+, a2, a3 in F-.
    """
    curve: int
    plus: Slot
    minus: Slot
    neighbors: Tuple[Slot, Slot, Slot, Slot]

    @property
    def f_plus(self) -> int:
        return self.plus.pants

    @property
    def f_minus(self) -> int:
        return self.minus.pants


@dataclass(frozen=True)
class OnePants:
    """Local model of a folded curve: both slots in one pants, a1 is the third slot."""
    curve: int
    plus: Slot
    minus: Slot
    a1: Slot

    @property
    def pants(self) -> int:
        return self.plus.pants


CurveLocalModel = "TwoPants | OnePants"


@dataclass(frozen=True)
class CoordinateDatum:
    genus: int
    pants: Tuple[Tuple[int, int, int], ...]

    @classmethod
    def from_pants(cls, genus, pants, check=True) -> "CoordinateDatum":
        datum = cls(int(genus), tuple(tuple(int(c) for c in p) for p in pants))
        if check:
            validate(datum)
        return datum

    @property
    def n_curves(self) -> int:
        return 3 * self.genus - 3

    @property
    def n_pants(self) -> int:
        return 2 * self.genus - 2

    def slots(self) -> List[Slot]:
        return [Slot(i, j, c) for i, p in enumerate(self.pants) for j, c in enumerate(p)]

    def curve_table(self) -> Dict[int, List[Slot]]:
        table: Dict[int, List[Slot]] = {}
        for s in self.slots():
            table.setdefault(s.curve, []).append(s)
        return table

    def slot(self, pants: int, position: int) -> Slot:
        return Slot(pants, position % 3, self.pants[pants][position % 3])

    def local_models(self):
        # cached on the instance; the dataclass is frozen so go through object.__setattr__
        cached = self.__dict__.get("_models")
        if cached is None:
            cached = tuple(local_model(self, a) for a in range(self.n_curves))
            object.__setattr__(self, "_models", cached)
        return cached

    def to_json_obj(self) -> dict:
        return {"schema": DATUM_SCHEMA, "genus": self.genus, "pants": [list(p) for p in self.pants]}


DATUM_SCHEMA = "dtcurves.datum/1"


def validate(datum: CoordinateDatum) -> None:
    """Raise a :class:`DatumError` subclass listing every violated invariant."""
    problems = []
    g = datum.genus
    if g < 2:
        raise UnsupportedGenus(g)
    if len(datum.pants) != 2 * g - 2:
        problems.append(("NonTrivalent", f"expected {2 * g - 2} pants, got {len(datum.pants)}"))
    for i, p in enumerate(datum.pants):
        if len(p) != 3:
            problems.append(("NonTrivalent", f"pants {i} has {len(p)} slots"))
    counts: Dict[int, int] = {}
    for p in datum.pants:
        for c in p:
            counts[c] = counts.get(c, 0) + 1
    expected = set(range(3 * g - 3))
    for c in sorted(set(counts) | expected):
        k = counts.get(c, 0)
        if c not in expected:
            problems.append(("BadSlotCount", f"curve {c} is not in 0..{3 * g - 4}"))
        elif k != 2:
            problems.append(("BadSlotCount", f"curve {c} occupies {k} slots"))
    if not problems and not _connected(datum):
        problems.append(("Disconnected", "dual graph is not connected"))
    if problems:
        raise _ERRORS[problems[0][0]](problems)


def _connected(datum: CoordinateDatum) -> bool:
    adj: Dict[int, set] = {i: set() for i in range(len(datum.pants))}
    for slots in datum.curve_table().values():
        if len(slots) == 2:
            a, b = slots[0].pants, slots[1].pants
            adj[a].add(b)
            adj[b].add(a)
    seen, stack = {0}, [0]
    while stack:
        v = stack.pop()
        for w in adj[v] - seen:
            seen.add(w)
            stack.append(w)
    return len(seen) == len(datum.pants)


def local_model(datum: CoordinateDatum, a: int):
    """Local model of curve ``a``.

    F+ is the pants of the curve's first slot in (pants, position) order.  In F+
    a1 follows a's slot counter-clockwise and a4 precedes it; in F- a2 follows
    and a3 precedes.
    """
    s_plus, s_minus = sorted(datum.curve_table()[a])
    if s_plus.pants == s_minus.pants:
        third = ({0, 1, 2} - {s_plus.position, s_minus.position}).pop()
        return OnePants(a, s_plus, s_minus, datum.slot(s_plus.pants, third))
    a1 = datum.slot(s_plus.pants, s_plus.position + 1)
    a4 = datum.slot(s_plus.pants, s_plus.position - 1)
    a2 = datum.slot(s_minus.pants, s_minus.position + 1)
    a3 = datum.slot(s_minus.pants, s_minus.position - 1)
    return TwoPants(a, s_plus, s_minus, (a1, a2, a3, a4))


def rebuild_from_models(genus: int, models) -> CoordinateDatum:
    """Reassemble the slot table from local models (inverse of :func:`local_model`)."""
    slots = set()
    for m in models:
        slots.update((m.plus, m.minus))
        slots.update(m.neighbors if isinstance(m, TwoPants) else (m.a1,))
    n_pants = max(s.pants for s in slots) + 1
    pants = [[None] * 3 for _ in range(n_pants)]
    for s in slots:
        pants[s.pants][s.position] = s.curve
    return CoordinateDatum.from_pants(genus, pants)


def _renumber(pants: List[List[str]]) -> List[List[int]]:
    ids: Dict[str, int] = {}
    out = []
    for p in pants:
        out.append([ids.setdefault(c, len(ids)) for c in p])
    return out


def generate_standard_datum(genus: int, style: str = "chain") -> CoordinateDatum:
    """Standard data for every genus >= 2.

    ``chain``: a cycle of 2g-2 pants with a chord between consecutive pairs; no
    folded pants (the theta graph at genus 2).  ``handles``: one folded pants per
    handle, hung off a trivalent caterpillar tree.
    """
    if genus < 2:
        raise UnsupportedGenus(genus)
    g = genus
    if style == "chain":
        m = 2 * g - 2
        pants = []
        for j in range(m):
            prev, nxt = f"e{(j - 1) % m}", f"e{j}"
            chord = f"c{j // 2}"
            pants.append([prev, chord, nxt] if j % 2 == 0 else [nxt, chord, prev])
    elif style == "handles":
        stems = ["s"] * 2 if g == 2 else [f"s{i}" for i in range(g)]
        pants = [[stems[i], f"l{i}", f"l{i}"] for i in range(g)]
        if g >= 3:
            spine = [f"p{k}" for k in range(g - 3)]
            left = [stems[0]] + spine
            right = spine + [stems[g - 1]]
            for k in range(g - 2):
                pants.append([left[k], stems[k + 1], right[k]])
    else:
        raise ValueError(f"unknown style {style!r}")
    return CoordinateDatum.from_pants(g, _renumber(pants))
