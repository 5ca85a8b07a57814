"""Non-crossing chord structures on cyclically ordered circle points.

Chords are index pairs (i, j), i < j, on N points labeled in circular order.
Two chords cross iff their endpoints interleave around the circle, which for
normalized pairs reduces to a < c < b < d or c < a < d < b.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator

ENUMERATION_CAP = 12  # Catalan-type growth; exhaustive search stays desk-scale


def chords_cross(e1: tuple[int, int], e2: tuple[int, int]) -> bool:
    a, b = e1
    c, d = e2
    return (a < c < b < d) or (c < a < d < b)


def _adjacent(i: int, j: int, n: int) -> bool:
    return j - i == 1 or (i == 0 and j == n - 1)


@dataclass(frozen=True)
class ChordSet:
    """A validated pairwise non-crossing set of chords on n circle points."""

    n: int
    chords: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one point")
        seen = set()
        for i, j in self.chords:
            if not 0 <= i < j < self.n:
                raise ValueError(f"chord ({i}, {j}) out of range for n={self.n}")
            if (i, j) in seen:
                raise ValueError(f"duplicate chord ({i}, {j})")
            seen.add((i, j))
        cs = sorted(self.chords)
        for a in range(len(cs)):
            for b in range(a + 1, len(cs)):
                if chords_cross(cs[a], cs[b]):
                    raise ValueError(f"chords {cs[a]} and {cs[b]} cross")
        object.__setattr__(self, "chords", tuple(cs))

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for i, j in self.chords:
            deg[i] += 1
            deg[j] += 1
        return deg


@dataclass(frozen=True)
class ChordBounds:
    """Edge-count ceilings for admissible networks on n boundary points."""

    n: int
    nonadjacent_max: int  # non-crossing chords avoiding adjacent endpoints
    edge_max: int  # all interior edges
    leaf_edge_max: int  # interior edges when some vertex has degree 1


def closed_form_bounds(n: int) -> ChordBounds:
    if n < 1:
        raise ValueError("need at least one point")
    nonadj = max(n - 3, 0)
    total = 2 * n - 3 if n >= 3 else max(n - 1, 0)
    leaf = 2 * n - 5 if n >= 4 else 1
    return ChordBounds(n, nonadj, total, leaf)


def _candidate_pairs(n: int, allow_adjacent: bool) -> list[tuple[int, int]]:
    return [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if allow_adjacent or not _adjacent(i, j, n)
    ]


def enumerate_chord_sets(n: int, allow_adjacent: bool = False) -> Iterator[ChordSet]:
    """All non-crossing chord sets, in lexicographic order of sorted pair lists."""
    if n < 1:
        raise ValueError("need at least one point")
    if n > ENUMERATION_CAP:
        raise ValueError(f"exhaustive enumeration capped at n <= {ENUMERATION_CAP}")
    pairs = _candidate_pairs(n, allow_adjacent)

    def extend(current: list[tuple[int, int]], start: int) -> Iterator[ChordSet]:
        yield ChordSet(n, tuple(current))
        for idx in range(start, len(pairs)):
            p = pairs[idx]
            if all(not chords_cross(p, q) for q in current):
                current.append(p)
                yield from extend(current, idx + 1)
                current.pop()

    return extend([], 0)


def max_nonadjacent_chords(n: int) -> int:
    """Exhaustive maximum, the oracle for the closed-form nonadjacent bound."""
    return max(len(cs.chords) for cs in enumerate_chord_sets(n, allow_adjacent=False))


@lru_cache(maxsize=None)
def nonadjacent_max_recursive(n: int) -> int:
    """Split recursion: a chord leaves k and l >= 1 points on its two sides."""
    if n <= 3:
        return 0
    return max(
        1 + nonadjacent_max_recursive(k + 2) + nonadjacent_max_recursive(n - 2 - k + 2)
        for k in range(1, n - 2)
    )


def is_maximal(cs: ChordSet) -> bool:
    """No further chord (adjacent ones included) can be added without a crossing."""
    have = set(cs.chords)
    for p in _candidate_pairs(cs.n, allow_adjacent=True):
        if p in have:
            continue
        if all(not chords_cross(p, q) for q in cs.chords):
            return False
    return True


def maximal_chord_sets(n: int) -> list[ChordSet]:
    return [cs for cs in enumerate_chord_sets(n, allow_adjacent=True) if is_maximal(cs)]


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def _arc_sides(chord: tuple[int, int], n: int) -> tuple[list[int], list[int]]:
    i, j = chord
    inside = [v for v in range(n) if i < v < j]
    outside = [v for v in range(n) if v < i or v > j]
    return inside, outside


@dataclass(frozen=True)
class StructureRow:
    chords: tuple[tuple[int, int], ...]
    degrees: tuple[int, ...]
    edge_count: int
    within_edge_max: bool
    has_leaf: bool
    leaf_bound_ok: bool | None
    leaf_geometry_ok: bool | None
    fate: str  # kill reason, "forwarded-to-three-vertex", or "survivor"


@dataclass(frozen=True)
class CountingAuditReport:
    n: int
    total: int
    survivors: list[StructureRow]
    forwarded_to_n3: int
    kills: dict[str, int]
    inequality_witnesses: dict[str, str]
    rows: list[StructureRow] = field(repr=False, default_factory=list)


def _classify(cs: ChordSet) -> str:
    """Kill reason for a chord structure, or why it remains in play.

    The rules are the structural necessary conditions for the interior graph
    of a network every vertex of which admits iterated replacements:
      - a degree-0 vertex cannot balance its exterior ray;
      - a degree-1 vertex's edge must be a diameter, so at most one such edge
        exists (two leaves must share it) and its far endpoint either is the
        other leaf or needs neighbors strictly on both sides;
      - a degree-2 vertex needs a three-ray replacement, refuted exactly; a
        degree-3 vertex needs a four-ray replacement, refuted by counting.
    """
    n = cs.n
    deg = cs.degrees()
    if any(d == 0 for d in deg):
        return "isolated-vertex"
    leaves = [v for v in range(n) if deg[v] == 1]
    if len(leaves) > 2:
        return "too-many-leaves"
    if len(leaves) == 2:
        u, v = leaves
        if (u, v) not in cs.chords:
            return "disjoint-leaf-diameters"
    for v in leaves:
        (w,) = [b if a == v else a for a, b in cs.chords if v in (a, b)]
        if deg[w] == 1:
            continue
        chord = (min(v, w), max(v, w))
        inside, outside = _arc_sides(chord, n)
        nbrs_w = {b if a == w else a for a, b in cs.chords if w in (a, b)} - {v}
        if not (nbrs_w & set(inside)) or not (nbrs_w & set(outside)):
            return "leaf-antipode-one-sided"
    if n >= 4 and any(d == 2 for d in deg):
        return "degree-2"
    if n >= 5 and any(d == 3 for d in deg):
        return "degree-3"
    if n == 3:
        return "forwarded-to-three-vertex"
    return "survivor"


def audit_counting_argument(n: int) -> CountingAuditReport:
    """Exhaust all non-crossing structures on n points and classify each.

    For n >= 3 no structure survives: every one is eliminated by a structural
    rule, and the aggregate inequalities record why none could have slipped
    through (the degree floor would force more edges than non-crossing
    structures can carry).
    """
    if n < 3:
        raise ValueError("audit needs at least three points")
    bounds = closed_form_bounds(n)
    rows: list[StructureRow] = []
    kills: dict[str, int] = {}
    survivors: list[StructureRow] = []
    forwarded = 0
    for cs in enumerate_chord_sets(n, allow_adjacent=True):
        deg = tuple(cs.degrees())
        e = len(cs.chords)
        has_leaf = 1 in deg
        fate = _classify(cs)
        row = StructureRow(
            chords=cs.chords,
            degrees=deg,
            edge_count=e,
            within_edge_max=e <= bounds.edge_max,
            has_leaf=has_leaf,
            leaf_bound_ok=(e <= bounds.leaf_edge_max) if has_leaf else None,
            leaf_geometry_ok=(fate not in ("too-many-leaves", "disjoint-leaf-diameters",
                                           "leaf-antipode-one-sided")) if has_leaf else None,
            fate=fate,
        )
        rows.append(row)
        if fate == "survivor":
            survivors.append(row)
        elif fate == "forwarded-to-three-vertex":
            forwarded += 1
        else:
            kills[fate] = kills.get(fate, 0) + 1
    min_deg = 3 if n == 4 else 4
    witnesses = {}
    if n == 3:
        witnesses["parity"] = (
            "a single leaf would give sum of degrees 5 = 2E, which is odd"
        )
    else:
        witnesses["no-leaf"] = (
            f"degree floor {min_deg} forces sum of degrees >= "
            f"{min_deg * n} > {2 * bounds.edge_max} = 2E_max"
        )
        witnesses["leaf"] = (
            f"a leaf caps E <= {bounds.leaf_edge_max} but the degree floor "
            f"forces E >= {(min_deg * (n - 2) + 2) // 2} "
            f"> {bounds.leaf_edge_max}"
        )
    return CountingAuditReport(
        n=n,
        total=len(rows),
        survivors=survivors,
        forwarded_to_n3=forwarded,
        kills=kills,
        inequality_witnesses=witnesses,
        rows=rows,
    )
