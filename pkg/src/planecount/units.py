"""Unit families: segments, empty triangles, empty convex faces, convex parts,
and the decorated segment labels used by the spanning-tree/cycle systems.

Hull vertex tuples are always stored counterclockwise starting at the
leftmost vertex, which makes every label canonical.  Convex parts are
identified by their hull alone; interior points are derived on demand.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Iterator

from .geometry import PointSet, orient, point_in_convex

SEGMENT = 1
TRIANGLE = 2
FACE = 3
PART = 4
TREE_SEGMENT = 5
CYCLE_SEGMENT = 6

BORDER_NONE = 0
BORDER_LTOR = 1
BORDER_RTOL = 2

_KIND_NAMES = {
    SEGMENT: "seg",
    TRIANGLE: "tri",
    FACE: "face",
    PART: "part",
    TREE_SEGMENT: "tseg",
    CYCLE_SEGMENT: "cseg",
}
_BORDER_NAMES = {BORDER_NONE: "-", BORDER_LTOR: ">", BORDER_RTOL: "<"}


@dataclass(frozen=True, slots=True)
class UnitLabel:
    """Compact descriptor of one unit; used as a graph edge label.

    ids: segment endpoints (left first) or hull vertices ccw from leftmost.
    tail: source endpoint of a directed tree segment, -1 otherwise.
    border_left / border_right: border decoration below the left/right
    endpoint of a decorated segment.
    """

    kind: int
    ids: tuple[int, ...]
    tail: int = -1
    border_left: int = BORDER_NONE
    border_right: int = BORDER_NONE

    @property
    def leftmost(self) -> int:
        return self.ids[0]

    @property
    def rightmost(self) -> int:
        return max(self.ids)

    def sort_key(self):
        return (self.leftmost, self.rightmost, self.ids, self.tail,
                self.border_left, self.border_right)

    def edge_pairs(self) -> tuple[tuple[int, int], ...]:
        ids = self.ids
        if len(ids) == 1:
            return ()
        if len(ids) == 2:
            return ((ids[0], ids[1]),)
        k = len(ids)
        return tuple((ids[t], ids[(t + 1) % k]) for t in range(k))

    def point_ids(self, ps: PointSet) -> tuple[int, ...]:
        if self.kind == PART and len(self.ids) >= 3:
            return tuple(sorted(set(self.ids) | part_interior(ps, self.ids)))
        return tuple(sorted(self.ids))

    def __str__(self) -> str:
        name = _KIND_NAMES[self.kind]
        core = ",".join(str(i) for i in self.ids)
        if self.kind == TREE_SEGMENT:
            return (f"{name}({core};t{self.tail}"
                    f"{_BORDER_NAMES[self.border_left]}{_BORDER_NAMES[self.border_right]})")
        if self.kind == CYCLE_SEGMENT:
            return (f"{name}({core};"
                    f"{_BORDER_NAMES[self.border_left]}{_BORDER_NAMES[self.border_right]})")
        return f"{name}({core})"


@dataclass(frozen=True)
class ConvexPartClosure:
    """A convex part: hull vertices (ccw from leftmost) plus every point of
    the ground set that falls inside the hull."""

    hull: tuple[int, ...]
    interior: frozenset[int] = field(default_factory=frozenset)

    @property
    def leftmost(self) -> int:
        return self.hull[0]

    @property
    def rightmost(self) -> int:
        return max(self.hull)

    def all_point_ids(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.hull) | self.interior))

    def label(self) -> UnitLabel:
        return UnitLabel(PART, self.hull)


def part_interior(ps: PointSet, hull: tuple[int, ...]) -> frozenset[int]:
    """Ground-set points strictly inside the hull polygon."""
    if len(hull) < 3:
        return frozenset()
    members = set(hull)
    return frozenset(
        p.id for p in ps.points
        if p.id not in members and point_in_convex(ps, hull, p.id)
    )


def canonical_hull(ps: PointSet, ids) -> tuple[int, ...]:
    """Reorder convex-position ids ccw starting at the leftmost vertex."""
    ids = sorted(ids)
    if len(ids) <= 2:
        return tuple(ids)
    anchor = ids[0]

    def cmp(a, b):
        # everything is strictly right of the anchor, so angular order
        # around it is a strict total order
        return -orient(ps[anchor], ps[a], ps[b])

    rest = sorted(ids[1:], key=functools.cmp_to_key(cmp))
    return tuple([anchor] + rest)


def hull_chains(hull: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split a ccw hull tuple into its lower and upper chains, both running
    left to right and sharing the two extreme vertices."""
    if len(hull) <= 2:
        return hull, hull
    r = max(hull)
    pos = hull.index(r)
    low = hull[:pos + 1]
    up = (hull[0],) + tuple(reversed(hull[pos + 1:])) + (r,)
    return low, up


def all_segments(ps: PointSet) -> list[UnitLabel]:
    """All point pairs as segment labels, lexicographic by (left, right)."""
    n = ps.n
    return [UnitLabel(SEGMENT, (i, j)) for i in range(n) for j in range(i + 1, n)]


def all_empty_triangles(ps: PointSet) -> list[UnitLabel]:
    """Triangles containing no other point of the set."""
    n = ps.n
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                ccw = (i, j, k) if orient(ps[i], ps[j], ps[k]) > 0 else (i, k, j)
                if not any(point_in_convex(ps, ccw, m)
                           for m in range(n) if m not in ccw):
                    out.append(UnitLabel(TRIANGLE, ccw))
    return out


def _convex_chains(ps: PointSet, l: int, r: int, sign: int) -> Iterator[tuple[int, ...]]:
    """x-increasing vertex chains from l to r whose interior turns all have
    the given orientation sign (+1 cup-shaped, -1 cap-shaped)."""

    def rec(seq: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        for nxt in range(seq[-1] + 1, r + 1):
            if len(seq) >= 2 and orient(ps[seq[-2]], ps[seq[-1]], ps[nxt]) != sign:
                continue
            if nxt == r:
                yield seq + (r,)
            else:
                yield from rec(seq + (nxt,))

    yield from rec((l,))


def _convex_polygons(ps: PointSet, l: int, r: int) -> Iterator[tuple[int, ...]]:
    """Convex-position subsets with extreme vertices l and r, as ccw hulls.

    Pairs every cup chain with every cap chain and keeps the pairs whose
    joints at l and r still turn counterclockwise.
    """
    caps = list(_convex_chains(ps, l, r, -1))
    for low in _convex_chains(ps, l, r, 1):
        low_set = set(low[1:-1])
        for up in caps:
            if len(low) == 2 and len(up) == 2:
                continue  # degenerate: plain segment
            if low_set & set(up[1:-1]):
                continue
            # ccw joint at the right extreme: lower chain in, upper chain out
            if orient(ps[low[-2]], ps[r], ps[up[-2]]) <= 0:
                continue
            # ccw joint at the left extreme: upper chain in, lower chain out
            if orient(ps[up[1]], ps[l], ps[low[1]]) <= 0:
                continue
            yield low + tuple(reversed(up[1:-1]))


def all_empty_convex_faces(ps: PointSet) -> Iterator[UnitLabel]:
    """Convex faces (>= 3 vertices, empty hull), streamed grouped by the
    (leftmost, rightmost) vertex pair."""
    n = ps.n
    for l in range(n):
        for r in range(l + 2, n):
            for hull in _convex_polygons(ps, l, r):
                if not part_interior(ps, hull):
                    yield UnitLabel(FACE, hull)


def all_convex_parts(ps: PointSet) -> Iterator[ConvexPartClosure]:
    """Every convex part: singletons, segments and hulls with their interior
    closure, streamed grouped by the (leftmost, rightmost) pair."""
    n = ps.n
    for l in range(n):
        yield ConvexPartClosure((l,))
        for r in range(l + 1, n):
            yield ConvexPartClosure((l, r))
            for hull in _convex_polygons(ps, l, r):
                yield ConvexPartClosure(hull, part_interior(ps, hull))
