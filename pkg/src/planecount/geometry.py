"""Exact integer planar geometry: predicates, shadows, hulls, point-set validation.

Everything here works on integer coordinates only.  With coordinates bounded
by 2**40, every 3-point orientation determinant fits comfortably in 128 bits,
so all predicates are exact and there is no epsilon anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    CollinearError,
    CoordinateOverflowError,
    DuplicateXError,
    NonUniqueExtremeYError,
    PointSetError,
)

COORD_BOUND = 1 << 40


class Point(NamedTuple):
    x: int
    y: int
    id: int


@dataclass(frozen=True)
class PointSet:
    """Points in general position, sorted strictly by x; ids are x-ranks."""

    points: tuple[Point, ...]
    top_index: int
    bottom_index: int

    @property
    def n(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    def coords(self) -> list[tuple[int, int]]:
        return [(p.x, p.y) for p in self.points]


def orient(a, b, c) -> int:
    """Sign of the cross product (b-a) x (c-a).

    +1 if a,b,c make a left turn, -1 for a right turn, 0 if collinear.
    """
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    if d > 0:
        return 1
    if d < 0:
        return -1
    return 0


def validate_point_set(raw: Sequence[tuple[int, int]]) -> PointSet:
    """Check all point-set invariants and return an id-assigned PointSet.

    Raises a subclass of PointSetError naming the violating indices
    (indices refer to positions in the x-sorted order).
    """
    if not raw:
        raise PointSetError("empty point list")
    for idx, (x, y) in enumerate(raw):
        if int(x) != x or int(y) != y:
            raise PointSetError(f"point {idx} has non-integer coordinates")
        if abs(x) > COORD_BOUND or abs(y) > COORD_BOUND:
            raise CoordinateOverflowError(idx, COORD_BOUND)
    ordered = sorted(((int(x), int(y)) for x, y in raw))
    points = tuple(Point(x, y, i) for i, (x, y) in enumerate(ordered))
    n = len(points)
    for i in range(n - 1):
        if points[i].x == points[i + 1].x:
            raise DuplicateXError(i, i + 1)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if orient(points[i], points[j], points[k]) == 0:
                    raise CollinearError(i, j, k)
    ys = [p.y for p in points]
    top = max(range(n), key=lambda i: ys[i])
    bottom = min(range(n), key=lambda i: ys[i])
    if n > 1:
        for i in range(n):
            if i != top and ys[i] == ys[top]:
                raise NonUniqueExtremeYError(min(i, top), max(i, top), "maximum")
            if i != bottom and ys[i] == ys[bottom]:
                raise NonUniqueExtremeYError(min(i, bottom), max(i, bottom), "minimum")
    return PointSet(points=points, top_index=top, bottom_index=bottom)


def strictly_above(p, seg_a, seg_b) -> bool:
    """True iff p lies strictly above the open segment (seg_a, seg_b).

    seg_a must precede seg_b in x-order; points sharing an x-coordinate
    never occur in a valid PointSet, so no tie-breaking is needed.
    """
    if not (seg_a[0] < p[0] < seg_b[0]):
        return False
    return orient(seg_a, seg_b, p) > 0


def strictly_below(p, seg_a, seg_b) -> bool:
    if not (seg_a[0] < p[0] < seg_b[0]):
        return False
    return orient(seg_a, seg_b, p) < 0


def lower_shadow(unit, ps: PointSet) -> frozenset[int]:
    """Ids of points whose upward vertical ray hits the relative interior
    of some edge of the unit."""
    out = set()
    for i, j in unit.edge_pairs():
        a, b = ps[i], ps[j]
        if a.x > b.x:
            a, b = b, a
        for p in ps.points:
            if strictly_below(p, a, b):
                out.add(p.id)
    return frozenset(out)


def upper_shadow(unit, ps: PointSet) -> frozenset[int]:
    """Ids of points whose downward vertical ray hits the relative interior
    of some edge of the unit."""
    out = set()
    for i, j in unit.edge_pairs():
        a, b = ps[i], ps[j]
        if a.x > b.x:
            a, b = b, a
        for p in ps.points:
            if strictly_above(p, a, b):
                out.add(p.id)
    return frozenset(out)


def depends_on(u1, u2, ps: PointSet) -> bool:
    """True iff u2 depends on u1: u1 carries a vertex under u2, or u1 passes
    under a vertex of u2.  Placement of u1 must then precede u2."""
    pts1 = frozenset(u1.point_ids(ps))
    if pts1 & lower_shadow(u2, ps):
        return True
    pts2 = frozenset(u2.point_ids(ps))
    return bool(upper_shadow(u1, ps) & pts2)


def lower_hull(ps: PointSet) -> list[int]:
    """Ids along the lower convex hull, left to right, endpoints included."""
    return _hull_chain(ps, keep_sign=1)


def upper_hull(ps: PointSet) -> list[int]:
    """Ids along the upper convex hull, left to right, endpoints included."""
    return _hull_chain(ps, keep_sign=-1)


def _hull_chain(ps: PointSet, keep_sign: int) -> list[int]:
    chain: list[int] = []
    for p in ps.points:
        while len(chain) >= 2 and orient(ps[chain[-2]], ps[chain[-1]], p) != keep_sign:
            chain.pop()
        chain.append(p.id)
    return chain


def segments_cross(a, b, c, d) -> bool:
    """Proper crossing test for segments ab and cd (shared endpoints allowed).

    General position means an orientation of 0 only happens at a shared
    endpoint, so properly crossing is exactly 'both straddle both'.
    """
    o1 = orient(a, b, c)
    o2 = orient(a, b, d)
    if o1 * o2 >= 0:
        return False
    o3 = orient(c, d, a)
    o4 = orient(c, d, b)
    return o3 * o4 < 0


def point_in_convex(ps: PointSet, hull_ccw: Sequence[int], pid: int) -> bool:
    """Strict interior test against a ccw convex polygon given by point ids."""
    p = ps[pid]
    k = len(hull_ccw)
    for t in range(k):
        if orient(ps[hull_ccw[t]], ps[hull_ccw[(t + 1) % k]], p) <= 0:
            return False
    return True


def twice_polygon_area(ps: PointSet, hull_ccw: Sequence[int]) -> int:
    """Twice the (positive) area of a ccw simple polygon; exact integer."""
    s = 0
    k = len(hull_ccw)
    for t in range(k):
        a = ps[hull_ccw[t]]
        b = ps[hull_ccw[(t + 1) % k]]
        s += a.x * b.y - b.x * a.y
    return s


def convex_hull_ccw(ps: PointSet, ids: Iterable[int]) -> list[int]:
    """Hull of a subset of points, ccw starting at its leftmost member."""
    sub = sorted(ids)
    if len(sub) <= 2:
        return sub
    pts = [ps[i] for i in sub]
    lower: list[int] = []
    for p in pts:
        while len(lower) >= 2 and orient(ps[lower[-2]], ps[lower[-1]], p) <= 0:
            lower.pop()
        lower.append(p.id)
    upper: list[int] = []
    for p in reversed(pts):
        while len(upper) >= 2 and orient(ps[upper[-2]], ps[upper[-1]], p) <= 0:
            upper.pop()
        upper.append(p.id)
    return lower[:-1] + upper[:-1]
