"""Independent brute-force ground truth for all seven graph classes, plus
explicit-combination tools (extreme elements, canonical order, replay).

The enumerators here share nothing with the main algorithm beyond the
orientation predicate, which is deliberately reimplemented locally: a
reference that borrowed the main code's shadow machinery would validate
nothing.  Everything is plain backtracking over segments or faces with a
precomputed pairwise-crossing matrix.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

from .errors import CapExceededError, NoExtremeError, ReplayRejectedError
from .framework import StateCode
from .geometry import PointSet, depends_on
from .systems import system_for
from .units import (
    FACE,
    PART,
    SEGMENT,
    TRIANGLE,
    UnitLabel,
    canonical_hull,
)

DEFAULT_CAP = 8
CLASS_CAPS = {"pm": 9, "tr": 9}


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def _orient(a, b, c) -> int:
    return _sign((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]))


def _crosses(a, b, c, d) -> bool:
    if _orient(a, b, c) * _orient(a, b, d) >= 0:
        return False
    return _orient(c, d, a) * _orient(c, d, b) < 0


def _inside_strict(poly_pts, q) -> bool:
    k = len(poly_pts)
    for t in range(k):
        if _orient(poly_pts[t], poly_pts[(t + 1) % k], q) <= 0:
            return False
    return True


@lru_cache(maxsize=64)
def _seg_data(ps: PointSet):
    """All segments (lex order) and a compatibility bitmask per segment."""
    n = ps.n
    segs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    idx = {s: t for t, s in enumerate(segs)}
    m = len(segs)
    compat = [0] * m
    for a in range(m):
        i, j = segs[a]
        for b in range(a + 1, m):
            k, l = segs[b]
            if not _crosses(ps[i], ps[j], ps[k], ps[l]):
                compat[a] |= 1 << b
                compat[b] |= 1 << a
    return segs, idx, compat


def _check_cap(class_name: str, ps: PointSet, cap) -> None:
    limit = cap if cap is not None else CLASS_CAPS.get(class_name, DEFAULT_CAP)
    if ps.n > limit:
        raise CapExceededError(
            f"brute force for {class_name} capped at n={limit}, got n={ps.n}")


def brute_count(class_name: str, ps: PointSet, cap=None) -> int:
    _check_cap(class_name, ps, cap)
    if class_name == "pg":
        return _count_pg(ps)
    return sum(1 for _ in _enumerate_uncapped(class_name, ps))


def brute_enumerate(class_name: str, ps: PointSet, cap=None) -> list:
    """All class members in a deterministic order.

    pg/pm/st/sc members are frozensets of (i, j) edges; cp members are
    frozensets of part point-tuples; cs/tr members are frozensets of ccw
    hull tuples.
    """
    _check_cap(class_name, ps, cap)
    return list(_enumerate_uncapped(class_name, ps))


def _enumerate_uncapped(class_name: str, ps: PointSet) -> Iterator:
    if class_name == "pg":
        return _iter_pg(ps)
    if class_name == "pm":
        return _iter_pm(ps)
    if class_name == "cp":
        return _iter_cp(ps)
    if class_name in ("cs", "tr"):
        return _iter_subdivisions(ps, triangles_only=class_name == "tr")
    if class_name == "st":
        return _iter_st(ps)
    if class_name == "sc":
        return _iter_sc(ps)
    raise ValueError(f"unknown graph class {class_name!r}")


def _count_pg(ps: PointSet) -> int:
    """Number of pairwise non-crossing segment subsets, counted by the
    classic include/exclude recursion with memoization on the live mask."""
    segs, _, compat = _seg_data(ps)
    memo: dict[int, int] = {}

    def rec(mask: int) -> int:
        if mask == 0:
            return 1
        got = memo.get(mask)
        if got is not None:
            return got
        low = mask & -mask
        s = low.bit_length() - 1
        res = rec(mask ^ low) + rec(mask & compat[s] & ~(low - 1))
        memo[mask] = res
        return res

    return rec((1 << len(segs)) - 1)


def _iter_pg(ps: PointSet) -> Iterator[frozenset]:
    segs, _, compat = _seg_data(ps)
    m = len(segs)
    chosen: list[int] = []

    def rec(allowed: int) -> Iterator[frozenset]:
        yield frozenset(segs[t] for t in chosen)
        mask = allowed
        while mask:
            low = mask & -mask
            s = low.bit_length() - 1
            mask ^= low
            chosen.append(s)
            yield from rec(allowed & compat[s] & ~((1 << (s + 1)) - 1))
            chosen.pop()

    yield from rec((1 << m) - 1)


def _iter_pm(ps: PointSet) -> Iterator[frozenset]:
    n = ps.n
    if n % 2:
        return

    def rec(unmatched: tuple[int, ...], acc: list[tuple[int, int]]) -> Iterator[frozenset]:
        if not unmatched:
            yield frozenset(acc)
            return
        i = unmatched[0]
        for j in unmatched[1:]:
            if any(_crosses(ps[i], ps[j], ps[a], ps[b]) for a, b in acc):
                continue
            rest = tuple(x for x in unmatched if x not in (i, j))
            acc.append((i, j))
            yield from rec(rest, acc)
            acc.pop()

    yield from rec(tuple(range(n)), [])


def _set_partitions(items: Sequence[int]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for t in range(len(part)):
            yield part[:t] + [[first] + part[t]] + part[t + 1:]
        yield [[first]] + part


def _hull_of(ps: PointSet, block: list[int]) -> list[int]:
    if len(block) <= 2:
        return sorted(block)
    pts = sorted(block)
    lower: list[int] = []
    for q in pts:
        while len(lower) >= 2 and _orient(ps[lower[-2]], ps[lower[-1]], ps[q]) <= 0:
            lower.pop()
        lower.append(q)
    upper: list[int] = []
    for q in reversed(pts):
        while len(upper) >= 2 and _orient(ps[upper[-2]], ps[upper[-1]], ps[q]) <= 0:
            upper.pop()
        upper.append(q)
    return lower[:-1] + upper[:-1]


def _iter_cp(ps: PointSet) -> Iterator[frozenset]:
    n = ps.n
    for part in _set_partitions(tuple(range(n))):
        hulls = [_hull_of(ps, block) for block in part]
        ok = True
        for bi, hull in enumerate(hulls):
            if len(hull) < 3:
                continue
            pts = [ps[v] for v in hull]
            for q in range(n):
                if q not in part[bi] and _inside_strict(pts, ps[q]):
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        edges = []
        for hull in hulls:
            k = len(hull)
            if k == 2:
                edges.append((hull[0], hull[1]))
            elif k >= 3:
                edges.extend((hull[t], hull[(t + 1) % k]) for t in range(k))
        for a in range(len(edges)):
            i, j = edges[a]
            for b in range(a + 1, len(edges)):
                k, l = edges[b]
                if _crosses(ps[i], ps[j], ps[k], ps[l]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield frozenset(tuple(sorted(block)) for block in part)


def _face_catalog(ps: PointSet, triangles_only: bool):
    """Empty convex polygons as ccw vertex tuples, with their directed edges."""
    n = ps.n
    faces = []
    from itertools import combinations

    for k in range(3, 4 if triangles_only else n + 1):
        for combo in combinations(range(n), k):
            hull = _hull_of(ps, list(combo))
            if len(hull) != k:
                continue
            pts = [ps[v] for v in hull]
            if any(_inside_strict(pts, ps[q]) for q in range(n) if q not in combo):
                continue
            faces.append(tuple(hull))
    faces.sort(key=lambda h: tuple(sorted(h)))
    return faces


def _iter_subdivisions(ps: PointSet, triangles_only: bool) -> Iterator[frozenset]:
    """Demand-driven exact tiling of the hull by empty convex faces.

    Every directed hull edge (interior on the left) must be supplied by
    exactly one face; each face edge either satisfies a pending demand or
    raises the demand for its reverse.  Faces are additionally required to
    be pairwise non-crossing, which for convex shapes rules out overlap.
    """
    n = ps.n
    hull = _hull_of(ps, list(range(n)))
    if n < 3:
        if n >= 1:
            yield frozenset()  # degenerate hull tiled by zero faces
        return
    faces = _face_catalog(ps, triangles_only)
    by_edge: dict[tuple[int, int], list[int]] = {}
    for fi, f in enumerate(faces):
        k = len(f)
        for t in range(k):
            by_edge.setdefault((f[t], f[(t + 1) % k]), []).append(fi)
    face_edges = []
    for f in faces:
        k = len(f)
        face_edges.append([(f[t], f[(t + 1) % k]) for t in range(k)])
    compat = _face_compat(ps, faces)

    demands = set()
    k = len(hull)
    for t in range(k):
        demands.add((hull[t], hull[(t + 1) % k]))
    chosen: list[int] = []

    def rec() -> Iterator[frozenset]:
        if not demands:
            yield frozenset(faces[fi] for fi in chosen)
            return
        demand = min(demands)
        for fi in by_edge.get(demand, ()):
            if any(not compat[fi][cj] for cj in chosen):
                continue
            added, removed = [], []
            ok = True
            for e in face_edges[fi]:
                if e in demands:
                    demands.discard(e)
                    removed.append(e)
                else:
                    rev = (e[1], e[0])
                    if rev in demands:
                        ok = False  # same side supplied twice
                        break
                    demands.add(rev)
                    added.append(rev)
            if ok:
                chosen.append(fi)
                yield from rec()
                chosen.pop()
            for e in added:
                demands.discard(e)
            for e in removed:
                demands.add(e)

    yield from rec()


def _face_compat(ps: PointSet, faces) -> list[list[bool]]:
    m = len(faces)
    compat = [[True] * m for _ in range(m)]
    edge_lists = []
    for f in faces:
        k = len(f)
        edge_lists.append([(f[t], f[(t + 1) % k]) for t in range(k)])
    for a in range(m):
        for b in range(a + 1, m):
            bad = False
            for i, j in edge_lists[a]:
                for s, t in edge_lists[b]:
                    if _crosses(ps[i], ps[j], ps[s], ps[t]):
                        bad = True
                        break
                if bad:
                    break
            compat[a][b] = compat[b][a] = not bad
    return compat


def _iter_st(ps: PointSet) -> Iterator[frozenset]:
    n = ps.n
    if n == 1:
        yield frozenset()
        return
    segs, _, compat = _seg_data(ps)
    m = len(segs)
    need = n - 1
    chosen: list[int] = []

    def rec(start: int, allowed: int, parent: list[int], picked: int) -> Iterator[frozenset]:
        if picked == need:
            yield frozenset(segs[t] for t in chosen)
            return
        avail = allowed & ~((1 << start) - 1)
        if avail.bit_count() < need - picked:
            return
        for s in range(start, m):
            if not (avail >> s) & 1:
                continue
            i, j = segs[s]
            ri = parent[i]
            while parent[ri] != ri:
                ri = parent[ri]
            rj = parent[j]
            while parent[rj] != rj:
                rj = parent[rj]
            if ri == rj:
                continue
            nxt = parent[:]
            nxt[ri] = rj
            chosen.append(s)
            yield from rec(s + 1, allowed & compat[s], nxt, picked + 1)
            chosen.pop()

    yield from rec(0, (1 << m) - 1, list(range(n)), 0)


def _iter_sc(ps: PointSet) -> Iterator[frozenset]:
    n = ps.n
    if n < 3:
        return
    path = [0]
    used = [False] * n
    used[0] = True
    edges: list[tuple[int, int]] = []

    def clean(i, j) -> bool:
        return not any(_crosses(ps[i], ps[j], ps[a], ps[b]) for a, b in edges)

    def rec() -> Iterator[frozenset]:
        if len(path) == n:
            # orientation canonicalized: second vertex below the last one
            if path[1] < path[-1] and clean(path[-1], 0):
                cyc = edges + [(0, path[-1])]
                yield frozenset(tuple(sorted(e)) for e in cyc)
            return
        i = path[-1]
        for v in range(1, n):
            if used[v] or not clean(i, v):
                continue
            used[v] = True
            path.append(v)
            edges.append((i, v))
            yield from rec()
            edges.pop()
            path.pop()
            used[v] = False

    yield from rec()


def extremes(units: Sequence[UnitLabel], ps: PointSet) -> list[UnitLabel]:
    """Units in the combination that no other unit depends on."""
    out = []
    for u in units:
        if all(u is v or not depends_on(u, v, ps) for v in units):
            out.append(u)
    return out


def rightmost_extreme(units: Sequence[UnitLabel], ps: PointSet) -> UnitLabel:
    """The extreme element every other extreme lies fully to the left of."""
    ext = extremes(units, ps)
    if not ext:
        raise NoExtremeError("nonempty crossing-free combination with no extreme")
    best = max(ext, key=lambda u: u.leftmost)
    for u in ext:
        if u is not best and u.rightmost > best.leftmost:
            raise NoExtremeError("extreme elements are not left-right comparable")
    return best


def canonical_order(units: Sequence[UnitLabel], ps: PointSet) -> list[UnitLabel]:
    """Insertion order: repeatedly strip the rightmost extreme, then reverse."""
    remaining = list(units)
    removed = []
    while remaining:
        u = rightmost_extreme(remaining, ps)
        remaining = [v for v in remaining if v is not u]
        removed.append(u)
    removed.reverse()
    return removed


def object_labels(class_name: str, ps: PointSet, obj) -> list[UnitLabel]:
    """Convert one brute-force object into unit labels for replay."""
    if class_name in ("pg", "pm"):
        return [UnitLabel(SEGMENT, e) for e in sorted(obj)]
    if class_name == "cp":
        out = []
        for block in sorted(obj):
            hull = _hull_of(ps, list(block))
            out.append(UnitLabel(PART, canonical_hull(ps, hull)))
        return out
    if class_name in ("cs", "tr"):
        kind = TRIANGLE if class_name == "tr" else FACE
        return [UnitLabel(kind, canonical_hull(ps, f)) for f in sorted(obj)]
    raise ValueError(f"replay labels undefined for class {class_name!r}")


def replay(class_name: str, ps: PointSet, obj) -> list[StateCode]:
    """Feed a combination through its transition system in canonical order.

    Every step must be accepted; a rejection signals a transition-rule bug.
    Returns the visited states, initial state included.
    """
    system = system_for(class_name)
    labels = object_labels(class_name, ps, obj)
    order = canonical_order(labels, ps)
    state = system.initial(ps)
    visited = [state]
    for step, unit in enumerate(order):
        succ = None
        for lbl, nxt in system.transitions(ps, state):
            if lbl == unit:
                succ = nxt
                break
        if succ is None:
            raise ReplayRejectedError(step, unit)
        state = succ
        visited.append(state)
    return visited
