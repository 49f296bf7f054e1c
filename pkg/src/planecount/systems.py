"""The seven transition systems, their prune filters, and the reachable-state
pattern invariants.

Shared transition skeleton, with p/q the left/right endpoint of the candidate
unit and m the marker: a unit is placeable iff it could be the new rightmost
extreme element.  Geometrically that is (a) nothing already placed sits
strictly above it, (b) its endpoints are not buried under placed material,
and (c) its right end lies strictly right of the marker.  Each system adds
its own bookkeeping on top (degrees, drains, chain shape).

Colors are small integers packed into a bytes string per state; per-point-set
candidate tables (shadow and above bitmasks per unit) are cached so the inner
loop is a handful of integer operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Optional

from .framework import NO_MARKER, StateCode, TransitionSystem
from .geometry import PointSet, lower_hull, strictly_above, strictly_below, upper_hull
from .units import (
    BORDER_LTOR,
    BORDER_NONE,
    BORDER_RTOL,
    CYCLE_SEGMENT,
    SEGMENT,
    TREE_SEGMENT,
    UnitLabel,
    all_convex_parts,
    all_empty_convex_faces,
    all_empty_triangles,
    hull_chains,
)

# pg palette
PG_FREE, PG_ALIVE, PG_DEAD = 0, 1, 2
# pm / cp / cs / tr palette
PT_FREE, PT_ALIVE = 0, 1
# st palette
ST_DEAD, ST_A00, ST_A0L, ST_A0R, ST_A10, ST_A1L, ST_A1R, ST_FREE = range(8)
_ST_EXPOSES_L = (ST_A0L, ST_A1L)
_ST_EXPOSES_R = (ST_A0R, ST_A1R)
_ST_OUT0 = (ST_A00, ST_A0L, ST_A0R)
_ST_OUT1 = (ST_A10, ST_A1L, ST_A1R)
# sc palette
SC_D0, SC_D1, SC_A0, SC_AL, SC_AR, SC_FREE = range(6)


def _st_alive_code(outdeg1: bool, exposure: int) -> int:
    # exposure: 0 none, 1 left, 2 right
    return 1 + (3 if outdeg1 else 0) + exposure


@dataclass(frozen=True)
class _SegInfo:
    i: int
    j: int
    above_mask: int
    shadow_mask: int
    shadow_ids: tuple[int, ...]


@lru_cache(maxsize=64)
def _seg_tables(ps: PointSet) -> tuple[tuple[_SegInfo, ...], ...]:
    """For each right endpoint j, the candidate segments (i, j) with their
    above/below point masks."""
    n = ps.n
    by_right: list[list[_SegInfo]] = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            a, b = ps[i], ps[j]
            above = 0
            shadow = 0
            sids = []
            for k in range(i + 1, j):
                if strictly_above(ps[k], a, b):
                    above |= 1 << k
                elif strictly_below(ps[k], a, b):
                    shadow |= 1 << k
                    sids.append(k)
            by_right[j].append(_SegInfo(i, j, above, shadow, tuple(sids)))
    return tuple(tuple(lst) for lst in by_right)


@lru_cache(maxsize=64)
def _chain_colors(ps: PointSet, use_upper: bool) -> bytes:
    colors = bytearray(ps.n)
    for v in (upper_hull(ps) if use_upper else lower_hull(ps)):
        colors[v] = PT_ALIVE
    return bytes(colors)


class PgSystem(TransitionSystem):
    """All crossing-free graphs: three colors, every state is a target."""

    name = "pg"
    class_id = 1
    palette = 3

    def initial(self, ps: PointSet) -> StateCode:
        return StateCode(bytes(ps.n), NO_MARKER)

    def is_target(self, ps: PointSet, state: StateCode) -> bool:
        return True

    def transitions(self, ps, state):
        colors, m = state
        n = ps.n
        by_right = _seg_tables(ps)
        nonfree = 0
        for idx in range(n):
            if colors[idx] != PG_FREE:
                nonfree |= 1 << idx
        out = []
        for j in range(max(m + 1, 1), n):
            cj = colors[j]
            if cj == PG_DEAD:
                continue
            for info in by_right[j]:
                ci = colors[info.i]
                if ci == PG_DEAD:
                    continue
                if info.above_mask & nonfree:
                    continue
                new = bytearray(colors)
                new[info.i] = PG_ALIVE
                new[j] = PG_ALIVE
                for s in info.shadow_ids:
                    new[s] = PG_DEAD
                succ = bytes(new)
                if succ == colors and info.i == m:
                    continue  # re-adding the current rightmost extreme
                out.append((UnitLabel(SEGMENT, (info.i, j)),
                            StateCode(succ, info.i)))
        return out


class PmSystem(TransitionSystem):
    """Crossing-free perfect matchings: used/unused colors over segments."""

    name = "pm"
    class_id = 3
    palette = 2

    def initial(self, ps: PointSet) -> StateCode:
        return StateCode(bytes(ps.n), NO_MARKER)

    def is_target(self, ps, state) -> bool:
        return all(c == PT_ALIVE for c in state.colors)

    def transitions(self, ps, state):
        colors, m = state
        n = ps.n
        by_right = _seg_tables(ps)
        alive = 0
        for idx in range(n):
            if colors[idx] == PT_ALIVE:
                alive |= 1 << idx
        out = []
        for j in range(max(m + 1, 1), n):
            if colors[j] != PT_FREE:
                continue
            for info in by_right[j]:
                if colors[info.i] != PT_FREE:
                    continue
                if info.above_mask & alive:
                    continue
                if info.shadow_mask & ~alive:
                    continue  # a buried point would stay uncoverable
                new = bytearray(colors)
                new[info.i] = PT_ALIVE
                new[j] = PT_ALIVE
                out.append((UnitLabel(SEGMENT, (info.i, j)),
                            StateCode(bytes(new), info.i)))
        return out


@dataclass(frozen=True)
class _PartInfo:
    label: UnitLabel
    leftmost: int
    rightmost: int
    pts_mask: int
    above_mask: int
    sshadow_mask: int


@lru_cache(maxsize=32)
def _part_tables(ps: PointSet) -> tuple[tuple[_PartInfo, ...], ...]:
    n = ps.n
    by_right: list[list[_PartInfo]] = [[] for _ in range(n)]
    for part in all_convex_parts(ps):
        pts = part.all_point_ids()
        pts_mask = 0
        for p in pts:
            pts_mask |= 1 << p
        above = 0
        below = 0
        for a_id, b_id in part.label().edge_pairs():
            a, b = ps[a_id], ps[b_id]
            if a.x > b.x:
                a, b = b, a
            for k in range(a.id + 1, b.id):
                if strictly_above(ps[k], a, b):
                    above |= 1 << k
                elif strictly_below(ps[k], a, b):
                    below |= 1 << k
        by_right[part.rightmost].append(_PartInfo(
            label=part.label(),
            leftmost=part.leftmost,
            rightmost=part.rightmost,
            pts_mask=pts_mask,
            above_mask=above,
            sshadow_mask=below & ~pts_mask,
        ))
    return tuple(tuple(lst) for lst in by_right)


class CpSystem(TransitionSystem):
    """Crossing-free convex partitions: one unit per part, disjoint closures."""

    name = "cp"
    class_id = 2
    palette = 2

    def initial(self, ps: PointSet) -> StateCode:
        return StateCode(bytes(ps.n), NO_MARKER)

    def is_target(self, ps, state) -> bool:
        return all(c == PT_ALIVE for c in state.colors)

    def transitions(self, ps, state):
        colors, m = state
        n = ps.n
        by_right = _part_tables(ps)
        alive = 0
        for idx in range(n):
            if colors[idx] == PT_ALIVE:
                alive |= 1 << idx
        out = []
        for j in range(m + 1, n):
            for info in by_right[j]:
                if info.pts_mask & alive:
                    continue
                if info.above_mask & alive:
                    continue
                if info.sshadow_mask & ~alive:
                    continue
                new = bytearray(colors)
                mask = info.pts_mask
                idx = 0
                while mask:
                    if mask & 1:
                        new[idx] = PT_ALIVE
                    mask >>= 1
                    idx += 1
                out.append((info.label, StateCode(bytes(new), info.leftmost)))
        return out


@dataclass(frozen=True)
class _FaceInfo:
    label: UnitLabel
    leftmost: int
    rightmost: int
    span_mask: int
    low_interior_mask: int
    up_interior_mask: int


def _face_info(ps: PointSet, label: UnitLabel) -> _FaceInfo:
    low, up = hull_chains(label.ids)
    l, r = label.leftmost, label.rightmost
    span = ((1 << r) - 1) & ~((1 << (l + 1)) - 1)
    low_m = 0
    for v in low[1:-1]:
        low_m |= 1 << v
    up_m = 0
    for v in up[1:-1]:
        up_m |= 1 << v
    return _FaceInfo(label, l, r, span, low_m, up_m)


@lru_cache(maxsize=32)
def _face_tables(ps: PointSet, triangles_only: bool) -> tuple[tuple[_FaceInfo, ...], ...]:
    n = ps.n
    by_right: list[list[_FaceInfo]] = [[] for _ in range(n)]
    if triangles_only:
        faces = all_empty_triangles(ps)
    else:
        faces = all_empty_convex_faces(ps)
    for f in faces:
        info = _face_info(ps, f)
        by_right[info.rightmost].append(info)
    return tuple(tuple(lst) for lst in by_right)


class SubdivisionSystem(TransitionSystem):
    """Subdivisions swept as a rising x-monotone chain of used points.

    With all empty convex faces as units this counts convex subdivisions;
    restricted to empty triangles it counts triangulations.
    """

    palette = 2

    def __init__(self, triangles_only: bool):
        self.triangles_only = triangles_only
        self.name = "tr" if triangles_only else "cs"
        self.class_id = 5 if triangles_only else 4

    def initial(self, ps: PointSet) -> StateCode:
        return StateCode(_chain_colors(ps, use_upper=False), NO_MARKER)

    def is_target(self, ps, state) -> bool:
        return state.colors == _chain_colors(ps, use_upper=True)

    def transitions(self, ps, state):
        colors, m = state
        n = ps.n
        by_right = _face_tables(ps, self.triangles_only)
        alive = 0
        for idx in range(n):
            if colors[idx] == PT_ALIVE:
                alive |= 1 << idx
        out = []
        for j in range(m + 1, n):
            if colors[j] != PT_ALIVE:
                continue
            for info in by_right[j]:
                if colors[info.leftmost] != PT_ALIVE:
                    continue
                if alive & info.span_mask != info.low_interior_mask:
                    continue  # chain must run exactly along the face bottom
                new = bytearray(colors)
                mask = info.low_interior_mask
                idx = 0
                while mask:
                    if mask & 1:
                        new[idx] = PT_FREE
                    mask >>= 1
                    idx += 1
                mask = info.up_interior_mask
                idx = 0
                while mask:
                    if mask & 1:
                        new[idx] = PT_ALIVE
                    mask >>= 1
                    idx += 1
                out.append((info.label, StateCode(bytes(new), info.leftmost)))
        return out


class StSystem(TransitionSystem):
    """Crossing-free spanning trees over directed, border-decorated segments.

    Eight colors track, for each used point, its out-degree (0 or 1) and
    whether it exposes a drain and to which side.  Each new segment closes
    one face below itself; that face must consume exactly one drain, counted
    from the drains in the segment's shadow, the inward-facing drains at its
    endpoints, and any freshly attached borders pointing into it.
    """

    name = "st"
    class_id = 6
    palette = 8

    def initial(self, ps: PointSet) -> StateCode:
        return StateCode(bytes([ST_FREE]) * ps.n, NO_MARKER)

    def is_target(self, ps, state) -> bool:
        colors = state.colors
        if ps.n == 1:
            return True
        top = ps.top_index
        if colors[top] != ST_A00:
            return False
        return all(colors[idx] in (ST_A10, ST_DEAD)
                   for idx in range(ps.n) if idx != top)

    def transitions(self, ps, state):
        colors, m = state
        n = ps.n
        top = ps.top_index
        bottom = ps.bottom_index
        by_right = _seg_tables(ps)
        nonfree = 0
        drains = 0
        shadow_ok = 0
        for idx in range(n):
            c = colors[idx]
            if c != ST_FREE:
                nonfree |= 1 << idx
            if c in (ST_A0L, ST_A0R, ST_A1L, ST_A1R):
                drains |= 1 << idx
            if c == ST_DEAD or c in _ST_OUT1:
                shadow_ok |= 1 << idx
        out = []
        for j in range(max(m + 1, 1), n):
            cj = colors[j]
            if cj == ST_DEAD:
                continue
            for info in by_right[j]:
                i = info.i
                ci = colors[i]
                if ci == ST_DEAD:
                    continue
                if info.above_mask & nonfree:
                    continue
                if info.shadow_mask & ~shadow_ok:
                    continue  # buried points must already have out-degree 1
                base = (info.shadow_mask & drains).bit_count()
                base += ci in _ST_EXPOSES_R
                base += cj in _ST_EXPOSES_L
                bp_choices = (BORDER_LTOR, BORDER_RTOL) \
                    if ci == ST_FREE and i != bottom else (BORDER_NONE,)
                bq_choices = (BORDER_LTOR, BORDER_RTOL) \
                    if cj == ST_FREE and j != bottom else (BORDER_NONE,)
                for tail in (i, j):
                    ct = colors[tail]
                    if tail == top or not (ct == ST_FREE or ct in _ST_OUT0):
                        continue
                    for bp in bp_choices:
                        for bq in bq_choices:
                            if base + (bp == BORDER_RTOL) + (bq == BORDER_LTOR) != 1:
                                continue
                            new = bytearray(colors)
                            for s in info.shadow_ids:
                                new[s] = ST_DEAD
                            if ci == ST_FREE:
                                exp = 1 if bp == BORDER_LTOR else 0
                            else:
                                exp = 1 if ci in _ST_EXPOSES_L else 0
                            new[i] = _st_alive_code(
                                tail == i or ci in _ST_OUT1, exp)
                            if cj == ST_FREE:
                                exp = 2 if bq == BORDER_RTOL else 0
                            else:
                                exp = 2 if cj in _ST_EXPOSES_R else 0
                            new[j] = _st_alive_code(
                                tail == j or cj in _ST_OUT1, exp)
                            label = UnitLabel(TREE_SEGMENT, (i, j),
                                              tail=tail,
                                              border_left=bp,
                                              border_right=bq)
                            out.append((label, StateCode(bytes(new), i)))
        return out


class ScSystem(TransitionSystem):
    """Crossing-free spanning cycles: like the tree system but undirected,
    with degrees up to 2 and a final face of out-degree 0."""

    name = "sc"
    class_id = 7
    palette = 6

    def initial(self, ps: PointSet) -> StateCode:
        return StateCode(bytes([SC_FREE]) * ps.n, NO_MARKER)

    def is_target(self, ps, state) -> bool:
        return state.colors == bytes(ps.n)  # every point D0

    def transitions(self, ps, state):
        colors, m = state
        n = ps.n
        bottom = ps.bottom_index
        by_right = _seg_tables(ps)
        nonfree = 0
        deg2 = 0
        d1 = 0
        n_alive = 0
        for idx in range(n):
            c = colors[idx]
            if c != SC_FREE:
                nonfree |= 1 << idx
            if c in (SC_D0, SC_D1):
                deg2 |= 1 << idx
                if c == SC_D1:
                    d1 |= 1 << idx
            elif c != SC_FREE:
                n_alive += 1
        seg_count = (n_alive + 2 * deg2.bit_count()) // 2
        required = 0 if seg_count + 1 == n else 1
        out = []
        for j in range(max(m + 1, 1), n):
            cj = colors[j]
            if cj in (SC_D0, SC_D1):
                continue
            for info in by_right[j]:
                i = info.i
                ci = colors[i]
                if ci in (SC_D0, SC_D1):
                    continue
                if info.above_mask & nonfree:
                    continue
                if info.shadow_mask & ~deg2:
                    continue  # buried points must already have degree 2
                base = (info.shadow_mask & d1).bit_count()
                base += ci == SC_AR
                base += cj == SC_AL
                bp_choices = (BORDER_LTOR, BORDER_RTOL) \
                    if ci == SC_FREE and i != bottom else (BORDER_NONE,)
                bq_choices = (BORDER_LTOR, BORDER_RTOL) \
                    if cj == SC_FREE and j != bottom else (BORDER_NONE,)
                for bp in bp_choices:
                    for bq in bq_choices:
                        if base + (bp == BORDER_RTOL) + (bq == BORDER_LTOR) != required:
                            continue
                        new = bytearray(colors)
                        mask = info.shadow_mask & d1
                        idx = 0
                        while mask:
                            if mask & 1:
                                new[idx] = SC_D0
                            mask >>= 1
                            idx += 1
                        if ci == SC_FREE:
                            new[i] = SC_AL if bp == BORDER_LTOR else SC_A0
                        else:
                            new[i] = SC_D1 if ci == SC_AL else SC_D0
                        if cj == SC_FREE:
                            new[j] = SC_AR if bq == BORDER_RTOL else SC_A0
                        else:
                            new[j] = SC_D1 if cj == SC_AR else SC_D0
                        label = UnitLabel(CYCLE_SEGMENT, (i, j),
                                          border_left=bp, border_right=bq)
                        out.append((label, StateCode(bytes(new), i)))
        return out


def pg_system() -> PgSystem:
    return PgSystem()


def pm_system() -> PmSystem:
    return PmSystem()


def cp_system() -> CpSystem:
    return CpSystem()


def subdivision_system(triangles_only: bool = False) -> SubdivisionSystem:
    return SubdivisionSystem(triangles_only)


def tr_system() -> SubdivisionSystem:
    return SubdivisionSystem(triangles_only=True)


def cs_system() -> SubdivisionSystem:
    return SubdivisionSystem(triangles_only=False)


def st_system() -> StSystem:
    return StSystem()


def sc_system() -> ScSystem:
    return ScSystem()


CLASS_NAMES = ("pg", "cp", "pm", "cs", "tr", "st", "sc")

_FACTORIES = {
    "pg": pg_system,
    "cp": cp_system,
    "pm": pm_system,
    "cs": cs_system,
    "tr": tr_system,
    "st": st_system,
    "sc": sc_system,
}


def system_for(name: str) -> TransitionSystem:
    try:
        return _FACTORIES[name]()
    except KeyError:
        raise ValueError(f"unknown graph class {name!r}") from None


def prune_filter(name: str) -> Optional[Callable[[StateCode], bool]]:
    """Keep-predicate dropping states that can no longer reach a target.

    A drain exposed to the right that faces a drain exposed to the left,
    with only inert points between them, can never be consumed.
    """
    if name == "st":
        first = _ST_EXPOSES_R
        middle = (ST_DEAD, ST_FREE)
        last = _ST_EXPOSES_L
    elif name == "sc":
        first = (SC_AR,)
        middle = (SC_D0, SC_D1, SC_FREE)
        last = (SC_AL,)
    else:
        return None

    def keep(state: StateCode) -> bool:
        armed = False
        for c in state.colors:
            if c in first:
                armed = True
            elif c in last:
                if armed:
                    return False
                armed = False
            elif c not in middle:
                armed = False
        return True

    return keep


def forbidden_pattern_check(name: str, state: StateCode) -> bool:
    """True iff the state contains none of the patterns that geometry rules
    out; used as a build-time invariant assertion, never as a filter."""
    colors = state.colors
    if name == "pg":
        # buried, unused-run, buried: the two covering segments would cross
        armed_dead = False
        armed_free = False
        for c in colors:
            if c == PG_DEAD:
                if armed_free:
                    return False
                armed_dead, armed_free = True, False
            elif c == PG_FREE:
                armed_free = armed_dead
            else:
                armed_dead = armed_free = False
        return True
    if name == "st":
        # out-degree-1 drains pointing away from each other across unused
        # points, and out-degree-0 drains doing so across inert points
        armed1 = False
        armed2 = False
        for c in colors:
            n1 = c == ST_A1L or (armed1 and c == ST_FREE)
            n2 = c == ST_A0L or (armed2 and c in (ST_DEAD, ST_A00, ST_FREE))
            if armed1 and c == ST_A1R:
                return False
            if armed2 and c == ST_A0R:
                return False
            armed1, armed2 = n1, n2
        return True
    raise ValueError(f"no forbidden-pattern invariant for class {name!r}")
