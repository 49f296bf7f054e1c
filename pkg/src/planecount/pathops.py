"""Source-to-sink path operations on a built state graph: exact counting,
dead-end removal, streaming enumeration, unranking, and geometric validation
of decoded outputs.

Counts accumulate backwards (number of paths from each node to the sink), so
unranking needs no second pass.  Node ids already form a topological order
because every edge goes one level down.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple, Optional

from .framework import CombinationGraph
from .geometry import (
    PointSet,
    convex_hull_ccw,
    point_in_convex,
    segments_cross,
    twice_polygon_area,
)
from .units import PART, UnitLabel, part_interior


def count_paths(g: CombinationGraph, store_counts: bool = True) -> int:
    """Number of source-to-sink paths; exact."""
    if g.suffix_counts is not None:
        return g.suffix_counts[0]
    counts = [0] * g.num_nodes
    for v in range(g.num_nodes - 1, -1, -1):
        c = 1 if g.targets[v] else 0
        for _, w in g.edges[v]:
            c += counts[w]
        counts[v] = c
    if store_counts:
        g.suffix_counts = counts
    return counts[0]


def prune_dead_ends(g: CombinationGraph) -> CombinationGraph:
    """Subgraph induced by nodes that lie on at least one source-sink path.

    The source is kept even when no path exists at all.  Idempotent, and
    count_paths is unchanged.
    """
    count_paths(g)
    assert g.suffix_counts is not None
    keep = [v == 0 or c > 0 for v, c in enumerate(g.suffix_counts)]
    remap = {}
    for v, k in enumerate(keep):
        if k:
            remap[v] = len(remap)
    nodes = [g.nodes[v] for v in remap]
    levels = [g.node_levels[v] for v in remap]
    targets = [g.targets[v] for v in remap]
    counts = [g.suffix_counts[v] for v in remap]
    edges = []
    for v in remap:
        edges.append([(lbl, remap[w]) for lbl, w in g.edges[v] if keep[w]])
    return CombinationGraph(
        system_name=g.system_name,
        class_id=g.class_id,
        n=g.n,
        palette=g.palette,
        nodes=nodes,
        node_levels=levels,
        edges=edges,
        targets=targets,
        suffix_counts=counts,
    )


def enumerate_paths(g: CombinationGraph,
                    limit: Optional[int] = None) -> Iterator[tuple[UnitLabel, ...]]:
    """Depth-first stream of the label sequence of every source-sink path.

    At each node the sink edge (on targets) comes before labeled edges in
    ascending label order, so outputs appear in lexicographic edge order and
    each path is emitted exactly once.
    """
    if limit is not None and limit <= 0:
        return
    emitted = 0
    stack: list[UnitLabel] = []

    def walk(v: int) -> Iterator[tuple[UnitLabel, ...]]:
        if g.targets[v]:
            yield tuple(stack)
        for lbl, w in g.edges[v]:
            stack.append(lbl)
            yield from walk(w)
            stack.pop()

    for path in walk(0):
        yield path
        emitted += 1
        if limit is not None and emitted >= limit:
            return


def unrank(g: CombinationGraph, k: int) -> tuple[UnitLabel, ...]:
    """The k-th path in enumerate_paths order, straight from suffix counts."""
    total = count_paths(g)
    if k < 0 or k >= total:
        raise IndexError(f"path index {k} out of range [0, {total})")
    assert g.suffix_counts is not None
    counts = g.suffix_counts
    v = 0
    labels: list[UnitLabel] = []
    while True:
        if g.targets[v]:
            if k == 0:
                return tuple(labels)
            k -= 1
        for lbl, w in g.edges[v]:
            if k < counts[w]:
                labels.append(lbl)
                v = w
                break
            k -= counts[w]
        else:
            raise AssertionError("suffix counts inconsistent with edges")


class ValidationResult(NamedTuple):
    ok: bool
    reason: Optional[str]

    def __bool__(self) -> bool:
        return self.ok


def _label_edges(ps: PointSet, labels) -> list[tuple[int, int]]:
    edges = []
    for lbl in labels:
        edges.extend(tuple(sorted(e)) for e in lbl.edge_pairs())
    return edges


def _any_crossing(ps: PointSet, edges) -> bool:
    for a in range(len(edges)):
        i, j = edges[a]
        for b in range(a + 1, len(edges)):
            k, l = edges[b]
            if segments_cross(ps[i], ps[j], ps[k], ps[l]):
                return True
    return False


def validate_output(class_name: str, ps: PointSet, labels) -> ValidationResult:
    """Geometric recheck of one decoded output against its class definition."""
    labels = list(labels)
    edges = _label_edges(ps, labels)
    if _any_crossing(ps, edges):
        return ValidationResult(False, "Crossing")
    n = ps.n
    if class_name == "pg":
        if len(set(edges)) != len(edges):
            return ValidationResult(False, "DuplicateEdge")
        return ValidationResult(True, None)
    if class_name == "pm":
        deg = [0] * n
        for i, j in edges:
            deg[i] += 1
            deg[j] += 1
        if any(d != 1 for d in deg):
            return ValidationResult(False, "NotPerfectMatching")
        return ValidationResult(True, None)
    if class_name == "cp":
        seen: set[int] = set()
        for lbl in labels:
            pts = set(lbl.point_ids(ps))
            if pts & seen:
                return ValidationResult(False, "OverlappingParts")
            seen |= pts
            if lbl.kind == PART and len(lbl.ids) >= 3:
                hull = lbl.ids
                outside = set(range(n)) - pts
                if any(point_in_convex(ps, hull, q) for q in outside):
                    return ValidationResult(False, "PointInsideForeignHull")
        if seen != set(range(n)):
            return ValidationResult(False, "NotPartition")
        return ValidationResult(True, None)
    if class_name in ("cs", "tr"):
        hull_ccw = convex_hull_ccw(ps, range(n))
        area = twice_polygon_area(ps, hull_ccw) if len(hull_ccw) >= 3 else 0
        total = 0
        used: set[int] = set()
        for lbl in labels:
            if class_name == "tr" and len(lbl.ids) != 3:
                return ValidationResult(False, "NotATriangle")
            if part_interior(ps, lbl.ids):
                return ValidationResult(False, "FaceNotEmpty")
            total += twice_polygon_area(ps, lbl.ids)
            used |= set(lbl.ids)
        if total != area:
            return ValidationResult(False, "NotSubdivision")
        if n >= 3 and used != set(range(n)):
            return ValidationResult(False, "UnusedPoint")
        return ValidationResult(True, None)
    if class_name == "st":
        if len(edges) != n - 1 or len(set(edges)) != len(edges):
            return ValidationResult(False, "NotSpanningTree")
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, j in edges:
            ri, rj = find(i), find(j)
            if ri == rj:
                return ValidationResult(False, "NotSpanningTree")
            parent[ri] = rj
        return ValidationResult(True, None)
    if class_name == "sc":
        if n < 3 or len(edges) != n or len(set(edges)) != len(edges):
            return ValidationResult(False, "NotHamiltonianCycle")
        adj: list[list[int]] = [[] for _ in range(n)]
        for i, j in edges:
            adj[i].append(j)
            adj[j].append(i)
        if any(len(a) != 2 for a in adj):
            return ValidationResult(False, "NotHamiltonianCycle")
        seen = 1
        prev, cur = -1, 0
        while True:
            nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
            if nxt == 0:
                break
            prev, cur = cur, nxt
            seen += 1
        if seen != n:
            return ValidationResult(False, "NotHamiltonianCycle")
        return ValidationResult(True, None)
    raise ValueError(f"unknown graph class {class_name!r}")
