"""Problem-independent state machinery: states, transition-system interface,
the leveled state graph, and its deterministic bottom-up builder.

A state graph is a DAG whose vertices are point colorings (plus one marker)
and whose labeled edges each place one more unit.  Every edge goes from
level k to level k+1, so node order is a topological order for free.  Target
nodes carry an implicit unlabeled edge to an implicit sink.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Callable, Iterable, NamedTuple, Optional

from .errors import MemoryBudgetExceededError
from .geometry import PointSet
from .units import UnitLabel

DEFAULT_NODE_CAP = 1 << 27
NODE_CAP_ENV = "PLANECOUNT_NODE_CAP"

NO_MARKER = -1


class StateCode(NamedTuple):
    """One graph vertex: per-point color codes plus the marker point.

    The marker is the left endpoint of the unit placed last and is NO_MARKER
    exactly on the all-initial source state.
    """

    colors: bytes
    marker: int

    def encode(self, palette: int) -> bytes:
        """Canonical packed encoding: bit-packed colors then the marker."""
        width = max(1, (palette - 1).bit_length())
        acc = 0
        for i, c in enumerate(self.colors):
            acc |= c << (i * width)
        nbytes = (len(self.colors) * width + 7) // 8
        m = 0xFFFF if self.marker == NO_MARKER else self.marker
        return acc.to_bytes(nbytes, "little") + m.to_bytes(2, "little")


class TransitionSystem:
    """Interface every graph class implements.

    Systems are stateless values: transitions are pure functions of the
    point set and the state, so instances can be shared freely.
    """

    name: str = "?"
    class_id: int = 0
    palette: int = 0

    def initial(self, ps: PointSet) -> StateCode:
        raise NotImplementedError

    def transitions(self, ps: PointSet, state: StateCode) -> list[tuple[UnitLabel, StateCode]]:
        raise NotImplementedError

    def is_target(self, ps: PointSet, state: StateCode) -> bool:
        raise NotImplementedError


@dataclass
class CombinationGraph:
    """Leveled DAG over StateCodes with one labeled edge per unit placement.

    Node 0 is the source.  The sink is implicit: every node flagged in
    `targets` has one unlabeled edge to it.  `suffix_counts[v]`, when
    present, is the number of v-to-sink paths.
    """

    system_name: str
    class_id: int
    n: int
    palette: int
    nodes: list[StateCode]
    node_levels: list[int]
    edges: list[list[tuple[UnitLabel, int]]]
    targets: list[bool]
    suffix_counts: Optional[list[int]] = field(default=None, repr=False)

    @property
    def num_nodes(self) -> int:
        return len(self.nodes)

    @property
    def num_labeled_edges(self) -> int:
        return sum(len(e) for e in self.edges)

    def level_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for lv in self.node_levels:
            hist[lv] = hist.get(lv, 0) + 1
        return hist


def node_cap_from_env(default: int = DEFAULT_NODE_CAP) -> int:
    raw = os.environ.get(NODE_CAP_ENV)
    if raw is None:
        return default
    return int(raw)


def build(
    ps: PointSet,
    system: TransitionSystem,
    prune: Optional[Callable[[StateCode], bool]] = None,
    node_cap: Optional[int] = None,
    tick: Optional[Callable[[], None]] = None,
) -> CombinationGraph:
    """Breadth-first bottom-up construction of the state graph.

    Level k+1 is the deduplicated set of successors of level k that pass the
    optional prune filter (a keep-predicate).  Node ids are assigned level by
    level in canonical-encoding order, so two builds of the same input are
    identical.  `tick`, when given, is called once per expanded node.

    Raises MemoryBudgetExceededError when the node count passes the cap.
    """
    cap = node_cap_from_env(DEFAULT_NODE_CAP if node_cap is None else node_cap)
    palette = system.palette

    src = system.initial(ps)
    nodes: list[StateCode] = [src]
    node_levels: list[int] = [0]
    edges: list[list[tuple[UnitLabel, int]]] = [[]]
    targets: list[bool] = [system.is_target(ps, src)]

    frontier: dict[StateCode, int] = {src: 0}
    level = 0
    while frontier:
        pending: list[tuple[int, UnitLabel, StateCode]] = []
        nxt: dict[StateCode, int] = {}
        for state, vid in frontier.items():
            if tick is not None:
                tick()
            for label, succ in system.transitions(ps, state):
                if succ == state:
                    continue  # progressivity guard: never create a loop
                if prune is not None and succ not in nxt and not prune(succ):
                    nxt[succ] = -1
                    continue
                slot = nxt.get(succ)
                if slot == -1:
                    continue
                if slot is None:
                    nxt[succ] = -2
                pending.append((vid, label, succ))
        fresh = [s for s, slot in nxt.items() if slot == -2]
        fresh.sort(key=lambda s: s.encode(palette))
        if len(nodes) + len(fresh) > cap:
            raise MemoryBudgetExceededError(cap)
        level += 1
        ids: dict[StateCode, int] = {}
        for s in fresh:
            ids[s] = len(nodes)
            nodes.append(s)
            node_levels.append(level)
            edges.append([])
            targets.append(system.is_target(ps, s))
        for vid, label, succ in pending:
            edges[vid].append((label, ids[succ]))
        frontier = ids
    for e in edges:
        e.sort(key=lambda le: le[0].sort_key())
    return CombinationGraph(
        system_name=system.name,
        class_id=system.class_id,
        n=ps.n,
        palette=palette,
        nodes=nodes,
        node_levels=node_levels,
        edges=edges,
        targets=targets,
    )


def stats(g: CombinationGraph) -> dict:
    """Exact tallies used by the CLI's --stats flag."""
    return {
        "nodes": g.num_nodes,
        "labeled_edges": g.num_labeled_edges,
        "targets": sum(g.targets),
        "level_histogram": g.level_histogram(),
    }
