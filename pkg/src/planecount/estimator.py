"""scikit-learn style front end.

CrossingFreeGraphCounter follows the fit-then-query idiom: `fit(X)` validates
the points and builds the state graph for the configured class, after which
counts, enumeration, and unranking are available.  get_params/set_params come
from BaseEstimator, so the counter composes with the usual sklearn tooling.
"""

from __future__ import annotations

from typing import Iterator, Optional

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.exceptions import NotFittedError

from .framework import build
from .geometry import PointSet, validate_point_set
from .pathops import count_paths, enumerate_paths, prune_dead_ends, unrank
from .systems import CLASS_NAMES, prune_filter, system_for
from .units import UnitLabel


def check_points(X) -> list[tuple[int, int]]:
    """Validate an (n, 2) array-like of exact integer coordinates.

    Floats are accepted only when they carry no fractional part; anything
    else would silently break the exact predicates.
    """
    arr = np.asarray(X)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError(f"expected an (n, 2) point array, got shape {arr.shape}")
    if arr.shape[0] == 0:
        raise ValueError("expected at least one point")
    if not np.issubdtype(arr.dtype, np.number):
        raise ValueError("point coordinates must be numeric")
    if np.issubdtype(arr.dtype, np.floating):
        if not np.all(np.isfinite(arr)) or np.any(arr != np.floor(arr)):
            raise ValueError("point coordinates must be exact integers")
    return [(int(x), int(y)) for x, y in arr]


class CrossingFreeGraphCounter(BaseEstimator):
    """Count and enumerate one class of crossing-free geometric graphs.

    Parameters
    ----------
    graph_class : one of "pg", "cp", "pm", "cs", "tr", "st", "sc".
    prune : drop states that provably cannot reach a target while building
        (only has an effect for "st" and "sc"; counts are unchanged).
    node_cap : optional limit on the number of graph states.

    Attributes after fit
    --------------------
    point_set_ : the validated PointSet.
    graph_     : the built state DAG.
    count_     : exact number of class members (arbitrary precision).
    """

    def __init__(self, graph_class: str = "tr", prune: bool = False,
                 node_cap: Optional[int] = None):
        self.graph_class = graph_class
        self.prune = prune
        self.node_cap = node_cap

    def fit(self, X, y=None):
        if self.graph_class not in CLASS_NAMES:
            raise ValueError(f"graph_class must be one of {CLASS_NAMES}, "
                             f"got {self.graph_class!r}")
        points = check_points(X)
        self.point_set_: PointSet = validate_point_set(points)
        system = system_for(self.graph_class)
        keep = prune_filter(self.graph_class) if self.prune else None
        self.graph_ = build(self.point_set_, system, prune=keep,
                            node_cap=self.node_cap)
        self.count_: int = count_paths(self.graph_)
        return self

    def _require_fitted(self):
        if not hasattr(self, "graph_"):
            raise NotFittedError(
                "This CrossingFreeGraphCounter instance is not fitted yet; "
                "call fit(X) first.")

    def enumerate_graphs(self, limit: Optional[int] = None) -> Iterator[tuple[UnitLabel, ...]]:
        """Stream every class member as its label sequence."""
        self._require_fitted()
        pruned = prune_dead_ends(self.graph_)
        return enumerate_paths(pruned, limit=limit)

    def unrank(self, k: int) -> tuple[UnitLabel, ...]:
        """The k-th member in enumeration order."""
        self._require_fitted()
        return unrank(self.graph_, k)

    def edge_sets(self, limit: Optional[int] = None) -> Iterator[frozenset]:
        """Stream members as frozensets of (i, j) edges."""
        self._require_fitted()
        for labels in self.enumerate_graphs(limit=limit):
            edges = []
            for lbl in labels:
                edges.extend(tuple(sorted(e)) for e in lbl.edge_pairs())
            yield frozenset(edges)
