"""planecount: counting and enumeration of crossing-free geometric graphs.

The seven supported graph classes on a planar point set in general position:

    pg  all crossing-free geometric graphs
    cp  crossing-free convex partitions
    pm  crossing-free perfect matchings
    cs  convex subdivisions
    tr  triangulations
    st  crossing-free spanning trees
    sc  crossing-free spanning cycles

Counting builds a leveled DAG over colored point states whose source-sink
paths correspond one-to-one to class members; counting, enumeration, and
unranking then run on that graph.
"""

from .errors import (
    CapExceededError,
    CollinearError,
    CoordinateOverflowError,
    DuplicateXError,
    FormatError,
    GenerationFailedError,
    MemoryBudgetExceededError,
    NonUniqueExtremeYError,
    NoExtremeError,
    OddSizeError,
    PlanecountError,
    PointSetError,
    ReplayRejectedError,
)
from .framework import CombinationGraph, StateCode, TransitionSystem, build, stats
from .geometry import Point, PointSet, orient, validate_point_set
from .pathops import count_paths, enumerate_paths, prune_dead_ends, unrank, validate_output
from .systems import CLASS_NAMES, prune_filter, system_for
from .estimator import CrossingFreeGraphCounter

__all__ = [
    "CLASS_NAMES",
    "CapExceededError",
    "CollinearError",
    "CombinationGraph",
    "CoordinateOverflowError",
    "CrossingFreeGraphCounter",
    "DuplicateXError",
    "FormatError",
    "GenerationFailedError",
    "MemoryBudgetExceededError",
    "NoExtremeError",
    "NonUniqueExtremeYError",
    "OddSizeError",
    "PlanecountError",
    "Point",
    "PointSet",
    "PointSetError",
    "ReplayRejectedError",
    "StateCode",
    "TransitionSystem",
    "build",
    "count_paths",
    "enumerate_paths",
    "orient",
    "prune_dead_ends",
    "prune_filter",
    "stats",
    "system_for",
    "unrank",
    "validate_output",
    "validate_point_set",
]

__version__ = "0.1.0"
