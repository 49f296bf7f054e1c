"""Exception types shared across the package."""


class PlanecountError(Exception):
    """Base class for all package-specific errors."""


class PointSetError(PlanecountError):
    """A raw point list violates a point-set invariant."""


class DuplicateXError(PointSetError):
    def __init__(self, i, j):
        self.indices = (i, j)
        super().__init__(f"points {i} and {j} share the same x-coordinate")


class CollinearError(PointSetError):
    def __init__(self, i, j, k):
        self.indices = (i, j, k)
        super().__init__(f"points {i}, {j}, {k} are collinear")


class NonUniqueExtremeYError(PointSetError):
    def __init__(self, i, j, which):
        self.indices = (i, j)
        self.which = which
        super().__init__(f"points {i} and {j} both attain the {which} y-coordinate")


class CoordinateOverflowError(PointSetError):
    def __init__(self, index, bound):
        self.index = index
        self.bound = bound
        super().__init__(f"point {index} has a coordinate exceeding |{bound}|")


class MemoryBudgetExceededError(PlanecountError):
    """The state-graph builder hit its node cap."""

    def __init__(self, limit):
        self.limit = limit
        super().__init__(f"state graph exceeds the configured node cap of {limit}")


class OddSizeError(PlanecountError):
    """Perfect matchings need an even number of points."""


class CapExceededError(PlanecountError):
    """Brute-force reference sized beyond its configured cap."""


class NoExtremeError(PlanecountError):
    """A nonempty crossing-free combination without an extreme element.

    Must never happen; raised to turn a silent logic error into a loud one.
    """


class ReplayRejectedError(PlanecountError):
    """A canonical-order replay hit a transition the system refused."""

    def __init__(self, step, unit):
        self.step = step
        self.unit = unit
        super().__init__(f"replay rejected at step {step}: {unit}")


class GenerationFailedError(PlanecountError):
    """Random point generation exhausted its retry budget."""


class FormatError(PlanecountError):
    """A persisted graph file is malformed."""

    def __init__(self, offset, reason):
        self.offset = offset
        super().__init__(f"bad graph file at byte {offset}: {reason}")
