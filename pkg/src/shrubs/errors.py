"""Exception types shared across the library.

Every domain error derives from :class:`ShrubError`, so callers (and the
command line front end) can distinguish domain failures from programming
errors.
"""


class ShrubError(Exception):
    """Base class for all domain errors raised by this library."""


class HeightJump(ShrubError):
    """An edge joins two vertices whose heights do not differ by one."""

    def __init__(self, edge, heights=None):
        self.edge = tuple(edge)
        detail = "" if heights is None else f" (heights {heights[0]} and {heights[1]})"
        super().__init__(f"edge {self.edge[0]!r}-{self.edge[1]!r} joins non-adjacent levels{detail}")


class Unsupported(ShrubError):
    """A positive-height vertex has no edge to the level below it."""

    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"vertex {vertex!r} has positive height but covers nothing")


class ForbiddenPattern(ShrubError):
    """One of the two excluded induced configurations occurs.

    ``pattern`` is ``"F4"`` (four vertices: a vertex covering two vertices
    whose own cover sets differ) or ``"F5"`` (five vertices: two same-level
    vertices whose cover sets overlap without being nested).  ``witnesses``
    lists the offending vertices.
    """

    def __init__(self, pattern, witnesses):
        self.pattern = pattern
        self.witnesses = tuple(witnesses)
        super().__init__(f"forbidden pattern {pattern} on vertices {self.witnesses!r}")


class UnknownLabel(ShrubError):
    """A label was used that does not belong to the relevant vertex set."""

    def __init__(self, label, context=""):
        self.label = label
        suffix = f" in {context}" if context else ""
        super().__init__(f"unknown label {label!r}{suffix}")


class LabelClash(ShrubError):
    """Two structures that must have disjoint labels share some."""

    def __init__(self, labels):
        self.labels = tuple(labels)
        super().__init__(f"label clash on {self.labels!r}")


class NotALeaf(ShrubError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"vertex {vertex!r} is not a leaf")


class NotCorrelated(ShrubError):
    def __init__(self, pair):
        self.pair = tuple(pair)
        super().__init__(f"vertices {self.pair!r} are not correlated")


class NotAForest(ShrubError):
    def __init__(self, vertex=None):
        self.vertex = vertex
        detail = f" (vertex {vertex!r} is ramified)" if vertex is not None else ""
        super().__init__(f"underlying shrub is not a forest{detail}")


class CapExceeded(ShrubError):
    """A size-guarded operation was asked to exceed its configured cap."""


class DegreeCapExceeded(ShrubError):
    """Polynomial expansion grew past the configured size guard."""


class MalformedWord(ShrubError):
    """A generator word is structurally invalid."""


class NotInZinbielImage(ShrubError):
    """A mould element is not a combination of total-order fractions."""


class NotInImage(ShrubError):
    """A fraction is not the image of any shrub."""


class ZeroDenominator(ShrubError):
    """A denominator factor vanished (or was zero to begin with)."""
