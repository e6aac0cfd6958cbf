"""Exception hierarchy shared by every module."""

from __future__ import annotations


class StarConvexError(ValueError):
    """Base class for all errors raised by :mod:`starconvex`."""


class GraphFormatError(StarConvexError):
    """A graph (or class) document could not be turned into a valid value.

    ``token`` holds the offending fragment of input when one can be named.
    """

    def __init__(self, message: str, token: object = None) -> None:
        super().__init__(message if token is None else f"{message}: {token!r}")
        self.token = token


class UnknownVertexError(StarConvexError):
    def __init__(self, vertex: str) -> None:
        super().__init__(f"unknown vertex id: {vertex!r}")
        self.vertex = vertex


class DomainError(StarConvexError):
    """Input lies outside the domain where star-convexity is defined."""


class NoLeavesError(DomainError):
    def __init__(self) -> None:
        super().__init__("graph has no leaf vertices")


class DisconnectedGraphError(DomainError):
    def __init__(self) -> None:
        super().__init__("graph is not connected")


class NotATreeError(DomainError):
    def __init__(self) -> None:
        super().__init__("graph is not a tree")


class NotStarConvexError(DomainError):
    def __init__(self) -> None:
        super().__init__("graph is not star-convex")


class WeightConflictError(StarConvexError):
    def __init__(self, vertex: str, first: object, second: object) -> None:
        super().__init__(f"vertex {vertex!r} has conflicting weights {first} and {second}")
        self.vertex = vertex
        self.weights = (first, second)


class InvariantViolation(AssertionError):
    """A proven structural property failed; always indicates a bug."""
