"""Coerce graph-like inputs into :class:`~homshift.graph.Graph`."""

from __future__ import annotations

from pathlib import Path

from .errors import DomainError, GraphParseError
from .graph import Graph, fixture, parse_graph


def check_graph(x):
    """Accept a Graph, edge-list text, a ``fixture:name[:k]`` spec, a path,
    an iterable of name pairs, or anything with an ``edges()`` method
    (e.g. a networkx graph)."""
    if isinstance(x, Graph):
        return x
    if isinstance(x, Path):
        return parse_graph(x.read_text())
    if isinstance(x, str):
        if x.startswith("fixture:"):
            return fixture_from_spec(x[len("fixture:"):])
        return parse_graph(x)
    edges = x.edges() if hasattr(x, "edges") and callable(x.edges) else x
    try:
        pairs = [tuple(map(str, e[:2])) if not isinstance(e, str) else None for e in edges]
    except TypeError:
        raise DomainError(f"cannot interpret {type(x).__name__} as a graph") from None
    if any(p is None or len(p) != 2 for p in pairs):
        raise DomainError("edges must be pairs of vertex names")
    return parse_graph("\n".join(f"{a} {b}" for a, b in pairs))


def fixture_from_spec(spec):
    """``"cycle:5"`` -> C_5, ``"hard_square"`` -> hard-square graph."""
    name, _, k = spec.partition(":")
    try:
        k = int(k) if k else None
    except ValueError:
        raise GraphParseError(f"bad fixture parameter {k!r}") from None
    return fixture(name, k)


def check_graphs(X):
    if isinstance(X, (Graph, str, Path)):
        return [check_graph(X)]
    return [check_graph(x) for x in X]
