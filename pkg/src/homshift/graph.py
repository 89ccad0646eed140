"""Finite undirected graphs with optional self-loops.

Vertices are dense integer ids; ``names[i]`` is the label of vertex ``i``.
A vertex belongs to its own neighbourhood exactly when it carries a loop,
which is the convention every folding and covering routine relies on.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass, field

from . import _search
from .errors import DomainError, GraphParseError

__all__ = [
    "Graph",
    "BasicAnalysis",
    "parse_graph",
    "fixture",
    "FIXTURES",
    "analyze_basic",
    "tensor_product",
    "cartesian_product",
    "connected_components",
    "to_edgelist",
    "to_dot",
]


@dataclass(frozen=True)
class Graph:
    names: tuple[str, ...]
    adj: tuple[frozenset[int], ...]
    nbrs: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.names) != len(self.adj):
            raise DomainError("names and adjacency have different lengths")
        if len(set(self.names)) != len(self.names):
            raise DomainError("vertex names must be unique")
        n = len(self.adj)
        for v, nb in enumerate(self.adj):
            if not nb:
                raise DomainError(f"vertex {self.names[v]!r} is isolated")
            for u in nb:
                if not 0 <= u < n or v not in self.adj[u]:
                    raise DomainError("adjacency is not symmetric")
        object.__setattr__(self, "nbrs", tuple(tuple(sorted(nb)) for nb in self.adj))

    @classmethod
    def from_edges(cls, edges, names=None):
        """Build a graph from ``(u, v)`` pairs of integer ids.

        When ``names`` is omitted vertices are named by their ids.
        """
        edges = list(edges)
        if names is None:
            n = 1 + max((max(e) for e in edges), default=-1)
            names = [str(i) for i in range(n)]
        adj = [set() for _ in names]
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        return cls(tuple(names), tuple(frozenset(s) for s in adj))

    def __len__(self):
        return len(self.names)

    @property
    def n_vertices(self):
        return len(self.names)

    def has_edge(self, u, v):
        return v in self.adj[u]

    def has_loop(self, v):
        return v in self.adj[v]

    @property
    def loops(self):
        return tuple(v for v in range(len(self)) if v in self.adj[v])

    def edges(self):
        """Edges as ``(u, v)`` with ``u <= v``, in lexicographic order."""
        return [(u, v) for u in range(len(self)) for v in self.nbrs[u] if u <= v]

    @property
    def n_edges(self):
        return len(self.edges())

    def degree(self, v):
        return len(self.adj[v])

    def index(self, name):
        try:
            return self.names.index(str(name))
        except ValueError:
            raise DomainError(f"unknown vertex {name!r}") from None

    def induced(self, vertices):
        """Induced subgraph on ``vertices`` (kept in the given order)."""
        vertices = list(vertices)
        pos = {v: i for i, v in enumerate(vertices)}
        adj = [frozenset(pos[u] for u in self.adj[v] if u in pos) for v in vertices]
        return Graph(tuple(self.names[v] for v in vertices), tuple(adj))

    def summary(self):
        return {
            "vertices": len(self),
            "edges": self.n_edges,
            "loops": len(self.loops),
            "looped_vertices": [self.names[v] for v in self.loops],
        }


def parse_graph(text):
    """Parse an edge list: two vertex names per line, ``#`` starts a comment line."""
    names = []
    ids = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphParseError(f"expected 2 vertex names, got {len(tokens)}", line=lineno)
        pair = []
        for tok in tokens:
            if tok not in ids:
                ids[tok] = len(names)
                names.append(tok)
            pair.append(ids[tok])
        edges.append(tuple(pair))
    if not names:
        raise GraphParseError("graph has no edges")
    return Graph.from_edges(edges, names)


def to_edgelist(g):
    """Serialize to the text format read by :func:`parse_graph`.

    Edges introducing new vertices are written first, in id order, so that
    parsing the output reproduces the ids of any graph that came from
    :func:`parse_graph`. Other graphs round-trip up to isomorphism.
    """
    order = []
    used = set()

    def emit(u, v):
        used.add((min(u, v), max(u, v)))
        order.append((u, v))

    introduced = 0
    for c in range(len(g)):
        if c < introduced:
            continue
        back = [w for w in g.nbrs[c] if w < c]
        if back:
            emit(back[0], c)
            introduced = c + 1
        elif c in g.adj[c]:
            emit(c, c)
            introduced = c + 1
        else:
            w = g.nbrs[c][0]
            emit(c, w)
            introduced = max(c, w) + 1 if w == c + 1 else c + 1
    for u, v in g.edges():
        if (u, v) not in used:
            emit(u, v)
    return "".join(f"{g.names[u]} {g.names[v]}\n" for u, v in order)


def _complete(k):
    return Graph.from_edges(itertools.combinations(range(k), 2), [str(i + 1) for i in range(k)])


def _cycle(k):
    return Graph.from_edges(((i, (i + 1) % k) for i in range(k)), [str(i) for i in range(k)])


def _barbell(k):
    edges = [(0, 0), (k - 1, k - 1)] + [(i, i + 1) for i in range(k - 1)]
    return Graph.from_edges(edges, [str(i + 1) for i in range(k)])


def _path(k):
    return Graph.from_edges(((i, i + 1) for i in range(k - 1)), [str(i) for i in range(k)])


def _star(k):
    return Graph.from_edges(((0, i) for i in range(1, k)), [str(i) for i in range(k)])


def _hard_square(_k=None):
    return parse_graph("0 1\n0 0\n")


FIXTURES = {
    "complete": (_complete, 2),
    "cycle": (_cycle, 3),
    "barbell": (_barbell, 2),
    "path": (_path, 2),
    "star": (_star, 2),
    "hard_square": (_hard_square, None),
}


def fixture(name, k=None):
    """Named graph families: K_k, C_k, Bar_k, P_k, the star on k vertices, hard square.

    >>> fixture("barbell", 4).loops
    (0, 3)
    """
    try:
        build, k_min = FIXTURES[name]
    except KeyError:
        raise DomainError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}") from None
    if k_min is None:
        return build()
    if k is None or int(k) < k_min:
        raise DomainError(f"fixture {name!r} needs k >= {k_min}, got {k}")
    return build(int(k))


@dataclass(frozen=True)
class BasicAnalysis:
    connected: bool
    bipartition: tuple[int, ...] | None
    diameter: float

    @property
    def bipartite(self):
        return self.bipartition is not None

    @property
    def transitive(self):
        return self.connected

    @property
    def mixing(self):
        return self.connected and self.bipartition is None


def analyze_basic(g):
    labels = _search.component_labels(g.nbrs)
    connected = max(labels, default=0) == 0
    return BasicAnalysis(
        connected=connected,
        bipartition=_search.two_coloring(g.nbrs),
        diameter=_search.diameter(g.nbrs) if connected else math.inf,
    )


def _drop_isolated(names, adj, what):
    keep = [i for i, nb in enumerate(adj) if nb]
    if len(keep) < len(adj):
        dropped = [names[i] for i in range(len(adj)) if not adj[i]]
        warnings.warn(f"{what}: dropped isolated vertices {dropped}", stacklevel=3)
    pos = {v: i for i, v in enumerate(keep)}
    return Graph(
        tuple(names[v] for v in keep),
        tuple(frozenset(pos[u] for u in adj[v]) for v in keep),
    )


def _product(g1, g2, adjacent, what):
    pairs = [(a, b) for a in range(len(g1)) for b in range(len(g2))]
    pos = {p: i for i, p in enumerate(pairs)}
    names = tuple(f"({g1.names[a]},{g2.names[b]})" for a, b in pairs)
    adj = []
    for a, b in pairs:
        adj.append(frozenset(pos[(c, d)] for c, d in pairs if adjacent(a, b, c, d)))
    return _drop_isolated(names, adj, what)


def tensor_product(g1, g2):
    """Pairs adjacent when both coordinates are adjacent."""
    return _product(g1, g2, lambda a, b, c, d: g1.has_edge(a, c) and g2.has_edge(b, d), "tensor product")


def cartesian_product(g1, g2):
    """Pairs adjacent when one coordinate is equal and the other adjacent."""

    def adjacent(a, b, c, d):
        return (a == c and g2.has_edge(b, d)) or (b == d and g1.has_edge(a, c))

    return _product(g1, g2, adjacent, "cartesian product")


def connected_components(g):
    labels = _search.component_labels(g.nbrs)
    groups = {}
    for v, lab in enumerate(labels):
        groups.setdefault(lab, []).append(v)
    return [g.induced(groups[lab]) for lab in sorted(groups)]


def _dot_id(name):
    return '"' + str(name).replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g, name="H"):
    lines = [f"graph {_dot_id(name)} {{"]
    for v in range(len(g)):
        lines.append(f"  {_dot_id(g.names[v])};")
    for u, v in g.edges():
        lines.append(f"  {_dot_id(g.names[u])} -- {_dot_id(g.names[v])};")
    lines.append("}")
    return "\n".join(lines) + "\n"
