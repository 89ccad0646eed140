"""Folds, dismantlability, four-cycle hom-freeness and collapsing maps.

A vertex ``v`` folds into ``w`` (``v != w``) when ``N(v)`` is a subset of
``N(w)``; loops count, so ``v`` is in ``N(v)`` iff it is looped. Under this
reading the barbell graphs are stiff while the hard-square graph folds down
to a single looped vertex.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass

from . import _search
from .errors import DomainError
from .graph import Graph, to_edgelist

__all__ = [
    "FoldSequence",
    "Endomorphism",
    "CollapseSearch",
    "find_fold",
    "stiff_reduce",
    "terminal_shape",
    "is_dismantlable",
    "is_bipartite_dismantlable",
    "is_four_cycle_hom_free",
    "four_cycle_hom_free_structural",
    "find_collapsing_map",
]


def find_fold(g, alive=None):
    """Lexicographically smallest ``(v, w)`` with ``v`` folding into ``w``, or None.

    ``alive`` restricts the search to an induced subgraph.
    """
    alive = frozenset(range(len(g))) if alive is None else frozenset(alive)
    return _first_fold(g, alive)


def _first_fold(g, alive):
    order = sorted(alive)
    for v in order:
        nv = g.adj[v] & alive
        for w in order:
            if v != w and nv <= g.adj[w]:
                return v, w
    return None


@dataclass(frozen=True)
class FoldSequence:
    """Folds applied in order, as ``(folded, target)`` ids of the original graph."""

    base: Graph
    steps: tuple[tuple[int, int], ...]
    remaining: tuple[int, ...]

    @property
    def terminal(self):
        return self.base.induced(self.remaining)

    def to_json(self):
        names = self.base.names
        term = self.terminal
        return {
            "steps": [[names[v], names[w]] for v, w in self.steps],
            "terminal": [[term.names[u], term.names[v]] for u, v in term.edges()],
        }

    def dumps(self):
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


def stiff_reduce(g, policy="lexicographic", seed=None):
    """Fold until stiff.

    ``policy="random"`` picks uniformly among all available folds using a
    ``random.Random(seed)`` stream; the terminal graph is the same up to
    isomorphism either way.
    """
    if policy not in ("lexicographic", "random"):
        raise DomainError(f"unknown fold policy {policy!r}")
    rng = random.Random(seed) if policy == "random" else None
    alive = set(range(len(g)))
    steps = []
    while True:
        frozen = frozenset(alive)
        if rng is None:
            pair = _first_fold(g, frozen)
        else:
            options = [
                (v, w)
                for v in sorted(frozen)
                for w in sorted(frozen)
                if v != w and g.adj[v] & frozen <= g.adj[w]
            ]
            pair = rng.choice(options) if options else None
        if pair is None:
            break
        steps.append(pair)
        alive.discard(pair[0])
    return FoldSequence(g, tuple(steps), tuple(sorted(alive)))


def terminal_shape(g):
    """Classify a stiff terminal: ``"looped_vertex"``, ``"vertex"``, ``"edge"`` or ``"other"``."""
    if len(g) == 1:
        return "looped_vertex" if g.loops else "vertex"
    if len(g) == 2 and not g.loops and g.n_edges == 1:
        return "edge"
    return "other"


def _require_connected(g):
    if max(_search.component_labels(g.nbrs), default=0) != 0:
        raise DomainError("graph must be connected")


def is_dismantlable(g):
    _require_connected(g)
    return terminal_shape(stiff_reduce(g).terminal) == "looped_vertex"


def is_bipartite_dismantlable(g):
    _require_connected(g)
    return terminal_shape(stiff_reduce(g).terminal) in ("looped_vertex", "edge")


def is_four_cycle_hom_free(g):
    """True iff every homomorphism f: C_4 -> g has f(0) = f(2) or f(1) = f(3)."""
    nb = g.nbrs
    for a in range(len(g)):
        for b in nb[a]:
            for c in nb[b]:
                if c == a:
                    continue
                for d in nb[c]:
                    if d != b and a in g.adj[d]:
                        return False
    return True


def four_cycle_hom_free_structural(g):
    """Equivalent test: no 4-cycle subgraph, and no looped vertex with two
    adjacent non-loop neighbours (one looped neighbour counts as such a pair)."""
    n = len(g)
    for a, b, c, d in itertools.permutations(range(n), 4):
        if a < b and a < c and a < d and b < d:
            if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d) and g.has_edge(d, a):
                return False
    for v in g.loops:
        others = [w for w in g.nbrs[v] if w != v]
        for w1 in others:
            for w2 in others:
                if g.has_edge(w1, w2):
                    return False
    return True


@dataclass(frozen=True)
class Endomorphism:
    base: Graph
    image: tuple[int, ...]

    def __call__(self, v):
        return self.image[v]

    def is_homomorphism(self):
        g = self.base
        return all(g.has_edge(self.image[u], self.image[v]) for u, v in g.edges())

    def is_adjacent_to_identity(self):
        return all(self.base.has_edge(v, fv) for v, fv in enumerate(self.image))

    def iterate_image(self, max_iter=None):
        """Vertex images ``f^k(V)`` for k = 0, 1, ... until the size stabilises."""
        current = frozenset(range(len(self.base)))
        images = [current]
        limit = len(self.base) if max_iter is None else max_iter
        for _ in range(limit):
            nxt = frozenset(self.image[v] for v in current)
            images.append(nxt)
            if len(nxt) == len(current):
                break
            current = nxt
        return images

    def collapses(self):
        """Whether some iterate maps the graph onto an edge or a looped vertex."""
        last = self.iterate_image()[-1]
        if len(last) == 1:
            return True
        if len(last) == 2:
            # f^k(H) is the homomorphic image: only images of edges count
            return _image_has_no_loop(self)
        return False

    def to_json(self):
        return {self.base.names[v]: self.base.names[fv] for v, fv in enumerate(self.image)}


def _image_has_no_loop(f):
    """Check the edge image of f^k (k = the stabilising iterate) has no loop."""
    g = f.base
    steps = len(f.iterate_image()) - 1
    for u, v in g.edges():
        a, b = u, v
        for _ in range(steps):
            a, b = f.image[a], f.image[b]
        if a == b:
            return False
    return True


@dataclass(frozen=True)
class CollapseSearch:
    status: str  # "yes", "no" or "unknown"
    endomorphism: Endomorphism | None
    nodes: int

    def __bool__(self):
        return self.status == "yes"


def find_collapsing_map(g, node_budget=200_000):
    """Backtracking search for a collapsing map.

    Vertices are assigned in order of descending degree, candidate images in
    ascending id; after each assignment arc consistency is restored on the
    homomorphism constraint. Exceeding ``node_budget`` search nodes yields
    status ``"unknown"``.
    """
    _require_connected(g)
    n = len(g)
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    nodes = 0

    def revise(domains, u, v):
        # keep values of f(u) with a support in the domain of f(v)
        dv = domains[v]
        return frozenset(a for a in domains[u] if not g.adj[a].isdisjoint(dv))

    def propagate(domains, touched):
        queue = [(u, t) for t in touched for u in g.nbrs[t]]
        while queue:
            u, v = queue.pop()
            new = revise(domains, u, v)
            if new != domains[u]:
                if not new:
                    return False
                domains[u] = new
                queue.extend((w, u) for w in g.nbrs[u])
        return True

    domains = [frozenset(g.adj[v]) for v in range(n)]
    if not propagate(domains, range(n)):
        return CollapseSearch("no", None, 0)

    def search(domains, depth):
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise _OutOfBudget
        if depth == n:
            f = Endomorphism(g, tuple(next(iter(d)) for d in domains))
            return f if f.collapses() else None
        v = order[depth]
        for a in sorted(domains[v]):
            trial = list(domains)
            trial[v] = frozenset([a])
            if propagate(trial, [v]):
                found = search(trial, depth + 1)
                if found is not None:
                    return found
        return None

    try:
        found = search(domains, 0)
    except _OutOfBudget:
        return CollapseSearch("unknown", None, nodes)
    if found is None:
        return CollapseSearch("no", None, nodes)
    return CollapseSearch("yes", found, nodes)


class _OutOfBudget(Exception):
    pass


def fold_sequence_text(seq):
    """Terminal graph as edge-list text (for CLI output)."""
    return to_edgelist(seq.terminal)
