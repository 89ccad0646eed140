"""Block-gluing at a fixed even distance, decided by sofic shift containment.

Two edge-labelled presentations are compared. The image presentation has the
walks of length 2n as states and reads off, along each pointwise-adjacent
step, the pair (top end, bottom end) of the walk entered. The top/bottom
presentation accepts every pair of bi-infinite walks whose origins are an
even distance apart. Block-gluing at distance 2n holds exactly when every
top/bottom word is also an image word.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass

from . import _search
from .errors import BudgetExceeded, ConsistencyError, DomainError
from .walkgraph import DEFAULT_BUDGET, build_walk_graph

__all__ = [
    "LabeledAutomaton",
    "Containment",
    "build_image_presentation",
    "build_tb_presentation",
    "essentialize",
    "contains",
    "block_gluing_at",
    "minimal_gluing_distance",
    "GluingDistance",
    "label_words",
]

DEFAULT_PAIR_BUDGET = 1_000_000


@dataclass(frozen=True)
class LabeledAutomaton:
    """States are arbitrary hashables; transitions are ``(src, label, dst)`` index triples."""

    states: tuple
    transitions: frozenset
    essential: bool = False

    @property
    def alphabet(self):
        return frozenset(lab for _, lab, _ in self.transitions)

    def out_edges(self):
        out = [[] for _ in self.states]
        for s, lab, t in sorted(self.transitions):
            out[s].append((lab, t))
        return out

    def to_json(self, graph=None):
        def name(v):
            return graph.names[v] if graph is not None else v

        def state(s):
            return [name(v) for v in s] if isinstance(s, tuple) else name(s)

        return {
            "states": [state(s) for s in self.states],
            "transitions": [
                [i, [name(lab[0]), name(lab[1])], j] for i, lab, j in sorted(self.transitions)
            ],
            "essential": self.essential,
        }

    def dumps(self, graph=None):
        return json.dumps(self.to_json(graph), sort_keys=True)


def _require_connected(g):
    if max(_search.component_labels(g.nbrs), default=0) != 0:
        raise DomainError("graph must be connected")


def build_image_presentation(g, n, budget=DEFAULT_BUDGET):
    wg = build_walk_graph(g, n, budget)
    top, bottom = 2 * n, 0
    trans = frozenset(
        (i, (wg.walks[j][top], wg.walks[j][bottom]), j)
        for i, nb in enumerate(wg.nbrs)
        for j in nb
    )
    return LabeledAutomaton(wg.walks, trans)


def build_tb_presentation(g):
    _require_connected(g)
    color = _search.two_coloring(g.nbrs)
    states = tuple(
        (a, b)
        for a in range(len(g))
        for b in range(len(g))
        if color is None or color[a] == color[b]
    )
    index = {s: i for i, s in enumerate(states)}
    trans = set()
    for i, (a, b) in enumerate(states):
        for a2 in g.nbrs[a]:
            for b2 in g.nbrs[b]:
                j = index.get((a2, b2))
                if j is not None:
                    trans.add((i, (a2, b2), j))
    return LabeledAutomaton(states, frozenset(trans))


def essentialize(a):
    """Drop states with no incoming or no outgoing transition, until none remain."""
    alive = set(range(len(a.states)))
    trans = set(a.transitions)
    while True:
        has_in = {t for _, _, t in trans}
        has_out = {s for s, _, _ in trans}
        keep = alive & has_in & has_out
        if keep == alive:
            break
        alive = keep
        trans = {(s, lab, t) for s, lab, t in trans if s in alive and t in alive}
    order = sorted(alive)
    pos = {s: i for i, s in enumerate(order)}
    return LabeledAutomaton(
        tuple(a.states[s] for s in order),
        frozenset((pos[s], lab, pos[t]) for s, lab, t in trans),
        essential=True,
    )


@dataclass(frozen=True)
class Containment:
    holds: bool
    witness: tuple | None = None
    explored: int = 0

    def __bool__(self):
        return self.holds


def _successor_table(b):
    table = {}
    for s, lab, t in b.transitions:
        row = table.setdefault(lab, {})
        row[s] = row.get(s, 0) | (1 << t)
    return table


def _step(table, subset, lab):
    row = table.get(lab)
    if not row:
        return 0
    out = 0
    while subset:
        low = subset & -subset
        s = low.bit_length() - 1
        out |= row.get(s, 0)
        subset ^= low
    return out


def contains(a, b, pair_budget=DEFAULT_PAIR_BUDGET):
    """Decide whether every finite path label of ``a`` is a path label of ``b``.

    For essential presentations this is containment of the presented shifts.
    Exploration is breadth first over pairs (a-state, subset of b-states), so
    a failing result carries a shortest word read in ``a`` but not in ``b``.
    """
    if not (a.essential and b.essential):
        raise DomainError("contains expects essentialized automata")
    out = a.out_edges()
    table = _successor_table(b)
    full = (1 << len(b.states)) - 1
    start = [(s, full) for s in range(len(a.states))]
    parent = {p: None for p in start}
    queue = deque(start)
    while queue:
        pair = queue.popleft()
        s, subset = pair
        for lab, t in out[s]:
            nxt = _step(table, subset, lab)
            if not nxt:
                word = [lab]
                back = pair
                while parent[back] is not None:
                    back, lab0 = parent[back]
                    word.append(lab0)
                return Containment(False, tuple(reversed(word)), len(parent))
            child = (t, nxt)
            if child not in parent:
                if len(parent) >= pair_budget:
                    raise BudgetExceeded(
                        f"subset exploration exceeds {pair_budget} pairs",
                        estimate=len(parent) + 1,
                        budget=pair_budget,
                    )
                parent[child] = (pair, lab)
                queue.append(child)
    return Containment(True, None, len(parent))


def label_words(a, length):
    """All path labels of exactly ``length`` symbols (brute-force path walking)."""
    out = a.out_edges()
    frontier = {(s, ()) for s in range(len(a.states))}
    for _ in range(length):
        frontier = {(t, w + (lab,)) for s, w in frontier for lab, t in out[s]}
    return {w for _, w in frontier}


@dataclass(frozen=True)
class GluingCheck:
    n: int
    holds: bool
    witness: tuple | None
    explored: int

    @property
    def distance(self):
        return 2 * self.n

    def __bool__(self):
        return self.holds


def block_gluing_at(g, n, budget=DEFAULT_BUDGET, pair_budget=DEFAULT_PAIR_BUDGET):
    """Whether every top/bottom pair of rows is joined by a walk of length 2n.

    The reverse containment (every image word is a top/bottom word) always
    holds and is verified as a sanity check.
    """
    _require_connected(g)
    tb = essentialize(build_tb_presentation(g))
    image = essentialize(build_image_presentation(g, n, budget))
    back = contains(image, tb, pair_budget)
    if not back:
        raise ConsistencyError(f"image word {back.witness} is not a top/bottom word")
    res = contains(tb, image, pair_budget)
    return GluingCheck(n, res.holds, res.witness, res.explored)


@dataclass(frozen=True)
class GluingDistance:
    distance: int | None
    n_cap: int
    checks: tuple

    def __bool__(self):
        return self.distance is not None


def minimal_gluing_distance(g, n_cap, budget=DEFAULT_BUDGET, pair_budget=DEFAULT_PAIR_BUDGET):
    """Smallest even distance ``2n`` with ``n <= n_cap`` at which block-gluing holds.

    Only even distances are examined. ``distance=None`` means none was found
    up to the cap, which does not rule out a larger distance.
    """
    checks = []
    for n in range(n_cap + 1):
        check = block_gluing_at(g, n, budget, pair_budget)
        checks.append(check)
        if check:
            return GluingDistance(2 * n, n_cap, tuple(checks))
    return GluingDistance(None, n_cap, tuple(checks))
