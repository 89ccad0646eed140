"""Universal covers as trees of non-backtracking walks.

A walk ``p_0, p_1, ...`` is non-backtracking when ``p_{i+2} != p_i``; on a
graph without multi-edges this is the "never reuse the edge just taken" rule,
and it forbids traversing a loop twice in a row. The cover is finite exactly
when the directed graph of arcs ``(u, v) -> (v, w)``, ``w != u``, reachable
from the root has no cycle.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from . import _search
from .errors import BudgetExceeded, DomainError, IncompleteCoverError
from .folding import is_four_cycle_hom_free
from .graph import _dot_id

__all__ = [
    "CoverTree",
    "find_arc_cycle",
    "is_cover_finite",
    "build_cover",
    "lift_walk",
    "cover_to_dot",
]


def _require_connected(g):
    if max(_search.component_labels(g.nbrs), default=0) != 0:
        raise DomainError("graph must be connected")


def find_arc_cycle(g, root=0):
    """A cycle of arcs reachable from ``root``, or None when the cover is finite.

    The returned list ``[(u0, u1), (u1, u2), ..., (uk, u0')]`` is a closed
    non-backtracking circuit; repeating it forever gives an infinite
    non-backtracking walk, which certifies that the cover is infinite.
    """
    WHITE, GREY, BLACK = 0, 1, 2
    color = {}
    for start in [(root, w) for w in g.nbrs[root]]:
        if color.get(start, WHITE) != WHITE:
            continue
        color[start] = GREY
        path = [start]
        stack = [iter(_successors(g, start))]
        while stack:
            arc = next(stack[-1], None)
            if arc is None:
                color[path.pop()] = BLACK
                stack.pop()
                continue
            state = color.get(arc, WHITE)
            if state == GREY:
                return path[path.index(arc):]
            if state == WHITE:
                color[arc] = GREY
                path.append(arc)
                stack.append(iter(_successors(g, arc)))
    return None


def _successors(g, arc):
    u, v = arc
    return [(v, w) for w in g.nbrs[v] if w != u]


def is_cover_finite(g):
    _require_connected(g)
    return find_arc_cycle(g, 0) is None


@dataclass(frozen=True)
class CoverTree:
    base: object
    root: int
    walks: tuple[tuple[int, ...], ...]
    parent: tuple[int, ...]
    complete: bool
    depth_cap: int
    index: dict = field(repr=False, compare=False)
    children: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    def __len__(self):
        return len(self.walks)

    def terminal(self, node):
        return self.walks[node][-1]

    def depth(self, node):
        return len(self.walks[node]) - 1

    def tree_neighbors(self, node):
        out = list(self.children[node])
        if self.parent[node] >= 0:
            out.insert(0, self.parent[node])
        return out

    def is_frontier(self, node):
        return self.depth(node) == self.depth_cap

    def degree_sequence(self):
        return sorted(len(self.tree_neighbors(i)) for i in range(len(self)))


def build_cover(g, root=0, depth_cap=None, node_budget=1_000_000):
    """Enumerate non-backtracking walks from ``root`` of length at most ``depth_cap``.

    With ``depth_cap=None`` the cap is the number of arcs plus one, which
    always suffices when the cover is finite.
    """
    _require_connected(g)
    if not 0 <= root < len(g):
        raise DomainError(f"root {root} is not a vertex")
    if depth_cap is None:
        depth_cap = sum(len(nb) for nb in g.nbrs) + 1
    walks = [(root,)]
    parent = [-1]
    children = [[]]
    complete = True
    queue = deque([0])
    while queue:
        node = queue.popleft()
        walk = walks[node]
        prev = walk[-2] if len(walk) > 1 else None
        ext = [w for w in g.nbrs[walk[-1]] if w != prev]
        if len(walk) - 1 == depth_cap:
            if ext:
                complete = False
            continue
        for w in ext:
            if len(walks) >= node_budget:
                raise BudgetExceeded(
                    f"cover exceeds {node_budget} nodes", estimate=len(walks) + 1, budget=node_budget
                )
            children[node].append(len(walks))
            walks.append(walk + (w,))
            parent.append(node)
            children.append([])
            queue.append(len(walks) - 1)
    return CoverTree(
        base=g,
        root=root,
        walks=tuple(walks),
        parent=tuple(parent),
        complete=complete,
        depth_cap=depth_cap,
        index={w: i for i, w in enumerate(walks)},
        children=tuple(tuple(c) for c in children),
    )


def lift_walk(g, cover, walk, base_node=None):
    """Lift a walk in ``g`` to the cover, starting at ``base_node``.

    Returns the list of cover nodes visited. Needs a four-cycle hom-free
    base graph.
    """
    if not is_four_cycle_hom_free(g):
        raise DomainError("lifting requires a four-cycle hom-free graph")
    walk = list(walk)
    if base_node is None:
        base_node = 0
    if not walk or cover.terminal(base_node) != walk[0]:
        raise DomainError("walk must start at the terminal vertex of the base node")
    for a, b in zip(walk, walk[1:]):
        if not g.has_edge(a, b):
            raise DomainError(f"{g.names[a]} and {g.names[b]} are not adjacent")
    nodes = [base_node]
    for target in walk[1:]:
        node = nodes[-1]
        par = cover.parent[node]
        if par >= 0 and cover.terminal(par) == target:
            nodes.append(par)
            continue
        nxt = [c for c in cover.children[node] if cover.terminal(c) == target]
        if not nxt:
            raise IncompleteCoverError(
                f"lift leaves the cover at depth {cover.depth(node)} (cap {cover.depth_cap})"
            )
        nodes.append(nxt[0])
    return nodes


def cover_to_dot(cover, name="cover"):
    g = cover.base
    lines = [f"graph {_dot_id(name)} {{"]
    for i in range(len(cover)):
        attrs = f'label={_dot_id(g.names[cover.terminal(i)])}'
        if i == 0:
            attrs += ", style=filled, fillcolor=lightgrey"
        lines.append(f"  n{i} [{attrs}];")
    for i, p in enumerate(cover.parent):
        if p >= 0:
            lines.append(f"  n{p} -- n{i};")
    lines.append("}")
    return "\n".join(lines) + "\n"

