"""Walk graphs of a base graph and their diameters.

``build_walk_graph(g, n)`` has one vertex per walk of length ``2n`` in ``g``
(a homomorphism from ``[-n, n]``); two walks are adjacent when they are
adjacent coordinate by coordinate. The cyclic variant uses closed walks of a
fixed period instead, which is what row-periodic configurations need.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

from . import _search
from .errors import BudgetExceeded, DomainError
from .folding import is_four_cycle_hom_free
from .cover import is_cover_finite
from .graph import Graph, _dot_id

__all__ = [
    "WalkGraphN",
    "CyclicWalkGraph",
    "build_walk_graph",
    "build_cyclic_walk_graph",
    "diameter",
    "connectivity_report",
    "ConnectivityReport",
    "growth_probe",
    "GrowthProbe",
    "walk_graph_to_dot",
    "enumerate_walks",
    "pointwise_neighbors",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 200_000


def _require_connected(g):
    if max(_search.component_labels(g.nbrs), default=0) != 0:
        raise DomainError("graph must be connected")


def _check_budget(g, length, budget, what):
    delta = max(len(nb) for nb in g.nbrs)
    estimate = len(g) * delta ** max(length, 0)
    if estimate > budget:
        raise BudgetExceeded(
            f"{what}: estimated {estimate} vertices exceeds budget {budget}",
            estimate=estimate,
            budget=budget,
        )
    return estimate


def enumerate_walks(g, length, closed=False):
    """All walks with ``length`` steps (``length + 1`` vertices), in lexicographic order.

    With ``closed=True`` returns closed walks of period ``length``, each as a
    tuple of ``length`` vertices whose last entry is adjacent to the first.
    """
    n_pos = length if closed else length + 1
    out = []
    buf = [0] * n_pos

    def rec(i):
        if i == n_pos:
            if not closed or buf[0] in g.adj[buf[-1]]:
                out.append(tuple(buf))
            return
        cands = range(len(g)) if i == 0 else g.nbrs[buf[i - 1]]
        for v in cands:
            buf[i] = v
            rec(i + 1)

    if n_pos > 0:
        rec(0)
    return out


def pointwise_neighbors(g, x, closed=False):
    """Walks ``y`` with ``y_i ~ x_i`` for every i, in lexicographic order."""
    m = len(x)
    out = []
    buf = [0] * m

    def rec(i):
        if i == m:
            if not closed or buf[0] in g.adj[buf[-1]]:
                out.append(tuple(buf))
            return
        cands = g.nbrs[x[i]] if i == 0 else [v for v in g.nbrs[x[i]] if v in g.adj[buf[i - 1]]]
        for v in cands:
            buf[i] = v
            rec(i + 1)

    rec(0)
    return out


@dataclass(frozen=True)
class _ExplicitWalkGraph:
    base: Graph
    walks: tuple[tuple[int, ...], ...]
    nbrs: tuple[tuple[int, ...], ...] = field(repr=False)
    index: dict = field(repr=False, compare=False)

    def __len__(self):
        return len(self.walks)

    @property
    def n_edges(self):
        return sum(1 for u, nb in enumerate(self.nbrs) for v in nb if u <= v)

    def names(self):
        sep = "" if all(len(s) == 1 for s in self.base.names) else "-"
        return [sep.join(self.base.names[v] for v in w) for w in self.walks]


@dataclass(frozen=True)
class WalkGraphN(_ExplicitWalkGraph):
    n: int = 0

    def value(self, walk, i):
        """Vertex of ``walk`` at coordinate ``i`` in ``[-n, n]``."""
        return walk[i + self.n]


@dataclass(frozen=True)
class CyclicWalkGraph(_ExplicitWalkGraph):
    period: int = 0


def _build(g, walks, closed):
    index = {w: i for i, w in enumerate(walks)}
    nbrs = tuple(tuple(index[y] for y in pointwise_neighbors(g, x, closed)) for x in walks)
    return walks, nbrs, index


def build_walk_graph(g, n, budget=DEFAULT_BUDGET):
    _require_connected(g)
    return _walk_graph(g, n, budget)


def _walk_graph(g, n, budget):
    if n < 0:
        raise DomainError("n must be non-negative")
    _check_budget(g, 2 * n, budget, f"walk graph n={n}")
    walks, nbrs, index = _build(g, tuple(enumerate_walks(g, 2 * n)), closed=False)
    return WalkGraphN(base=g, walks=walks, nbrs=nbrs, index=index, n=n)


def build_cyclic_walk_graph(g, period, budget=DEFAULT_BUDGET):
    """Closed walks of length ``period`` with coordinatewise adjacency."""
    if period < 1:
        raise DomainError("period must be positive")
    _check_budget(g, period - 1, budget, f"cyclic walk graph P={period}")
    walks, nbrs, index = _build(g, tuple(enumerate_walks(g, period, closed=True)), closed=True)
    return CyclicWalkGraph(base=g, walks=walks, nbrs=nbrs, index=index, period=period)


def diameter(wg):
    """Diameter of a walk graph or plain graph; ``math.inf`` if disconnected."""
    return _search.diameter(wg.nbrs)


@dataclass(frozen=True)
class ConnectivityReport:
    connected: bool
    bipartite: bool


def connectivity_report(g, n, budget=DEFAULT_BUDGET):
    wg = _walk_graph(g, n, budget)
    labels = _search.component_labels(wg.nbrs)
    return ConnectivityReport(
        connected=max(labels, default=0) == 0,
        bipartite=_search.two_coloring(wg.nbrs) is not None,
    )


@dataclass
class GrowthProbe:
    base_diameter: float
    rows: list
    monotone: bool
    upper_bound_ok: bool
    lower_bound_checked: bool
    lower_bound_ok: bool | None

    def to_csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "diameter", "upper_bound", "lower_bound"])
        for n, d in self.rows:
            writer.writerow([
                n,
                _fmt(d),
                _fmt(self.base_diameter + 2 * n),
                n if self.lower_bound_checked else "",
            ])
        return buf.getvalue()

    def to_json(self):
        return {
            "base_diameter": _fmt(self.base_diameter),
            "rows": [{"n": n, "diameter": _fmt(d)} for n, d in self.rows],
            "monotone": self.monotone,
            "upper_bound_ok": self.upper_bound_ok,
            "lower_bound_checked": self.lower_bound_checked,
            "lower_bound_ok": self.lower_bound_ok,
        }


def _fmt(x):
    return "inf" if x == math.inf else int(x)


def growth_probe(g, n_max, budget=DEFAULT_BUDGET):
    """Walk-graph diameters for ``n = 0..n_max`` with the standard bound checks.

    Upper bound: ``diam(H) + 2n``. Lower bound ``n`` is only checked for
    four-cycle hom-free graphs with an infinite cover, where it is known to
    hold; for other graphs the sequence is evidence, not a verdict.
    """
    _require_connected(g)
    base_diam = _search.diameter(g.nbrs)
    rows = [(n, diameter(build_walk_graph(g, n, budget))) for n in range(n_max + 1)]
    values = [d for _, d in rows]
    monotone = all(a <= b for a, b in zip(values, values[1:]))
    upper = all(d <= base_diam + 2 * n for n, d in rows)
    checked = is_four_cycle_hom_free(g) and not is_cover_finite(g)
    lower = all(d >= n for n, d in rows) if checked else None
    return GrowthProbe(base_diam, rows, monotone, upper, checked, lower)


def walk_graph_to_dot(wg, name="walk", max_vertices=500):
    if len(wg) > max_vertices:
        raise DomainError(f"walk graph has {len(wg)} vertices; DOT export is limited to {max_vertices}")
    labels = wg.names()
    lines = [f"graph {_dot_id(name)} {{"]
    for i, lab in enumerate(labels):
        lines.append(f"  w{i} [label={_dot_id(lab)}];")
    for u, nb in enumerate(wg.nbrs):
        for v in nb:
            if u <= v:
                lines.append(f"  w{u} -- w{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
