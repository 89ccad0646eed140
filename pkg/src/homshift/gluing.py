"""Rectangular patterns, periodic extension and explicit gluing.

Patterns are stored as tuples of rows; row ``j`` sits directly above row
``j - 1`` and cells in the same column of consecutive rows must be adjacent.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .errors import BudgetExceeded, DomainError
from .walkgraph import pointwise_neighbors

__all__ = [
    "RectPattern",
    "PeriodicConfig",
    "GlueResult",
    "checkerboard",
    "constant",
    "extend_periodic",
    "glue_rect",
    "count_extensions",
    "l_shape",
    "pattern_from_json",
    "pattern_to_json",
]


@dataclass(frozen=True)
class RectPattern:
    base: object
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.rows or not self.rows[0]:
            raise DomainError("pattern must be non-empty")
        if any(len(r) != len(self.rows[0]) for r in self.rows):
            raise DomainError("pattern rows must have equal width")

    @property
    def width(self):
        return len(self.rows[0])

    @property
    def height(self):
        return len(self.rows)

    @property
    def dims(self):
        return self.width, self.height

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[j][i]

    def is_valid(self):
        g = self.base
        for j, row in enumerate(self.rows):
            if any(not g.has_edge(a, b) for a, b in zip(row, row[1:])):
                return False
            if j and any(not g.has_edge(a, b) for a, b in zip(self.rows[j - 1], row)):
                return False
        return True

    def restrict(self, x0, y0, width, height):
        return RectPattern(self.base, tuple(r[x0:x0 + width] for r in self.rows[y0:y0 + height]))

    def to_text(self):
        names = self.base.names
        return "\n".join(" ".join(names[v] for v in row) for row in reversed(self.rows)) + "\n"


@dataclass(frozen=True)
class PeriodicConfig:
    fundamental: RectPattern

    @property
    def base(self):
        return self.fundamental.base

    @property
    def periods(self):
        return self.fundamental.dims

    def at(self, i, j):
        px, py = self.periods
        return self.fundamental.rows[j % py][i % px]

    def window(self, width, height, x0=0, y0=0):
        rows = tuple(
            tuple(self.at(x0 + i, y0 + j) for i in range(width)) for j in range(height)
        )
        return RectPattern(self.base, rows)

    def is_torus_valid(self):
        px, py = self.periods
        g = self.base
        for j in range(py):
            for i in range(px):
                v = self.at(i, j)
                if not g.has_edge(v, self.at(i + 1, j)) or not g.has_edge(v, self.at(i, j + 1)):
                    return False
        return True


def checkerboard(g, v, w):
    if not g.has_edge(v, w):
        raise DomainError(f"{g.names[v]} and {g.names[w]} are not adjacent")
    return PeriodicConfig(RectPattern(g, ((v, w), (w, v))))


def constant(g, v):
    if not g.has_loop(v):
        raise DomainError(f"{g.names[v]} has no self-loop")
    return PeriodicConfig(RectPattern(g, ((v,),)))


def _reflect(seq):
    # q(i) = p(i) for i < L, q(2L - 2 - i) = p(i); period 2L - 2
    return list(seq) + list(seq[-2:0:-1])


def _shift_column(g, col):
    """A column adjacent to ``col`` cell by cell, valid on its own."""
    if len(col) == 1:
        return (g.nbrs[col[0]][0],)
    return tuple(col[1:]) + (col[-2],)


def extend_periodic(p):
    """Doubly periodic configuration whose restriction to the rectangle is ``p``.

    Each axis is reflected about its far face (period ``2L - 2``). A side of
    length one is thickened first by stacking a copy displaced by one step,
    or kept at period one when the copy coincides with a valid loop.
    """
    g = p.base
    if not p.is_valid():
        raise DomainError("pattern is not a valid homomorphism")
    # horizontal: work on columns
    cols = [tuple(row[i] for row in p.rows) for i in range(p.width)]
    if len(cols) == 1:
        col = cols[0]
        if not all(g.has_loop(v) for v in col):
            cols = [col, _shift_column(g, col)]
    else:
        cols = _reflect(cols)
    rows = [tuple(c[j] for c in cols) for j in range(p.height)]
    # vertical: rows are now cyclic
    if len(rows) == 1:
        row = rows[0]
        if not all(g.has_loop(v) for v in row):
            rows = [row, row[1:] + row[:1]]
    else:
        rows = _reflect(rows)
    return PeriodicConfig(RectPattern(g, tuple(rows)))


@dataclass(frozen=True)
class GlueResult:
    phase: tuple[int, int]
    strip: RectPattern
    b_offset: tuple[int, int]
    connecting: int

    @property
    def phase_name(self):
        return "0" if self.phase == (0, 0) else "e_1"


def _exact_length_path(g, source, target, length, state_budget):
    """Shortest-layer search for a walk of exactly ``length`` steps between cyclic rows."""
    layers = [{source}]
    seen = 1
    for _ in range(length):
        nxt = set()
        for row in layers[-1]:
            nxt.update(pointwise_neighbors(g, row, closed=True))
        seen += len(nxt)
        if seen > state_budget:
            raise BudgetExceeded(f"gluing search exceeds {state_budget} rows", estimate=seen, budget=state_budget)
        layers.append(nxt)
    if target not in layers[-1]:
        return None
    path = [target]
    for k in range(length - 1, -1, -1):
        cur = path[-1]
        preds = sorted(r for r in layers[k] if all(g.has_edge(a, b) for a, b in zip(r, cur)))
        path.append(preds[0])
    return path[::-1]


def glue_rect(g, a, b, separation, state_budget=200_000):
    """Place ``b`` above ``a`` so that their facing rows are ``separation`` apart.

    Phase ``(0, 0)`` uses exactly ``separation`` steps; phase ``(0, -1)``
    (written ``e_1``) moves ``b`` one row closer to ``a``. Both patterns are
    periodised horizontally to a common period and the connecting rows are
    found by layered search over closed walks. Returns None when neither phase
    works; this is a failure of the search, not a proof that no gluing exists.
    """
    if separation < 1:
        raise DomainError("separation must be at least 1")
    pa, pb = extend_periodic(a), extend_periodic(b)
    period = math.lcm(pa.periods[0], pb.periods[0])
    a_rows = [tuple(pa.at(i, j) for i in range(period)) for j in range(a.height)]
    b_rows = [tuple(pb.at(i, j) for i in range(period)) for j in range(b.height)]
    for phase, length in (((0, 0), separation), ((0, -1), separation - 1)):
        path = _exact_length_path(g, a_rows[-1], b_rows[0], length, state_budget)
        if path is None:
            continue
        rows = a_rows + path[1:-1] + b_rows if length > 0 else a_rows + b_rows[1:]
        strip = RectPattern(g, tuple(rows))
        return GlueResult(phase, strip, (0, a.height - 1 + length), length)
    return None


def l_shape(n):
    """Cells ``(i, 0)`` and ``(n, i)`` for ``0 <= i <= n``."""
    return sorted({(i, 0) for i in range(n + 1)} | {(n, i) for i in range(n + 1)})


def count_extensions(g, boundary, n, max_free=16):
    """Number of homomorphisms on ``[0, n]^2`` agreeing with ``boundary`` on the L-shape."""
    cells = l_shape(n)
    if set(boundary) != set(cells):
        raise DomainError("boundary must cover exactly the L-shape")
    for (i, j), v in boundary.items():
        for di, dj in ((1, 0), (0, 1)):
            nb = (i + di, j + dj)
            if nb in boundary and not g.has_edge(v, boundary[nb]):
                raise DomainError("boundary is not a partial homomorphism")
    free = [(i, j) for j in range(1, n + 1) for i in range(n)]
    if len(free) > max_free:
        raise BudgetExceeded(f"{len(free)} free cells exceeds {max_free}", estimate=len(free), budget=max_free)
    # fill top-down, right-to-left so each cell's right and lower neighbours are known
    order = sorted(free, key=lambda c: (-c[1], -c[0]))
    value = dict(boundary)
    count = 0

    def rec(k):
        nonlocal count
        if k == len(order):
            count += 1
            return
        i, j = order[k]
        cands = None
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in value:
                s = g.adj[value[nb]]
                cands = s if cands is None else cands & s
        for v in sorted(cands if cands is not None else range(len(g))):
            value[(i, j)] = v
            rec(k + 1)
        value.pop((i, j), None)

    rec(0)
    return count


def pattern_from_json(g, data):
    """Rows listed top first, as vertex names."""
    rows = tuple(tuple(g.index(name) for name in row) for row in reversed(data))
    return RectPattern(g, rows)


def pattern_to_json(p):
    return [[p.base.names[v] for v in row] for row in reversed(p.rows)]


def dumps_pattern(p):
    return json.dumps(pattern_to_json(p))
