"""Combined classification of the two-dimensional hom-shift of a graph.

Each verdict is a tristate (``"yes"``, ``"no"``, ``"unknown"``) and carries
the name of the rule that produced it. The rules are applied as a ladder:

1. connectivity and bipartiteness give transitivity and mixing;
2. a bipartite-dismantlable graph has a phased SI hom-shift;
3. for four-cycle hom-free graphs, phased SI, phased block-gluing and
   bipartite-dismantlability coincide, and agree with finiteness of the
   universal cover;
4. a collapsing map gives phased block-gluing;
5. the sofic search looks for an even gluing distance up to a cap;
6. for non-bipartite graphs phased verdicts carry over to the unphased ones.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field

from .cover import find_arc_cycle
from .errors import BudgetExceeded, ConsistencyError
from .folding import (
    find_collapsing_map,
    is_four_cycle_hom_free,
    stiff_reduce,
    terminal_shape,
)
from .graph import analyze_basic
from .sofic import DEFAULT_PAIR_BUDGET, minimal_gluing_distance
from .walkgraph import DEFAULT_BUDGET

__all__ = ["Limits", "Verdict", "ClassificationReport", "classify", "RULES", "SCHEMA_VERSION"]

SCHEMA_VERSION = 1

RULES = {
    "connectivity": "the hom-shift is transitive iff the graph is connected",
    "mixing": "the hom-shift is mixing iff the graph is connected and not bipartite",
    "bipartite-dismantlable": "a bipartite-dismantlable graph gives a phased SI hom-shift",
    "si-implies-block-gluing": "phased SI implies phased block-gluing",
    "four-cycle-hom-free": (
        "for four-cycle hom-free graphs: phased SI iff phased block-gluing "
        "iff bipartite-dismantlable"
    ),
    "cover-finiteness": (
        "for four-cycle hom-free graphs the walk graph has finite diameter "
        "iff the universal cover is finite"
    ),
    "collapsible": "a collapsing map gives finite walk-graph diameter, hence phased block-gluing",
    "sofic-surjectivity": (
        "block-gluing at distance 2n iff every top/bottom pair of rows is the "
        "image of a row of walks of length 2n"
    ),
    "non-bipartite-upgrade": "for non-bipartite graphs the phased properties imply the unphased ones",
    "not-mixing": "block-gluing and SI both imply mixing",
    "unphased-implies-phased": "block-gluing (SI) implies phased block-gluing (phased SI)",
}


@dataclass(frozen=True)
class Limits:
    max_n: int = 2
    walk_budget: int = DEFAULT_BUDGET
    pair_budget: int = DEFAULT_PAIR_BUDGET
    collapse_budget: int = 200_000


@dataclass
class Verdict:
    value: str = "unknown"
    rule: str | None = None

    def set(self, value, rule):
        self.value, self.rule = value, rule


@dataclass
class ClassificationReport:
    graph_summary: dict
    connected: bool
    bipartite: bool
    transitive: bool
    mixing: bool
    four_cycle_hom_free: bool | None = None
    dismantlable: bool | None = None
    bipartite_dismantlable: bool | None = None
    stiff_terminal: str | None = None
    cover_finite: bool | None = None
    cover_certificate: list | None = None
    collapsible: str = "unknown"
    collapsing_map: dict | None = None
    phased_SI: Verdict = field(default_factory=Verdict)
    phased_block_gluing: Verdict = field(default_factory=Verdict)
    SI: Verdict = field(default_factory=Verdict)
    block_gluing: Verdict = field(default_factory=Verdict)
    gluing_distance: int | None = None
    gluing_distance_cap: int | None = None
    gluing_checks: list = field(default_factory=list)
    gluing_set: tuple = ("0", "e_1")
    notes: list = field(default_factory=list)
    provenance: list = field(default_factory=list)

    def claim(self, text, rule):
        self.provenance.append({"claim": text, "rule": rule})

    def check_invariants(self):
        if self.mixing and not self.transitive:
            raise ConsistencyError("mixing without transitivity")
        if self.phased_SI.value == "yes" and self.phased_block_gluing.value != "yes":
            raise ConsistencyError("phased SI without phased block-gluing")
        if self.dismantlable and not self.bipartite_dismantlable:
            raise ConsistencyError("dismantlable but not bipartite-dismantlable")
        for name in ("phased_SI", "phased_block_gluing", "SI", "block_gluing"):
            v = getattr(self, name)
            if v.value != "unknown" and v.rule not in RULES:
                raise ConsistencyError(f"{name} verdict lacks a rule")

    def to_json(self):
        data = asdict(self)
        data["gluing_set"] = list(self.gluing_set)
        return {"schema": SCHEMA_VERSION, **data}

    def dumps(self):
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"


def classify(g, limits=None):
    limits = limits or Limits()
    basic = analyze_basic(g)
    rep = ClassificationReport(
        graph_summary={**g.summary(), "diameter": None if basic.diameter == math.inf else basic.diameter},
        connected=basic.connected,
        bipartite=basic.bipartite,
        transitive=basic.connected,
        mixing=basic.mixing,
    )
    rep.claim(f"transitive={rep.transitive}", "connectivity")
    rep.claim(f"mixing={rep.mixing}", "mixing")
    if not basic.connected:
        rep.notes.append("graph is disconnected; classification stops after transitivity")
        rep.check_invariants()
        return rep

    names = g.names
    terminal = stiff_reduce(g).terminal
    shape = terminal_shape(terminal)
    rep.stiff_terminal = shape
    rep.dismantlable = shape == "looped_vertex"
    rep.bipartite_dismantlable = shape in ("looped_vertex", "edge")
    rep.four_cycle_hom_free = is_four_cycle_hom_free(g)
    cycle = find_arc_cycle(g, 0)
    rep.cover_finite = cycle is None
    if cycle is not None:
        rep.cover_certificate = [[names[u], names[v]] for u, v in cycle]

    if rep.bipartite_dismantlable:
        rep.phased_SI.set("yes", "bipartite-dismantlable")
        rep.phased_block_gluing.set("yes", "si-implies-block-gluing")
        rep.claim("phased SI", "bipartite-dismantlable")

    if rep.four_cycle_hom_free:
        if rep.cover_finite != rep.bipartite_dismantlable:
            raise ConsistencyError(
                f"cover finite={rep.cover_finite} but bipartite-dismantlable={rep.bipartite_dismantlable}"
            )
        rep.claim(f"universal cover finite={rep.cover_finite}", "cover-finiteness")
        if not rep.bipartite_dismantlable:
            rep.phased_SI.set("no", "four-cycle-hom-free")
            rep.phased_block_gluing.set("no", "four-cycle-hom-free")
            rep.claim("not phased block-gluing, not phased SI", "four-cycle-hom-free")

    search = find_collapsing_map(g, node_budget=limits.collapse_budget)
    rep.collapsible = search.status
    if search.endomorphism is not None:
        rep.collapsing_map = search.endomorphism.to_json()
        if rep.phased_block_gluing.value == "unknown":
            rep.phased_block_gluing.set("yes", "collapsible")
            rep.claim("phased block-gluing", "collapsible")
    if rep.phased_block_gluing.value == "no" and search.status == "yes":
        raise ConsistencyError("collapsing map found for a graph ruled not phased block-gluing")

    _sofic_step(g, rep, limits)
    _unphased_step(rep)
    rep.check_invariants()
    return rep


def _sofic_step(g, rep, limits):
    rep.gluing_distance_cap = 2 * limits.max_n
    try:
        result = minimal_gluing_distance(
            g, limits.max_n, budget=limits.walk_budget, pair_budget=limits.pair_budget
        )
    except BudgetExceeded as exc:
        rep.notes.append(f"gluing-distance search stopped: {exc}")
        return
    names = g.names
    for check in result.checks:
        entry = {"distance": check.distance, "holds": check.holds}
        if check.witness is not None:
            entry["witness"] = [[names[t], names[b]] for t, b in check.witness]
        rep.gluing_checks.append(entry)
    if result.distance is None:
        note = f"no even gluing distance up to {rep.gluing_distance_cap}"
        if rep.phased_block_gluing.value == "no":
            note += "; not phased block-gluing by the four-cycle hom-free characterisation"
        rep.notes.append(note)
        return
    rep.gluing_distance = result.distance
    rep.claim(f"block-gluing at distance {result.distance}", "sofic-surjectivity")
    if rep.phased_block_gluing.value == "no":
        raise ConsistencyError(
            f"sofic search found gluing distance {result.distance} for a graph ruled not phased block-gluing"
        )
    if rep.phased_block_gluing.value == "unknown":
        rep.phased_block_gluing.set("yes", "sofic-surjectivity")


def _unphased_step(rep):
    if rep.bipartite:
        rep.block_gluing.set("no", "not-mixing")
        rep.SI.set("no", "not-mixing")
        return
    for phased, plain, label in (
        (rep.phased_block_gluing, rep.block_gluing, "block-gluing"),
        (rep.phased_SI, rep.SI, "SI"),
    ):
        if phased.value == "yes":
            plain.set("yes", "non-bipartite-upgrade")
            rep.claim(label, "non-bipartite-upgrade")
        elif phased.value == "no":
            plain.set("no", "unphased-implies-phased")
