import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from homshift.graph import fixture  # noqa: E402
from oracles import random_connected_graph  # noqa: E402

FIXTURE_SPECS = [
    ("hard_square", None),
    ("complete", 2),
    ("complete", 3),
    ("complete", 4),
    ("cycle", 3),
    ("cycle", 4),
    ("cycle", 5),
    ("cycle", 6),
    ("barbell", 2),
    ("barbell", 3),
    ("barbell", 4),
    ("path", 2),
    ("path", 3),
    ("path", 5),
    ("star", 4),
    ("star", 6),
]


def fixture_id(spec):
    name, k = spec
    return name if k is None else f"{name}{k}"


@pytest.fixture(params=FIXTURE_SPECS, ids=fixture_id)
def fixture_graph(request):
    return fixture(*request.param)


def all_fixtures():
    return [(fixture_id(s), fixture(*s)) for s in FIXTURE_SPECS]


def random_connected_corpus(seed, count, max_vertices):
    rng = random.Random(seed)
    return [random_connected_graph(rng, rng.randint(2, max_vertices)) for _ in range(count)]


ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for crit, ok, detail in ACCEPTANCE_RESULTS:
        line = f"{'PASS' if ok else 'FAIL'}  {crit}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
