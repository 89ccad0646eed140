import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homshift.cover import build_cover, cover_to_dot, find_arc_cycle, is_cover_finite, lift_walk
from homshift.errors import BudgetExceeded, DomainError, IncompleteCoverError
from homshift.graph import fixture
from oracles import cover_finite_by_nilpotency, nonbacktracking_walks_brute, random_connected_graph


def test_hard_square_cover_is_four_node_path():
    g = fixture("hard_square")
    tree = build_cover(g, root=1)
    assert tree.complete
    assert tree.walks == ((1,), (1, 0), (1, 0, 0), (1, 0, 0, 1))
    assert sorted(tree.degree_sequence()) == [1, 1, 2, 2]


@pytest.mark.parametrize("name,k", [("barbell", 4), ("cycle", 5)])
def test_infinite_covers_have_arc_cycles(name, k):
    g = fixture(name, k)
    cyc = find_arc_cycle(g)
    assert cyc is not None and not is_cover_finite(g)
    # consecutive arcs chain head to tail without backtracking, and the cycle closes
    for (a, b), (c, d) in zip(cyc, cyc[1:] + cyc[:1]):
        assert b == c and d != a and g.has_edge(a, b)


def test_trees_have_finite_covers():
    for g in (fixture("path", 5), fixture("star", 6)):
        assert is_cover_finite(g)
        assert len(build_cover(g)) == len(g)


def test_truncated_cover_of_triangle():
    tree = build_cover(fixture("cycle", 3), depth_cap=4)
    assert not tree.complete and len(tree) == 9
    assert all(tree.is_frontier(i) for i in range(len(tree)) if tree.depth(i) == 4)


def test_cover_budget():
    with pytest.raises(BudgetExceeded):
        build_cover(fixture("complete", 5), depth_cap=12, node_budget=100)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10_000), st.integers(2, 6))
def test_finiteness_matches_nilpotency(seed, nv):
    g = random_connected_graph(random.Random(seed), nv)
    assert is_cover_finite(g) == cover_finite_by_nilpotency(g)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000), st.integers(2, 5))
def test_cover_levels_match_walk_enumeration(seed, nv):
    g = random_connected_graph(random.Random(seed), nv)
    tree = build_cover(g, depth_cap=4, node_budget=10**6)
    counts = Counter(tree.depth(i) for i in range(len(tree)))
    for d in range(5):
        assert counts.get(d, 0) == len(nonbacktracking_walks_brute(g, 0, d))


def test_lift_walk_on_triangle():
    g = fixture("cycle", 3)
    tree = build_cover(g, depth_cap=4)
    nodes = lift_walk(g, tree, [0, 1, 2, 0])
    assert nodes == [0, 1, 3, 5]
    assert [tree.terminal(n) for n in nodes] == [0, 1, 2, 0]


def test_lift_walk_backtracking_returns_to_parent():
    g = fixture("path", 4)
    tree = build_cover(g)
    nodes = lift_walk(g, tree, [0, 1, 2, 1, 0])
    assert nodes[0] == nodes[-1] == 0 and nodes[1] == nodes[3]


def test_lift_walk_errors():
    with pytest.raises(DomainError):
        lift_walk(fixture("complete", 4), build_cover(fixture("complete", 4), depth_cap=2), [0, 1])
    g = fixture("cycle", 3)
    tree = build_cover(g, depth_cap=2)
    with pytest.raises(IncompleteCoverError):
        lift_walk(g, tree, [0, 1, 2, 0, 1])
    with pytest.raises(DomainError):
        lift_walk(g, tree, [1, 2])


def test_cover_dot_marks_root():
    dot = cover_to_dot(build_cover(fixture("hard_square"), root=1))
    assert "n0 [label=\"1\", style=filled" in dot and dot.count(" -- ") == 3
