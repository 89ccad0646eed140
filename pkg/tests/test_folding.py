import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homshift.errors import DomainError
from homshift.folding import (
    Endomorphism,
    find_collapsing_map,
    find_fold,
    four_cycle_hom_free_structural,
    is_bipartite_dismantlable,
    is_dismantlable,
    is_four_cycle_hom_free,
    stiff_reduce,
    terminal_shape,
)
from homshift.graph import fixture, parse_graph
from oracles import (
    collapsing_maps_brute,
    four_cycle_hom_free_brute,
    isomorphic,
    random_connected_graph,
    random_graph,
)


def is_stiff(g):
    return not any(v != w and g.adj[v] <= g.adj[w] for v in range(len(g)) for w in range(len(g)))


@pytest.mark.parametrize(
    "g,fold",
    [(fixture("cycle", 4), (0, 2)), (fixture("complete", 3), None), (fixture("hard_square"), (1, 0))],
)
def test_first_fold(g, fold):
    assert find_fold(g) == fold


def test_c4_folds_to_edge():
    seq = stiff_reduce(fixture("cycle", 4))
    assert terminal_shape(seq.terminal) == "edge"
    assert seq.to_json()["terminal"] == [["2", "3"]]


def test_stiff_graphs_do_not_fold():
    for g in (fixture("barbell", 3), fixture("cycle", 5), fixture("complete", 4)):
        assert stiff_reduce(g).steps == ()


@pytest.mark.parametrize(
    "name,k,dism,bdism",
    [
        ("hard_square", None, True, True),
        ("cycle", 4, False, True),
        ("cycle", 5, False, False),
        ("path", 5, False, True),
        ("star", 6, False, True),
        ("barbell", 2, True, True),
        ("complete", 3, False, False),
    ],
)
def test_dismantlability(name, k, dism, bdism):
    g = fixture(name, k)
    assert is_dismantlable(g) is dism
    assert is_bipartite_dismantlable(g) is bdism


def test_dismantlable_needs_connected_graph():
    with pytest.raises(DomainError):
        is_dismantlable(parse_graph("a b\nc c\n"))


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 10_000), st.integers(2, 7))
def test_terminal_is_stiff_and_order_independent(seed, nv):
    rng = random.Random(seed)
    g = random_connected_graph(rng, nv)
    base = stiff_reduce(g).terminal
    assert is_stiff(base)
    other = stiff_reduce(g, policy="random", seed=rng.randrange(10**6)).terminal
    assert is_stiff(other) and isomorphic(base, other)


@pytest.mark.parametrize(
    "name,k,free",
    [("hard_square", None, True), ("complete", 4, False), ("barbell", 2, False),
     ("cycle", 5, True), ("cycle", 4, False), ("path", 4, True)],
)
def test_four_cycle_hom_free_fixtures(name, k, free):
    g = fixture(name, k)
    assert is_four_cycle_hom_free(g) is free
    assert four_cycle_hom_free_structural(g) is free
    assert four_cycle_hom_free_brute(g) is free


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 6))
def test_four_cycle_criteria_agree_with_brute_force(seed, nv):
    g = random_graph(random.Random(seed), nv)
    want = four_cycle_hom_free_brute(g)
    assert is_four_cycle_hom_free(g) is want
    assert four_cycle_hom_free_structural(g) is want


def test_hard_square_collapses_to_looped_vertex():
    res = find_collapsing_map(fixture("hard_square"))
    assert res.status == "yes"
    assert res.endomorphism.image == (0, 0)
    assert res.endomorphism.iterate_image()[-1] == frozenset({0})


def test_edge_collapses_by_swap():
    res = find_collapsing_map(fixture("complete", 2))
    assert res and res.endomorphism.image == (1, 0)


def test_c5_has_no_collapsing_map():
    assert find_collapsing_map(fixture("cycle", 5)).status == "no"


def test_collapse_budget_gives_unknown():
    res = find_collapsing_map(fixture("complete", 5), node_budget=1)
    assert res.status in ("unknown", "no")
    assert res.nodes <= 2


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 10_000), st.integers(2, 6))
def test_collapse_search_agrees_with_exhaustive(seed, nv):
    g = random_connected_graph(random.Random(seed), nv)
    res = find_collapsing_map(g)
    brute = collapsing_maps_brute(g)
    assert res.status == ("yes" if brute else "no")
    if res:
        f = res.endomorphism
        assert f.is_homomorphism() and f.is_adjacent_to_identity() and f.collapses()
        assert f.image in brute


def test_endomorphism_checks():
    g = fixture("path", 3)
    f = Endomorphism(g, (1, 0, 1))
    assert f.is_homomorphism() and f.is_adjacent_to_identity() and f.collapses()
    assert f.to_json() == {"0": "1", "1": "0", "2": "1"}
    assert not Endomorphism(g, (0, 0, 0)).is_homomorphism()
