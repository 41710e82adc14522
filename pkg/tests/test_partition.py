from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kfree.errors import PreconditionError, SizeLimitError
from kfree.generators import (
    complete_graph,
    cycle_graph,
    empty_graph,
    graph_from_mask,
    random_graph,
    turan_graph,
    turan_plus_matching,
)
from kfree.graph import Graph
from kfree.graph6 import parse_graph6
from kfree.partition import (
    RPartition,
    canonical_optimal_partition,
    distance_to_r_partite,
    enumerate_optimal_partitions,
    find_r_coloring,
    interior_edges,
    is_r_partite,
    is_t_far,
    local_search_partition,
    subset_edge_table,
)
from tests import naive
from tests.conftest import graphs


def _normalize(assignment):
    relabel = {}
    return tuple(relabel.setdefault(p, len(relabel)) for p in assignment)


# -----------------------------
# Arestas interiores
# -----------------------------
def test_interior_edges_of_explicit_partition(c5):
    p = RPartition.of(c5, 2, [0, 1, 0, 1, 1])
    assert p.interior == 1
    assert interior_edges(c5, p) == 1
    assert p.part_sizes() == [2, 3]


def test_partition_validation(c5):
    with pytest.raises(PreconditionError):
        RPartition.of(c5, 2, [0, 1, 2, 0, 1])
    with pytest.raises(PreconditionError):
        RPartition.of(c5, 2, [0, 1])


def test_normalized_orders_parts_by_smallest_vertex(c5):
    p = RPartition.of(c5, 3, [2, 2, 0, 1, 0]).normalized()
    assert p.assignment == (0, 0, 1, 2, 1)


def test_subset_edge_table():
    table = subset_edge_table(complete_graph(4))
    assert table[0b1111] == 6
    assert table[0b0111] == 3
    assert table[0b0001] == 0


# -----------------------------
# Distância exata
# -----------------------------
@pytest.mark.parametrize(
    "record, r, expected",
    [
        ("Dhc", 2, 1),
        ("Dhc", 3, 0),
        ("D?{", 2, 0),
        ("C~", 2, 2),
        ("C~", 3, 1),
        ("IheA@GUAo", 2, 3),
        ("IheA@GUAo", 3, 0),
    ],
)
def test_known_distances(record, r, expected):
    result = distance_to_r_partite(parse_graph6(record), r)
    assert result.distance == expected
    assert result.witness.interior == expected


def test_star_witness_is_the_bipartition():
    result = distance_to_r_partite(parse_graph6("D?{"), 2)
    assert result.witness.assignment == (0, 0, 0, 0, 1)
    assert result.method == "dp"


def test_turan_plus_matching_distance_is_t():
    assert distance_to_r_partite(turan_plus_matching(8, 2, 2), 2).distance == 2
    assert distance_to_r_partite(turan_plus_matching(9, 3, 1), 3).distance == 1


@pytest.mark.parametrize("n", [3, 4, 5])
@pytest.mark.parametrize("r", [1, 2, 3])
def test_distance_matches_naive_for_all_small_graphs(n, r):
    for mask in range(1 << (n * (n - 1) // 2)):
        g = graph_from_mask(n, mask)
        expected = naive.distance(n, naive.edge_set(g.edges()), r)
        assert distance_to_r_partite(g, r).distance == expected, (mask, r)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=8), st.integers(min_value=1, max_value=3))
def test_distance_matches_naive(g, r):
    expected = naive.distance(g.n, naive.edge_set(g.edges()), r)
    result = distance_to_r_partite(g, r)
    assert result.distance == expected
    assert result.witness.interior == expected


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=9), st.integers(min_value=2, max_value=4))
def test_branch_and_bound_agrees_with_dp(g, r):
    dp = distance_to_r_partite(g, r, "dp")
    bb = distance_to_r_partite(g, r, "branch_and_bound")
    assert bb.distance == dp.distance
    assert bb.witness.interior == bb.distance
    if r < g.n:
        assert bb.method == "branch_and_bound"


def test_trivial_when_parts_cover_vertices():
    result = distance_to_r_partite(complete_graph(4), 4)
    assert result.distance == 0
    assert result.method == "trivial"


def test_dp_refuses_too_many_vertices():
    with pytest.raises(SizeLimitError):
        distance_to_r_partite(empty_graph(19), 2, "dp")


def test_dp_refuses_too_many_parts():
    with pytest.raises(SizeLimitError):
        distance_to_r_partite(empty_graph(12), 9, "dp")


def test_auto_switches_to_branch_and_bound():
    result = distance_to_r_partite(cycle_graph(20), 2)
    assert result.distance == 0
    assert result.method == "branch_and_bound"
    assert distance_to_r_partite(cycle_graph(21), 2).distance == 1


def test_branch_and_bound_refuses_beyond_its_limit():
    with pytest.raises(SizeLimitError):
        distance_to_r_partite(empty_graph(41), 2, "branch_and_bound")


# -----------------------------
# Coloração e farness
# -----------------------------
@given(graphs(max_n=8), st.integers(min_value=1, max_value=4))
def test_coloring_is_proper_when_found(g, r):
    coloring = find_r_coloring(g, r)
    colorable = naive.is_r_colorable(g.n, naive.edge_set(g.edges()), r)
    assert (coloring is not None) == colorable
    if coloring is not None:
        assert all(coloring[u] != coloring[v] for u, v in g.edges())
        assert coloring == list(_normalize(coloring))


def test_k4_is_not_three_colorable():
    assert find_r_coloring(complete_graph(4), 3) is None
    assert not is_r_partite(complete_graph(4), 3)


def test_t_far(c5):
    assert is_t_far(c5, 2, 0)
    assert is_t_far(c5, 2, 1)
    assert not is_t_far(c5, 2, 2)
    assert not is_t_far(c5, 3, 1)


# -----------------------------
# Monotonicidade da distância
# -----------------------------
@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=8), st.integers(min_value=1, max_value=4))
def test_more_parts_never_increase_the_distance(g, r):
    assert distance_to_r_partite(g, r + 1).distance <= distance_to_r_partite(g, r).distance


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=8), st.integers(min_value=1, max_value=3), st.data())
def test_removing_an_edge_never_increases_the_distance(g, r, data):
    edges = list(g.edges())
    if not edges:
        return
    dropped = data.draw(st.sampled_from(edges))
    h = Graph.from_edges(g.n, [e for e in edges if e != dropped])
    assert distance_to_r_partite(h, r).distance <= distance_to_r_partite(g, r).distance


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=8), st.integers(min_value=1, max_value=4))
def test_distance_is_at_most_edges_over_r(g, r):
    assert distance_to_r_partite(g, r).distance <= g.num_edges // r


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=7), st.integers(min_value=1, max_value=3), st.integers(min_value=0, max_value=8))
def test_t_far_is_inherited_by_smaller_t(g, r, t):
    if is_t_far(g, r, t):
        assert all(is_t_far(g, r, s) for s in range(t + 1))


# -----------------------------
# Busca local
# -----------------------------
@settings(max_examples=60)
@given(graphs(min_n=2, max_n=12), st.integers(min_value=1, max_value=4), st.integers(min_value=0, max_value=2**32))
def test_local_search_guarantee(g, r, seed):
    p = local_search_partition(g, r, seed)
    assert p.interior <= g.num_edges // r
    assert p.interior >= distance_to_r_partite(g, r).distance


def test_local_search_is_deterministic_per_seed(petersen):
    assert local_search_partition(petersen, 2, 11) == local_search_partition(petersen, 2, 11)


@pytest.mark.parametrize("n", range(4, 13))
@pytest.mark.parametrize("r", [2, 3, 4])
def test_local_search_splits_turan_graphs_exactly(n, r):
    g = turan_graph(n, r)
    assert all(local_search_partition(g, r, seed).interior == 0 for seed in range(100))


def test_local_search_leaves_the_square_plateau():
    # K_{2,2} com partes {0,1} e {2,3}: a partição {0,2},{1,3} é ótimo local de movimentos simples
    square = Graph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert {local_search_partition(square, 2, seed).interior for seed in range(50)} == {0}


@pytest.mark.slow
def test_local_search_guarantee_on_seeded_random_graphs():
    for seed in range(1000):
        n = 2 + seed % 39
        r = 2 + seed % 3
        g = random_graph(n, 0.5, seed)
        p = local_search_partition(g, r, seed)
        assert p.interior <= g.num_edges // r, seed
        if n <= 10:
            assert p.interior >= distance_to_r_partite(g, r).distance, seed


# -----------------------------
# Partições ótimas
# -----------------------------
def test_c5_has_five_optimal_bipartitions(c5):
    partitions = list(enumerate_optimal_partitions(c5, 2))
    assert len(partitions) == 5
    assert all(p.interior == 1 for p in partitions)


def test_canonical_partition_is_the_first_in_lexicographic_order(c5):
    assert canonical_optimal_partition(c5, 2).assignment == (0, 0, 1, 0, 1)


@settings(max_examples=50, deadline=None)
@given(graphs(min_n=2, max_n=6), st.integers(min_value=2, max_value=3))
def test_enumeration_matches_naive(g, r):
    edges = naive.edge_set(g.edges())
    expected = {_normalize(a) for a in naive.optimal_assignments(g.n, edges, r)}
    got = [p.assignment for p in enumerate_optimal_partitions(g, r)]
    assert len(got) == len(set(got))
    assert set(got) == expected
    assert got == sorted(got)
