from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kfree.cliques import count_cliques
from kfree.errors import PreconditionError
from kfree.generators import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    graph_from_mask,
    mask_of,
    random_graph,
    turan_assignment,
    turan_edges,
    turan_graph,
    turan_part_sizes,
    turan_plus_matching,
)
from tests.conftest import graphs


def test_turan_part_sizes_put_larger_parts_first():
    assert turan_part_sizes(7, 3) == [3, 2, 2]
    assert turan_assignment(7, 3) == [0, 0, 0, 1, 1, 2, 2]


@pytest.mark.parametrize("n, r, expected", [(6, 3, 12), (8, 2, 16), (5, 2, 6), (4, 4, 6), (3, 1, 0)])
def test_turan_edges(n, r, expected):
    assert turan_edges(n, r) == expected
    assert turan_graph(n, r).num_edges == expected


@given(st.integers(min_value=1, max_value=6), st.integers(min_value=1, max_value=6))
def test_turan_edges_match_closed_form_when_r_divides_n(r, k):
    n = r * k
    assert turan_edges(n, r) == Fraction(r - 1, r) * n * n / 2


def test_turan_graph_is_complete_multipartite():
    g = turan_graph(6, 3)
    assert count_cliques(g, 3).count == 8
    assert count_cliques(g, 4).count == 0


def test_turan_plus_matching_adds_triangles():
    g = turan_plus_matching(8, 2, 2)
    assert g.num_edges == 18
    assert g.has_edge(0, 1) and g.has_edge(2, 3)
    assert count_cliques(g, 3).count == 8


def test_turan_plus_matching_needs_room_in_first_part():
    with pytest.raises(PreconditionError):
        turan_plus_matching(8, 2, 3)


def test_turan_rejects_more_parts_than_vertices():
    with pytest.raises(PreconditionError):
        turan_part_sizes(3, 4)


def test_random_graph_is_deterministic_per_seed():
    assert random_graph(12, 0.5, 7) == random_graph(12, 0.5, 7)
    assert random_graph(9, 0.0, 1).num_edges == 0
    assert random_graph(9, 1.0, 1) == complete_graph(9)


def test_random_graph_rejects_bad_probability():
    with pytest.raises(PreconditionError):
        random_graph(5, 1.5, 0)


def test_disjoint_union_of_triangles():
    g = disjoint_union([complete_graph(3), complete_graph(3)])
    assert g.n == 6 and g.num_edges == 6
    assert not g.has_edge(2, 3)


def test_cycle_needs_three_vertices():
    with pytest.raises(PreconditionError):
        cycle_graph(2)


@given(graphs(max_n=8))
def test_mask_round_trip(g):
    assert graph_from_mask(g.n, mask_of(g)) == g
