from __future__ import annotations

from itertools import permutations
from math import comb, factorial

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kfree.canonical import automorphism_count, canonical_form, canonical_labeling
from kfree.errors import SizeLimitError
from kfree.generators import (
    complete_graph,
    cycle_graph,
    empty_graph,
    graph_from_mask,
    star_graph,
    turan_graph,
)
from kfree.graph import Graph
from kfree.graph6 import emit_graph6, parse_graph6
from tests.conftest import graphs


def _to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@pytest.mark.parametrize(
    "g, expected",
    [
        (cycle_graph(5), 10),
        (complete_graph(4), 24),
        (empty_graph(5), 120),
        (star_graph(4), 24),
        (Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]), 2),
        (turan_graph(6, 2), 72),
        (parse_graph6("IheA@GUAo"), 120),
    ],
)
def test_automorphism_counts(g, expected):
    assert automorphism_count(g) == expected


@settings(max_examples=80)
@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_form_is_invariant_under_relabeling(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert canonical_form(h) == canonical_form(g)
    assert automorphism_count(h) == automorphism_count(g)


@settings(max_examples=80)
@given(graphs(min_n=4, max_n=6), st.integers(min_value=0, max_value=2**15 - 1))
def test_equal_forms_iff_isomorphic(g, other_mask):
    h = graph_from_mask(g.n, other_mask % (1 << comb(g.n, 2)))
    same = canonical_form(g) == canonical_form(h)
    assert same == nx.is_isomorphic(_to_networkx(g), _to_networkx(h))


@given(graphs(max_n=7))
def test_order_relabels_to_the_form(g):
    label = canonical_labeling(g)
    assert sorted(label.order) == list(range(g.n))
    assert canonical_form(parse_graph6(label.form)) == label.form


@pytest.mark.parametrize("n, classes", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
def test_isomorphism_class_counts(n, classes):
    forms = {canonical_form(graph_from_mask(n, m)) for m in range(1 << comb(n, 2))}
    assert len(forms) == classes


def test_orbit_sizes_sum_to_all_labeled_graphs():
    n = 5
    seen = {}
    for mask in range(1 << comb(n, 2)):
        label = canonical_labeling(graph_from_mask(n, mask))
        seen[label.form] = label.automorphisms
    assert sum(factorial(n) // aut for aut in seen.values()) == 1 << comb(n, 2)


def test_large_graphs_are_refused():
    with pytest.raises(SizeLimitError):
        canonical_form(empty_graph(11))


def _smallest_record(g: Graph) -> str:
    return min(emit_graph6(g.relabel(perm)) for perm in permutations(range(g.n)))


@pytest.mark.parametrize("record, expected", [("DK_", "D@o"), ("Dk_", "D@s"), ("Dhc", "DLo")])
def test_form_is_the_smallest_record(record, expected):
    assert canonical_form(parse_graph6(record)) == expected


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_form_matches_brute_force_on_every_graph(n):
    for mask in range(1 << comb(n, 2)):
        g = graph_from_mask(n, mask)
        assert canonical_form(g) == _smallest_record(g), emit_graph6(g)


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=6, max_n=6))
def test_form_matches_brute_force_on_six_vertices(g):
    assert canonical_form(g) == _smallest_record(g)
