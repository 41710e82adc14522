from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kfree.cliques import is_clique_free
from kfree import structure
from kfree.errors import InvariantError, PreconditionError, SizeLimitError
from kfree.generators import complete_graph, cycle_graph, disjoint_union, star_graph, turan_graph
from kfree.graph import members, vertex_set
from kfree.partition import RPartition, enumerate_optimal_partitions, is_r_partite
from kfree.structure import (
    BadFamily,
    bad_sets,
    check_m_positive,
    classify_Q_membership,
    compute_m_data,
    greedy_bad_family,
    inspect_structure,
    is_balanced,
    is_close,
    is_internally_sparse,
    is_uniformly_dense,
    m_zero_partitions,
    mdata_out,
    phi_apply,
    phi_audit,
    phi_image_is_free,
    phi_images,
    phi_pairs,
    phi_potential_edge_count,
    require_free_non_partite,
    size_floor,
    verify_maximal,
)
from kfree.thresholds import paper_thresholds, relaxed_thresholds
from schemas.structure_output import CheckStatus
from schemas.structure_thresholds import StructureThresholds
from tests.conftest import graphs


def _thresholds(**overrides) -> StructureThresholds:
    base = dict(alpha=0.25, size_fraction=0.2, sparse_fraction=0.34, balance_fraction=0.34, closeness_exponent=1.5)
    base.update(overrides)
    return StructureThresholds(**base)


@pytest.fixture
def c5_partition(c5) -> RPartition:
    # partes {0,2} e {1,3,4}: a única aresta interior é 3–4
    return RPartition.of(c5, 2, [0, 1, 0, 1, 1])


# -----------------------------
# Limiares
# -----------------------------
def test_paper_thresholds_depend_on_r():
    th = paper_thresholds(2)
    assert th.alpha == 1 / 32
    assert th.closeness_exponent == 1.75
    assert size_floor(th, 10) == 1


def test_is_close_compares_integer_powers():
    th = _thresholds(closeness_exponent=1.5)
    assert is_close(0, 5, th)
    assert is_close(11, 5, th)
    assert not is_close(12, 5, th)


# -----------------------------
# Predicados
# -----------------------------
def test_internal_sparsity_on_k4():
    k4 = complete_graph(4)
    assert is_internally_sparse(k4, 3, _thresholds(sparse_fraction=0.25)).status == CheckStatus.proved
    outcome = is_internally_sparse(k4, 3, _thresholds(sparse_fraction=0.2))
    assert outcome.status == CheckStatus.refuted
    assert outcome.witness.internal_degree == 1


def test_balance_on_star():
    star = star_graph(5)
    refuted = is_balanced(star, 2, _thresholds(balance_fraction=0.3))
    assert refuted.holds is False
    assert refuted.witness.part == 0 and refuted.witness.size == 1
    assert is_balanced(star, 2, _thresholds(balance_fraction=0.34)).holds is True


def test_complete_bipartite_is_uniformly_dense():
    outcome = is_uniformly_dense(turan_graph(6, 2), 2, _thresholds(), mode="exact")
    assert outcome.status == CheckStatus.proved
    assert outcome.evaluations > 0


def test_c5_density_refuted_with_empty_pair(c5):
    outcome = is_uniformly_dense(c5, 2, relaxed_thresholds(), mode="exact")
    assert outcome.status == CheckStatus.refuted
    witness = outcome.witness
    assert witness.edges == 0
    assert len(witness.a) == len(witness.b)
    a, b = vertex_set(witness.a), vertex_set(witness.b)
    assert c5.edges_between(a, b) == 0


def test_two_triangles_density_refuted_across_components():
    g = disjoint_union([complete_graph(3), complete_graph(3)])
    outcome = is_uniformly_dense(g, 2, relaxed_thresholds(), mode="exact")
    assert outcome.status == CheckStatus.refuted
    assert outcome.holds is False
    witness = outcome.witness
    assert witness.edges == 0
    a, b = vertex_set(witness.a), vertex_set(witness.b)
    assert g.edges_between(a, b) == 0


def test_density_budget():
    k33 = turan_graph(6, 2)
    with pytest.raises(SizeLimitError):
        is_uniformly_dense(k33, 2, _thresholds(), mode="exact", budget=1)
    sampled = is_uniformly_dense(k33, 2, _thresholds(), mode="auto", budget=1, samples=200, seed=3)
    assert sampled.status == CheckStatus.not_refuted
    assert sampled.holds is None


def test_density_sampling_is_deterministic(c5):
    first = is_uniformly_dense(c5, 2, relaxed_thresholds(), mode="sample", samples=50, seed=9)
    second = is_uniformly_dense(c5, 2, relaxed_thresholds(), mode="sample", samples=50, seed=9)
    assert first == second


# -----------------------------
# Conjuntos ruins e (m, j, X)
# -----------------------------
def test_c5_bad_sets(c5, c5_partition):
    assert bad_sets(c5, c5_partition, 0) == [vertex_set([3, 4])]
    assert bad_sets(c5, c5_partition, 1) == []


def test_c5_m_data(c5, c5_partition):
    md = compute_m_data(c5, c5_partition)
    assert (md.m, md.j, members(md.x)) == (1, 0, [3, 4])
    assert phi_potential_edge_count(c5, c5_partition, md) == 2
    assert phi_pairs(c5, c5_partition, md) == [(3, 1), (4, 1)]
    out = mdata_out(c5, c5_partition, md)
    assert out.families == [[[3, 4]], []]
    assert out.potential_edges == 2


def test_m_data_checks_family_maximality(c5, c5_partition, monkeypatch):
    monkeypatch.setattr(structure, "greedy_bad_family", lambda g, p, j: BadFamily(j=j, sets=()))
    with pytest.raises(InvariantError, match="maximal"):
        compute_m_data(c5, c5_partition)


def test_bad_sets_reject_unknown_part(c5, c5_partition):
    with pytest.raises(PreconditionError):
        bad_sets(c5, c5_partition, 2)


def test_m_positive_on_c5_and_petersen(c5, petersen):
    assert check_m_positive(c5, 2)
    assert m_zero_partitions(petersen, 2) == []


def test_lemma_preconditions():
    with pytest.raises(PreconditionError):
        require_free_non_partite(complete_graph(4), 2)
    with pytest.raises(PreconditionError):
        require_free_non_partite(cycle_graph(6), 2)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=3, max_n=7), st.integers(min_value=2, max_value=3))
def test_greedy_families_are_maximal_and_m_positive(g, r):
    for p in enumerate_optimal_partitions(g, r):
        for j in range(r):
            family = greedy_bad_family(g, p, j)
            assert verify_maximal(g, p, family)
            union = 0
            for s in family.sets:
                assert not s & union
                union |= s
    if is_clique_free(g, r + 1) and not is_r_partite(g, r):
        assert check_m_positive(g, r)


# -----------------------------
# Φ
# -----------------------------
def test_phi_apply_on_c5(c5, c5_partition):
    md = compute_m_data(c5, c5_partition)
    bare = phi_apply(c5, c5_partition, md, "00")
    assert sorted(bare.edges()) == [(0, 1), (1, 2)]
    full = phi_apply(c5, c5_partition, md, [1, 1])
    assert sorted(full.edges()) == [(0, 1), (1, 2), (1, 3), (1, 4)]


def test_phi_apply_validates_choice(c5, c5_partition):
    md = compute_m_data(c5, c5_partition)
    with pytest.raises(PreconditionError):
        phi_apply(c5, c5_partition, md, "02")
    with pytest.raises(PreconditionError):
        phi_apply(c5, c5_partition, md, "0")


def test_phi_images_of_c5_are_triangle_free(c5, c5_partition):
    md = compute_m_data(c5, c5_partition)
    images = list(phi_images(c5, c5_partition, md))
    assert len(images) == 4
    assert len({h.adj for h in images}) == 4
    assert all(is_clique_free(h, 3) for h in images)
    assert phi_image_is_free(c5, 2)


def test_phi_audit_on_c5(c5):
    audit = phi_audit(c5, 2)
    assert audit.partitions == 5
    assert audit.images == 20
    assert audit.m_zero == 0 and audit.skipped == 0
    assert audit.failures == []


# -----------------------------
# Classificação
# -----------------------------
def test_inspect_c5_with_relaxed_thresholds(c5):
    report = inspect_structure(c5, 2, relaxed_thresholds())
    flags = report.flags
    assert report.thresholds == "relaxed"
    assert report.canonical_form == "DLo"
    assert flags.free and not flags.r_partite
    assert flags.distance == 1 and flags.close
    assert flags.uniformly_dense is False
    assert flags.internally_sparse and flags.balanced
    assert flags.in_q is False
    assert flags.m == 1


def test_classify_matches_inspect(petersen):
    th = paper_thresholds(2)
    assert classify_Q_membership(petersen, 2, th) == inspect_structure(petersen, 2, th).flags


def test_graph_with_clique_is_outside_q():
    flags = classify_Q_membership(complete_graph(4), 2, relaxed_thresholds())
    assert not flags.free
    assert flags.in_q is False
    assert flags.m is None
