from __future__ import annotations

from fractions import Fraction

import pytest

from kfree.census import (
    CensusOptions,
    merge_aggregates,
    run_census,
    shard_ranges,
    sharpness_sweep,
    unlabeled_free_classes,
    verify_exhaustive_supersat,
    verify_lemma_m_positive,
    verify_lemma_phi,
    verify_neighborhood_farness,
    violation_kinds,
    write_sidecar,
)
from kfree.errors import PreconditionError, SizeLimitError
from schemas.census_output import CensusMode, CheckKind, Violation
from tests import naive

# (n, livres de triângulo, bipartidos) rotulados
TRIANGLE_FREE = [(3, 7, 7), (4, 41, 41), (5, 388, 376), (6, 5789, 5177)]


# -----------------------------
# Shards
# -----------------------------
def test_shard_ranges_cover_everything():
    assert shard_ranges(10, 2) == [(0, 4), (4, 8), (8, 10)]
    assert shard_ranges(8, 5) == [(0, 8)]


def test_merge_aggregates():
    left = {"a": 1, "h": {"0": 1}, "v": [1]}
    right = {"a": 2, "h": {"0": 2, "1": 1}, "v": [2], "b": 5}
    assert merge_aggregates(left, right) == {"a": 3, "h": {"0": 3, "1": 1}, "v": [1, 2], "b": 5}


# -----------------------------
# Censo rotulado
# -----------------------------
@pytest.mark.parametrize("n, free, bipartite", TRIANGLE_FREE)
def test_triangle_free_census(n, free, bipartite):
    record = run_census(n, 2)
    assert record.mode == CensusMode.labeled
    assert record.total_graphs == 1 << (n * (n - 1) // 2)
    assert (record.free_count, record.r_partite_count) == (free, bipartite)
    assert record.ratio == bipartite / free


def test_smallest_census_record():
    record = run_census(3, 2)
    assert record.ratio == 1.0
    assert record.turan_edges == 2
    assert record.violations == []


@pytest.mark.parametrize("n, r", [(4, 1), (4, 3), (5, 3)])
def test_census_matches_naive(n, r):
    record = run_census(n, r)
    assert (record.free_count, record.r_partite_count) == naive.census_counts(n, r)


def test_trivial_regime_counts_everything():
    record = run_census(3, 3)
    assert record.free_count == record.r_partite_count == 8


def test_distance_histogram_on_five_vertices():
    record = run_census(5, 2, CensusOptions(with_distance=True))
    assert record.distance_histogram == {0: 376, 1: 12}


def test_supersat_and_m_checks_find_nothing():
    record = run_census(5, 2, CensusOptions(with_supersat=True, with_m_check=True))
    assert record.supersat_violations == 0
    assert record.m_zero_violations == 0
    assert record.violations == []


def test_result_does_not_depend_on_shard_size():
    options = dict(with_distance=True, with_supersat=True)
    coarse = run_census(5, 2, CensusOptions(shard_bits=10, **options))
    fine = run_census(5, 2, CensusOptions(shard_bits=3, **options))
    assert coarse.payload_json() == fine.payload_json()
    assert fine.runtime.shards == 128


@pytest.mark.slow
def test_result_does_not_depend_on_workers():
    single = run_census(5, 2, CensusOptions(with_distance=True, shard_bits=4))
    parallel = run_census(5, 2, CensusOptions(with_distance=True, shard_bits=4, jobs=2))
    assert single.payload_json() == parallel.payload_json()


def test_labeled_census_refuses_nine_vertices():
    with pytest.raises(SizeLimitError):
        run_census(9, 2)


# -----------------------------
# Modo não rotulado
# -----------------------------
def test_unlabeled_classes_on_five_vertices():
    classes = unlabeled_free_classes(5, 2)
    assert len(classes) == 14
    assert sum(c.weight for c in classes) == 388


def test_unlabeled_census_reweights_to_labeled_counts():
    record = run_census(5, 2, CensusOptions(unlabeled=True, with_distance=True))
    assert record.mode == CensusMode.unlabeled
    assert (record.free_count, record.r_partite_count) == (388, 376)
    assert (record.free_classes, record.r_partite_classes) == (14, 13)
    assert record.distance_histogram == {0: 376, 1: 12}


def test_class_counts_alongside_labeled_census():
    record = run_census(5, 2, CensusOptions(with_classes=True))
    assert (record.free_classes, record.r_partite_classes) == (14, 13)


def test_unlabeled_limit():
    with pytest.raises(SizeLimitError):
        unlabeled_free_classes(10, 2)


# -----------------------------
# Verificações exaustivas
# -----------------------------
@pytest.mark.parametrize("n", [3, 4, 5, 6])
@pytest.mark.parametrize("r", [1, 2, 3])
def test_exhaustive_supersat_has_no_violations(n, r):
    report = verify_exhaustive_supersat(n, r)
    assert report.check == CheckKind.supersat
    assert report.graphs_scanned == 1 << (n * (n - 1) // 2)
    assert report.ok


def test_exhaustive_supersat_verdicts_on_three_vertices():
    report = verify_exhaustive_supersat(3, 2)
    assert report.class_size == 1
    assert report.verdict_counts == {"holds": 1, "trivial": 0, "zero_bound": 0}


def test_m_positive_on_five_vertices():
    report = verify_lemma_m_positive(5, 2)
    assert report.class_size == 12
    assert report.items_checked == 60
    assert report.ok


def test_m_positive_on_six_vertices():
    assert verify_lemma_m_positive(6, 2).ok
    assert verify_lemma_m_positive(6, 3).ok


def test_empty_class_is_reported():
    report = verify_lemma_m_positive(4, 2)
    assert report.class_size == 0
    assert "classe vazia" in report.summary()


def test_phi_on_five_vertices():
    report = verify_lemma_phi(5, 2)
    assert report.class_size == 12
    assert report.items_checked == 60
    assert report.images_checked == 240
    assert report.verdict_counts == {"m_zero": 0}
    assert report.ok


@pytest.mark.parametrize("n, r", [(5, 2), (6, 2), (6, 3)])
def test_neighborhood_farness_exhaustive(n, r):
    assert verify_neighborhood_farness(n, r).ok


def test_exhaustive_preconditions():
    with pytest.raises(PreconditionError):
        verify_neighborhood_farness(5, 1)
    with pytest.raises(SizeLimitError):
        verify_exhaustive_supersat(8, 2)


# -----------------------------
# Nitidez
# -----------------------------
def test_sharpness_for_triangles():
    rows = sharpness_sweep(2, 4)
    assert [(row.n, row.t) for row in rows] == [(4, 1), (6, 1), (8, 1), (8, 2)]
    for row in rows:
        assert row.distance == row.t
        assert row.cliques == row.expected_cliques
        assert row.within_envelope
    last = rows[-1]
    assert Fraction(last.cliques) / Fraction(last.bound_num, last.bound_den) == Fraction(3, 2)


def test_sharpness_for_k4():
    rows = sharpness_sweep(3, 2)
    assert len(rows) == 1
    row = rows[0]
    assert (row.n, row.t, row.cliques) == (6, 1, 4)
    assert Fraction(row.cliques) / Fraction(row.bound_num, row.bound_den) == Fraction(8, 3)


def test_sharpness_limits():
    with pytest.raises(PreconditionError):
        sharpness_sweep(4, 2)
    with pytest.raises(SizeLimitError):
        sharpness_sweep(2, 7)


# -----------------------------
# Sidecar
# -----------------------------
def test_sidecar_and_kind_counts(tmp_path):
    violations = [
        Violation(kind="m_zero", graph6="Dhc"),
        Violation(kind="supersat", graph6="C~", detail="t=2 cliques=4"),
        Violation(kind="m_zero", graph6="D?{"),
    ]
    path = tmp_path / "out" / "violations.g6"
    assert write_sidecar(path, violations) == 3
    assert path.read_text(encoding="ascii").splitlines() == ["Dhc", "C~", "D?{"]
    assert violation_kinds(violations) == {"m_zero": 2, "supersat": 1}


# -----------------------------
# Verificações em n = 7
# -----------------------------
@pytest.mark.slow
@pytest.mark.parametrize("r", [2, 3])
def test_m_positive_on_seven_vertices(r):
    report = verify_lemma_m_positive(7, r, jobs=2)
    assert report.graphs_scanned == 1 << 21
    assert report.ok


@pytest.mark.slow
@pytest.mark.parametrize("r", [2, 3])
def test_phi_on_seven_vertices(r):
    assert verify_lemma_phi(7, r, jobs=2).ok


@pytest.mark.slow
@pytest.mark.parametrize("r", [2, 3])
def test_neighborhood_farness_on_seven_vertices(r):
    assert verify_neighborhood_farness(7, r, jobs=2).ok
