from __future__ import annotations

import json

import pytest

from cli.main import main
from kfree.generators import empty_graph, turan_plus_matching
from kfree.graph import Graph
from kfree.graph6 import emit_graph6, parse_graph6
from tests.conftest import ROOT, SAMPLES


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    for var in ("KFREE_JOBS", "KFREE_CHECKPOINT_DIR", "KFREE_LOG_LEVEL", "KFREE_DENSITY_BUDGET"):
        monkeypatch.delenv(var, raising=False)


def _run(capsys, *argv):
    code = main(["--quiet" if a == "@quiet" else a for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def _json(capsys, *argv):
    code, out, _ = _run(capsys, *argv)
    return code, json.loads(out)


# -----------------------------
# Por grafo
# -----------------------------
def test_distance_of_star(capsys):
    code, data = _json(capsys, "distance", "--graph6", "D?{", "-r", "2")
    assert code == 0
    assert data["distance"] == 0
    assert data["witness"] == [0, 0, 0, 0, 1]
    assert data["method"] == "dp"


def test_distance_csv(capsys):
    code, out, _ = _run(capsys, "distance", "--graph6", "Dhc", "-r", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["graph6,r,distance,witness,method", "Dhc,2,1,0 1 0 1 1,dp"]


def test_local_search_requires_seed(capsys):
    code, _, err = _run(capsys, "distance", "--graph6", "Dhc", "-r", "2", "--method", "local")
    assert code == 2
    assert "--seed" in err


def test_local_search_is_an_upper_bound(capsys):
    code, data = _json(capsys, "distance", "--graph6", "IheA@GUAo", "-r", "2", "--method", "local", "--seed", "4")
    assert code == 0
    assert data["exact"] is False
    assert 3 <= data["distance"] <= 7


def test_size_limit_exit_code(capsys):
    code, _, err = _run(capsys, "distance", "--graph6", emit_graph6(empty_graph(19)), "-r", "2", "--method", "dp")
    assert code == 3
    assert "Limite de recurso" in err


def test_malformed_graph6_exit_code(capsys):
    code, _, err = _run(capsys, "distance", "--graph6", "Dh", "-r", "2")
    assert code == 2
    assert "graph6 inválido" in err


def test_cliques_over_sample_file(capsys):
    code, data = _json(capsys, "cliques", "--input", str(SAMPLES), "-m", "3")
    assert code == 0
    assert [item["count"] for item in data] == [0, 0, 4, 0, 0]
    assert data[2]["witness"] == [0, 1, 2]


def test_cliques_through_vertex(capsys):
    code, data = _json(capsys, "cliques", "--graph6", "C~", "-m", "3", "--vertex", "3")
    assert code == 0
    assert data["count"] == 3
    assert 3 in data["witness"]


def test_transversal_clique(capsys):
    code, data = _json(capsys, "cliques", "--graph6", "Dhc", "--parts", "0,2;1")
    assert code == 0
    assert data["parts"] == [[0, 2], [1]]
    assert data["witness"] == [0, 1]


def test_transversal_clique_absent(capsys):
    code, data = _json(capsys, "cliques", "--graph6", "Dhc", "--parts", "0;1;2")
    assert code == 0
    assert data["witness"] is None


def test_transversal_clique_csv(capsys):
    code, out, _ = _run(capsys, "cliques", "--graph6", "C~", "--parts", "0;1;2", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["graph6,parts,witness", "C~,0;1;2,0 1 2"]


def test_cliques_needs_m_or_parts(capsys):
    code, _, err = _run(capsys, "cliques", "--graph6", "Dhc")
    assert code == 2
    assert "-m" in err


def test_supersat_single_graph(capsys):
    code, data = _json(capsys, "supersat-verify", "--graph6", "C~", "-r", "2")
    assert code == 0
    assert data["verdict"] == "holds"
    assert (data["bound_num"], data["bound_den"]) == (8, 3)


def test_supersat_sweep_is_a_list(capsys):
    code, data = _json(capsys, "supersat-verify", "--graph6", "C~", "-r", "2", "--sweep-t")
    assert code == 0
    assert [item["t"] for item in data] == [1, 2]


def test_props_with_relaxed_thresholds(capsys):
    code, data = _json(capsys, "props", "--graph6", "Dhc", "-r", "2", "--thresholds", "relaxed")
    assert code == 0
    assert data["thresholds"] == "relaxed"
    assert data["flags"]["in_q"] is False
    assert data["density"]["witness"]["kind"] == "density"
    assert data["canonical_form"] == "DLo"


def test_props_preset_from_file(capsys):
    code, data = _json(capsys, "props", "--graph6", "EFz_", "-r", "2", "--thresholds", "desk", "--thresholds-file", str(ROOT / "files" / "thresholds.json"))
    assert code == 0
    assert data["flags"]["uniformly_dense"] is True
    assert data["flags"]["r_partite"] is True


def test_props_sampling_requires_seed(capsys):
    code, _, _ = _run(capsys, "props", "--graph6", "Dhc", "-r", "2", "--density-mode", "sample")
    assert code == 2


def test_phi_on_c5(capsys):
    code, data = _json(capsys, "phi", "--graph6", "Dhc", "-r", "2")
    assert code == 0
    assert data["partition"] == [0, 0, 1, 0, 1]
    assert data["exhaustive"] is True
    assert data["images_checked"] == 4
    assert data["violation"] is None


def test_phi_single_image(capsys):
    code, data = _json(capsys, "phi", "--graph6", "Dhc", "-r", "2", "--partition", "0,1,0,1,1", "--choice", "11")
    expected = Graph.from_edges(5, [(0, 1), (1, 2), (1, 3), (1, 4)])
    assert code == 0
    assert data["mdata"]["x"] == [3, 4]
    assert parse_graph6(data["image"]) == expected


def test_phi_rejects_non_optimal_partition(capsys):
    code, _, err = _run(capsys, "phi", "--graph6", "Dhc", "-r", "2", "--partition", "0,0,0,1,1")
    assert code == 2
    assert "ótimo" in err


def test_phi_requires_free_graph(capsys):
    code, _, _ = _run(capsys, "phi", "--graph6", "C~", "-r", "2")
    assert code == 2


def test_lemma_m_on_c5(capsys):
    code, data = _json(capsys, "lemma-m", "--graph6", "Dhc", "-r", "2")
    assert code == 0
    assert len(data["partitions"]) == 5
    assert data["m_positive"] is True


def test_farness_on_c5(capsys):
    code, data = _json(capsys, "farness", "--graph6", "Dhc", "-r", "2")
    assert code == 0
    assert data["t"] == 1 and data["failures"] == []


# -----------------------------
# Exaustivos
# -----------------------------
def test_census_csv(capsys):
    code, out, _ = _run(capsys, "census", "-n", "3", "-r", "2", "--format", "csv", "@quiet")
    assert code == 0
    header, row = out.splitlines()
    assert header.startswith("n,r,mode,total_graphs,free_count")
    assert row.split(",")[:7] == ["3", "2", "labeled", "8", "7", "7", "1"]


def test_census_series_is_a_list(capsys):
    code, data = _json(capsys, "census", "-n", "4", "5", "-r", "2", "--with-distance", "@quiet")
    assert code == 0
    assert [rec["free_count"] for rec in data] == [41, 388]
    assert data[1]["distance_histogram"] == {"0": 376, "1": 12}


def test_census_checkpoint_needs_single_n(capsys, tmp_path):
    code, _, err = _run(capsys, "census", "-n", "4", "5", "-r", "2", "--checkpoint", str(tmp_path / "c.ckpt"))
    assert code == 2
    assert "--checkpoint" in err


def test_census_resume_uses_checkpoint_dir(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("KFREE_CHECKPOINT_DIR", str(tmp_path))
    code, _, _ = _run(capsys, "census", "-n", "4", "-r", "2", "--resume", "@quiet")
    assert code == 0
    assert (tmp_path / "census-n4-r2.ckpt").exists()


def test_exhaustive_supersat(capsys):
    code, data = _json(capsys, "supersat-verify", "-n", "5", "-r", "2", "@quiet")
    assert code == 0
    assert data["check"] == "supersat"
    assert data["violations"] == []


def test_lemma_m_exhaustive_with_sidecar(capsys, tmp_path):
    sidecar = tmp_path / "m_zero.g6"
    code, data = _json(capsys, "lemma-m", "-n", "5", "-r", "2", "--sidecar", str(sidecar), "@quiet")
    assert code == 0
    assert data["class_size"] == 12
    assert sidecar.read_text(encoding="ascii") == ""


def test_check_replays_sidecar(capsys, tmp_path):
    sidecar = tmp_path / "supersat.g6"
    sidecar.write_text("C~\n", encoding="ascii")
    code, data = _json(capsys, "supersat-verify", "-r", "2", "--check", str(sidecar))
    assert code == 1
    assert data["entries"] == 1 and data["reproduced"] == []


def test_sharpness_csv(capsys):
    code, out, _ = _run(capsys, "sharpness", "-r", "2", "--k-max", "4", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 5
    assert lines[-1].split(",")[:7] == ["8", "2", "4", "2", "2", "8", "8"]


def test_unsupported_csv_mode(capsys):
    code, _, err = _run(capsys, "lemma-m", "--graph6", "Dhc", "-r", "2", "--format", "csv")
    assert code == 2
    assert "CSV" in err


# -----------------------------
# Geração
# -----------------------------
def test_gen_cycle(capsys):
    code, out, _ = _run(capsys, "gen", "cycle", "-n", "5")
    assert code == 0
    assert out == "Dhc\n"


def test_gen_turan_matching(capsys):
    code, out, _ = _run(capsys, "gen", "turan-matching", "-n", "8", "-r", "2", "-t", "2")
    assert code == 0
    assert parse_graph6(out.strip()) == turan_plus_matching(8, 2, 2)


def test_gen_random_requires_seed(capsys):
    assert _run(capsys, "gen", "random", "-n", "6")[0] == 2


def test_gen_random_is_reproducible(capsys):
    first = _run(capsys, "gen", "random", "-n", "7", "--seed", "3", "--count", "3")[1]
    second = _run(capsys, "gen", "random", "-n", "7", "--seed", "3", "--count", "3")[1]
    assert first == second
    assert len(first.splitlines()) == 3


def test_unknown_subcommand(capsys):
    assert _run(capsys, "nada")[0] == 2
