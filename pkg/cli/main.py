# cli/main.py
"""
CLI do laboratório kfree: um ponto de entrada com subcomandos.

- Resultados legíveis por máquina (JSON ou CSV) vão para stdout ou --out.
- Diagnósticos, logs e barras de progresso vão para stderr.

Códigos de saída:
  0  sucesso
  1  violação encontrada (ou violação registrada que não se reproduz em --check)
  2  erro de uso: flags, entrada graph6, pré-condição, checkpoint
  3  recusa por limite de recurso

Exemplos:
  python -m cli.main census -n 3 -r 2 --format csv
  python -m cli.main census -n 8 -r 2 --jobs 8 --resume
  python -m cli.main supersat-verify -n 6 -r 2
  python -m cli.main supersat-verify --graph6 "Dhc" -r 2 --sweep-t
  python -m cli.main distance --graph6 "D?{" -r 2
  python -m cli.main cliques --input files/graphs/samples.g6 -m 3
  python -m cli.main props --graph6 "Dhc" -r 2 --thresholds relaxed
  python -m cli.main phi --graph6 "Dhc" -r 2
  python -m cli.main lemma-m -n 6 -r 2 --sidecar out/m_zero.g6
  python -m cli.main sharpness -r 3 --k-max 4 --format csv
  python -m cli.main gen random -n 10 -p 0.5 --seed 7 --count 5
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import asdict
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ValidationError

from helpers.logging_setup import setup_logging
from kfree.census import (
    CensusOptions,
    run_census,
    sharpness_sweep,
    verify_exhaustive_supersat,
    verify_lemma_m_positive,
    verify_lemma_phi,
    verify_neighborhood_farness,
    violation_kinds,
    write_sidecar,
)
from kfree.cliques import clique_within, count_cliques, count_cliques_at, find_clique, find_transversal_clique
from kfree.config import DEFAULT_CONFIG
from kfree.data_loader import load_graphs
from kfree.env_config import RuntimeConfig, get_runtime_config
from kfree.errors import CheckpointError, GraphFormatError, InvariantError, PreconditionError, SizeLimitError
from kfree.generators import (
    complete_graph,
    cycle_graph,
    empty_graph,
    random_graph,
    star_graph,
    turan_graph,
    turan_plus_matching,
)
from kfree.graph import Graph, vertex_set
from kfree.graph6 import emit_graph6
from kfree.partition import (
    RPartition,
    canonical_optimal_partition,
    distance_to_r_partite,
    enumerate_optimal_partitions,
    local_search_partition,
)
from kfree.structure import (
    compute_m_data,
    inspect_structure,
    mdata_out,
    phi_apply,
    phi_first_violation,
    phi_images,
    phi_potential_edge_count,
    require_free_non_partite,
)
from kfree.supersat import neighborhood_farness_failures, verify_supersaturation, verify_supersaturation_sweep
from kfree.thresholds import resolve_thresholds
from schemas.census_output import (
    CENSUS_CSV_FIELDS,
    SHARPNESS_CSV_FIELDS,
    VERIFICATION_CSV_FIELDS,
    VerificationReport,
)
from schemas.graph_report import (
    CLIQUES_CSV_FIELDS,
    DISTANCE_CSV_FIELDS,
    FARNESS_CSV_FIELDS,
    TRANSVERSAL_CSV_FIELDS,
    CliquesOut,
    DistanceOut,
    FarnessOut,
    LemmaMOut,
    TransversalOut,
)
from schemas.run_config import RunConfig
from schemas.structure_output import PartitionMData, PhiOut, QFlags
from schemas.supersat_report import CSV_FIELDS as SUPERSAT_CSV_FIELDS
from schemas.supersat_report import Verdict
from validators.census_checks import validate_census_series
from validators.sidecar_checks import ReplayResult, replay_violations

logger = logging.getLogger("kfree.cli")

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3

REPLAY_KINDS = {
    "census": "census",
    "supersat-verify": "supersat",
    "lemma-m": "m_positive",
    "phi": "phi",
    "farness": "farness",
}

GEN_KINDS = ("turan", "turan-matching", "random", "empty", "complete", "cycle", "star")


# -----------------------------
# Argumentos
# -----------------------------
def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=["json", "csv"], default="json", help="Formato da saída (default: json).")
    parser.add_argument("--out", default=None, help="Arquivo de saída (default: stdout).")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v para INFO, -vv para DEBUG.")
    parser.add_argument("--quiet", action="store_true", help="Só erros no stderr; sem barra de progresso.")
    parser.add_argument("--jobs", type=int, default=None, help="Workers do joblib (default: KFREE_JOBS ou 1).")


def _graph_input(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--graph6", default=None, help="Grafo inline em graph6.")
    group.add_argument("--input", default=None, help="Arquivo com um graph6 por linha ('-' para stdin).")


def _exhaustive(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-n", type=int, nargs="+", default=[], help="Número de vértices (modo exaustivo).")
    parser.add_argument("--shard-bits", type=int, default=DEFAULT_CONFIG.SHARD_BITS, help="log2 do tamanho do shard.")
    parser.add_argument("--sidecar", default=None, help="Grava o graph6 de cada violação, um por linha.")
    parser.add_argument("--check", default=None, help="Reproduz as violações de um relatório JSON ou sidecar graph6.")


def _parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="kfree",
        description="Laboratório de verificação para grafos K_{r+1}-livres.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("census", help="Censo exaustivo de grafos rotulados (n ≤ 8; n = 9 com --unlabeled).")
    _common(p)
    _exhaustive(p)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("--with-distance", action="store_true", help="Histograma de distâncias dos grafos livres.")
    p.add_argument("--with-supersat", action="store_true", help="Reverifica a cota de supersaturação nos livres.")
    p.add_argument("--with-m-check", action="store_true", help="Verifica m ≥ 1 nos livres não r-partidos.")
    p.add_argument("--with-classes", action="store_true", help="Conta também as classes de isomorfismo.")
    p.add_argument("--unlabeled", action="store_true", help="Enumera classes canônicas com peso n!/|Aut|.")
    p.add_argument("--checkpoint", default=None, help="Arquivo de checkpoint (retoma se existir).")
    p.add_argument("--resume", action="store_true", help="Checkpoint em KFREE_CHECKPOINT_DIR/census-n<N>-r<R>.ckpt.")

    p = sub.add_parser("supersat-verify", help="Cota de supersaturação: exaustiva em n ≤ 7 ou por grafo.")
    _common(p)
    _exhaustive(p)
    _graph_input(p)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-t", type=int, default=None, help="Farness usada na cota (default: a distância).")
    p.add_argument("--sweep-t", action="store_true", help="Um relatório para cada t em 1..distância.")

    p = sub.add_parser("distance", help="Distância exata à r-partição, com partição testemunha.")
    _common(p)
    _graph_input(p)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("--method", choices=["auto", "dp", "branch_and_bound", "local"], default="auto")
    p.add_argument("--seed", type=int, default=None, help="Semente da busca local (obrigatória com --method local).")

    p = sub.add_parser("cliques", help="Conta K_m (globalmente ou através de um vértice).")
    _common(p)
    _graph_input(p)
    p.add_argument("-m", type=int, default=None)
    p.add_argument("--vertex", type=int, default=None, help="Conta só os K_m que contêm este vértice.")
    p.add_argument("--parts", default=None, help="Partes disjuntas como '0,1;2,3;4': procura um clique com um vértice em cada.")

    p = sub.add_parser("props", help="Predicados estruturais e pertinência a Q.")
    _common(p)
    _graph_input(p)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("--thresholds", default="paper", help="Preset de limiares (paper, relaxed ou do arquivo).")
    p.add_argument("--thresholds-file", default=None, help="JSON de presets (default: files/thresholds.json).")
    p.add_argument("--density-mode", choices=["exact", "sample", "auto"], default="exact")
    p.add_argument("--budget", type=int, default=None, help="Orçamento do modo exato (default: KFREE_DENSITY_BUDGET).")
    p.add_argument("--samples", type=int, default=DEFAULT_CONFIG.UNIFORM_DENSITY_SAMPLES)
    p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("phi", help="Transformação Φ: exaustiva em n ≤ 7 ou por grafo.")
    _common(p)
    _exhaustive(p)
    _graph_input(p)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("--partition", default=None, help="Partição ótima como '0,1,0,...' (default: a canônica).")
    p.add_argument("--choice", default=None, help="Bits dos pares potenciais: devolve uma única imagem.")
    p.add_argument("--samples", type=int, default=DEFAULT_CONFIG.PHI_DEFAULT_SAMPLES)
    p.add_argument("--seed", type=int, default=None, help="Obrigatória quando as imagens são amostradas.")

    p = sub.add_parser("sharpness", help="Tabela Turán + emparelhamento contra a cota.")
    _common(p)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)

    p = sub.add_parser("lemma-m", help="m ≥ 1 em toda partição ótima: exaustivo em n ≤ 7 ou por grafo.")
    _common(p)
    _exhaustive(p)
    _graph_input(p)
    p.add_argument("-r", type=int, required=True)

    p = sub.add_parser("farness", help="Herança de distância pelas vizinhanças: exaustiva ou por grafo.")
    _common(p)
    _exhaustive(p)
    _graph_input(p)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-t", type=int, default=None, help="Farness (default: a distância).")

    p = sub.add_parser("gen", help="Gera grafos em graph6, um por linha.")
    _common(p)
    p.add_argument("kind", choices=GEN_KINDS)
    p.add_argument("-n", type=int, nargs="+", required=True)
    p.add_argument("-r", type=int, default=None)
    p.add_argument("-t", type=int, default=None)
    p.add_argument("-p", type=float, default=0.5, help="Probabilidade de aresta (random).")
    p.add_argument("--count", type=int, default=1, help="Quantos grafos aleatórios (sementes seed, seed+1, ...).")
    p.add_argument("--seed", type=int, default=None)

    return parser.parse_args(argv)


def _is_randomized(args: argparse.Namespace) -> bool:
    if args.command == "distance":
        return args.method == "local"
    if args.command == "props":
        return args.density_mode != "exact"
    if args.command == "gen":
        return args.kind == "random"
    return False


def _build_config(args: argparse.Namespace, runtime: RuntimeConfig) -> RunConfig:
    return RunConfig(
        subcommand=args.command,
        n=getattr(args, "n", None) or [],
        r=getattr(args, "r", None),
        t=getattr(args, "t", None),
        thresholds=getattr(args, "thresholds", "paper"),
        thresholds_file=getattr(args, "thresholds_file", None),
        graph6=getattr(args, "graph6", None),
        input=getattr(args, "input", None),
        format=args.format,
        out=args.out,
        jobs=runtime.jobs,
        shard_bits=getattr(args, "shard_bits", DEFAULT_CONFIG.SHARD_BITS),
        checkpoint=getattr(args, "checkpoint", None),
        seed=getattr(args, "seed", None),
        randomized=_is_randomized(args),
    )


def _log_level(args: argparse.Namespace, runtime: RuntimeConfig) -> str:
    if args.quiet:
        return "ERROR"
    if args.verbose >= 2:
        return "DEBUG"
    if args.verbose == 1:
        return "INFO"
    return runtime.log_level


# -----------------------------
# Saída
# -----------------------------
def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
        return
    path = Path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")


def _json_text(items: Sequence[BaseModel], single: bool) -> str:
    if single and len(items) == 1:
        return items[0].model_dump_json(indent=2)
    return json.dumps([item.model_dump(mode="json") for item in items], indent=2, ensure_ascii=False)


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _write(
    cfg: RunConfig, items: Sequence[BaseModel], single: bool,
    csv_spec: Optional[Tuple[Sequence[str], Callable[[Any], Sequence[str]]]] = None,
) -> None:
    if cfg.format == "csv":
        if csv_spec is None:
            raise PreconditionError(f"'{cfg.subcommand}' não tem saída CSV neste modo; use --format json")
        header, row = csv_spec
        _emit(_csv_text(header, [row(item) for item in items]), cfg.out)
        return
    _emit(_json_text(items, single), cfg.out)


def _write_replay(cfg: RunConfig, result: ReplayResult) -> int:
    if cfg.format == "csv":
        _emit(_csv_text(
            ["entries", "reproduced", "errors", "valid"],
            [[str(result.entries), str(len(result.reproduced)), str(len(result.errors)), str(result.valid).lower()]],
        ), cfg.out)
    else:
        _emit(json.dumps(asdict(result), indent=2, ensure_ascii=False), cfg.out)
    for w in result.warnings:
        logger.warning(w)
    for e in result.errors:
        print(f"[ERRO] {e}", file=sys.stderr)
    return EXIT_OK if result.valid else EXIT_VIOLATION


def _progress(args: argparse.Namespace) -> bool:
    return not args.quiet


# -----------------------------
# Entradas
# -----------------------------
def _graphs(cfg: RunConfig) -> List[Tuple[str, Graph]]:
    return load_graphs(cfg.graph6, cfg.input)


def _single_n(cfg: RunConfig) -> int:
    if len(cfg.n) != 1:
        raise PreconditionError(f"'{cfg.subcommand}' exaustivo exige um único -n (ou --graph6/--input)")
    return cfg.n[0]


def _require_r(cfg: RunConfig) -> int:
    if cfg.r is None:
        raise PreconditionError(f"'{cfg.subcommand}' exige -r")
    return cfg.r


def _parse_assignment(text: str) -> List[int]:
    try:
        return [int(part) for part in text.replace(" ", "").split(",") if part != ""]
    except ValueError as e:
        raise PreconditionError(f"partição inválida: {text!r} (use '0,1,0,...')") from e


# -----------------------------
# Verificações exaustivas (compartilhado)
# -----------------------------
def _finish_report(args: argparse.Namespace, cfg: RunConfig, report: VerificationReport) -> int:
    if args.sidecar:
        lines = write_sidecar(args.sidecar, report.violations)
        logger.info("sidecar com %d violação(ões) em %s", lines, args.sidecar)
    _write(cfg, [report], single=True, csv_spec=(VERIFICATION_CSV_FIELDS, VerificationReport.csv_row))
    if not args.quiet:
        print(report.summary(), file=sys.stderr)
    if report.violations:
        logger.error("violações por tipo: %s", violation_kinds(report.violations))
        return EXIT_VIOLATION
    return EXIT_OK


def _exhaustive_mode(
    args: argparse.Namespace, cfg: RunConfig,
    verify: Callable[..., VerificationReport],
) -> int:
    report = verify(
        _single_n(cfg), _require_r(cfg), jobs=cfg.jobs, progress=_progress(args), shard_bits=cfg.shard_bits,
    )
    return _finish_report(args, cfg, report)


def _replay(args: argparse.Namespace, cfg: RunConfig) -> int:
    result = replay_violations(args.check, cfg.r, REPLAY_KINDS[cfg.subcommand])
    return _write_replay(cfg, result)


# -----------------------------
# Subcomandos
# -----------------------------
def _cmd_census(args: argparse.Namespace, cfg: RunConfig, runtime: RuntimeConfig) -> int:
    if args.check:
        return _replay(args, cfg)
    if not cfg.n:
        raise PreconditionError("census exige -n")
    r = _require_r(cfg)
    records = []
    for n in cfg.n:
        checkpoint = cfg.checkpoint
        if checkpoint is None and args.resume:
            checkpoint = str(Path(runtime.checkpoint_dir) / f"census-n{n}-r{r}.ckpt")
        options = CensusOptions(
            with_distance=args.with_distance,
            with_supersat=args.with_supersat,
            with_m_check=args.with_m_check,
            with_classes=args.with_classes,
            unlabeled=args.unlabeled,
            jobs=cfg.jobs,
            shard_bits=cfg.shard_bits,
            checkpoint=checkpoint,
            progress=_progress(args),
        )
        records.append(run_census(n, r, options))

    validation = validate_census_series(records)
    for w in validation.warnings:
        logger.warning(w)
    for e in validation.errors:
        print(f"[ERRO] {e}", file=sys.stderr)

    violations = [v for rec in records for v in rec.violations]
    if args.sidecar:
        write_sidecar(args.sidecar, violations)
    _write(cfg, records, single=True, csv_spec=(CENSUS_CSV_FIELDS, lambda rec: rec.csv_row()))
    return EXIT_OK if validation.valid else EXIT_VIOLATION


def _cmd_supersat(args: argparse.Namespace, cfg: RunConfig, runtime: RuntimeConfig) -> int:
    if args.check:
        return _replay(args, cfg)
    if not cfg.has_graph_input:
        return _exhaustive_mode(args, cfg, verify_exhaustive_supersat)
    r = _require_r(cfg)
    reports = []
    for _, g in _graphs(cfg):
        if args.sweep_t:
            reports.extend(verify_supersaturation_sweep(g, r))
        else:
            reports.append(verify_supersaturation(g, r, cfg.t))
    _write(cfg, reports, single=cfg.graph6 is not None and not args.sweep_t,
           csv_spec=(SUPERSAT_CSV_FIELDS, lambda rep: rep.csv_row()))
    return EXIT_VIOLATION if any(rep.verdict == Verdict.violated for rep in reports) else EXIT_OK


def _cmd_distance(args: argparse.Namespace, cfg: RunConfig, runtime: RuntimeConfig) -> int:
    r = _require_r(cfg)
    outs = []
    for record, g in _graphs(cfg):
        if args.method == "local":
            p = local_search_partition(g, r, cfg.seed)
            outs.append(DistanceOut(
                graph6=record, r=r, distance=p.interior, witness=list(p.assignment), method="local", exact=False,
            ))
            continue
        result = distance_to_r_partite(g, r, args.method)
        outs.append(DistanceOut(
            graph6=record, r=r, distance=result.distance, witness=list(result.witness.assignment),
            method=result.method,
        ))
    _write(cfg, outs, single=cfg.graph6 is not None, csv_spec=(DISTANCE_CSV_FIELDS, lambda o: o.csv_row()))
    return EXIT_OK


def _parse_parts(text: str) -> List[List[int]]:
    try:
        return [[int(v) for v in block.split(",") if v.strip() != ""] for block in text.replace(" ", "").split(";")]
    except ValueError as e:
        raise PreconditionError(f"partes inválidas: {text!r} (use '0,1;2,3;4')") from e


def _cmd_cliques(args: argparse.Namespace, cfg: RunConfig, runtime: RuntimeConfig) -> int:
    if args.parts is not None:
        parts = _parse_parts(args.parts)
        transversal = []
        for record, g in _graphs(cfg):
            if any(not 0 <= v < g.n for block in parts for v in block):
                raise PreconditionError(f"--parts cita vértice fora de [0, {g.n}) em {record}")
            witness = find_transversal_clique(g, [vertex_set(block) for block in parts])
            transversal.append(TransversalOut(graph6=record, parts=parts, witness=witness))
        _write(cfg, transversal, single=cfg.graph6 is not None,
               csv_spec=(TRANSVERSAL_CSV_FIELDS, lambda o: o.csv_row()))
        return EXIT_OK
    if args.m is None:
        raise PreconditionError("'cliques' exige -m (ou --parts)")
    m = args.m
    outs = []
    for record, g in _graphs(cfg):
        if args.vertex is None:
            outs.append(CliquesOut(graph6=record, m=m, count=count_cliques(g, m).count, witness=find_clique(g, m)))
            continue
        v = args.vertex
        count = count_cliques_at(g, v, m).count
        rest = clique_within(g, g.adj[v], m - 1) if count else None
        witness = sorted([v, *rest]) if rest is not None else None
        outs.append(CliquesOut(graph6=record, m=m, count=count, vertex=v, witness=witness))
    _write(cfg, outs, single=cfg.graph6 is not None, csv_spec=(CLIQUES_CSV_FIELDS, lambda o: o.csv_row()))
    return EXIT_OK


def _cmd_props(args: argparse.Namespace, cfg: RunConfig, runtime: RuntimeConfig) -> int:
    r = _require_r(cfg)
    th = resolve_thresholds(cfg.thresholds, r, cfg.thresholds_file)
    budget = args.budget if args.budget is not None else runtime.density_budget
    reports = [
        inspect_structure(g, r, th, args.density_mode, budget, args.samples, cfg.seed or 0)
        for _, g in _graphs(cfg)
    ]
    if cfg.format == "csv":
        header = list(QFlags.model_fields)
        rows = [["" if v is None else str(v).lower() for v in rep.flags.model_dump().values()] for rep in reports]
        _emit(_csv_text(header, rows), cfg.out)
    else:
        _write(cfg, reports, single=cfg.graph6 is not None)
    return EXIT_OK


def _phi_partition(g: Graph, r: int, text: Optional[str]) -> RPartition:
    if text is None:
        return canonical_optimal_partition(g, r)
    p = RPartition.of(g, r, _parse_assignment(text))
    optimum = distance_to_r_partite(g, r).distance
    if p.interior != optimum:
        raise PreconditionError(f"partição com {p.interior} arestas internas; o ótimo é {optimum}")
    return p


def _cmd_phi(args: argparse.Namespace, cfg: RunConfig, runtime: RuntimeConfig) -> int:
    if args.check:
        return _replay(args, cfg)
    if not cfg.has_graph_input:
        return _exhaustive_mode(args, cfg, verify_lemma_phi)
    r = _require_r(cfg)
    outs = []
    for record, g in _graphs(cfg):
        require_free_non_partite(g, r)
        p = _phi_partition(g, r, args.partition)
        md = compute_m_data(g, p)
        if md.m == 0:
            raise PreconditionError(f"m(G) = 0 em {record}: Φ não está definida")
        potential = phi_potential_edge_count(g, p, md)
        exhaustive = potential <= DEFAULT_CONFIG.PHI_EXHAUSTIVE_MAX_EDGES
        out = PhiOut(
            graph6=record, r=r, partition=list(p.assignment), mdata=mdata_out(g, p, md),
            exhaustive=exhaustive, images_checked=0,
        )
        if args.choice is not None:
            image = phi_apply(g, p, md, args.choice)
            out.image = emit_graph6(image)
            out.images_checked = 1
            out.exhaustive = False
            violation = None if find_clique(image, r + 1) is None else image
        else:
            if not exhaustive and cfg.seed is None:
                raise PreconditionError(f"{potential} pares potenciais: a amostragem de Φ exige --seed")
            seed = cfg.seed or 0
            violation = phi_first_violation(g, r, p, args.samples, seed)
            out.images_checked = sum(1 for _ in phi_images(g, p, md, args.samples, seed))
        out.violation = None if violation is None else emit_graph6(violation)
        outs.append(out)
    _write(cfg, outs, single=cfg.graph6 is not None)
    return EXIT_VIOLATION if any(o.violation for o in outs) else EXIT_OK


def _cmd_sharpness(args: argparse.Namespace, cfg: RunConfig, runtime: RuntimeConfig) -> int:
    rows = sharpness_sweep(_require_r(cfg), args.k_max)
    _write(cfg, rows, single=False, csv_spec=(SHARPNESS_CSV_FIELDS, lambda row: row.csv_row()))
    off = [row for row in rows if not row.within_envelope or row.distance != row.t or row.cliques != row.expected_cliques]
    for row in off:
        logger.error("linha fora do esperado: n=%d t=%d distância=%d cliques=%d", row.n, row.t, row.distance, row.cliques)
    return EXIT_VIOLATION if off else EXIT_OK


def _cmd_lemma_m(args: argparse.Namespace, cfg: RunConfig, runtime: RuntimeConfig) -> int:
    if args.check:
        return _replay(args, cfg)
    if not cfg.has_graph_input:
        return _exhaustive_mode(args, cfg, verify_lemma_m_positive)
    r = _require_r(cfg)
    outs = []
    for record, g in _graphs(cfg):
        require_free_non_partite(g, r)
        partitions = [
            PartitionMData(assignment=list(p.assignment), mdata=mdata_out(g, p, compute_m_data(g, p)))
            for p in enumerate_optimal_partitions(g, r)
        ]
        outs.append(LemmaMOut(
            graph6=record, r=r, partitions=partitions,
            m_positive=all(item.mdata.m >= 1 for item in partitions),
        ))
    _write(cfg, outs, single=cfg.graph6 is not None)
    return EXIT_OK if all(o.m_positive for o in outs) else EXIT_VIOLATION


def _cmd_farness(args: argparse.Namespace, cfg: RunConfig, runtime: RuntimeConfig) -> int:
    if args.check:
        return _replay(args, cfg)
    if not cfg.has_graph_input:
        return _exhaustive_mode(args, cfg, verify_neighborhood_farness)
    r = _require_r(cfg)
    outs = []
    for record, g in _graphs(cfg):
        t = cfg.t if cfg.t is not None else distance_to_r_partite(g, r).distance
        if t < 1:
            raise PreconditionError(f"{record} é {r}-partido: a herança exige t ≥ 1")
        outs.append(FarnessOut(graph6=record, r=r, t=t, failures=neighborhood_farness_failures(g, r, t)))
    _write(cfg, outs, single=cfg.graph6 is not None, csv_spec=(FARNESS_CSV_FIELDS, lambda o: o.csv_row()))
    return EXIT_OK if all(o.holds for o in outs) else EXIT_VIOLATION


def _generate(args: argparse.Namespace, cfg: RunConfig, n: int) -> List[Graph]:
    kind = args.kind
    if kind in ("turan", "turan-matching") and cfg.r is None:
        raise PreconditionError(f"gen {kind} exige -r")
    if kind == "turan":
        return [turan_graph(n, cfg.r)]
    if kind == "turan-matching":
        if cfg.t is None:
            raise PreconditionError("gen turan-matching exige -t")
        return [turan_plus_matching(n, cfg.r, cfg.t)]
    if kind == "random":
        return [random_graph(n, args.p, cfg.seed + i) for i in range(args.count)]
    if kind == "empty":
        return [empty_graph(n)]
    if kind == "complete":
        return [complete_graph(n)]
    if kind == "cycle":
        return [cycle_graph(n)]
    return [star_graph(n - 1)]


def _cmd_gen(args: argparse.Namespace, cfg: RunConfig, runtime: RuntimeConfig) -> int:
    lines = [emit_graph6(g) for n in cfg.n for g in _generate(args, cfg, n)]
    _emit("\n".join(lines), cfg.out)
    return EXIT_OK


HANDLERS: Dict[str, Callable[[argparse.Namespace, RunConfig, RuntimeConfig], int]] = {
    "census": _cmd_census,
    "supersat-verify": _cmd_supersat,
    "distance": _cmd_distance,
    "cliques": _cmd_cliques,
    "props": _cmd_props,
    "phi": _cmd_phi,
    "sharpness": _cmd_sharpness,
    "lemma-m": _cmd_lemma_m,
    "farness": _cmd_farness,
    "gen": _cmd_gen,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = _parse_args(argv)
    except SystemExit as e:
        # argparse sai com 2 em erro de uso e 0 em --help
        return int(e.code or 0)

    try:
        runtime = get_runtime_config(jobs=args.jobs)
        cfg = _build_config(args, runtime)
    except ValidationError as e:
        print(f"[ERRO] Parâmetros inválidos: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        print(f"[ERRO] Configuração inválida: {e}", file=sys.stderr)
        return EXIT_USAGE

    setup_logging(_log_level(args, runtime))

    try:
        return HANDLERS[args.command](args, cfg, runtime)
    except SizeLimitError as e:
        print(f"[ERRO] Limite de recurso: {e}", file=sys.stderr)
        return EXIT_LIMIT
    except CheckpointError as e:
        print(f"[ERRO] Checkpoint: {e}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantError as e:
        print(f"[ERRO] Invariante violado: {e}", file=sys.stderr)
        return EXIT_VIOLATION
    except GraphFormatError as e:
        print(f"[ERRO] graph6 inválido: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, ValidationError, ValueError, FileNotFoundError) as e:
        print(f"[ERRO] Entrada inválida: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
