# kfree/census.py
"""
Censo exaustivo de grafos pequenos e as verificações em lote.

Responsabilidades:
- run_census: percorre todos os grafos rotulados em n ≤ 8 vértices (máscaras de
  arestas em shards contíguos), conta K_{r+1}-livres e r-partidos e, sob flags,
  o histograma de distâncias, violações da cota de supersaturação e de m ≥ 1.
  Em n = 9 só o modo não rotulado é aceito (classes canônicas com peso n!/|Aut|).
- verify_exhaustive_supersat / verify_lemma_m_positive / verify_lemma_phi /
  verify_neighborhood_farness: verificações exaustivas até n = 7.
- sharpness_sweep: a tabela Turán + emparelhamento.
- Arquivo sidecar de violações (um graph6 por linha).

Observações:
- Shards rodam via joblib.Parallel; os resultados são somados na ordem dos
  shards, então o agregado não depende do número de workers nem da divisão.
- O checkpoint é gravado depois de cada lote de shards (um único escritor).
- Toda violação apontada pelos kernels numpy é reverificada grafo a grafo.
"""

from __future__ import annotations

import logging
import math
import sys
import time
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from joblib import Parallel, delayed
from tqdm import tqdm

from kfree import kernels
from kfree.canonical import canonical_form, canonical_labeling
from kfree.checkpoint import CheckpointState, load_checkpoint, save_checkpoint
from kfree.cliques import clique_within, count_cliques
from kfree.config import DEFAULT_CONFIG
from kfree.errors import PreconditionError, SizeLimitError
from kfree.generators import graph_from_mask, turan_edges, turan_plus_matching
from kfree.graph import Graph
from kfree.graph6 import emit_graph6, parse_graph6
from kfree.partition import distance_to_r_partite, enumerate_optimal_partitions, is_r_partite
from kfree.structure import compute_m_data, m_zero_partitions, phi_audit
from kfree.supersat import c_const, neighborhood_farness_failures, supersat_lower_bound, verify_supersaturation
from schemas.census_output import (
    CensusMode,
    CensusRecord,
    CheckKind,
    RuntimeInfo,
    SharpnessRow,
    VerificationReport,
    Violation,
)
from schemas.supersat_report import Verdict

logger = logging.getLogger(__name__)

Aggregate = Dict[str, Any]


@dataclass(frozen=True)
class CensusOptions:
    with_distance: bool = False
    with_supersat: bool = False
    with_m_check: bool = False
    with_classes: bool = False
    unlabeled: bool = False
    jobs: int = 1
    shard_bits: int = DEFAULT_CONFIG.SHARD_BITS
    checkpoint: Optional[Path] = None
    progress: bool = False


# -----------------------------
# Shards e agregados
# -----------------------------
def _pairs(n: int) -> int:
    return n * (n - 1) // 2


def shard_ranges(total: int, bits: int) -> List[Tuple[int, int]]:
    size = 1 << bits
    return [(start, min(start + size, total)) for start in range(0, total, size)]


def _violation(kind: str, g: Graph, detail: Optional[str] = None) -> Dict[str, Any]:
    return Violation(kind=kind, graph6=emit_graph6(g), detail=detail).model_dump()


def merge_aggregates(left: Aggregate, right: Aggregate) -> Aggregate:
    """Soma campo a campo; listas são concatenadas na ordem (esquerda primeiro)."""
    out: Aggregate = dict(left)
    for key, value in right.items():
        if key not in out:
            out[key] = value
        elif isinstance(value, dict):
            merged = dict(out[key])
            for k, v in value.items():
                merged[k] = merged.get(k, 0) + v
            out[key] = merged
        elif isinstance(value, list):
            out[key] = list(out[key]) + list(value)
        else:
            out[key] = out[key] + value
    return out


def _histogram(values: np.ndarray) -> Dict[str, int]:
    counts = np.bincount(values) if len(values) else np.zeros(0, dtype=np.int64)
    return {str(d): int(c) for d, c in enumerate(counts) if c}


def _batches(items: Sequence[Any], jobs: int) -> Iterator[Sequence[Any]]:
    size = max(1, 4 * jobs)
    for i in range(0, len(items), size):
        yield items[i:i + size]


def _map_shards(
    func: Callable[..., Aggregate], ranges: Sequence[Tuple[int, int]], jobs: int, progress: bool, desc: str,
    **kwargs: Any,
) -> Aggregate:
    total: Aggregate = {}
    with tqdm(total=len(ranges), desc=desc, disable=not progress, file=sys.stderr, leave=False) as bar:
        for batch in _batches(ranges, jobs):
            results = Parallel(n_jobs=jobs)(delayed(func)(start, stop, **kwargs) for start, stop in batch)
            for result in results:
                total = merge_aggregates(total, result)
                bar.update(1)
    return total


# -----------------------------
# Censo rotulado
# -----------------------------
def _census_shard(
    start: int, stop: int, n: int, r: int, with_distance: bool, with_supersat: bool, with_m_check: bool,
) -> Aggregate:
    masks = kernels.all_masks(start, stop)
    free = kernels.clique_free(masks, n, r + 1)
    free_masks = masks[free]
    partite = kernels.r_partite(free_masks, n, r)
    agg: Aggregate = {
        "total": int(len(masks)),
        "free": int(free.sum()),
        "r_partite": int(partite.sum()),
        "violations": [],
    }
    if with_distance or with_supersat:
        dist = kernels.distances(free_masks, n, r)
        if with_distance:
            agg["histogram"] = _histogram(dist)
        if with_supersat:
            agg["supersat_violations"] = 0
            # livres não têm K_{r+1}: a cota precisa ser ≤ 0
            lhs, rhs = kernels.supersat_sides(
                n, r, kernels.edge_counts(free_masks), dist, np.zeros(len(free_masks), dtype=np.int64),
            )
            flagged = (dist >= 1) & (rhs > 0) & (lhs < rhs)
            for mask in free_masks[flagged]:
                g = graph_from_mask(n, int(mask))
                report = verify_supersaturation(g, r)
                if report.verdict == Verdict.violated:
                    agg["supersat_violations"] += 1
                    agg["violations"].append(_violation("supersat", g, f"t={report.t} cliques={report.cliques}"))
                else:
                    logger.error("kernel de supersaturação divergiu em %s", emit_graph6(g))
    if with_m_check:
        agg["m_zero"] = 0
        for mask in free_masks[~partite]:
            g = graph_from_mask(n, int(mask))
            bad = m_zero_partitions(g, r)
            if bad:
                agg["m_zero"] += 1
                agg["violations"].append(_violation("m_zero", g, f"partition={list(bad[0].assignment)}"))
    return agg


def _labeled_params(n: int, r: int, options: CensusOptions) -> Dict[str, Any]:
    return {
        "n": n, "r": r,
        "with_distance": options.with_distance,
        "with_supersat": options.with_supersat,
        "with_m_check": options.with_m_check,
        "shard_bits": options.shard_bits,
    }


class LabeledCensus:
    """Censo rotulado retomável: `advance` processa lotes de shards e grava o checkpoint."""

    def __init__(self, n: int, r: int, options: CensusOptions):
        if n > DEFAULT_CONFIG.CENSUS_LABELED_MAX_N:
            raise SizeLimitError(
                f"censo rotulado limitado a n ≤ {DEFAULT_CONFIG.CENSUS_LABELED_MAX_N}; use o modo não rotulado"
            )
        self.n = n
        self.r = r
        self.options = options
        self.ranges = shard_ranges(1 << _pairs(n), options.shard_bits)
        self.params = _labeled_params(n, r, options)
        self.next_shard = 0
        self.aggregates: Aggregate = {}
        self.resumed_from = 0
        if options.checkpoint is not None and Path(options.checkpoint).exists():
            state = load_checkpoint(options.checkpoint, self.params)
            self.next_shard = state.next_shard
            self.aggregates = state.aggregates
            self.resumed_from = state.next_shard
            logger.info("retomando censo n=%d r=%d a partir do shard %d", n, r, state.next_shard)

    @property
    def done(self) -> bool:
        return self.next_shard >= len(self.ranges)

    def advance(self, max_shards: Optional[int] = None) -> bool:
        """Processa até `max_shards` shards (todos se None). Devolve True quando termina."""
        limit = len(self.ranges) if max_shards is None else min(len(self.ranges), self.next_shard + max_shards)
        pending = self.ranges[self.next_shard:limit]
        with tqdm(
            total=len(self.ranges), initial=self.next_shard, desc=f"censo n={self.n} r={self.r}",
            disable=not self.options.progress, file=sys.stderr, leave=False,
        ) as bar:
            for batch in _batches(pending, self.options.jobs):
                results = Parallel(n_jobs=self.options.jobs)(
                    delayed(_census_shard)(
                        start, stop, self.n, self.r,
                        self.options.with_distance, self.options.with_supersat, self.options.with_m_check,
                    )
                    for start, stop in batch
                )
                for result in results:
                    self.aggregates = merge_aggregates(self.aggregates, result)
                self.next_shard += len(batch)
                bar.update(len(batch))
                self._save()
        return self.done

    def _save(self) -> None:
        if self.options.checkpoint is None:
            return
        save_checkpoint(
            self.options.checkpoint,
            CheckpointState(
                params=self.params, next_shard=self.next_shard,
                total_shards=len(self.ranges), aggregates=self.aggregates,
            ),
        )


def _record(
    n: int, r: int, mode: CensusMode, agg: Aggregate, options: CensusOptions,
    runtime: RuntimeInfo, classes: Optional[Tuple[int, int]] = None,
) -> CensusRecord:
    free = agg.get("free", 0)
    partite = agg.get("r_partite", 0)
    histogram = None
    if options.with_distance:
        histogram = {int(d): c for d, c in sorted(agg.get("histogram", {}).items(), key=lambda kv: int(kv[0]))}
    return CensusRecord(
        n=n, r=r, mode=mode,
        total_graphs=1 << _pairs(n),
        free_count=free,
        r_partite_count=partite,
        ratio=partite / free,
        log2_free=math.log2(free),
        turan_edges=turan_edges(n, min(r, n)),
        distance_histogram=histogram,
        supersat_violations=agg.get("supersat_violations", 0) if options.with_supersat else None,
        m_zero_violations=agg.get("m_zero", 0) if options.with_m_check else None,
        free_classes=classes[0] if classes else None,
        r_partite_classes=classes[1] if classes else None,
        violations=[Violation.model_validate(v) for v in agg.get("violations", [])],
        runtime=runtime,
    )


# -----------------------------
# Modo não rotulado
# -----------------------------
@dataclass(frozen=True)
class FreeClass:
    graph: Graph          # representante canônico
    automorphisms: int

    @property
    def weight(self) -> int:
        """Número de rotulações distintas: n!/|Aut|."""
        return math.factorial(self.graph.n) // self.automorphisms


def _extend_forms(records: Sequence[str], r: int) -> List[str]:
    """Formas canônicas obtidas ao acrescentar um vértice sem criar K_{r+1}."""
    forms = set()
    for record in records:
        h = parse_graph6(record)
        k = h.n
        for neighborhood in range(1 << k):
            if clique_within(h, neighborhood, r) is not None:
                continue
            rows = [row | ((neighborhood >> v & 1) << k) for v, row in enumerate(h.adj)]
            rows.append(neighborhood)
            forms.add(canonical_form(Graph(k + 1, tuple(rows))))
    return sorted(forms)


def unlabeled_free_classes(n: int, r: int, jobs: int = 1, progress: bool = False) -> List[FreeClass]:
    """Classes de isomorfismo K_{r+1}-livres em n vértices, por crescimento hereditário."""
    if n > DEFAULT_CONFIG.CENSUS_UNLABELED_MAX_N:
        raise SizeLimitError(f"censo não rotulado limitado a n ≤ {DEFAULT_CONFIG.CENSUS_UNLABELED_MAX_N}")
    level = [emit_graph6(Graph(1, (0,)))]
    for k in range(1, n):
        chunks = [level[i:i + 32] for i in range(0, len(level), 32)]
        forms: set = set()
        results = Parallel(n_jobs=jobs)(
            delayed(_extend_forms)(chunk, r)
            for chunk in tqdm(chunks, desc=f"classes n={k + 1}", disable=not progress, file=sys.stderr, leave=False)
        )
        for result in results:
            forms.update(result)
        level = sorted(forms)
        logger.debug("%d classes K_%d-livres em %d vértices", len(level), r + 1, k + 1)
    out = []
    for record in level:
        g = parse_graph6(record)
        out.append(FreeClass(graph=g, automorphisms=canonical_labeling(g).automorphisms))
    return out


def _unlabeled_aggregate(classes: Sequence[FreeClass], r: int, options: CensusOptions) -> Tuple[Aggregate, int]:
    agg: Aggregate = {"free": 0, "r_partite": 0, "violations": [], "histogram": {}}
    if options.with_supersat:
        agg["supersat_violations"] = 0
    if options.with_m_check:
        agg["m_zero"] = 0
    partite_classes = 0
    for cls in classes:
        g = cls.graph
        partite = is_r_partite(g, r)
        agg["free"] += cls.weight
        if partite:
            agg["r_partite"] += cls.weight
            partite_classes += 1
        if options.with_distance or options.with_supersat:
            distance = 0 if partite else distance_to_r_partite(g, r).distance
            key = str(distance)
            agg["histogram"][key] = agg["histogram"].get(key, 0) + cls.weight
            if options.with_supersat and distance >= 1:
                report = verify_supersaturation(g, r)
                if report.verdict == Verdict.violated:
                    agg["supersat_violations"] += cls.weight
                    agg["violations"].append(_violation("supersat", g, f"t={report.t} cliques={report.cliques}"))
        if options.with_m_check and not partite:
            bad = m_zero_partitions(g, r)
            if bad:
                agg["m_zero"] += cls.weight
                agg["violations"].append(_violation("m_zero", g, f"partition={list(bad[0].assignment)}"))
    return agg, partite_classes


def run_census(n: int, r: int, options: CensusOptions = CensusOptions()) -> CensusRecord:
    if n < 1 or r < 1:
        raise PreconditionError(f"n e r devem ser ≥ 1 (n={n}, r={r})")
    started = time.perf_counter()

    if options.unlabeled or n > DEFAULT_CONFIG.CENSUS_LABELED_MAX_N:
        if not options.unlabeled:
            raise SizeLimitError(
                f"n={n} excede o censo rotulado (n ≤ {DEFAULT_CONFIG.CENSUS_LABELED_MAX_N}); use --unlabeled"
            )
        classes = unlabeled_free_classes(n, r, options.jobs, options.progress)
        agg, partite_classes = _unlabeled_aggregate(classes, r, options)
        runtime = RuntimeInfo(seconds=time.perf_counter() - started, jobs=options.jobs, shard_bits=0, shards=0)
        return _record(n, r, CensusMode.unlabeled, agg, options, runtime, (len(classes), partite_classes))

    census = LabeledCensus(n, r, options)
    census.advance()
    class_counts = None
    if options.with_classes:
        classes = unlabeled_free_classes(n, r, options.jobs, options.progress)
        class_counts = (len(classes), sum(1 for c in classes if is_r_partite(c.graph, r)))
    runtime = RuntimeInfo(
        seconds=time.perf_counter() - started, jobs=options.jobs, shard_bits=options.shard_bits,
        shards=len(census.ranges), resumed_from=census.resumed_from,
    )
    record = _record(n, r, CensusMode.labeled, census.aggregates, options, runtime, class_counts)
    logger.info("censo n=%d r=%d: livres=%d r-partidos=%d", n, r, record.free_count, record.r_partite_count)
    return record


# -----------------------------
# Verificações exaustivas
# -----------------------------
def _require_exhaustive(n: int, r: int, min_r: int = 1) -> None:
    if r < min_r:
        raise PreconditionError(f"r deve ser ≥ {min_r}, recebido: {r}")
    if n < 1:
        raise PreconditionError(f"n deve ser ≥ 1, recebido: {n}")
    if n > DEFAULT_CONFIG.EXHAUSTIVE_SUPERSAT_MAX_N:
        raise SizeLimitError(f"verificação exaustiva limitada a n ≤ {DEFAULT_CONFIG.EXHAUSTIVE_SUPERSAT_MAX_N}")


def _report(check: CheckKind, n: int, r: int, agg: Aggregate, jobs: int, bits: int, shards: int, started: float) -> VerificationReport:
    return VerificationReport(
        check=check, n=n, r=r,
        graphs_scanned=agg.get("scanned", 0),
        class_size=agg.get("class_size", 0),
        items_checked=agg.get("items", 0),
        images_checked=agg.get("images", 0),
        skipped=agg.get("skipped", 0),
        verdict_counts=dict(sorted(agg.get("verdicts", {}).items())),
        violations=[Violation.model_validate(v) for v in agg.get("violations", [])],
        runtime=RuntimeInfo(seconds=time.perf_counter() - started, jobs=jobs, shard_bits=bits, shards=shards),
    )


def _supersat_shard(start: int, stop: int, n: int, r: int) -> Aggregate:
    masks = kernels.all_masks(start, stop)
    dist = kernels.distances(masks, n, r)
    cliques = kernels.count_patterns(masks, kernels.clique_patterns(n, r + 1))
    lhs, rhs = kernels.supersat_sides(n, r, kernels.edge_counts(masks), dist, cliques)
    far = dist >= 1
    verdicts = {
        Verdict.trivial.value: int((far & (rhs < 0)).sum()),
        Verdict.zero_bound.value: int((far & (rhs == 0)).sum()),
        Verdict.holds.value: int((far & (rhs > 0) & (lhs >= rhs)).sum()),
    }
    violations = []
    for mask in masks[far & (rhs > 0) & (lhs < rhs)]:
        g = graph_from_mask(n, int(mask))
        report = verify_supersaturation(g, r)
        if report.verdict == Verdict.violated:
            violations.append(_violation("supersat", g, f"t={report.t} cliques={report.cliques}"))
        else:
            logger.error("kernel de supersaturação divergiu em %s", emit_graph6(g))
            violations.append(_violation("kernel_mismatch", g, report.verdict.value))
    return {
        "scanned": int(len(masks)), "class_size": int(far.sum()), "items": int(far.sum()),
        "verdicts": verdicts, "violations": violations,
    }


def verify_exhaustive_supersat(
    n: int, r: int, jobs: int = 1, progress: bool = False, shard_bits: int = DEFAULT_CONFIG.SHARD_BITS,
) -> VerificationReport:
    """A cota exata vale para todo grafo rotulado em n vértices com distância ≥ 1 (livre ou não)."""
    _require_exhaustive(n, r)
    started = time.perf_counter()
    ranges = shard_ranges(1 << _pairs(n), shard_bits)
    agg = _map_shards(_supersat_shard, ranges, jobs, progress, f"supersat n={n} r={r}", n=n, r=r)
    return _report(CheckKind.supersat, n, r, agg, jobs, shard_bits, len(ranges), started)


def _lemma_class(masks: np.ndarray, n: int, r: int) -> np.ndarray:
    """Máscaras K_{r+1}-livres e não r-partidas."""
    free_masks = masks[kernels.clique_free(masks, n, r + 1)]
    return free_masks[~kernels.r_partite(free_masks, n, r)]


def _m_positive_shard(start: int, stop: int, n: int, r: int) -> Aggregate:
    masks = kernels.all_masks(start, stop)
    members = _lemma_class(masks, n, r)
    items = 0
    violations = []
    for mask in members:
        g = graph_from_mask(n, int(mask))
        for p in enumerate_optimal_partitions(g, r):
            items += 1
            if compute_m_data(g, p).m == 0:
                violations.append(_violation("m_zero", g, f"partition={list(p.assignment)}"))
    return {"scanned": int(len(masks)), "class_size": int(len(members)), "items": items, "violations": violations}


def verify_lemma_m_positive(
    n: int, r: int, jobs: int = 1, progress: bool = False, shard_bits: int = DEFAULT_CONFIG.SHARD_BITS,
) -> VerificationReport:
    """m ≥ 1 em TODA partição ótima de todo grafo K_{r+1}-livre não r-partido em n vértices."""
    _require_exhaustive(n, r)
    started = time.perf_counter()
    ranges = shard_ranges(1 << _pairs(n), shard_bits)
    agg = _map_shards(_m_positive_shard, ranges, jobs, progress, f"m>=1 n={n} r={r}", n=n, r=r)
    report = _report(CheckKind.m_positive, n, r, agg, jobs, shard_bits, len(ranges), started)
    if report.class_size == 0:
        logger.info("classe vazia para n=%d r=%d: nenhum grafo livre e não %d-partido", n, r, r)
    return report


def _phi_shard(start: int, stop: int, n: int, r: int) -> Aggregate:
    masks = kernels.all_masks(start, stop)
    members = _lemma_class(masks, n, r)
    agg: Aggregate = {
        "scanned": int(len(masks)), "class_size": int(len(members)), "items": 0, "images": 0, "skipped": 0,
        "verdicts": {"m_zero": 0}, "violations": [],
    }
    for mask in members:
        g = graph_from_mask(n, int(mask))
        audit = phi_audit(g, r)
        agg["items"] += audit.partitions
        agg["images"] += audit.images
        agg["skipped"] += audit.skipped
        agg["verdicts"]["m_zero"] += audit.m_zero
        agg["violations"].extend(_violation(kind, g, detail) for kind, detail in audit.failures)
    return agg


def verify_lemma_phi(
    n: int, r: int, jobs: int = 1, progress: bool = False, shard_bits: int = DEFAULT_CONFIG.SHARD_BITS,
) -> VerificationReport:
    """Imagens de Φ (exaustivas, para toda partição ótima) são K_{r+1}-livres e somam 2^{pares potenciais}."""
    _require_exhaustive(n, r)
    started = time.perf_counter()
    ranges = shard_ranges(1 << _pairs(n), shard_bits)
    agg = _map_shards(_phi_shard, ranges, jobs, progress, f"phi n={n} r={r}", n=n, r=r)
    return _report(CheckKind.phi, n, r, agg, jobs, shard_bits, len(ranges), started)


def _farness_shard(start: int, stop: int, n: int, r: int) -> Aggregate:
    masks = kernels.all_masks(start, stop)
    dist = kernels.distances(masks, n, r)
    far = dist >= 1
    far_masks = masks[far]
    far_dist = dist[far]
    violations = []
    for row, v in kernels.neighborhood_farness_failures(far_masks, n, r, far_dist):
        g = graph_from_mask(n, int(far_masks[row]))
        t = int(far_dist[row])
        confirmed = v in neighborhood_farness_failures(g, r, t)
        if not confirmed:
            logger.error("kernel de vizinhanças divergiu em %s (v=%d)", emit_graph6(g), v)
        violations.append(_violation("farness" if confirmed else "kernel_mismatch", g, f"v={v} t={t}"))
    return {
        "scanned": int(len(masks)), "class_size": int(far.sum()), "items": int(far.sum()) * n,
        "violations": violations,
    }


def verify_neighborhood_farness(
    n: int, r: int, jobs: int = 1, progress: bool = False, shard_bits: int = DEFAULT_CONFIG.SHARD_BITS,
) -> VerificationReport:
    """Para todo grafo t-distante (t = distância ≥ 1) e todo v: G[N(v)] é (t − e(A_v))-distante de (r−1)-partido."""
    _require_exhaustive(n, r, min_r=2)
    started = time.perf_counter()
    ranges = shard_ranges(1 << _pairs(n), shard_bits)
    agg = _map_shards(_farness_shard, ranges, jobs, progress, f"vizinhanças n={n} r={r}", n=n, r=r)
    return _report(CheckKind.farness, n, r, agg, jobs, shard_bits, len(ranges), started)


# -----------------------------
# Nitidez
# -----------------------------
def sharpness_sweep(r: int, k_max: int) -> List[SharpnessRow]:
    """Para n = r·k e 1 ≤ t ≤ k/2: distância, K_{r+1} exato e razão contra a cota exata."""
    if r not in (2, 3):
        raise PreconditionError(f"a varredura de nitidez cobre r ∈ {{2, 3}}, recebido: {r}")
    if r * k_max > DEFAULT_CONFIG.SHARPNESS_MAX_N:
        raise SizeLimitError(f"r·k = {r * k_max} excede {DEFAULT_CONFIG.SHARPNESS_MAX_N}")
    c = c_const(r)
    rows: List[SharpnessRow] = []
    for k in range(1, k_max + 1):
        n = r * k
        for t in range(1, k // 2 + 1):
            g = turan_plus_matching(n, r, t)
            distance = distance_to_r_partite(g, r).distance
            cliques = count_cliques(g, r + 1).count
            bound = supersat_lower_bound(n, r, g.num_edges, t).value
            ratio = Fraction(cliques) / bound
            rows.append(SharpnessRow(
                n=n, r=r, k=k, t=t, distance=distance, cliques=cliques,
                expected_cliques=t * k ** (r - 1),
                bound_num=bound.numerator, bound_den=bound.denominator,
                ratio=float(ratio), within_envelope=1 <= ratio <= c,
            ))
    return rows


# -----------------------------
# Sidecar de violações
# -----------------------------
def write_sidecar(path: str | Path, violations: Sequence[Violation]) -> int:
    """Um graph6 por linha, na ordem das violações. Devolve o número de linhas."""
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    with p.open("w", encoding="ascii") as f:
        for v in violations:
            f.write(v.graph6 + "\n")
    return len(violations)


def violation_kinds(violations: Sequence[Violation]) -> Dict[str, int]:
    return dict(Counter(v.kind for v in violations))
