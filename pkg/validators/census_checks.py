# validators/census_checks.py
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import groupby
from math import comb
from typing import List, Optional, Sequence, Tuple, Union

from pydantic import ValidationError

from kfree.generators import turan_edges
from schemas.census_output import CensusMode, CensusRecord, VerificationReport


@dataclass
class ValidationResult:
    """Resultado consolidado das checagens."""
    valid: bool
    errors: List[str]
    warnings: List[str]
    normalized: Optional[Union[CensusRecord, VerificationReport]] = None
    notes: List[str] = field(default_factory=list)


# ---------------------------
# Parsing
# ---------------------------

def parse_census_record(raw: Union[dict, CensusRecord]) -> Tuple[Optional[CensusRecord], List[str]]:
    """Aceita dict (JSON já carregado) ou CensusRecord; devolve o registro e os erros de schema."""
    if isinstance(raw, CensusRecord):
        return raw, []
    try:
        return CensusRecord.model_validate(raw), []
    except ValidationError as ve:
        return None, [f"Schema inválido: {ve}"]


def parse_verification_report(raw: Union[dict, VerificationReport]) -> Tuple[Optional[VerificationReport], List[str]]:
    if isinstance(raw, VerificationReport):
        return raw, []
    try:
        return VerificationReport.model_validate(raw), []
    except ValidationError as ve:
        return None, [f"Schema inválido: {ve}"]


# ---------------------------
# Regras do censo
# ---------------------------

def check_total_graphs(record: CensusRecord) -> List[str]:
    expected = 1 << comb(record.n, 2)
    if record.total_graphs != expected:
        return [f"total_graphs={record.total_graphs}, esperado 2^{comb(record.n, 2)} = {expected}"]
    return []


def check_turan_floor(record: CensusRecord) -> List[str]:
    """Todo subgrafo do Turán é livre: free_count ≥ 2^{t_r(n)}."""
    errors: List[str] = []
    expected = turan_edges(record.n, min(record.r, record.n))
    if record.turan_edges != expected:
        errors.append(f"turan_edges={record.turan_edges}, esperado t_r(n) = {expected}")
    if record.free_count < (1 << expected):
        errors.append(f"free_count={record.free_count} abaixo de 2^{expected}")
    return errors


def check_ratio(record: CensusRecord) -> List[str]:
    if record.free_count == 0:
        return ["free_count = 0: o grafo vazio é sempre livre"]
    expected = record.r_partite_count / record.free_count
    if abs(record.ratio - expected) > 1e-12:
        return [f"ratio={record.ratio} difere de r_partite/free = {expected}"]
    return []


def check_histogram_range(record: CensusRecord) -> List[str]:
    """A distância nunca passa de ⌊C(n,2)/r⌋ (a busca local garante ≤ ⌊e/r⌋)."""
    if record.distance_histogram is None:
        return []
    cap = comb(record.n, 2) // record.r
    bad = sorted(d for d in record.distance_histogram if d < 0 or d > cap)
    return [f"distâncias fora de [0, {cap}] no histograma: {bad}"] if bad else []


def check_classes(record: CensusRecord) -> List[str]:
    if record.free_classes is None:
        return []
    errors: List[str] = []
    if record.r_partite_classes > record.free_classes:
        errors.append("r_partite_classes maior que free_classes")
    if record.free_classes > record.free_count:
        errors.append("mais classes de isomorfismo que grafos rotulados")
    return errors


def check_violation_counts(record: CensusRecord) -> List[str]:
    """
    No modo rotulado cada violação listada é um grafo, então os contadores batem
    com a lista. No não rotulado a lista traz representantes e o contador é ponderado.
    """
    errors: List[str] = []
    for counter, kind in ((record.supersat_violations, "supersat"), (record.m_zero_violations, "m_zero")):
        if counter is None:
            continue
        listed = sum(1 for v in record.violations if v.kind == kind)
        if record.mode == CensusMode.labeled and listed != counter:
            errors.append(f"{kind}: contador={counter}, violações listadas={listed}")
        if record.mode == CensusMode.unlabeled and listed > counter:
            errors.append(f"{kind}: mais representantes ({listed}) que grafos ponderados ({counter})")
        if counter > 0:
            errors.append(f"{counter} grafo(s) violam a verificação '{kind}' em n={record.n}, r={record.r}")
    return errors


def check_trivial_regime(record: CensusRecord) -> List[str]:
    if record.r >= record.n:
        return [f"r={record.r} ≥ n={record.n}: todo grafo livre é r-partido (regime trivial)"]
    return []


def check_ratio_trend(records: Sequence[CensusRecord]) -> List[str]:
    """
    Avisos (não bloqueantes) de queda local da razão r-partido/livre ao crescer n.
    Em escala de mesa a razão costuma cair; a convergência para 1 é assintótica.
    """
    warnings: List[str] = []
    ordered = sorted(records, key=lambda rec: (rec.r, rec.n))
    for r, group in groupby(ordered, key=lambda rec: rec.r):
        series = list(group)
        for prev, cur in zip(series, series[1:]):
            if cur.n == prev.n:
                warnings.append(f"r={r}: n={cur.n} aparece mais de uma vez na série")
            elif cur.ratio < prev.ratio:
                warnings.append(f"r={r}: razão cai de {prev.ratio:.6f} (n={prev.n}) para {cur.ratio:.6f} (n={cur.n})")
    return warnings


# ---------------------------
# Regras dos relatórios de verificação
# ---------------------------

def check_report_counts(report: VerificationReport) -> List[str]:
    errors: List[str] = []
    expected = 1 << comb(report.n, 2)
    if report.graphs_scanned != expected:
        errors.append(f"graphs_scanned={report.graphs_scanned}, esperado {expected}")
    if report.class_size > report.graphs_scanned:
        errors.append("class_size maior que graphs_scanned")
    if report.violations:
        errors.append(report.summary())
    return errors


def check_report_coverage(report: VerificationReport) -> List[str]:
    warnings: List[str] = []
    if report.class_size == 0:
        warnings.append(f"{report.check.value}: classe vazia em n={report.n}, r={report.r}")
    if report.skipped:
        warnings.append(f"{report.skipped} item(ns) fora do modo exaustivo")
    return warnings


# ---------------------------
# Funções principais de validação
# ---------------------------

def validate_census_record(raw: Union[dict, CensusRecord]) -> ValidationResult:
    """
    Valida um registro de censo.
    - errors: incoerências de contagem e violações encontradas.
    - warnings: regimes triviais.
    """
    record, schema_errors = parse_census_record(raw)
    if schema_errors:
        return ValidationResult(valid=False, errors=schema_errors, warnings=[])

    errors: List[str] = []
    warnings: List[str] = []
    errors.extend(check_total_graphs(record))
    errors.extend(check_turan_floor(record))
    errors.extend(check_ratio(record))
    errors.extend(check_histogram_range(record))
    errors.extend(check_classes(record))
    errors.extend(check_violation_counts(record))
    warnings.extend(check_trivial_regime(record))

    return ValidationResult(valid=(len(errors) == 0), errors=errors, warnings=warnings, normalized=record)


def validate_census_series(raws: Sequence[Union[dict, CensusRecord]]) -> ValidationResult:
    """Valida cada registro e acrescenta os avisos de tendência da razão."""
    errors: List[str] = []
    warnings: List[str] = []
    records: List[CensusRecord] = []
    for i, raw in enumerate(raws, start=1):
        result = validate_census_record(raw)
        errors.extend(f"registro {i}: {e}" for e in result.errors)
        warnings.extend(f"registro {i}: {w}" for w in result.warnings)
        if result.normalized is not None:
            records.append(result.normalized)
    warnings.extend(check_ratio_trend(records))
    notes = [f"n={rec.n} r={rec.r} ratio={rec.ratio:.6f}" for rec in sorted(records, key=lambda rec: (rec.r, rec.n))]
    return ValidationResult(valid=(len(errors) == 0), errors=errors, warnings=warnings, notes=notes)


def validate_verification_report(raw: Union[dict, VerificationReport]) -> ValidationResult:
    report, schema_errors = parse_verification_report(raw)
    if schema_errors:
        return ValidationResult(valid=False, errors=schema_errors, warnings=[])
    errors = check_report_counts(report)
    warnings = check_report_coverage(report)
    return ValidationResult(valid=(len(errors) == 0), errors=errors, warnings=warnings, normalized=report)
