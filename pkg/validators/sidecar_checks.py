# validators/sidecar_checks.py
"""
Reprodução de violações gravadas.

Uma violação é reverificada do zero sobre o grafo decodificado do graph6,
com o mesmo r da execução original. A entrada pode ser:
- um relatório JSON (CensusRecord ou VerificationReport): cada violação traz
  o seu `kind`;
- um sidecar (um graph6 por linha): o tipo vem de quem pede a reprodução.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from kfree.cliques import is_clique_free
from kfree.data_loader import iter_graph6, read_json
from kfree.errors import GraphFormatError, LabError
from kfree.graph import Graph
from kfree.graph6 import parse_graph6
from kfree.partition import distance_to_r_partite, is_r_partite
from kfree.structure import m_zero_partitions, phi_audit
from kfree.supersat import neighborhood_farness_failures, verify_supersaturation
from schemas.supersat_report import Verdict

logger = logging.getLogger(__name__)


@dataclass
class ReplayResult:
    """Resultado da reprodução: `valid` quando toda entrada se reproduz."""
    valid: bool
    errors: List[str]
    warnings: List[str]
    entries: int = 0
    reproduced: List[str] = field(default_factory=list)


# ---------------------------
# Reprodução por tipo
# ---------------------------

def _in_lemma_class(g: Graph, r: int) -> bool:
    return is_clique_free(g, r + 1) and not is_r_partite(g, r)


def replay_supersat(g: Graph, r: int) -> bool:
    return verify_supersaturation(g, r).verdict == Verdict.violated


def replay_m_zero(g: Graph, r: int) -> bool:
    return _in_lemma_class(g, r) and bool(m_zero_partitions(g, r))


def replay_phi(g: Graph, r: int) -> bool:
    return _in_lemma_class(g, r) and bool(phi_audit(g, r).failures)


def replay_farness(g: Graph, r: int) -> bool:
    if r < 2:
        return False
    t = distance_to_r_partite(g, r).distance
    return t >= 1 and bool(neighborhood_farness_failures(g, r, t))


def replay_census(g: Graph, r: int) -> bool:
    return replay_supersat(g, r) or replay_m_zero(g, r)


REPLAYERS: Dict[str, Callable[[Graph, int], bool]] = {
    "supersat": replay_supersat,
    "m_zero": replay_m_zero,
    "m_positive": replay_m_zero,
    "phi": replay_phi,
    "phi_not_free": replay_phi,
    "phi_image_count": replay_phi,
    "farness": replay_farness,
    "census": replay_census,
}


# ---------------------------
# Leitura das entradas
# ---------------------------

def _entries_from_report(raw: dict) -> Tuple[List[Tuple[str, str]], Optional[int]]:
    """(kind, graph6) de cada violação e o r registrado no relatório."""
    violations = raw.get("violations")
    if not isinstance(violations, list):
        raise ValueError("relatório sem lista 'violations'")
    entries = []
    for i, v in enumerate(violations, start=1):
        if not isinstance(v, dict) or "kind" not in v or "graph6" not in v:
            raise ValueError(f"violations[{i}] sem 'kind'/'graph6'")
        entries.append((str(v["kind"]), str(v["graph6"])))
    r = raw.get("r")
    return entries, int(r) if r is not None else None


def _looks_like_json(path: Path) -> bool:
    if path.suffix.lower() == ".json":
        return True
    with path.open("r", encoding="utf-8") as f:
        return f.read(1).lstrip().startswith(("{", "["))


def load_replay_entries(path: str | Path, default_kind: str) -> Tuple[List[Tuple[str, str]], Optional[int]]:
    p = Path(path)
    if str(path) != "-" and p.exists() and _looks_like_json(p):
        return _entries_from_report(read_json(p))
    return [(default_kind, record) for _, record, _ in iter_graph6(path)], None


# ---------------------------
# Função principal
# ---------------------------

def _replay_entries(entries: Sequence[Tuple[str, str]], r: int) -> ReplayResult:
    errors: List[str] = []
    warnings: List[str] = []
    reproduced: List[str] = []
    for i, (kind, record) in enumerate(entries, start=1):
        replayer = REPLAYERS.get(kind)
        if replayer is None:
            warnings.append(f"entrada {i} ({record}): tipo '{kind}' não é reproduzível")
            continue
        try:
            g = parse_graph6(record)
            ok = replayer(g, r)
        except GraphFormatError as e:
            errors.append(f"entrada {i}: graph6 inválido: {e}")
            continue
        except LabError as e:
            errors.append(f"entrada {i} ({record}): {e}")
            continue
        if ok:
            reproduced.append(record)
            logger.warning("violação '%s' reproduzida em %s", kind, record)
        else:
            errors.append(f"entrada {i} ({record}): violação '{kind}' não se reproduz")
    return ReplayResult(
        valid=(len(errors) == 0), errors=errors, warnings=warnings, entries=len(entries), reproduced=reproduced,
    )


def replay_violations(path: str | Path, r: Optional[int], default_kind: str) -> ReplayResult:
    """
    Reproduz cada entrada do relatório ou sidecar em `path`.
    - r: obrigatório para sidecars; em relatórios, precisa coincidir com o gravado.
    """
    try:
        entries, recorded_r = load_replay_entries(path, default_kind)
    except (ValueError, OSError) as e:
        return ReplayResult(valid=False, errors=[f"Entrada inválida: {e}"], warnings=[])

    if recorded_r is not None and r is not None and recorded_r != r:
        return ReplayResult(valid=False, errors=[f"r={r} difere do r={recorded_r} gravado no relatório"], warnings=[])
    effective_r = recorded_r if recorded_r is not None else r
    if effective_r is None:
        return ReplayResult(valid=False, errors=["informe -r para reproduzir um sidecar graph6"], warnings=[])

    result = _replay_entries(entries, effective_r)
    if not entries:
        result.warnings.append("nenhuma violação registrada")
    return result
