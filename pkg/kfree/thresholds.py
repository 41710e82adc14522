# kfree/thresholds.py
"""
Presets de limiares estruturais.

Responsabilidades:
- "paper": valores assintóticos (dependem de r): alpha=1/32, tamanho 2^{-10r},
  esparsidade e balanceamento 2^{-5r}, expoente de proximidade 2 − 1/r².
- "relaxed": valores que tornam os predicados não triviais em grafos pequenos.
- Leitura de presets adicionais de um arquivo JSON (files/thresholds.json).

Observações:
- "paper" é sempre calculado em código; um preset com esse nome no arquivo é ignorado.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Optional

from pydantic import ValidationError

from kfree.data_loader import read_json
from schemas.structure_thresholds import StructureThresholds, ThresholdsFile

logger = logging.getLogger(__name__)

DEFAULT_THRESHOLDS_PATH = Path("files/thresholds.json")


def paper_thresholds(r: int) -> StructureThresholds:
    return StructureThresholds(
        name="paper",
        alpha=1 / 32,
        size_fraction=2.0 ** (-10 * r),
        sparse_fraction=2.0 ** (-5 * r),
        balance_fraction=2.0 ** (-5 * r),
        closeness_exponent=2 - 1 / (r * r),
    )


def relaxed_thresholds() -> StructureThresholds:
    return StructureThresholds(
        name="relaxed",
        alpha=1 / 32,
        size_fraction=0.0,
        sparse_fraction=1.0,
        balance_fraction=1.0,
        closeness_exponent=2.0,
    )


def load_thresholds_file(path: str | Path) -> ThresholdsFile:
    data = read_json(path)
    try:
        return ThresholdsFile.model_validate(data)
    except ValidationError as e:
        raise ValueError(f"Arquivo de limiares inválido em {path}: {e}") from e


def resolve_thresholds(name: str, r: int, path: Optional[str | Path] = None) -> StructureThresholds:
    """Preset por nome: embutidos primeiro, depois o arquivo JSON."""
    if name == "paper":
        return paper_thresholds(r)
    if name == "relaxed" and path is None:
        return relaxed_thresholds()

    source = Path(path) if path is not None else DEFAULT_THRESHOLDS_PATH
    presets = load_thresholds_file(source).presets if source.exists() else {}
    if name in presets:
        logger.debug("limiares '%s' lidos de %s", name, source)
        return presets[name].model_copy(update={"name": name})
    if name == "relaxed":
        return relaxed_thresholds()
    raise ValueError(f"Preset de limiares desconhecido: {name!r} (disponíveis: paper, relaxed, {', '.join(sorted(presets))})")
