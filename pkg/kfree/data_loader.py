# kfree/data_loader.py
"""
Leitura de entradas a partir de arquivos em 'files/' (ou caminhos arbitrários).

Responsabilidades:
- Ler JSON (presets de limiares) com mensagens de erro claras.
- Ler registros graph6 de um arquivo ou de stdin ('-'), um por linha.
- Juntar a entrada inline (--graph6) e a de arquivo (--input) numa lista única.

Observações:
- Linhas vazias são ignoradas; o cabeçalho ">>graph6<<" não é aceito.
- Erros de formato carregam o número da linha.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Any, Iterator, List, Tuple

from kfree.errors import GraphFormatError, PreconditionError
from kfree.graph import Graph
from kfree.graph6 import parse_graph6


def read_json(path: str | Path) -> Any:
    p = Path(path)
    if not p.exists():
        raise FileNotFoundError(f"Arquivo não encontrado: {p}")
    try:
        with p.open("r", encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise ValueError(f"JSON inválido em {p}: {e}") from e


def _iter_lines(source: str | Path) -> Iterator[str]:
    if str(source) == "-":
        yield from sys.stdin
        return
    p = Path(source)
    if not p.exists():
        raise FileNotFoundError(f"Arquivo não encontrado: {p}")
    with p.open("r", encoding="ascii") as f:
        yield from f


def iter_graph6(source: str | Path) -> Iterator[Tuple[int, str, Graph]]:
    """(número da linha, registro, grafo) para cada linha não vazia."""
    for lineno, line in enumerate(_iter_lines(source), start=1):
        record = line.strip()
        if not record:
            continue
        try:
            yield lineno, record, parse_graph6(record)
        except GraphFormatError as e:
            raise GraphFormatError(f"linha {lineno}: {e}") from e


def load_graphs(inline: str | None, source: str | Path | None) -> List[Tuple[str, Graph]]:
    """(registro, grafo) vindos de --graph6 (um só) ou de todas as linhas de --input."""
    if inline is not None:
        record = inline.strip()
        return [(record, parse_graph6(record))]
    if source is None:
        raise PreconditionError("nenhuma entrada: use --graph6 ou --input")
    graphs = [(record, g) for _, record, g in iter_graph6(source)]
    if not graphs:
        raise PreconditionError(f"nenhum registro graph6 em {source}")
    return graphs
