# kfree/canonical.py
"""
Forma canônica e contagem de automorfismos para grafos pequenos.

Como funciona:
- O corpo graph6 é lido coluna a coluna e a coluna j tem comprimento fixo j,
  então o menor registro sobre todas as rotulações é o menor vetor de colunas
  em ordem lexicográfica. Todo prefixo se estende a uma ordem completa, logo o
  prefixo da ordem ótima é mínimo entre todos os prefixos do mesmo tamanho:
  a busca guarda, nível a nível, só os prefixos que empatam no menor valor.
- Gêmeos (mesma vizinhança aberta, ou mesma vizinhança fechada) são
  intercambiáveis: entre gêmeos ainda livres só o de menor índice é tentado.

Ao final, |Aut(G)| = (prefixos sobreviventes) · Π (tamanho de cada classe de gêmeos)!.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from math import factorial
from typing import Dict, List, Tuple

from kfree.config import DEFAULT_CONFIG
from kfree.errors import SizeLimitError
from kfree.graph import Graph
from kfree.graph6 import emit_graph6


@dataclass(frozen=True)
class CanonicalLabel:
    form: str
    automorphisms: int
    order: Tuple[int, ...]  # order[i] = vértice original que ocupa a posição i


def _twin_classes(g: Graph) -> List[List[int]]:
    groups: Dict[Tuple[str, int], List[int]] = defaultdict(list)
    for v, row in enumerate(g.adj):
        groups[("open", row)].append(v)
    for v, row in enumerate(g.adj):
        groups[("closed", row | 1 << v)].append(v)
    return [vs for vs in groups.values() if len(vs) > 1]


def _column(g: Graph, placed: Tuple[int, ...], v: int) -> int:
    # o bit de placed[0] é o mais significativo
    col = 0
    row = g.adj[v]
    for u in placed:
        col = (col << 1) | (row >> u & 1)
    return col


def canonical_labeling(g: Graph) -> CanonicalLabel:
    if g.n > DEFAULT_CONFIG.CANONICAL_MAX_N:
        raise SizeLimitError(
            f"forma canônica por busca exaustiva limitada a n ≤ {DEFAULT_CONFIG.CANONICAL_MAX_N}, recebido: {g.n}"
        )

    twins = _twin_classes(g)
    twin_of = [-1] * g.n    # gêmeo de índice menor imediatamente anterior na classe
    for cls in twins:
        for prev, v in zip(cls, cls[1:]):
            twin_of[v] = prev

    frontier: List[Tuple[int, ...]] = [()]
    for _ in range(g.n):
        best = None
        survivors: List[Tuple[int, ...]] = []
        for placed in frontier:
            used = set(placed)
            for v in range(g.n):
                if v in used:
                    continue
                if twin_of[v] >= 0 and twin_of[v] not in used:
                    continue
                col = _column(g, placed, v)
                if best is None or col < best:
                    best = col
                    survivors = [placed + (v,)]
                elif col == best:
                    survivors.append(placed + (v,))
        frontier = survivors

    order = frontier[0]
    position_of = [0] * g.n
    for i, v in enumerate(order):
        position_of[v] = i
    twin_factor = 1
    for cls in twins:
        twin_factor *= factorial(len(cls))
    form = emit_graph6(g.relabel(position_of))
    return CanonicalLabel(form=form, automorphisms=len(frontier) * twin_factor, order=order)


def canonical_form(g: Graph) -> str:
    return canonical_labeling(g).form


def automorphism_count(g: Graph) -> int:
    return canonical_labeling(g).automorphisms
