# kfree/cliques.py
"""
Contagem exata de cliques e testes de K_m-liberdade sobre bitsets.

Responsabilidades:
- K_m(G) e K_m(v) por interseção recursiva ordenada de vizinhanças.
- Teste de liberdade com parada no primeiro testemunho.
- Busca exata de um clique transversal (um vértice em cada parte).

Observações:
- Cada clique é gerado uma única vez: o próximo vértice é sempre maior que os anteriores.
- Contagens são inteiros Python (sem overflow).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence

from kfree.errors import PreconditionError
from kfree.graph import Graph, VertexSet, members


@dataclass(frozen=True)
class CliqueCount:
    m: int
    count: int

    def __int__(self) -> int:
        return self.count


def _count_within(g: Graph, cand: VertexSet, depth: int) -> int:
    """Número de cliques com `depth` vértices dentro de `cand`."""
    if depth == 0:
        return 1
    if depth == 1:
        return cand.bit_count()
    if cand.bit_count() < depth:
        return 0
    total = 0
    adj = g.adj
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        # `cand` agora só tem vértices maiores que v
        nxt = cand & adj[v]
        if nxt.bit_count() >= depth - 1:
            total += _count_within(g, nxt, depth - 1)
    return total


def count_cliques(g: Graph, m: int) -> CliqueCount:
    if m < 1:
        raise PreconditionError(f"m deve ser ≥ 1, recebido: {m}")
    if m > g.n:
        return CliqueCount(m, 0)
    return CliqueCount(m, _count_within(g, g.vertices, m))


def count_cliques_at(g: Graph, v: int, m: int) -> CliqueCount:
    """K_m(v): cliques de ordem m que contêm v."""
    if not 0 <= v < g.n:
        raise PreconditionError(f"vértice {v} fora de [0, {g.n})")
    if m < 1:
        raise PreconditionError(f"m deve ser ≥ 1, recebido: {m}")
    return CliqueCount(m, _count_within(g, g.adj[v], m - 1))


def _find_within(g: Graph, cand: VertexSet, depth: int, chosen: List[int]) -> Optional[List[int]]:
    if depth == 0:
        return list(chosen)
    while cand.bit_count() >= depth:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        chosen.append(v)
        found = _find_within(g, cand & g.adj[v], depth - 1, chosen)
        if found is not None:
            return found
        chosen.pop()
    return None


def find_clique(g: Graph, m: int) -> Optional[List[int]]:
    """Um K_m (vértices em ordem crescente) ou None."""
    if m < 1:
        raise PreconditionError(f"m deve ser ≥ 1, recebido: {m}")
    return _find_within(g, g.vertices, m, [])


def is_clique_free(g: Graph, m: int) -> bool:
    return find_clique(g, m) is None


def find_transversal_clique(g: Graph, parts: Sequence[VertexSet]) -> Optional[List[int]]:
    """
    Clique com exatamente um vértice em cada parte, ou None.

    Backtracking exato: a cada passo escolhe a parte restante com menos
    candidatos compatíveis (vizinhos comuns dos já escolhidos).
    O resultado vem ordenado pelo índice da parte.
    """
    seen = 0
    for p in parts:
        if p & seen:
            raise PreconditionError("as partes devem ser disjuntas")
        seen |= p

    chosen: List[Optional[int]] = [None] * len(parts)

    def _search(common: VertexSet, remaining: List[int]) -> bool:
        if not remaining:
            return True
        best_idx = min(remaining, key=lambda i: (parts[i] & common).bit_count())
        options = parts[best_idx] & common
        if not options:
            return False
        rest = [i for i in remaining if i != best_idx]
        for v in members(options):
            chosen[best_idx] = v
            if _search(common & g.adj[v], rest):
                return True
        chosen[best_idx] = None
        return False

    if _search(g.vertices, list(range(len(parts)))):
        return [v for v in chosen if v is not None]
    return None


def clique_within(g: Graph, cand: VertexSet, m: int) -> Optional[List[int]]:
    """Um K_m contido em `cand`, ou None (m = 0 devolve a lista vazia)."""
    if m < 0:
        raise PreconditionError(f"m deve ser ≥ 0, recebido: {m}")
    return _find_within(g, cand, m, [])
