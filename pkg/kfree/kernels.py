# kfree/kernels.py
"""
Kernels vetorizados do censo sobre máscaras de arestas (numpy uint64).

Uma máscara representa um grafo rotulado em n ≤ 8 vértices: o bit k indica o
par de índice k na ordem graph6 (ver graph6.pair_index).

Responsabilidades:
- Padrões de pares: cliques de ordem m e pares interiores de cada partição de
  conjunto em no máximo k blocos.
- Filtros e contagens: contém K_m, conta K_m, r-partido, distância mínima.
- Desigualdade de supersaturação com denominadores limpos (inteiros).
- Herança de distância pelas vizinhanças, vértice a vértice.

Observações:
- Todo resultado sinalizado aqui é reverificado grafo a grafo em Fraction pelo censo.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import List, Sequence, Tuple

import numpy as np

from kfree.graph6 import pair_index
from kfree.supersat import c_const

_ONE = np.uint64(1)


# -----------------------------
# Padrões
# -----------------------------
def pair_mask(vertices: Sequence[int]) -> int:
    """Máscara com todos os pares dentro de `vertices`."""
    mask = 0
    for a, b in combinations(vertices, 2):
        mask |= 1 << pair_index(a, b)
    return mask


@lru_cache(maxsize=None)
def clique_patterns(n: int, m: int) -> np.ndarray:
    """Máscaras de pares de cada K_m em [n] (vazio quando m > n)."""
    if m > n:
        return np.zeros(0, dtype=np.uint64)
    return np.array([pair_mask(c) for c in combinations(range(n), m)], dtype=np.uint64)


def _set_partitions(vertices: Sequence[int], max_blocks: int) -> List[List[List[int]]]:
    """Partições de `vertices` em ≤ max_blocks blocos não vazios (crescimento restrito)."""
    out: List[List[List[int]]] = []

    def _grow(idx: int, blocks: List[List[int]]) -> None:
        if idx == len(vertices):
            out.append([list(b) for b in blocks])
            return
        v = vertices[idx]
        for b in blocks:
            b.append(v)
            _grow(idx + 1, blocks)
            b.pop()
        if len(blocks) < max_blocks:
            blocks.append([v])
            _grow(idx + 1, blocks)
            blocks.pop()

    _grow(0, [])
    return out


@lru_cache(maxsize=None)
def partition_patterns(vertices: Tuple[int, ...], max_blocks: int) -> np.ndarray:
    """Máscara dos pares interiores de cada partição de `vertices` em ≤ max_blocks blocos."""
    masks = {
        sum(pair_mask(block) for block in blocks)
        for blocks in _set_partitions(list(vertices), max_blocks)
    }
    return np.array(sorted(masks), dtype=np.uint64)


def all_masks(start: int, stop: int) -> np.ndarray:
    return np.arange(start, stop, dtype=np.uint64)


# -----------------------------
# Filtros e contagens
# -----------------------------
def edge_counts(masks: np.ndarray) -> np.ndarray:
    return np.bitwise_count(masks).astype(np.int64)


def contains_any(masks: np.ndarray, patterns: np.ndarray) -> np.ndarray:
    hit = np.zeros(masks.shape, dtype=bool)
    for pattern in patterns:
        hit |= (masks & pattern) == pattern
    return hit


def count_patterns(masks: np.ndarray, patterns: np.ndarray) -> np.ndarray:
    total = np.zeros(masks.shape, dtype=np.int64)
    for pattern in patterns:
        total += (masks & pattern) == pattern
    return total


def min_interior(masks: np.ndarray, patterns: np.ndarray) -> np.ndarray:
    """Mínimo de arestas interiores sobre as partições dadas (a distância, se todas forem dadas)."""
    best = np.full(masks.shape, np.iinfo(np.int64).max, dtype=np.int64)
    for pattern in patterns:
        np.minimum(best, np.bitwise_count(masks & pattern).astype(np.int64), out=best)
    return best


def has_proper(masks: np.ndarray, patterns: np.ndarray) -> np.ndarray:
    """Existe partição sem aresta interior (grafo r-partido)."""
    ok = np.zeros(masks.shape, dtype=bool)
    for pattern in patterns:
        ok |= (masks & pattern) == 0
    return ok


def distances(masks: np.ndarray, n: int, r: int) -> np.ndarray:
    if r >= n:
        return np.zeros(masks.shape, dtype=np.int64)
    return min_interior(masks, partition_patterns(tuple(range(n)), r))


def r_partite(masks: np.ndarray, n: int, r: int) -> np.ndarray:
    if r >= n:
        return np.ones(masks.shape, dtype=bool)
    return has_proper(masks, partition_patterns(tuple(range(n)), r))


def clique_free(masks: np.ndarray, n: int, m: int) -> np.ndarray:
    return ~contains_any(masks, clique_patterns(n, m))


# -----------------------------
# Supersaturação
# -----------------------------
def supersat_sides(
    n: int, r: int, edges: np.ndarray, t: np.ndarray, cliques: np.ndarray,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    K ≥ (n^{r-1}/c)·(e + t − (r−1)n²/(2r)) com c = C_num/C_den vira
    K·C_num·2r ≥ n^{r-1}·C_den·(2r(e + t) − (r−1)n²). Devolve (lado esquerdo, lado direito);
    o sinal do lado direito é o sinal da cota.
    """
    c = c_const(r)
    left_scale = c.numerator * 2 * r
    right_scale = n ** (r - 1) * c.denominator
    # e + t ≤ n², logo |lado direito| ≤ 5r·n²·right_scale
    largest = max(left_scale * int(cliques.max(initial=0)), right_scale * 5 * r * n * n)
    dtype = np.int64 if largest < 2**62 else object
    lhs = cliques.astype(dtype) * left_scale
    rhs = (2 * r * (edges.astype(dtype) + t.astype(dtype)) - (r - 1) * n * n) * right_scale
    return lhs, rhs


# -----------------------------
# Herança de distância pelas vizinhanças
# -----------------------------
def neighborhood_farness_failures(
    masks: np.ndarray, n: int, r: int, t: np.ndarray,
) -> List[Tuple[int, int]]:
    """
    (posição, vértice) em que a distância de G[N(v)] à (r−1)-partição é menor que
    t − e(A_v), A_v = V ∖ N(v). Só linhas com t ≥ 1 são consideradas.
    """
    failures: List[Tuple[int, int]] = []
    for v in range(n):
        others = [u for u in range(n) if u != v]
        inside = np.zeros(masks.shape, dtype=np.uint64)   # arestas de G[N(v)]
        outside = np.zeros(masks.shape, dtype=np.int64)   # e(A_v)
        for a, b in combinations(others, 2):
            k = np.uint64(pair_index(a, b))
            e_ab = (masks >> k) & _ONE
            e_va = (masks >> np.uint64(pair_index(v, a))) & _ONE
            e_vb = (masks >> np.uint64(pair_index(v, b))) & _ONE
            inside |= (e_ab & e_va & e_vb) << k
            outside += (e_ab & (e_va ^ _ONE) & (e_vb ^ _ONE)).astype(np.int64)
        patterns = partition_patterns(tuple(others), r - 1)
        got = min_interior(inside, patterns)
        bad = np.nonzero((t >= 1) & (got < t - outside))[0]
        failures.extend((int(i), v) for i in bad)
    failures.sort()
    return failures
