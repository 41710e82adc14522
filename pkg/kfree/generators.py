# kfree/generators.py
"""
Geradores de grafos usados como fixtures e pelo CLI (`gen`).

Responsabilidades:
- Grafo de Turán T_r(n), seu número de arestas t_r(n) e a partição canônica.
- T_r(n) + emparelhamento de t arestas dentro da primeira parte (construção de nitidez).
- Grafo aleatório G(n, p) determinístico por semente (Philox, baseado em contador).
- Famílias pequenas para testes: vazio, completo, ciclo, estrela, união disjunta.
- Conversão máscara de arestas <-> Graph na ordem graph6 (máscaras do censo).

Observações:
- Partes de Turán ocupam blocos contíguos de índices, partes maiores primeiro.
"""

from __future__ import annotations

from typing import List, Sequence

import numpy as np

from kfree.errors import PreconditionError
from kfree.graph import Graph, full_set
from kfree.graph6 import pair_index


# -----------------------------
# Turán
# -----------------------------
def turan_part_sizes(n: int, r: int) -> List[int]:
    """Tamanhos ⌈n/r⌉ primeiro, depois ⌊n/r⌋."""
    if r < 1:
        raise PreconditionError(f"r deve ser ≥ 1, recebido: {r}")
    if r > n:
        raise PreconditionError(f"r deve ser ≤ n (r={r}, n={n})")
    q, rem = divmod(n, r)
    return [q + 1] * rem + [q] * (r - rem)


def turan_assignment(n: int, r: int) -> List[int]:
    """Parte de cada vértice em T_r(n) (blocos contíguos)."""
    out: List[int] = []
    for part, size in enumerate(turan_part_sizes(n, r)):
        out.extend([part] * size)
    return out


def turan_graph(n: int, r: int) -> Graph:
    assignment = turan_assignment(n, r)
    rows = []
    for v in range(n):
        rows.append(sum(1 << u for u in range(n) if assignment[u] != assignment[v]))
    return Graph(n, tuple(rows))


def turan_edges(n: int, r: int) -> int:
    """t_r(n) = (n² − Σ |parte|²) / 2."""
    sizes = turan_part_sizes(n, r)
    return (n * n - sum(s * s for s in sizes)) // 2


def turan_plus_matching(n: int, r: int, t: int) -> Graph:
    """T_r(n) mais as arestas (0,1), (2,3), …, (2t−2, 2t−1) dentro da primeira parte."""
    if t < 0:
        raise PreconditionError(f"t deve ser ≥ 0, recebido: {t}")
    first = turan_part_sizes(n, r)[0]
    if 2 * t > first:
        raise PreconditionError(f"2t={2 * t} excede o tamanho da primeira parte ({first})")
    base = turan_graph(n, r)
    rows = list(base.adj)
    for k in range(t):
        u, v = 2 * k, 2 * k + 1
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


# -----------------------------
# Aleatório
# -----------------------------
def random_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p): cada par (na ordem graph6) é aresta com probabilidade p."""
    if not 0.0 <= p <= 1.0:
        raise PreconditionError(f"p deve estar em [0, 1], recebido: {p}")
    rng = np.random.Generator(np.random.Philox(seed))
    draws = rng.random(n * (n - 1) // 2)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if draws[k] < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


# -----------------------------
# Famílias pequenas
# -----------------------------
def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    limit = full_set(n)
    return Graph(n, tuple(limit & ~(1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise PreconditionError(f"ciclo exige n ≥ 3, recebido: {n}")
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} com centro 0."""
    return Graph.from_edges(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    rows: List[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(offset, tuple(rows))


# -----------------------------
# Máscaras de arestas (censo)
# -----------------------------
def graph_from_mask(n: int, mask: int) -> Graph:
    """Grafo cujo bit k (ordem graph6) indica o par de índice k."""
    rows = [0] * n
    for j in range(1, n):
        for i in range(j):
            if mask >> pair_index(i, j) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def mask_of(g: Graph) -> int:
    mask = 0
    for u, v in g.edges():
        mask |= 1 << pair_index(u, v)
    return mask
