# kfree/partition.py
"""
r-partições: arestas interiores, distância exata à r-partição, enumeração das
partições ótimas e a busca local com garantia e(G)/r.

Responsabilidades:
- RPartition imutável com contagem de arestas interiores em cache.
- distance_to_r_partite: DP sobre subconjuntos (padrão) ou branch-and-bound.
- is_r_partite / find_r_coloring: backtracking de coloração (caminho rápido).
- enumerate_optimal_partitions: todas as partições ótimas, a menos de troca de rótulos.
- local_search_partition: movimentos estritamente melhores até o ótimo local.

Observações:
- Partes podem ser vazias.
- Partições ótimas saem em forma de "crescimento restrito": o vértice 0 está na
  parte 0 e cada parte nova recebe o próximo índice livre (partes ordenadas pelo
  menor vértice). As partes vazias ficam nos índices finais.
- A tabela e(G[T]) para todo T ⊆ V é montada em O(2^n) com numpy.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator, List, Literal, Optional, Sequence, Tuple

import numpy as np

from kfree.config import DEFAULT_CONFIG
from kfree.errors import PreconditionError, SizeLimitError
from kfree.graph import Graph, VertexSet, members

logger = logging.getLogger(__name__)

DistanceMethod = Literal["auto", "dp", "branch_and_bound"]


@dataclass(frozen=True)
class RPartition:
    r: int
    assignment: Tuple[int, ...]
    interior: int

    @classmethod
    def of(cls, g: Graph, r: int, assignment: Sequence[int]) -> "RPartition":
        """Valida a atribuição e calcula as arestas interiores."""
        if r < 1:
            raise PreconditionError(f"r deve ser ≥ 1, recebido: {r}")
        if len(assignment) != g.n:
            raise PreconditionError(f"atribuição com {len(assignment)} entradas para n={g.n}")
        for v, part in enumerate(assignment):
            if not 0 <= part < r:
                raise PreconditionError(f"vértice {v} na parte {part}, fora de [0, {r})")
        masks = _part_masks(assignment, r)
        interior = sum((g.adj[v] & masks[assignment[v]]).bit_count() for v in range(g.n)) // 2
        return cls(r=r, assignment=tuple(assignment), interior=interior)

    def parts(self) -> List[VertexSet]:
        return _part_masks(self.assignment, self.r)

    def part_sizes(self) -> List[int]:
        return [mask.bit_count() for mask in self.parts()]

    def normalized(self) -> "RPartition":
        """Mesma partição com partes renumeradas pelo menor vértice."""
        relabel: dict[int, int] = {}
        out = []
        for part in self.assignment:
            if part not in relabel:
                relabel[part] = len(relabel)
            out.append(relabel[part])
        return RPartition(r=self.r, assignment=tuple(out), interior=self.interior)


@dataclass(frozen=True)
class DistanceResult:
    distance: int
    witness: RPartition
    method: str = "dp"    # solver que produziu o resultado


def _part_masks(assignment: Sequence[int], r: int) -> List[VertexSet]:
    masks = [0] * r
    for v, part in enumerate(assignment):
        masks[part] |= 1 << v
    return masks


def interior_edges(g: Graph, p: RPartition) -> int:
    if len(p.assignment) != g.n:
        raise PreconditionError(f"atribuição com {len(p.assignment)} entradas para n={g.n}")
    masks = p.parts()
    return sum((g.adj[v] & masks[p.assignment[v]]).bit_count() for v in range(g.n)) // 2


# -----------------------------
# Tabela e(G[T]) e DP exata
# -----------------------------
def subset_edge_table(g: Graph) -> np.ndarray:
    """table[T] = e(G[T]) para todo T ⊆ V, via e(T) = e(T∖{v}) + |N(v) ∩ T|."""
    table = np.zeros(1 << g.n, dtype=np.int32)
    for v in range(g.n):
        lower = np.arange(1 << v, dtype=np.uint64)
        back = np.uint64(g.adj[v] & ((1 << v) - 1))
        table[1 << v: 1 << (v + 1)] = table[: 1 << v] + np.bitwise_count(lower & back)
    return table


def _submasks(mask: int) -> np.ndarray:
    subs = np.zeros(1, dtype=np.int64)
    for v in members(mask):
        subs = np.concatenate((subs, subs | (1 << v)))
    return subs


def _exact_limits(g: Graph, r: int) -> None:
    if r < 1:
        raise PreconditionError(f"r deve ser ≥ 1, recebido: {r}")
    if g.n > DEFAULT_CONFIG.EXACT_DISTANCE_MAX_N:
        raise SizeLimitError(
            f"distância exata limitada a n ≤ {DEFAULT_CONFIG.EXACT_DISTANCE_MAX_N}, recebido: {g.n}"
        )
    if min(r, g.n) > DEFAULT_CONFIG.EXACT_MAX_PARTS:
        raise SizeLimitError(f"modo exato limitado a r ≤ {DEFAULT_CONFIG.EXACT_MAX_PARTS}, recebido: {r}")


def _distance_dp(g: Graph, r: int) -> DistanceResult:
    n = g.n
    parts = min(r, n)
    table = subset_edge_table(g)
    size = 1 << n
    # best[k][S]: mínimo de arestas interiores de G[S] em k+1 partes
    best = np.zeros((parts, size), dtype=np.int32)
    choice = np.zeros((parts, size), dtype=np.int64)
    best[0] = table
    choice[0] = np.arange(size, dtype=np.int64)
    if parts > 1:
        for s in range(1, size):
            low = s & -s
            subs = _submasks(s ^ low) | low  # a parte que contém o menor vértice de S
            cost_part = table[subs]
            rests = s ^ subs
            for k in range(1, parts):
                values = cost_part + best[k - 1][rests]
                idx = int(np.argmin(values))
                best[k][s] = values[idx]
                choice[k][s] = subs[idx]

    assignment = [0] * n
    remaining = size - 1
    label = 0
    for k in range(parts - 1, -1, -1):
        if not remaining:
            break
        block = int(choice[k][remaining]) if k else remaining
        for v in members(block):
            assignment[v] = label
        label += 1
        remaining ^= block

    witness = RPartition.of(g, r, assignment).normalized()
    distance = int(best[parts - 1][size - 1])
    if witness.interior != distance:
        raise AssertionError("reconstrução da testemunha divergiu do ótimo da DP")
    return DistanceResult(distance=distance, witness=witness)


# -----------------------------
# Branch-and-bound
# -----------------------------
def _remaining_lower_bound(g: Graph, masks: List[int], pending: Sequence[int]) -> int:
    # cada vértice pendente terá pelo menos min_p |N(w) ∩ U_p| vizinhos já atribuídos na sua parte;
    # partes ainda vazias entram no mínimo com custo 0
    return sum(min((g.adj[w] & m).bit_count() for m in masks) for w in pending)


def _distance_branch_and_bound(g: Graph, r: int, seed: int = 0) -> DistanceResult:
    n = g.n
    if n > DEFAULT_CONFIG.BRANCH_AND_BOUND_MAX_N:
        raise SizeLimitError(
            f"branch-and-bound limitado a n ≤ {DEFAULT_CONFIG.BRANCH_AND_BOUND_MAX_N}, recebido: {n}"
        )
    incumbent = local_search_partition(g, r, seed)
    best_cost = incumbent.interior
    best_assign: List[int] = list(incumbent.assignment)
    logger.debug("branch-and-bound: incumbente inicial com %d arestas interiores", best_cost)

    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    masks = [0] * r
    assign = [0] * n

    def _search(idx: int, used: int, cost: int) -> None:
        nonlocal best_cost, best_assign
        if cost >= best_cost:
            return
        if idx == n:
            best_cost = cost
            best_assign = list(assign)
            return
        if cost + _remaining_lower_bound(g, masks, order[idx:]) >= best_cost:
            return
        v = order[idx]
        options = range(min(used + 1, r))
        ranked = sorted(options, key=lambda p: ((g.adj[v] & masks[p]).bit_count(), p))
        for p in ranked:
            added = (g.adj[v] & masks[p]).bit_count()
            masks[p] |= 1 << v
            assign[v] = p
            _search(idx + 1, max(used, p + 1), cost + added)
            masks[p] ^= 1 << v

    _search(0, 0, 0)
    witness = RPartition.of(g, r, best_assign).normalized()
    return DistanceResult(distance=witness.interior, witness=witness, method="branch_and_bound")


def distance_to_r_partite(g: Graph, r: int, method: DistanceMethod = "auto") -> DistanceResult:
    """
    Mínimo de arestas interiores sobre todas as r-partições, com uma partição ótima.

    "auto" usa a DP sempre que ela cabe nos limites e cai no branch-and-bound caso contrário.
    """
    if r < 1:
        raise PreconditionError(f"r deve ser ≥ 1, recebido: {r}")
    if r >= g.n:
        return DistanceResult(distance=0, witness=RPartition.of(g, r, list(range(g.n))), method="trivial")
    if method == "auto":
        fits = g.n <= DEFAULT_CONFIG.EXACT_DISTANCE_MAX_N and r <= DEFAULT_CONFIG.EXACT_MAX_PARTS
        method = "dp" if fits else "branch_and_bound"
    if method == "branch_and_bound":
        return _distance_branch_and_bound(g, r)
    _exact_limits(g, r)
    return _distance_dp(g, r)


# -----------------------------
# Caminho rápido: coloração
# -----------------------------
def find_r_coloring(g: Graph, r: int) -> Optional[List[int]]:
    """Uma r-coloração própria (em forma normalizada) ou None."""
    if r < 1:
        raise PreconditionError(f"r deve ser ≥ 1, recebido: {r}")
    n = g.n
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    color = [-1] * n
    masks = [0] * r

    def _search(idx: int, used: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        for c in range(min(used + 1, r)):
            if g.adj[v] & masks[c]:
                continue
            color[v] = c
            masks[c] |= 1 << v
            if _search(idx + 1, max(used, c + 1)):
                return True
            masks[c] ^= 1 << v
        color[v] = -1
        return False

    if not _search(0, 0):
        return None
    return list(RPartition(r=r, assignment=tuple(color), interior=0).normalized().assignment)


def is_r_partite(g: Graph, r: int) -> bool:
    if r >= g.n:
        return True
    return find_r_coloring(g, r) is not None


def is_t_far(g: Graph, r: int, t: int) -> bool:
    """G é t-distante de ser r-partido <=> t ≤ distância."""
    if t <= 0:
        return True
    if t == 1:
        return not is_r_partite(g, r)
    return distance_to_r_partite(g, r).distance >= t


# -----------------------------
# Busca local
# -----------------------------
def _open_twin_classes(g: Graph) -> List[List[int]]:
    # gêmeos abertos têm a mesma vizinhança, logo formam um conjunto independente
    groups: dict = {}
    for v, row in enumerate(g.adj):
        groups.setdefault(row, []).append(v)
    return [vs for vs in groups.values() if len(vs) > 1]


def _improve_vertices(g: Graph, r: int, assign: List[int], masks: List[VertexSet]) -> None:
    improved = True
    while improved:
        improved = False
        for v in range(g.n):
            current = assign[v]
            here = (g.adj[v] & masks[current]).bit_count()
            for p in range(r):
                if p != current and (g.adj[v] & masks[p]).bit_count() < here:
                    masks[current] ^= 1 << v
                    masks[p] |= 1 << v
                    assign[v] = p
                    improved = True
                    break


def _consolidate_twins(g: Graph, r: int, assign: List[int], masks: List[VertexSet], twins: List[List[int]]) -> bool:
    """Junta cada classe de gêmeos dividida na parte mais barata; o interior não aumenta."""
    changed = False
    for cls in twins:
        if len({assign[v] for v in cls}) == 1:
            continue
        row = g.adj[cls[0]]
        target = min(range(r), key=lambda p: (row & masks[p]).bit_count())
        for v in cls:
            masks[assign[v]] ^= 1 << v
            masks[target] |= 1 << v
            assign[v] = target
        changed = True
    return changed


def local_search_partition(g: Graph, r: int, seed: int) -> RPartition:
    """
    Parte de uma atribuição balanceada aleatória (semente) e move, varrendo os
    vértices em ordem, cada vértice para a parte de menor índice que diminui
    estritamente as arestas interiores. No ótimo local cada vértice tem no máximo
    d(v)/r vizinhos na própria parte, logo interior ≤ e(G)/r.

    Num ótimo local, classes de gêmeos abertos divididas entre partes são
    reunidas na parte onde têm menos vizinhos e a varredura recomeça. O par
    (interior, classes divididas) cai em ordem lexicográfica a cada passo. Com
    no máximo r classes de gêmeos cobrindo V (grafos de Turán) o resultado tem
    interior 0.
    """
    if r < 1:
        raise PreconditionError(f"r deve ser ≥ 1, recebido: {r}")
    n = g.n
    rng = np.random.Generator(np.random.Philox(seed))
    perm = rng.permutation(n)
    assign = [0] * n
    for i, v in enumerate(perm):
        assign[int(v)] = i % r
    masks = _part_masks(assign, r)
    twins = _open_twin_classes(g)

    _improve_vertices(g, r, assign, masks)
    while _consolidate_twins(g, r, assign, masks, twins):
        _improve_vertices(g, r, assign, masks)
    return RPartition.of(g, r, assign)


# -----------------------------
# Partições ótimas
# -----------------------------
def enumerate_optimal_partitions(g: Graph, r: int) -> Iterator[RPartition]:
    """Todas as partições ótimas, sem repetição por troca de rótulos, em ordem lexicográfica."""
    target = distance_to_r_partite(g, r).distance
    n = g.n
    masks = [0] * r
    assign = [0] * n

    def _search(v: int, used: int, cost: int) -> Iterator[RPartition]:
        if cost > target:
            return
        if v == n:
            yield RPartition(r=r, assignment=tuple(assign), interior=cost)
            return
        if cost + _remaining_lower_bound(g, masks, range(v, n)) > target:
            return
        for p in range(min(used + 1, r)):
            added = (g.adj[v] & masks[p]).bit_count()
            masks[p] |= 1 << v
            assign[v] = p
            yield from _search(v + 1, max(used, p + 1), cost + added)
            masks[p] ^= 1 << v

    yield from _search(0, 0, 0)


def canonical_optimal_partition(g: Graph, r: int) -> RPartition:
    """A primeira partição ótima da enumeração (escolha canônica)."""
    return next(enumerate_optimal_partitions(g, r))
