# kfree/graph.py
"""
Representação compacta de grafos simples (n ≤ 64) por linhas de bits.

Responsabilidades:
- Graph imutável: adj[v] é a vizinhança de v como inteiro-bitset.
- VertexSet: um subconjunto de [n] como inteiro (bit v ligado <=> v no conjunto).
- Operações básicas: arestas, graus, e(G[S]), e(A,B), subgrafo induzido,
  complemento e reetiquetamento.

Observações:
- Simetria e irreflexividade são verificadas na construção (GraphError).
- Conjuntos são inteiros Python; todas as operações de conjunto são operações de palavra.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

from kfree.config import DEFAULT_CONFIG
from kfree.errors import PreconditionError

# Um VertexSet é só um inteiro; o alias documenta a intenção.
VertexSet = int


# -----------------------------
# Utilitários de conjuntos
# -----------------------------
def vertex_set(vertices: Iterable[int]) -> VertexSet:
    """Monta o bitset a partir de uma coleção de vértices."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> List[int]:
    """Vértices de um bitset, em ordem crescente."""
    out: List[int] = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: VertexSet) -> int:
    return mask.bit_count()


def full_set(n: int) -> VertexSet:
    return (1 << n) - 1


@dataclass(frozen=True, slots=True)
class Graph:
    """Grafo simples rotulado em {0, …, n-1}."""
    n: int
    adj: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= DEFAULT_CONFIG.MAX_VERTICES:
            raise PreconditionError(f"n deve estar entre 1 e {DEFAULT_CONFIG.MAX_VERTICES}, recebido: {self.n}")
        if len(self.adj) != self.n:
            raise PreconditionError(f"adj deve ter {self.n} linhas, recebido: {len(self.adj)}")
        limit = full_set(self.n)
        for v, row in enumerate(self.adj):
            if row & ~limit:
                raise PreconditionError(f"vizinhança de {v} contém vértices fora de [0, {self.n})")
            if row >> v & 1:
                raise PreconditionError(f"laço no vértice {v}")
            for u in members(row):
                if not self.adj[u] >> v & 1:
                    raise PreconditionError(f"adjacência assimétrica entre {v} e {u}")

    # -----------------------------
    # Construtores
    # -----------------------------
    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise PreconditionError(f"laço no vértice {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"aresta ({u}, {v}) fora de [0, {n})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    # -----------------------------
    # Consultas
    # -----------------------------
    @property
    def vertices(self) -> VertexSet:
        return full_set(self.n)

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> List[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Arestas (u, v) com u < v, em ordem lexicográfica."""
        for u, row in enumerate(self.adj):
            for v in members(row >> (u + 1)):
                yield u, u + 1 + v

    def edges_within(self, mask: VertexSet) -> int:
        """e(G[S])."""
        total = 0
        for v in members(mask):
            total += (self.adj[v] & mask).bit_count()
        return total // 2

    def edges_between(self, a: VertexSet, b: VertexSet) -> int:
        """e(A, B) para A e B disjuntos."""
        return sum((self.adj[v] & b).bit_count() for v in members(a))

    def common_neighbors(self, mask: VertexSet) -> VertexSet:
        """Interseção das vizinhanças dos vértices de `mask` (todos os vértices se vazio)."""
        common = self.vertices
        for v in members(mask):
            common &= self.adj[v]
        return common

    # -----------------------------
    # Transformações
    # -----------------------------
    def induced_subgraph(self, mask: VertexSet) -> "Graph":
        """G[S], com os vértices de S renumerados em ordem crescente."""
        kept = members(mask)
        if not kept:
            raise PreconditionError("subgrafo induzido sobre conjunto vazio")
        index = {v: i for i, v in enumerate(kept)}
        rows = []
        for v in kept:
            rows.append(vertex_set(index[u] for u in members(self.adj[v] & mask)))
        return Graph(len(kept), tuple(rows))

    def complement(self) -> "Graph":
        limit = self.vertices
        return Graph(self.n, tuple((~row & limit) & ~(1 << v) for v, row in enumerate(self.adj)))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Grafo em que o vértice v passa a se chamar perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise PreconditionError("perm deve ser uma permutação de [0, n)")
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            rows[perm[v]] = vertex_set(perm[u] for u in members(row))
        return Graph(self.n, tuple(rows))
