# kfree/structure.py
"""
Predicados estruturais sobre partições ótimas, conjuntos ruins, os dados
(m, j, X) e a transformação Φ.

Responsabilidades:
- is_uniformly_dense / is_internally_sparse / is_balanced: quantificam sobre
  TODAS as partições ótimas e devolvem testemunha em caso de falha.
- bad_sets, compute_m_data, verify_maximal: famílias gulosas de r-conjuntos
  disjuntos sem vizinho comum em U_j.
- check_m_positive: m ≥ 1 em toda partição ótima de um grafo K_{r+1}-livre não r-partido.
- Φ: apaga as arestas incidentes a X e recoloca um subconjunto escolhido das
  arestas entre X e V ∖ (X ∪ U_j); imagens exaustivas ou amostradas.
- classify_Q_membership: o registro completo de flags.

Observações:
- Limiares são frações de n convertidas com Fraction(float), sem arredondamento.
- Densidade uniforme: para cada A (na parte menor) o B de tamanho |A| que
  minimiza e(A, B) são os |A| vértices da outra parte com menos vizinhos em A.
  O custo é contado em avaliações (A, vértice).
- Índices de parte começam em 0; j(G) é o menor índice que atinge o máximo.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import ceil, comb
from typing import Iterator, List, Literal, Optional, Sequence, Tuple, Union

import numpy as np

from kfree.canonical import canonical_form
from kfree.cliques import is_clique_free
from kfree.config import DEFAULT_CONFIG
from kfree.errors import InvariantError, PreconditionError, SizeLimitError
from kfree.graph import Graph, VertexSet, members, vertex_set
from kfree.graph6 import emit_graph6
from kfree.partition import (
    RPartition,
    canonical_optimal_partition,
    distance_to_r_partite,
    enumerate_optimal_partitions,
    is_r_partite,
)
from schemas.structure_output import (
    BalanceWitness,
    CheckOutcome,
    CheckStatus,
    DensityWitness,
    MDataOut,
    QFlags,
    SparsityWitness,
    StructureReport,
)
from schemas.structure_thresholds import StructureThresholds

logger = logging.getLogger(__name__)

DensityMode = Literal["exact", "sample", "auto"]


# -----------------------------
# Limiares absolutos
# -----------------------------
def size_floor(th: StructureThresholds, n: int) -> int:
    """Menor |A| = |B| considerado: max(1, ⌈size_fraction·n⌉)."""
    return max(1, ceil(Fraction(th.size_fraction) * n))


def sparse_cap(th: StructureThresholds, n: int) -> Fraction:
    return Fraction(th.sparse_fraction) * n


def balance_window(th: StructureThresholds, n: int, r: int) -> Tuple[Fraction, Fraction]:
    slack = Fraction(th.balance_fraction) * n
    center = Fraction(n, r)
    return center - slack, center + slack


def is_close(distance: int, n: int, th: StructureThresholds) -> bool:
    """distância ≤ n^expoente, comparando potências inteiras (expoente racional p/q)."""
    exponent = Fraction(th.closeness_exponent).limit_denominator(1000)
    return distance ** exponent.denominator <= n ** exponent.numerator


def _optimal_partitions(g: Graph, r: int) -> List[RPartition]:
    partitions = list(enumerate_optimal_partitions(g, r))
    logger.debug("%d partições ótimas (n=%d, r=%d)", len(partitions), g.n, r)
    return partitions


# -----------------------------
# Densidade uniforme
# -----------------------------
def _cross_pairs(p: RPartition, floor: int) -> List[Tuple[int, int]]:
    sizes = p.part_sizes()
    return [(i, j) for i in range(p.r) for j in range(i + 1, p.r) if min(sizes[i], sizes[j]) >= floor]


def _density_cost(partitions: Sequence[RPartition], floor: int) -> int:
    total = 0
    for p in partitions:
        sizes = p.part_sizes()
        for i, j in _cross_pairs(p, floor):
            small, large = sorted((sizes[i], sizes[j]))
            total += sum(comb(small, s) for s in range(floor, small + 1)) * large
    return total


def _sparsest_match(g: Graph, a: Sequence[int], other: VertexSet) -> Tuple[List[int], int]:
    """Os |A| vértices de `other` com menos vizinhos em A, e o e(A, B) resultante."""
    a_mask = vertex_set(a)
    ranked = sorted(members(other), key=lambda w: ((g.adj[w] & a_mask).bit_count(), w))
    chosen = sorted(ranked[: len(a)])
    return chosen, sum((g.adj[w] & a_mask).bit_count() for w in chosen)


def _density_witness(
    g: Graph, p: RPartition, i: int, j: int, a: Sequence[int], alpha: Fraction,
) -> Optional[DensityWitness]:
    parts = p.parts()
    if parts[i].bit_count() <= parts[j].bit_count():
        small, large = i, j
    else:
        small, large = j, i
    b, edges = _sparsest_match(g, a, parts[large])
    if edges > alpha * len(a) * len(b):
        return None
    a_side, b_side = (list(a), b) if small == i else (b, list(a))
    return DensityWitness(assignment=list(p.assignment), i=i, j=j, a=a_side, b=b_side, edges=edges)


def _density_exact(
    g: Graph, partitions: Sequence[RPartition], floor: int, alpha: Fraction,
) -> CheckOutcome:
    evaluations = 0
    for p in partitions:
        parts = p.parts()
        for i, j in _cross_pairs(p, floor):
            small = parts[i] if parts[i].bit_count() <= parts[j].bit_count() else parts[j]
            large_size = max(parts[i].bit_count(), parts[j].bit_count())
            for s in range(floor, small.bit_count() + 1):
                for a in combinations(members(small), s):
                    evaluations += large_size
                    witness = _density_witness(g, p, i, j, a, alpha)
                    if witness is not None:
                        return CheckOutcome(status=CheckStatus.refuted, witness=witness, evaluations=evaluations)
    return CheckOutcome(status=CheckStatus.proved, evaluations=evaluations)


def _density_sample(
    g: Graph, partitions: Sequence[RPartition], floor: int, alpha: Fraction, samples: int, seed: int,
) -> CheckOutcome:
    rng = np.random.Generator(np.random.Philox(seed))
    candidates = [(p, i, j) for p in partitions for i, j in _cross_pairs(p, floor)]
    if not candidates:
        return CheckOutcome(status=CheckStatus.proved)
    evaluations = 0
    for _ in range(samples):
        p, i, j = candidates[int(rng.integers(len(candidates)))]
        parts = p.parts()
        small = parts[i] if parts[i].bit_count() <= parts[j].bit_count() else parts[j]
        s = int(rng.integers(floor, small.bit_count() + 1))
        a = sorted(int(v) for v in rng.choice(members(small), size=s, replace=False))
        evaluations += max(parts[i].bit_count(), parts[j].bit_count())
        witness = _density_witness(g, p, i, j, a, alpha)
        if witness is not None:
            return CheckOutcome(status=CheckStatus.refuted, witness=witness, evaluations=evaluations)
    return CheckOutcome(status=CheckStatus.not_refuted, evaluations=evaluations)


def is_uniformly_dense(
    g: Graph,
    r: int,
    th: StructureThresholds,
    mode: DensityMode = "auto",
    budget: int = DEFAULT_CONFIG.UNIFORM_DENSITY_BUDGET,
    samples: int = DEFAULT_CONFIG.UNIFORM_DENSITY_SAMPLES,
    seed: int = 0,
) -> CheckOutcome:
    """
    e(A, B) > alpha·|A|·|B| para toda partição ótima, todo par de partes distintas
    e todo A ⊆ U_i, B ⊆ U_j com |A| = |B| ≥ piso. Modo "exact" recusa acima do
    orçamento; "auto" cai para amostragem, que só consegue refutar.
    """
    floor = size_floor(th, g.n)
    alpha = Fraction(th.alpha)
    if floor > g.n:
        return CheckOutcome(status=CheckStatus.proved)
    partitions = _optimal_partitions(g, r)
    if mode == "sample":
        return _density_sample(g, partitions, floor, alpha, samples, seed)
    cost = _density_cost(partitions, floor)
    if cost > budget:
        if mode == "exact":
            raise SizeLimitError(f"varredura de densidade uniforme exige {cost} avaliações (orçamento {budget})")
        logger.info("densidade uniforme: custo %d acima do orçamento %d, usando amostragem", cost, budget)
        return _density_sample(g, partitions, floor, alpha, samples, seed)
    return _density_exact(g, partitions, floor, alpha)


# -----------------------------
# Esparsidade interna e balanceamento
# -----------------------------
def is_internally_sparse(g: Graph, r: int, th: StructureThresholds) -> CheckOutcome:
    """Δ(G[U_i]) ≤ sparse_fraction·n em toda parte de toda partição ótima."""
    cap = sparse_cap(th, g.n)
    for p in _optimal_partitions(g, r):
        for part, mask in enumerate(p.parts()):
            for v in members(mask):
                degree = (g.adj[v] & mask).bit_count()
                if degree > cap:
                    witness = SparsityWitness(
                        assignment=list(p.assignment), part=part, vertex=v, internal_degree=degree,
                    )
                    return CheckOutcome(status=CheckStatus.refuted, witness=witness)
    return CheckOutcome(status=CheckStatus.proved)


def is_balanced(g: Graph, r: int, th: StructureThresholds) -> CheckOutcome:
    """n/r − b·n ≤ |U_i| ≤ n/r + b·n para toda parte (vazias incluídas) de toda partição ótima."""
    low, high = balance_window(th, g.n, r)
    for p in _optimal_partitions(g, r):
        for part, size in enumerate(p.part_sizes()):
            if not low <= size <= high:
                witness = BalanceWitness(assignment=list(p.assignment), part=part, size=size)
                return CheckOutcome(status=CheckStatus.refuted, witness=witness)
    return CheckOutcome(status=CheckStatus.proved)


# -----------------------------
# Conjuntos ruins e (m, j, X)
# -----------------------------
@dataclass(frozen=True)
class BadFamily:
    j: int
    sets: Tuple[VertexSet, ...]

    @property
    def ell(self) -> int:
        return len(self.sets)

    @property
    def union(self) -> VertexSet:
        out = 0
        for s in self.sets:
            out |= s
        return out


@dataclass(frozen=True)
class MData:
    m: int
    j: int
    x: VertexSet
    families: Tuple[BadFamily, ...]


def _is_bad(g: Graph, subset: VertexSet, target: VertexSet) -> bool:
    return not (g.common_neighbors(subset) & target)


def bad_sets(g: Graph, p: RPartition, j: int) -> List[VertexSet]:
    """r-subconjuntos de V ∖ U_j sem vizinho comum em U_j, em ordem lexicográfica."""
    if not 0 <= j < p.r:
        raise PreconditionError(f"parte {j} fora de [0, {p.r})")
    target = p.parts()[j]
    outside = members(g.vertices & ~target)
    out: List[VertexSet] = []
    for combo in combinations(outside, p.r):
        subset = vertex_set(combo)
        if _is_bad(g, subset, target):
            out.append(subset)
    return out


def greedy_bad_family(g: Graph, p: RPartition, j: int) -> BadFamily:
    used = 0
    chosen: List[VertexSet] = []
    for subset in bad_sets(g, p, j):
        if not subset & used:
            chosen.append(subset)
            used |= subset
    return BadFamily(j=j, sets=tuple(chosen))


def verify_maximal(g: Graph, p: RPartition, family: BadFamily) -> bool:
    """Não existe r-conjunto ruim para U_j disjunto da família."""
    target = p.parts()[family.j]
    free = members(g.vertices & ~target & ~family.union)
    return not any(_is_bad(g, vertex_set(combo), target) for combo in combinations(free, p.r))


def compute_m_data(g: Graph, p: RPartition) -> MData:
    if len(p.assignment) != g.n:
        raise PreconditionError(f"atribuição com {len(p.assignment)} entradas para n={g.n}")
    families = tuple(greedy_bad_family(g, p, j) for j in range(p.r))
    for family in families:
        if not verify_maximal(g, p, family):
            raise InvariantError(f"família gulosa de conjuntos ruins não é maximal (parte {family.j}) em {emit_graph6(g)}")
    m = max(f.ell for f in families)
    j = next(f.j for f in families if f.ell == m)
    return MData(m=m, j=j, x=families[j].union, families=families)


def require_free_non_partite(g: Graph, r: int) -> None:
    if not is_clique_free(g, r + 1):
        raise PreconditionError(f"G contém K_{r + 1}")
    if is_r_partite(g, r):
        raise PreconditionError(f"G é {r}-partido")


def m_zero_partitions(g: Graph, r: int) -> List[RPartition]:
    """Partições ótimas com m = 0 (lista vazia quando m ≥ 1 vale em todas)."""
    require_free_non_partite(g, r)
    return [p for p in enumerate_optimal_partitions(g, r) if compute_m_data(g, p).m == 0]


def check_m_positive(g: Graph, r: int) -> bool:
    return not m_zero_partitions(g, r)


# -----------------------------
# Φ
# -----------------------------
def _phi_outside(g: Graph, p: RPartition, md: MData) -> VertexSet:
    return g.vertices & ~md.x & ~p.parts()[md.j]


def phi_pairs(g: Graph, p: RPartition, md: MData) -> List[Tuple[int, int]]:
    """Pares (x, u) com x ∈ X e u ∈ V ∖ (X ∪ U_j), em ordem lexicográfica."""
    return [(x, u) for x in members(md.x) for u in members(_phi_outside(g, p, md))]


def phi_potential_edge_count(g: Graph, p: RPartition, md: MData) -> int:
    return md.x.bit_count() * _phi_outside(g, p, md).bit_count()


def phi_apply(g: Graph, p: RPartition, md: MData, edge_choice: Union[str, Sequence[int]]) -> Graph:
    """H: G sem as arestas incidentes a X, mais os pares escolhidos (bit k ↔ k-ésimo par)."""
    pairs = phi_pairs(g, p, md)
    if isinstance(edge_choice, str):
        if set(edge_choice) - {"0", "1"}:
            raise PreconditionError("a escolha de arestas deve conter apenas '0' e '1'")
        bits = [ch == "1" for ch in edge_choice]
    else:
        bits = [bool(b) for b in edge_choice]
    if len(bits) != len(pairs):
        raise PreconditionError(f"escolha com {len(bits)} bits; esperados {len(pairs)}")

    keep = g.vertices & ~md.x
    rows = [(row & keep) if not md.x >> v & 1 else 0 for v, row in enumerate(g.adj)]
    for (x, u), bit in zip(pairs, bits):
        if bit:
            rows[x] |= 1 << u
            rows[u] |= 1 << x
    return Graph(g.n, tuple(rows))


def phi_images(
    g: Graph, p: RPartition, md: MData,
    samples: int = DEFAULT_CONFIG.PHI_DEFAULT_SAMPLES, seed: int = 0,
) -> Iterator[Graph]:
    """Todas as imagens quando o número de pares potenciais é pequeno; senão `samples` sorteadas."""
    potential = phi_potential_edge_count(g, p, md)
    if potential <= DEFAULT_CONFIG.PHI_EXHAUSTIVE_MAX_EDGES:
        for bits in product((0, 1), repeat=potential):
            yield phi_apply(g, p, md, bits)
        return
    rng = np.random.Generator(np.random.Philox(seed))
    for _ in range(samples):
        yield phi_apply(g, p, md, rng.integers(0, 2, size=potential).tolist())


def phi_first_violation(
    g: Graph, r: int, p: RPartition,
    samples: int = DEFAULT_CONFIG.PHI_DEFAULT_SAMPLES, seed: int = 0,
) -> Optional[Graph]:
    """Primeira imagem de Φ (para a partição dada) que contém K_{r+1}, ou None."""
    md = compute_m_data(g, p)
    if md.m == 0:
        raise PreconditionError("m(G) = 0: Φ não está definida")
    for h in phi_images(g, p, md, samples, seed):
        if not is_clique_free(h, r + 1):
            return h
    return None


def phi_image_is_free(
    g: Graph, r: int, samples: int = DEFAULT_CONFIG.PHI_DEFAULT_SAMPLES, seed: int = 0,
) -> bool:
    """Toda imagem de Φ (partição canônica) é K_{r+1}-livre."""
    require_free_non_partite(g, r)
    return phi_first_violation(g, r, canonical_optimal_partition(g, r), samples, seed) is None


# -----------------------------
# Classificação
# -----------------------------
def mdata_out(g: Graph, p: RPartition, md: MData) -> MDataOut:
    return MDataOut(
        m=md.m, j=md.j, x=members(md.x),
        families=[[members(s) for s in f.sets] for f in md.families],
        potential_edges=phi_potential_edge_count(g, p, md),
    )


def inspect_structure(
    g: Graph,
    r: int,
    th: StructureThresholds,
    density_mode: DensityMode = "auto",
    budget: int = DEFAULT_CONFIG.UNIFORM_DENSITY_BUDGET,
    samples: int = DEFAULT_CONFIG.UNIFORM_DENSITY_SAMPLES,
    seed: int = 0,
) -> StructureReport:
    """Flags de Q junto com os resultados dos predicados (testemunhas incluídas)."""
    free = is_clique_free(g, r + 1)
    r_partite = is_r_partite(g, r)
    distance = 0 if r_partite else distance_to_r_partite(g, r).distance
    close = is_close(distance, g.n, th)
    density = is_uniformly_dense(g, r, th, density_mode, budget, samples, seed)
    sparsity = is_internally_sparse(g, r, th)
    balance = is_balanced(g, r, th)

    m: Optional[int] = None
    if free and not r_partite:
        m = compute_m_data(g, canonical_optimal_partition(g, r)).m

    dense = density.holds
    if not free or r_partite or not close or not sparsity.holds or not balance.holds or dense is False:
        in_q: Optional[bool] = False
    else:
        in_q = dense
    flags = QFlags(
        n=g.n, r=r, distance=distance, free=free, r_partite=r_partite, close=close,
        uniformly_dense=dense, internally_sparse=bool(sparsity.holds), balanced=bool(balance.holds),
        in_q=in_q, m=m,
    )
    form = canonical_form(g) if g.n <= DEFAULT_CONFIG.CANONICAL_MAX_N else None
    return StructureReport(
        thresholds=th.name, canonical_form=form, flags=flags, density=density, sparsity=sparsity, balance=balance,
    )


def classify_Q_membership(
    g: Graph,
    r: int,
    th: StructureThresholds,
    density_mode: DensityMode = "auto",
    budget: int = DEFAULT_CONFIG.UNIFORM_DENSITY_BUDGET,
    samples: int = DEFAULT_CONFIG.UNIFORM_DENSITY_SAMPLES,
    seed: int = 0,
) -> QFlags:
    return inspect_structure(g, r, th, density_mode, budget, samples, seed).flags


@dataclass
class PhiAudit:
    """Resultado de Φ sobre todas as partições ótimas de um grafo."""
    partitions: int = 0
    images: int = 0
    skipped: int = 0      # pares potenciais acima do limite exaustivo
    m_zero: int = 0
    failures: List[Tuple[str, str]] = field(default_factory=list)


def phi_audit(g: Graph, r: int) -> PhiAudit:
    """
    Para cada partição ótima com m ≥ 1 e poucos pares potenciais, enumera todas as
    imagens: cada uma deve ser K_{r+1}-livre e devem ser exatamente 2^{pares} distintas.
    """
    require_free_non_partite(g, r)
    audit = PhiAudit()
    for p in enumerate_optimal_partitions(g, r):
        audit.partitions += 1
        md = compute_m_data(g, p)
        if md.m == 0:
            audit.m_zero += 1
            continue
        potential = phi_potential_edge_count(g, p, md)
        if potential > DEFAULT_CONFIG.PHI_EXHAUSTIVE_MAX_EDGES:
            audit.skipped += 1
            continue
        distinct = set()
        offending: Optional[Graph] = None
        for h in phi_images(g, p, md):
            audit.images += 1
            distinct.add(h.adj)
            if offending is None and not is_clique_free(h, r + 1):
                offending = h
        if offending is not None:
            audit.failures.append(("phi_not_free", f"partition={list(p.assignment)} image={emit_graph6(offending)}"))
        if len(distinct) != 1 << potential:
            audit.failures.append(
                ("phi_image_count", f"partition={list(p.assignment)} images={len(distinct)} potential={potential}")
            )
    return audit
