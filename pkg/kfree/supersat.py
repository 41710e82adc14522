# kfree/supersat.py
"""
Cota inferior de supersaturação para K_{r+1} em grafos t-distantes de r-partidos.

Responsabilidades:
- c(r) = 2(r+1)^{r-1} r^{r-1} / r! como racional exato.
- Cota exata (n^{r-1}/c(r))·(e + t − (1 − 1/r)n²/2) e a forma enunciada, com
  e^{2r}·r! no lugar de c(r).
- Verificação de um grafo (t = distância por padrão) e varredura t = 1..distância.
- Passo de herança de distância pelas vizinhanças: G[N(v)] é (t − e(A_v))-distante
  de (r−1)-partido, com A_v = V ∖ N(v).

Observações:
- Nenhum veredito depende de ponto flutuante: tudo é Fraction.
- Na forma enunciada e^{2r} é trocado por uma cota racional certificada (série de
  Taylor truncada mais cota geométrica da cauda). Usa-se a cota superior quando o
  fator entre parênteses é ≥ 0 e a inferior quando é negativo, de modo que o valor
  nunca é superestimado.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import factorial
from typing import List, Optional, Tuple

from kfree.cliques import count_cliques
from kfree.config import DEFAULT_CONFIG
from kfree.errors import PreconditionError
from kfree.graph import Graph
from kfree.partition import distance_to_r_partite, is_t_far
from schemas.supersat_report import SupersatReport, Verdict

logger = logging.getLogger(__name__)


class BoundMode(str, Enum):
    exact = "exact"    # constante c(r) da demonstração
    stated = "stated"  # e^{2r}·r! do enunciado


@dataclass(frozen=True)
class BoundValue:
    value: Fraction
    mode: BoundMode


# -----------------------------
# Constantes
# -----------------------------
def c_const(r: int) -> Fraction:
    if r < 1:
        raise PreconditionError(f"r deve ser ≥ 1, recebido: {r}")
    return Fraction(2 * (r + 1) ** (r - 1) * r ** (r - 1), factorial(r))


def exp_bounds(x: int, rel_tol: Fraction = DEFAULT_CONFIG.EXP_REL_TOL) -> Tuple[Fraction, Fraction]:
    """(inferior, superior) racionais para e^x, x inteiro ≥ 0, com folga relativa ≤ rel_tol."""
    if x < 0:
        raise PreconditionError(f"x deve ser ≥ 0, recebido: {x}")
    partial = Fraction(0)
    term = Fraction(1)
    k = 0
    while True:
        partial += term
        k += 1
        term = term * x / k
        # cauda Σ_{i≥k} x^i/i! ≤ term / (1 − x/(k+1)) quando k + 1 > x
        if k + 1 > x:
            tail = term / (1 - Fraction(x, k + 1))
            if tail <= rel_tol * partial:
                return partial, partial + tail


# -----------------------------
# Cota
# -----------------------------
def _excess(n: int, r: int, e: int, t: int) -> Fraction:
    """e + t − (1 − 1/r)·n²/2."""
    return e + t - Fraction((r - 1) * n * n, 2 * r)


def supersat_lower_bound(n: int, r: int, e: int, t: int, mode: BoundMode = BoundMode.exact) -> BoundValue:
    if n < 1 or r < 1:
        raise PreconditionError(f"n e r devem ser ≥ 1 (n={n}, r={r})")
    if t < 1:
        raise PreconditionError(f"t deve ser ≥ 1, recebido: {t}")
    if e < 0:
        raise PreconditionError(f"e deve ser ≥ 0, recebido: {e}")
    excess = _excess(n, r, e, t)
    scale = Fraction(n ** (r - 1))
    if mode == BoundMode.exact:
        return BoundValue(scale / c_const(r) * excess, mode)
    low, high = exp_bounds(2 * r)
    denominator = (high if excess >= 0 else low) * factorial(r)
    return BoundValue(scale / denominator * excess, mode)


def supersat_report(n: int, r: int, e: int, distance: int, t: int, cliques: int) -> SupersatReport:
    """Monta o relatório a partir dos números já calculados (usado também pelo censo)."""
    if t == 0:
        return SupersatReport(
            n=n, r=r, e=e, distance=distance, t=0, cliques=cliques,
            margin_sign=(cliques > 0) - (cliques < 0), verdict=Verdict.inapplicable,
        )
    bound = supersat_lower_bound(n, r, e, t, BoundMode.exact).value
    stated = supersat_lower_bound(n, r, e, t, BoundMode.stated).value
    margin = cliques - bound
    if bound < 0:
        verdict = Verdict.trivial
    elif bound == 0:
        verdict = Verdict.zero_bound
    elif margin >= 0:
        verdict = Verdict.holds
    else:
        verdict = Verdict.violated
    return SupersatReport(
        n=n, r=r, e=e, distance=distance, t=t, cliques=cliques,
        bound_num=bound.numerator, bound_den=bound.denominator,
        stated_num=stated.numerator, stated_den=stated.denominator,
        margin_sign=(margin > 0) - (margin < 0), verdict=verdict,
    )


# -----------------------------
# Verificação por grafo
# -----------------------------
def verify_supersaturation(g: Graph, r: int, t: Optional[int] = None) -> SupersatReport:
    """Compara K_{r+1}(G) com a cota exata; t padrão = distância (instância mais forte)."""
    distance = distance_to_r_partite(g, r).distance
    if t is None:
        t = distance
    elif not 1 <= t <= distance:
        raise PreconditionError(f"G não é {t}-distante de ser {r}-partido (distância {distance})")
    cliques = count_cliques(g, r + 1).count
    report = supersat_report(g.n, r, g.num_edges, distance, t, cliques)
    if report.verdict == Verdict.violated:
        logger.warning("cota violada: n=%d r=%d e=%d t=%d cliques=%d", g.n, r, g.num_edges, t, cliques)
    return report


def verify_supersaturation_sweep(g: Graph, r: int) -> List[SupersatReport]:
    """Um relatório para cada t em 1..distância (ou só o inaplicável quando a distância é 0)."""
    distance = distance_to_r_partite(g, r).distance
    cliques = count_cliques(g, r + 1).count
    if distance == 0:
        return [supersat_report(g.n, r, g.num_edges, 0, 0, cliques)]
    return [supersat_report(g.n, r, g.num_edges, distance, t, cliques) for t in range(1, distance + 1)]


# -----------------------------
# Herança de distância pelas vizinhanças
# -----------------------------
def neighborhood_farness_failures(g: Graph, r: int, t: int) -> List[int]:
    """Vértices v em que G[N(v)] NÃO é (t − e(A_v))-distante de (r−1)-partido."""
    if r < 2:
        raise PreconditionError(f"r deve ser ≥ 2, recebido: {r}")
    if not is_t_far(g, r, t):
        raise PreconditionError(f"G não é {t}-distante de ser {r}-partido")
    failures: List[int] = []
    for v in range(g.n):
        neighborhood = g.adj[v]
        outside = g.vertices & ~neighborhood
        need = t - g.edges_within(outside)
        if need <= 0:
            continue
        if not neighborhood:
            failures.append(v)
            continue
        got = distance_to_r_partite(g.induced_subgraph(neighborhood), r - 1).distance
        if got < need:
            failures.append(v)
    return failures


def neighborhood_farness_check(g: Graph, r: int, t: int) -> bool:
    return not neighborhood_farness_failures(g, r, t)
