# kfree/config.py
"""
Parâmetros centrais do laboratório.

Observações:
- Limites de tamanho separam o modo exato da recusa (SizeLimitError).
- O orçamento de densidade uniforme conta avaliações (A, vértice); ver structure.py.
- EXP_REL_TOL controla a cota racional superior de e^{2r} no modo "stated".
"""

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class LabConfig:
    # -----------------------------
    # Representação
    # -----------------------------
    MAX_VERTICES: int = 64                 # uma vizinhança cabe em uma palavra de 64 bits

    # -----------------------------
    # Limites dos solvers exatos
    # -----------------------------
    EXACT_DISTANCE_MAX_N: int = 18         # DP sobre subconjuntos, O(3^n · r)
    BRANCH_AND_BOUND_MAX_N: int = 40       # branch-and-bound com incumbente da busca local
    EXACT_MAX_PARTS: int = 8               # r acima disso não é suportado no modo exato
    CANONICAL_MAX_N: int = 10              # busca da forma canônica (mínimo por colunas + poda de gêmeos)

    # -----------------------------
    # Censo
    # -----------------------------
    CENSUS_LABELED_MAX_N: int = 8          # 2^28 máscaras em n=8
    CENSUS_UNLABELED_MAX_N: int = 9        # n=9 exige o modo não rotulado
    EXHAUSTIVE_SUPERSAT_MAX_N: int = 7     # distância exata por grafo
    SHARD_BITS: int = 16                   # cada shard cobre 2^SHARD_BITS máscaras
    SHARPNESS_MAX_N: int = 12

    # -----------------------------
    # Estrutura
    # -----------------------------
    PHI_EXHAUSTIVE_MAX_EDGES: int = 16     # acima disso as imagens de Φ são amostradas
    PHI_DEFAULT_SAMPLES: int = 4096
    UNIFORM_DENSITY_BUDGET: int = 10**8
    UNIFORM_DENSITY_SAMPLES: int = 20000

    # -----------------------------
    # Aritmética
    # -----------------------------
    EXP_REL_TOL: Fraction = Fraction(1, 10**12)


DEFAULT_CONFIG = LabConfig()
