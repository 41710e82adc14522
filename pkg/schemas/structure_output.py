"""
Schemas de saída dos verificadores estruturais.

Cada verificação devolve um CheckOutcome com o status e, em caso de falha, uma
testemunha concreta que pode ser reexecutada (partição, partes, conjuntos).
"""
from __future__ import annotations

from enum import Enum
from typing import List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field


class CheckStatus(str, Enum):
    proved = "proved"            # quantificação completa, nenhuma falha
    refuted = "refuted"          # testemunha encontrada
    not_refuted = "not_refuted"  # amostragem sem falha (não prova nada)


class DensityWitness(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: Literal["density"] = "density"
    assignment: List[int]
    i: int
    j: int
    a: List[int] = Field(description="A ⊆ U_i")
    b: List[int] = Field(description="B ⊆ U_j, |B| = |A|")
    edges: int = Field(ge=0, description="e(A, B)")


class SparsityWitness(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: Literal["sparsity"] = "sparsity"
    assignment: List[int]
    part: int
    vertex: int
    internal_degree: int


class BalanceWitness(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: Literal["balance"] = "balance"
    assignment: List[int]
    part: int
    size: int


Witness = Union[DensityWitness, SparsityWitness, BalanceWitness]


class CheckOutcome(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    status: CheckStatus
    witness: Optional[Witness] = Field(default=None, discriminator="kind")
    evaluations: int = Field(default=0, ge=0, description="Trabalho gasto (avaliações (A, vértice) na densidade)")

    @property
    def holds(self) -> Optional[bool]:
        """True se provado, False se refutado, None se só não refutado."""
        if self.status == CheckStatus.proved:
            return True
        if self.status == CheckStatus.refuted:
            return False
        return None


class QFlags(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    n: int
    r: int
    distance: int
    free: bool = Field(description="G é K_{r+1}-livre")
    r_partite: bool
    close: bool = Field(description="distância ≤ n^closeness_exponent")
    uniformly_dense: Optional[bool] = Field(description="None quando a amostragem não refutou")
    internally_sparse: bool
    balanced: bool
    in_q: Optional[bool] = Field(description="Pertence à classe típica; None se a densidade ficou indecidida")
    m: Optional[int] = Field(default=None, description="m(G) da partição canônica, quando G é livre e não r-partido")


class MDataOut(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    m: int
    j: int
    x: List[int]
    families: List[List[List[int]]] = Field(description="Família gulosa de conjuntos ruins para cada parte j")
    potential_edges: int


class StructureReport(BaseModel):
    """Flags de Q e os resultados (com testemunhas) dos três predicados."""
    model_config = ConfigDict(extra="forbid", frozen=True)

    thresholds: Optional[str] = Field(default=None, description="Preset de limiares usado")
    canonical_form: Optional[str] = Field(default=None, description="Menor registro graph6 entre as rotulações (ausente acima do limite da forma canônica)")
    flags: QFlags
    density: CheckOutcome
    sparsity: CheckOutcome
    balance: CheckOutcome


class PartitionMData(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    assignment: List[int]
    mdata: MDataOut


class PhiOut(BaseModel):
    model_config = ConfigDict(extra="forbid")

    graph6: str
    r: int
    partition: List[int]
    mdata: MDataOut
    exhaustive: bool = Field(description="Todas as 2^{pares} imagens foram geradas")
    images_checked: int = Field(ge=0)
    image: Optional[str] = Field(default=None, description="Imagem única pedida com --choice")
    violation: Optional[str] = Field(default=None, description="Primeira imagem com K_{r+1}")
