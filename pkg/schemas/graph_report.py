"""
Saídas por grafo dos subcomandos `distance`, `cliques` (com ou sem --parts), `lemma-m` e `farness`.

Toda saída carrega o graph6 do grafo de entrada, para que o resultado possa
ser reexecutado.
"""
from __future__ import annotations

from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field

from schemas.structure_output import PartitionMData

DISTANCE_CSV_FIELDS = ["graph6", "r", "distance", "witness", "method"]
CLIQUES_CSV_FIELDS = ["graph6", "m", "count", "witness"]
TRANSVERSAL_CSV_FIELDS = ["graph6", "parts", "witness"]
FARNESS_CSV_FIELDS = ["graph6", "r", "t", "failures", "holds"]


class DistanceOut(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    graph6: str
    r: int = Field(ge=1)
    distance: int = Field(ge=0, description="Arestas internas da partição testemunha")
    witness: List[int] = Field(description="Parte de cada vértice (0-based)")
    method: str = Field(description="'dp', 'branch_and_bound' ou 'local' (limite superior)")
    exact: bool = True

    def csv_row(self) -> List[str]:
        return [self.graph6, str(self.r), str(self.distance), " ".join(map(str, self.witness)), self.method]


class CliquesOut(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    graph6: str
    m: int = Field(ge=0)
    count: int = Field(ge=0)
    vertex: Optional[int] = Field(default=None, description="Contagem restrita a cliques que contêm este vértice")
    witness: Optional[List[int]] = Field(default=None, description="Um K_m, se existir")

    def csv_row(self) -> List[str]:
        witness = "" if self.witness is None else " ".join(map(str, self.witness))
        return [self.graph6, str(self.m), str(self.count), witness]


class TransversalOut(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    graph6: str
    parts: List[List[int]] = Field(description="Conjuntos disjuntos de vértices")
    witness: Optional[List[int]] = Field(default=None, description="Um vértice por parte, na ordem das partes, formando clique")

    def csv_row(self) -> List[str]:
        parts = ";".join(",".join(map(str, p)) for p in self.parts)
        witness = "" if self.witness is None else " ".join(map(str, self.witness))
        return [self.graph6, parts, witness]


class LemmaMOut(BaseModel):
    model_config = ConfigDict(extra="forbid")

    graph6: str
    r: int
    partitions: List[PartitionMData] = Field(description="(m, j, X) de cada partição ótima")
    m_positive: bool = Field(description="m ≥ 1 em toda partição ótima")


class FarnessOut(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    graph6: str
    r: int = Field(ge=2)
    t: int = Field(ge=1)
    failures: List[int] = Field(default_factory=list, description="Vértices em que a herança falha")

    @property
    def holds(self) -> bool:
        return not self.failures

    def csv_row(self) -> List[str]:
        return [self.graph6, str(self.r), str(self.t), " ".join(map(str, self.failures)), str(self.holds).lower()]
