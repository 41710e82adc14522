"""
Schemas de saída do censo exaustivo e das verificações em lote.

- CensusRecord: contagens K_{r+1}-livre / r-partido para (n, r), com histograma
  opcional de distâncias e contadores de violação.
- VerificationReport: resultado de uma verificação exaustiva (cota de
  supersaturação, m ≥ 1, imagens de Φ, herança pelas vizinhanças).
- SharpnessRow: uma linha da tabela de nitidez da construção Turán + emparelhamento.

Observações:
- `runtime` reúne tudo o que depende da execução (tempo, workers, shards);
  `payload_json()` o exclui, e o restante é idêntico para qualquer divisão em shards.
- Toda violação carrega o graph6 do grafo, para ser reproduzida depois.
"""
from __future__ import annotations

from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

CENSUS_CSV_FIELDS = [
    "n", "r", "mode", "total_graphs", "free_count", "r_partite_count", "ratio",
    "log2_free", "turan_edges", "supersat_violations", "m_zero_violations",
]

SHARPNESS_CSV_FIELDS = [
    "n", "r", "k", "t", "distance", "cliques", "expected_cliques", "bound_num", "bound_den", "ratio", "within_envelope",
]

VERIFICATION_CSV_FIELDS = [
    "check", "n", "r", "graphs_scanned", "class_size", "items_checked", "images_checked", "skipped", "violations",
]


class Violation(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: str = Field(description="Verificação que falhou (ex.: 'supersat', 'm_zero', 'phi_not_free')")
    graph6: str
    detail: Optional[str] = Field(default=None, description="Partição, vértice ou imagem envolvida")


class RuntimeInfo(BaseModel):
    model_config = ConfigDict(extra="forbid")

    seconds: float = Field(ge=0.0)
    jobs: int = Field(ge=1)
    shard_bits: int = Field(ge=0)
    shards: int = Field(ge=0)
    resumed_from: int = Field(default=0, ge=0, description="Primeiro shard executado nesta sessão")


class CensusMode(str, Enum):
    labeled = "labeled"
    unlabeled = "unlabeled"


class CensusRecord(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: int = Field(ge=1)
    r: int = Field(ge=1)
    mode: CensusMode
    total_graphs: int = Field(ge=1, description="2^{C(n,2)} grafos rotulados")
    free_count: int = Field(ge=0, description="# grafos K_{r+1}-livres (rotulados)")
    r_partite_count: int = Field(ge=0, description="# grafos livres que são r-partidos")
    ratio: float = Field(description="r_partite_count / free_count")
    log2_free: float
    turan_edges: int = Field(ge=0, description="t_r(n)")
    distance_histogram: Optional[Dict[int, int]] = Field(default=None, description="distância → # grafos livres")
    supersat_violations: Optional[int] = Field(default=None, ge=0)
    m_zero_violations: Optional[int] = Field(default=None, ge=0)
    free_classes: Optional[int] = Field(default=None, ge=0, description="Classes de isomorfismo livres")
    r_partite_classes: Optional[int] = Field(default=None, ge=0)
    violations: List[Violation] = Field(default_factory=list)
    runtime: Optional[RuntimeInfo] = None

    @model_validator(mode="after")
    def validate_counts(self) -> "CensusRecord":
        if not self.r_partite_count <= self.free_count <= self.total_graphs:
            raise ValueError(
                f"contagens incoerentes: r_partite={self.r_partite_count}, free={self.free_count}, total={self.total_graphs}"
            )
        if self.distance_histogram is not None:
            mass = sum(self.distance_histogram.values())
            if mass != self.free_count:
                raise ValueError(f"massa do histograma ({mass}) difere de free_count ({self.free_count})")
            if self.distance_histogram.get(0, 0) != self.r_partite_count:
                raise ValueError("histograma[0] difere de r_partite_count")
        if (self.free_classes is None) != (self.r_partite_classes is None):
            raise ValueError("free_classes e r_partite_classes andam juntos")
        return self

    def payload_json(self) -> str:
        """JSON determinístico (sem metadados de execução)."""
        return self.model_dump_json(exclude={"runtime"}, indent=2)

    def csv_row(self) -> List[str]:
        def _cell(value: Optional[int]) -> str:
            return "" if value is None else str(value)

        return [
            str(self.n), str(self.r), self.mode.value, str(self.total_graphs), str(self.free_count),
            str(self.r_partite_count), f"{self.ratio:.12g}", f"{self.log2_free:.12g}", str(self.turan_edges),
            _cell(self.supersat_violations), _cell(self.m_zero_violations),
        ]


class CheckKind(str, Enum):
    supersat = "supersat"
    m_positive = "m_positive"
    phi = "phi"
    farness = "farness"


class VerificationReport(BaseModel):
    model_config = ConfigDict(extra="forbid")

    check: CheckKind
    n: int = Field(ge=1)
    r: int = Field(ge=1)
    graphs_scanned: int = Field(ge=0, description="Grafos rotulados percorridos")
    class_size: int = Field(ge=0, description="Grafos aos quais a verificação se aplica")
    items_checked: int = Field(default=0, ge=0, description="Partições ou vértices verificados")
    images_checked: int = Field(default=0, ge=0)
    skipped: int = Field(default=0, ge=0, description="Itens fora do modo exaustivo")
    verdict_counts: Dict[str, int] = Field(default_factory=dict)
    violations: List[Violation] = Field(default_factory=list)
    runtime: Optional[RuntimeInfo] = None

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        empty = " (classe vazia)" if self.class_size == 0 else ""
        return f"{self.check.value} n={self.n} r={self.r}: violations: {len(self.violations)}{empty}"

    def csv_row(self) -> List[str]:
        return [
            self.check.value, str(self.n), str(self.r), str(self.graphs_scanned), str(self.class_size),
            str(self.items_checked), str(self.images_checked), str(self.skipped), str(len(self.violations)),
        ]


class SharpnessRow(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    n: int
    r: int
    k: int
    t: int = Field(ge=1)
    distance: int
    cliques: int
    expected_cliques: int = Field(description="t·k^{r−1}")
    bound_num: int
    bound_den: int = Field(gt=0)
    ratio: float = Field(description="cliques / cota (exibição; o teste de envelope é exato)")
    within_envelope: bool = Field(description="1 ≤ cliques/cota ≤ c(r)")

    def csv_row(self) -> List[str]:
        return [
            str(self.n), str(self.r), str(self.k), str(self.t), str(self.distance), str(self.cliques),
            str(self.expected_cliques), str(self.bound_num), str(self.bound_den), f"{self.ratio:.12g}",
            str(self.within_envelope).lower(),
        ]
