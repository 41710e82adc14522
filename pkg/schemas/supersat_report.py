"""
Schema do relatório de supersaturação.

Um relatório por (grafo, r, t): contagem de K_{r+1}, cota exata (constante c(r))
e cota na forma enunciada (e^{2r}·r!), margem e veredito.

Observações:
- Racionais são serializados como pares numerador/denominador.
- A linha CSV tem esquema fixo: n,r,e,t,cliques,bound_num,bound_den,margin_sign,verdict.
"""
from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

CSV_FIELDS = ["n", "r", "e", "t", "cliques", "bound_num", "bound_den", "margin_sign", "verdict"]


class Verdict(str, Enum):
    holds = "holds"
    trivial = "trivial"            # cota < 0
    zero_bound = "zero_bound"      # cota = 0, separado para auditoria
    violated = "violated"
    inapplicable = "inapplicable"  # t = 0: o grafo já é r-partido


class SupersatReport(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    n: int = Field(ge=1, description="Número de vértices")
    r: int = Field(ge=1, description="Número de partes")
    e: int = Field(ge=0, description="Número de arestas")
    distance: int = Field(ge=0, description="Distância exata à r-partição")
    t: int = Field(ge=0, description="Farness usada na cota (1 ≤ t ≤ distância, ou 0 se inaplicável)")
    cliques: int = Field(ge=0, description="K_{r+1}(G)")
    bound_num: Optional[int] = Field(default=None, description="Numerador da cota exata")
    bound_den: Optional[int] = Field(default=None, gt=0, description="Denominador da cota exata")
    stated_num: Optional[int] = Field(default=None, description="Numerador da cota na forma enunciada")
    stated_den: Optional[int] = Field(default=None, gt=0, description="Denominador da cota na forma enunciada")
    margin_sign: int = Field(ge=-1, le=1, description="Sinal de cliques − cota exata")
    verdict: Verdict

    @property
    def bound(self) -> Optional[Fraction]:
        if self.bound_num is None or self.bound_den is None:
            return None
        return Fraction(self.bound_num, self.bound_den)

    @property
    def stated_bound(self) -> Optional[Fraction]:
        if self.stated_num is None or self.stated_den is None:
            return None
        return Fraction(self.stated_num, self.stated_den)

    @property
    def margin(self) -> Optional[Fraction]:
        bound = self.bound
        return None if bound is None else self.cliques - bound

    @model_validator(mode="after")
    def validate_verdict(self) -> "SupersatReport":
        """Veredito coerente com t, com o sinal da cota e com a margem."""
        if self.t > self.distance:
            raise ValueError(f"t={self.t} excede a distância {self.distance}")
        if self.verdict == Verdict.inapplicable:
            if self.t != 0:
                raise ValueError("veredito 'inapplicable' exige t = 0")
            return self
        if self.t == 0:
            raise ValueError("t = 0 exige veredito 'inapplicable'")
        bound = self.bound
        if bound is None:
            raise ValueError("cota exata ausente com t ≥ 1")
        margin = self.cliques - bound
        sign = (margin > 0) - (margin < 0)
        if sign != self.margin_sign:
            raise ValueError(f"margin_sign={self.margin_sign} não confere com a margem {margin}")
        expected = (
            Verdict.trivial if bound < 0
            else Verdict.zero_bound if bound == 0
            else Verdict.holds if margin >= 0
            else Verdict.violated
        )
        if self.verdict != expected:
            raise ValueError(f"veredito {self.verdict.value} incoerente; esperado {expected.value}")
        return self

    def csv_row(self) -> List[str]:
        def _cell(value: Optional[int]) -> str:
            return "" if value is None else str(value)

        return [
            str(self.n), str(self.r), str(self.e), str(self.t), str(self.cliques),
            _cell(self.bound_num), _cell(self.bound_den), str(self.margin_sign), self.verdict.value,
        ]
