"""
Schema dos limiares dos predicados estruturais (densidade uniforme, esparsidade
interna, balanceamento e proximidade da r-partição).

Todos os campos são frações de n (ou expoentes de n) e viram limiares absolutos
em kfree/structure.py, sempre comparados com Fraction.
"""
from __future__ import annotations

from typing import Dict, Optional

from pydantic import BaseModel, ConfigDict, Field


class StructureThresholds(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    name: Optional[str] = Field(default=None, description="Nome do preset de origem (ex.: 'paper', 'relaxed')")
    alpha: float = Field(gt=0.0, le=1.0, description="Densidade mínima: e(A,B) > alpha·|A|·|B|")
    size_fraction: float = Field(ge=0.0, le=1.0, description="Tamanho mínimo de A e B como fração de n")
    sparse_fraction: float = Field(ge=0.0, le=1.0, description="Grau interno máximo como fração de n")
    balance_fraction: float = Field(ge=0.0, le=1.0, description="Folga de tamanho das partes em torno de n/r, como fração de n")
    closeness_exponent: float = Field(gt=0.0, le=2.0, description="G é próximo se a distância ≤ n^expoente")


class ThresholdsFile(BaseModel):
    """Conteúdo de files/thresholds.json: presets nomeados."""
    model_config = ConfigDict(extra="forbid")

    presets: Dict[str, StructureThresholds] = Field(default_factory=dict)
