# schemas/run_config.py
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

Subcommand = Literal[
    "census", "supersat-verify", "distance", "cliques", "props", "phi", "sharpness", "lemma-m", "farness", "gen",
]


class RunConfig(BaseModel):
    """
    Parâmetros validados de uma execução do CLI.

    Campos:
      - subcommand: o subcomando escolhido (exatamente um).
      - n, r, t: tamanhos; `n` aceita vários valores no censo.
      - thresholds / thresholds_file: preset de limiares (nome) e arquivo opcional de presets.
      - graph6 / input: fontes de grafo, mutuamente exclusivas ('-' lê stdin).
      - format, out: formato e destino da saída.
      - jobs, shard_bits, checkpoint: paralelismo e retomada do censo.
      - seed: obrigatória em qualquer modo aleatório.

    Observações:
      - `randomized` é marcado pelo CLI quando o modo pedido sorteia algo.
    """
    model_config = ConfigDict(extra="forbid", str_strip_whitespace=True)

    subcommand: Subcommand
    n: List[int] = Field(default_factory=list, description="Número(s) de vértices")
    r: Optional[int] = Field(default=None, ge=1)
    t: Optional[int] = Field(default=None, ge=1)
    thresholds: str = Field(default="paper", min_length=1)
    thresholds_file: Optional[str] = None
    graph6: Optional[str] = Field(default=None, min_length=1)
    input: Optional[str] = Field(default=None, min_length=1)
    format: Literal["json", "csv"] = "json"
    out: Optional[str] = None
    jobs: int = Field(default=1, ge=1, le=256)
    shard_bits: int = Field(default=16, ge=0, le=28)
    checkpoint: Optional[str] = None
    seed: Optional[int] = Field(default=None, ge=0)
    randomized: bool = False

    @model_validator(mode="after")
    def validate_combination(self) -> "RunConfig":
        if self.graph6 is not None and self.input is not None:
            raise ValueError("--graph6 e --input são mutuamente exclusivos")
        if self.randomized and self.seed is None:
            raise ValueError(f"'{self.subcommand}' neste modo é aleatório: informe --seed")
        if any(v < 1 for v in self.n):
            raise ValueError(f"n deve ser ≥ 1, recebido: {self.n}")
        if self.checkpoint is not None and len(self.n) > 1:
            raise ValueError("--checkpoint aceita um único valor de -n")
        return self

    @property
    def has_graph_input(self) -> bool:
        return self.graph6 is not None or self.input is not None
