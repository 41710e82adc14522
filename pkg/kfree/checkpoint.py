# kfree/checkpoint.py
"""
Checkpoints do censo: retomar uma execução interrompida sem mudar o resultado.

Layout do arquivo (texto, três linhas):
  1. "KFREE-CHECKPOINT 1"           versão do formato
  2. JSON canônico do estado        chaves ordenadas, sem espaços
  3. "sha256:<hex>"                 hash da linha 2

Observações:
- O estado guarda os parâmetros da execução, o próximo shard a processar e os
  agregados já somados dos shards [0, next_shard).
- A escrita é atômica (arquivo temporário + os.replace).
- Parâmetros diferentes dos da execução atual tornam o checkpoint incompatível.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from kfree.errors import CheckpointError

logger = logging.getLogger(__name__)

HEADER = "KFREE-CHECKPOINT 1"


class CheckpointState(BaseModel):
    model_config = ConfigDict(extra="forbid")

    params: Dict[str, Any] = Field(description="Parâmetros que identificam a execução")
    next_shard: int = Field(ge=0)
    total_shards: int = Field(ge=1)
    aggregates: Dict[str, Any] = Field(default_factory=dict)


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def _digest(payload: str) -> str:
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def save_checkpoint(path: str | Path, state: CheckpointState) -> None:
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    payload = canonical_json(state.model_dump(mode="json"))
    tmp = p.with_name(p.name + ".tmp")
    with tmp.open("w", encoding="ascii") as f:
        f.write(f"{HEADER}\n{payload}\nsha256:{_digest(payload)}\n")
    os.replace(tmp, p)
    logger.debug("checkpoint salvo em %s (shard %d/%d)", p, state.next_shard, state.total_shards)


def load_checkpoint(path: str | Path, params: Optional[Dict[str, Any]] = None) -> CheckpointState:
    """Lê e valida; com `params`, exige que coincidam com os gravados."""
    p = Path(path)
    try:
        lines = p.read_text(encoding="ascii").splitlines()
    except (OSError, UnicodeDecodeError) as e:
        raise CheckpointError(f"checkpoint ilegível em {p}: {e}") from e
    if len(lines) != 3 or lines[0] != HEADER:
        raise CheckpointError(f"cabeçalho ou número de linhas inválido em {p}")
    payload, seal = lines[1], lines[2]
    if seal != f"sha256:{_digest(payload)}":
        raise CheckpointError(f"hash não confere em {p}: checkpoint corrompido")
    try:
        state = CheckpointState.model_validate(json.loads(payload))
    except (json.JSONDecodeError, ValidationError) as e:
        raise CheckpointError(f"estado inválido em {p}: {e}") from e
    if state.next_shard > state.total_shards:
        raise CheckpointError(f"next_shard={state.next_shard} excede total_shards={state.total_shards}")
    if params is not None and canonical_json(state.params) != canonical_json(params):
        raise CheckpointError(f"checkpoint de outra execução: {state.params} ≠ {params}")
    return state
