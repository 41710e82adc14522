# kfree/errors.py
"""
Hierarquia de erros do laboratório.

Observações:
- O CLI converte cada classe em um código de saída (ver cli/main.py):
  GraphFormatError/PreconditionError -> 2, SizeLimitError -> 3,
  InvariantError -> 1.
- GraphFormatError e PreconditionError também são ValueError, para que
  chamadores genéricos continuem funcionando.
"""

from __future__ import annotations

from typing import Optional


class LabError(Exception):
    """Raiz de todos os erros do pacote kfree."""


class GraphFormatError(LabError, ValueError):
    """Registro graph6 malformado; `offset` aponta o byte problemático."""

    def __init__(self, message: str, offset: Optional[int] = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte {offset})"
        super().__init__(message)


class PreconditionError(LabError, ValueError):
    """Entrada fora do domínio da operação (ex.: grafo não t-distante)."""


class SizeLimitError(LabError):
    """Recusa por recurso: a instância excede o limite do modo exato."""


class CheckpointError(LabError):
    """Checkpoint ilegível, corrompido ou incompatível com a execução."""


class InvariantError(LabError):
    """Uma construção interna não satisfez a propriedade que deveria garantir."""
