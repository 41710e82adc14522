"""
Configuração de log do CLI: RichHandler escrevendo em stderr.

stdout fica reservado para a saída legível por máquina (JSON/CSV).
"""
from __future__ import annotations

import logging

from rich.console import Console
from rich.logging import RichHandler


def setup_logging(level: str = "WARNING") -> None:
    """Configura o logger raiz; chamadas repetidas substituem o handler anterior."""
    handler = RichHandler(
        console=Console(stderr=True),
        show_path=False,
        rich_tracebacks=False,
        markup=False,
    )
    logging.basicConfig(level=level.upper(), format="%(message)s", datefmt="[%X]", handlers=[handler], force=True)
    # joblib e numpy não precisam aparecer em -v
    logging.getLogger("joblib").setLevel(logging.WARNING)
