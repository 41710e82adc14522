"""
Configuração de execução lida do ambiente (.env ou variáveis do shell).
"""
import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

from kfree.config import DEFAULT_CONFIG

# Carregar variáveis de ambiente do arquivo .env
load_dotenv()

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass
class RuntimeConfig:
    """Configuração de execução: paralelismo, checkpoints e log."""
    jobs: int = 1
    checkpoint_dir: str = ".kfree-checkpoints"
    log_level: str = "WARNING"
    density_budget: int = DEFAULT_CONFIG.UNIFORM_DENSITY_BUDGET


def get_runtime_config(jobs: Optional[int] = None) -> RuntimeConfig:
    """Retorna a configuração baseada em variáveis de ambiente; `jobs` explícito tem prioridade."""
    config = RuntimeConfig(
        jobs=int(os.getenv("KFREE_JOBS", "1")),
        checkpoint_dir=os.getenv("KFREE_CHECKPOINT_DIR", ".kfree-checkpoints"),
        log_level=os.getenv("KFREE_LOG_LEVEL", "WARNING").upper(),
        density_budget=int(os.getenv("KFREE_DENSITY_BUDGET", str(DEFAULT_CONFIG.UNIFORM_DENSITY_BUDGET))),
    )
    if jobs is not None:
        config.jobs = jobs
    validate_runtime_config(config)
    return config


def validate_runtime_config(config: RuntimeConfig) -> None:
    """Valida configuração de execução"""
    if not 1 <= config.jobs <= 256:
        raise ValueError(f"KFREE_JOBS deve estar entre 1 e 256, recebido: {config.jobs}")

    if config.log_level not in _LOG_LEVELS:
        raise ValueError(f"KFREE_LOG_LEVEL inválido: {config.log_level} (use {', '.join(_LOG_LEVELS)})")

    if config.density_budget < 1:
        raise ValueError(f"KFREE_DENSITY_BUDGET deve ser positivo, recebido: {config.density_budget}")

    if not config.checkpoint_dir.strip():
        raise ValueError("KFREE_CHECKPOINT_DIR não pode ser vazio")
