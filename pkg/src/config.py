"""Configuração global de tolerâncias numéricas.

Valores padrão podem ser sobrescritos por variáveis de ambiente ``DICKE_*``
(ou por um arquivo ``.env`` na raiz do projeto).
"""

import os
from contextlib import contextmanager
from functools import lru_cache
from typing import Any, Dict, Iterator, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field


ENV_PREFIX = "DICKE_"


class Settings(BaseModel):
    """Tolerâncias e parâmetros compartilhados entre os módulos."""

    hermiticity_tol: float = Field(1e-9, gt=0)
    positivity_tol: float = Field(1e-10, gt=0)
    trace_tol: float = Field(1e-12, gt=0)
    dark_state_residual_tol: float = Field(1e-10, gt=0)
    liouvillian_residual_tol: float = Field(1e-10, gt=0)
    # razão mínima entre o segundo e o primeiro valor singular do Liouvilliano
    null_space_gap: float = Field(1e-8, gt=0)
    max_condition_log10: float = Field(300.0, gt=0)
    quadrature_rtol: float = Field(1e-10, gt=0)
    quadrature_cutoff: float = Field(1e-18, gt=0)
    quadrature_limit: int = Field(200, gt=0)
    linearization_validity_fraction: float = Field(0.1, gt=0)
    linearization_max_p_variance: float = Field(50.0, gt=0)
    oscillator_points: int = Field(256, ge=32)
    oscillator_refinement_tol: float = Field(0.01, gt=0)
    liouvillian_max_n: int = Field(60, ge=1)
    workers: int = Field(1, ge=1)
    log_level: str = "INFO"

    @classmethod
    def from_env(cls) -> "Settings":
        """Cria as configurações a partir das variáveis de ambiente.

        Returns:
            Settings com os valores padrão sobrescritos por ``DICKE_<CAMPO>``
        """
        load_dotenv()
        overrides: Dict[str, Any] = {}
        for name in cls.model_fields:
            value = os.getenv(ENV_PREFIX + name.upper())
            if value is not None:
                overrides[name] = value
        return cls(**overrides)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Retorna a instância única de configurações."""
    return Settings.from_env()


_override: Optional[Settings] = None


def current_settings() -> Settings:
    """Configurações ativas (sobrescritas por override_settings, se houver)."""
    return _override if _override is not None else get_settings()


@contextmanager
def override_settings(**values: Any) -> Iterator[Settings]:
    """
    Sobrescreve tolerâncias temporariamente (ex: --tolerance na CLI).

    Args:
        **values: Campos de Settings a substituir

    Yields:
        Settings em vigor dentro do bloco
    """
    global _override
    previous = _override
    _override = Settings.model_validate({**current_settings().model_dump(), **values})
    try:
        yield _override
    finally:
        _override = previous
