"""Registros serializáveis de varreduras, ajustes e ótimos."""

from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field

from src.solvers import ObservableRecord
from .config import SweepConfig


class SweepPoint(BaseModel):
    """Um ponto (N, parâmetro) com resultado numérico e analíticos."""

    index: int
    n_particles: int
    parameter_name: str
    parameter: float
    grid_value: float
    numeric: Optional[ObservableRecord] = None
    analytics: Dict[str, ObservableRecord] = Field(default_factory=dict)
    flags: List[str] = Field(default_factory=list)
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None


class FitResult(BaseModel):
    """
    Ajuste de ξ²_min(N).

    family: 'power' (a·N^b) ou 'log-corrected' (formas com correção logarítmica)
    """

    family: Literal['power', 'log-corrected']
    model: Optional[str] = None
    coefficients: Dict[str, float]
    residual: float
    n_window: Tuple[int, int]
    n_points: int

    @property
    def exponent(self) -> Optional[float]:
        return self.coefficients.get('b') if self.family == 'power' else None


class OptimumRecord(BaseModel):
    """Mínimo numérico de ξ² e a previsão analítica correspondente."""

    model: str
    n_particles: int
    parameter_name: str
    param_min: float
    xi2_min_numeric: float
    param_min_analytic: Optional[float] = None
    xi2_min_analytic: Optional[float] = None
    evaluations: int = 0


class SweepResult(BaseModel):
    """Resultado completo de uma varredura (com a configuração que o gerou)."""

    schema_version: Literal[1] = 1
    config: SweepConfig
    points: List[SweepPoint]
    fits: List[FitResult] = Field(default_factory=list)

    @property
    def failures(self) -> List[SweepPoint]:
        return [point for point in self.points if not point.ok]
