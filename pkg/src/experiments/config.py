"""
Configuração de experimentos
Arquivos YAML validados por pydantic (schema_version 1); flags da CLI
sobrescrevem os valores do arquivo.
"""

from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Union

import numpy as np
import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from src.analytics import upsilon_from_eta
from src.config import Settings
from src.exceptions import DomainError
from src.solvers import Model
from src.utils.validators import validate_monotone_grid

GRID_PARAMETERS = {
    Model.SDM: ('zeta',),
    Model.CRF: ('upsilon', 'eta', 'delta_upsilon'),
}

ANALYTICS_BY_MODEL = {
    Model.SDM: ('sdm_linearized', 'sdm_even', 'sdm_odd'),
    Model.CRF: ('crf_mean_field', 'crf_below_threshold', 'crf_above_threshold', 'crf_critical'),
}

OBSERVABLE_FIELDS = ('sx', 'sy', 'sz', 'sx2', 'var_sx', 'purity', 'xi2', 'bloch_length')


class GridSpec(BaseModel):
    """
    Grade do parâmetro de controle.

    parameter: zeta (SDM); upsilon, eta ou delta_upsilon = 1 − Υ (CRF).
    """

    model_config = ConfigDict(frozen=True)

    parameter: Literal['zeta', 'upsilon', 'eta', 'delta_upsilon']
    spacing: Literal['linear', 'log'] = 'log'
    start: float
    stop: float
    num: int = Field(ge=1)

    @model_validator(mode='after')
    def _check_monotone(self) -> 'GridSpec':
        if self.num > 1 and self.start == self.stop:
            raise ValueError("grade com início igual ao fim não é estritamente monótona")
        if self.spacing == 'log' and (self.start * self.stop <= 0):
            raise ValueError("grade logarítmica requer extremos não nulos de mesmo sinal")
        return self

    @classmethod
    def parse(cls, text: str) -> 'GridSpec':
        """
        Lê a forma compacta da CLI, ex: 'zeta=log:1e-4:1:41'.

        Args:
            text: parametro=espaçamento:início:fim:pontos

        Returns:
            GridSpec
        """
        try:
            parameter, rest = text.split('=', 1)
            spacing, start, stop, num = rest.split(':')
            return cls(parameter=parameter.strip(), spacing=spacing.strip(),
                       start=float(start), stop=float(stop), num=int(num))
        except (ValueError, ValidationError) as exc:
            raise DomainError(f"Grade inválida '{text}': {exc}") from exc

    def coordinates(self) -> np.ndarray:
        """Pontos da grade na coordenada declarada."""
        if self.spacing == 'log':
            points = np.geomspace(self.start, self.stop, self.num)
        else:
            points = np.linspace(self.start, self.stop, self.num)
        return validate_monotone_grid(points, f"grade de {self.parameter}")

    def control_values(self, n_particles: int) -> np.ndarray:
        """Valores de ζ ou Υ para um dado N."""
        coordinates = self.coordinates()
        if self.parameter == 'eta':
            return np.array([upsilon_from_eta(n_particles, eta) for eta in coordinates])
        if self.parameter == 'delta_upsilon':
            return 1.0 - coordinates
        return coordinates


class SweepConfig(BaseModel):
    """Configuração completa de uma varredura."""

    schema_version: Literal[1] = 1
    model: Model
    n_values: List[int] = Field(min_length=1)
    grid: GridSpec
    observables: List[str] = Field(default_factory=lambda: list(OBSERVABLE_FIELDS))
    analytics: List[str] = Field(default_factory=list)
    include_parity_partner: Optional[bool] = None
    output_dir: str = 'results'
    format: Literal['csv', 'json'] = 'csv'
    tolerances: Dict[str, float] = Field(default_factory=dict)
    workers: Optional[int] = Field(default=None, ge=1)

    @field_validator('n_values')
    @classmethod
    def _check_n(cls, values: List[int]) -> List[int]:
        if any(n < 1 for n in values):
            raise ValueError("todos os N devem ser positivos")
        return values

    @field_validator('observables')
    @classmethod
    def _check_observables(cls, values: List[str]) -> List[str]:
        unknown = set(values) - set(OBSERVABLE_FIELDS)
        if unknown:
            raise ValueError(f"observáveis desconhecidos: {sorted(unknown)}")
        return values

    @field_validator('tolerances')
    @classmethod
    def _check_tolerances(cls, values: Dict[str, float]) -> Dict[str, float]:
        unknown = set(values) - set(Settings.model_fields)
        if unknown:
            raise ValueError(f"tolerâncias desconhecidas: {sorted(unknown)}")
        return values

    @model_validator(mode='after')
    def _check_model(self) -> 'SweepConfig':
        if self.grid.parameter not in GRID_PARAMETERS[self.model]:
            raise ValueError(f"parâmetro {self.grid.parameter} não se aplica ao modelo {self.model.value}")
        unknown = set(self.analytics) - set(ANALYTICS_BY_MODEL[self.model])
        if unknown:
            raise ValueError(f"variantes analíticas inválidas para {self.model.value}: {sorted(unknown)}")
        if self.model is Model.SDM:
            values = self.grid.coordinates()
            if np.any(values == 0) or np.any(np.abs(values) > 1):
                raise ValueError("ζ deve estar em [−1, 1] sem o zero")
        return self

    @property
    def pairs_parity(self) -> bool:
        """Varreduras SDM incluem N+1 por padrão (dicotomia par/ímpar)."""
        if self.include_parity_partner is None:
            return self.model is Model.SDM
        return self.include_parity_partner

    def particle_numbers(self) -> List[int]:
        """Lista ordenada de N, com os parceiros N+1 quando pedido."""
        numbers = set(self.n_values)
        if self.pairs_parity:
            numbers.update(n + 1 for n in self.n_values)
        return sorted(numbers)


def load_config(path: Union[str, Path]) -> SweepConfig:
    """
    Carrega e valida um arquivo YAML.

    Args:
        path: Caminho do arquivo

    Returns:
        SweepConfig validada
    """
    path = Path(path)
    try:
        data = yaml.safe_load(path.read_text())
    except OSError as exc:
        raise DomainError(f"Não foi possível ler {path}: {exc}") from exc
    return parse_config(data or {}, source=str(path))


def parse_config(data: Dict[str, Any], source: str = '<dict>') -> SweepConfig:
    """Valida um dicionário como SweepConfig, com erro de domínio legível."""
    try:
        return SweepConfig.model_validate(data)
    except ValidationError as exc:
        raise DomainError(f"Configuração inválida em {source}: {exc}") from exc


def apply_overrides(config: SweepConfig, **overrides: Any) -> SweepConfig:
    """Aplica flags da CLI (valores None são ignorados) e revalida."""
    updates = {key: value for key, value in overrides.items() if value is not None}
    if not updates:
        return config
    data = config.model_dump()
    tolerances = updates.pop('tolerances', None)
    if tolerances:
        data['tolerances'] = {**data['tolerances'], **tolerances}
    if isinstance(updates.get('grid'), GridSpec):
        updates['grid'] = updates['grid'].model_dump()
    data.update(updates)
    return parse_config(data, source='flags da CLI')
