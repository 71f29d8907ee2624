"""Observáveis de spin e parâmetro de squeezing de um estado."""

from typing import List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from src.dicke import spin_moments
from src.exceptions import DomainError
from .density import DensityMatrix

CONTRAST_KINDS = {'sdm': 'z', 'crf': 'yz'}


class ObservableRecord(BaseModel):
    """Momentos de spin, pureza e ξ² de uma fonte (numérica ou analítica)."""

    model_config = ConfigDict(frozen=True)

    source: str = 'numeric'
    sx: Optional[float] = None
    sy: Optional[float] = None
    sz: Optional[float] = None
    sx2: Optional[float] = None
    var_sx: Optional[float] = None
    purity: Optional[float] = None
    xi2: Optional[float] = None
    bloch_length: Optional[float] = None
    contrast_kind: str = 'z'
    flags: List[str] = Field(default_factory=list)


def squeezing_parameter(
    n_particles: int,
    var_sx: float,
    sz: float,
    sy: float = 0.0,
    contrast_kind: str = 'z'
) -> Optional[float]:
    """
    ξ² = N·Var(Ŝx)/contraste, com contraste ⟨Ŝz⟩² ou ⟨Ŝz⟩² + ⟨Ŝy⟩².

    Returns:
        ξ² ou None quando o contraste é menor que 1e−12·N
    """
    if contrast_kind not in ('z', 'yz'):
        raise DomainError(f"Tipo de contraste desconhecido: {contrast_kind}")
    contrast = sz ** 2 + (sy ** 2 if contrast_kind == 'yz' else 0.0)
    if contrast < 1e-12 * n_particles:
        return None
    return n_particles * var_sx / contrast


def observables(rho: DensityMatrix, contrast_kind: Optional[str] = None) -> ObservableRecord:
    """
    Calcula ⟨Ŝx⟩, ⟨Ŝy⟩, ⟨Ŝz⟩, ⟨Ŝx²⟩, Var(Ŝx), pureza e ξ².

    Args:
        rho: Estado normalizado
        contrast_kind: 'z' (SDM) ou 'yz' (CRF); por padrão deduzido do modelo do estado

    Returns:
        ObservableRecord com fonte 'numeric'
    """
    if contrast_kind is None:
        contrast_kind = CONTRAST_KINDS.get(rho.metadata.get('model'), 'z')
    moments = spin_moments(rho.basis, rho.matrix)
    var_sx = moments['Sx2'] - moments['Sx'] ** 2
    xi2 = squeezing_parameter(
        rho.basis.n_particles, var_sx, moments['Sz'], moments['Sy'], contrast_kind
    )
    flags = [] if xi2 is not None else ['contrast_undefined']
    return ObservableRecord(
        source='numeric',
        sx=moments['Sx'],
        sy=moments['Sy'],
        sz=moments['Sz'],
        sx2=moments['Sx2'],
        var_sx=var_sx,
        purity=rho.purity,
        xi2=xi2,
        bloch_length=float(np.sqrt(moments['Sx'] ** 2 + moments['Sy'] ** 2 + moments['Sz'] ** 2)),
        contrast_kind=contrast_kind,
        flags=flags,
    )
