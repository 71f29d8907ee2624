"""Resultado padronizado das fórmulas analíticas."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Tuple

from src.solvers.observables import ObservableRecord, squeezing_parameter


class AnalyticVariant(str, Enum):
    """Uma variante por fórmula fechada."""

    SDM_LINEARIZED = 'sdm_linearized'
    SDM_EVEN = 'sdm_even'
    SDM_ODD = 'sdm_odd'
    SDM_OPTIMUM = 'sdm_optimum'
    CRF_MEAN_FIELD = 'crf_mean_field'
    CRF_ABOVE_THRESHOLD = 'crf_above_threshold'
    CRF_BELOW_THRESHOLD = 'crf_below_threshold'
    CRF_CRITICAL = 'crf_critical'
    CRF_OPTIMUM = 'crf_optimum'

    @property
    def regime(self) -> str:
        return REGIMES[self]


REGIMES: Dict[AnalyticVariant, str] = {
    AnalyticVariant.SDM_LINEARIZED: "polarização forte: ⟨p̂²⟩ ≪ N",
    AnalyticVariant.SDM_EVEN: "N par, N ≫ 1",
    AnalyticVariant.SDM_ODD: "N ímpar, estado dominante com ζN ≳ 1",
    AnalyticVariant.SDM_OPTIMUM: "N ímpar, N ≥ 11",
    AnalyticVariant.CRF_MEAN_FIELD: "0 ≤ Υ ≤ 1, N → ∞",
    AnalyticVariant.CRF_ABOVE_THRESHOLD: "Υ > 1, distribuição clássica",
    AnalyticVariant.CRF_BELOW_THRESHOLD: "Υ < 1 fora da região crítica",
    AnalyticVariant.CRF_CRITICAL: "região crítica η ≤ 0; ponto de sela para η ≲ −1",
    AnalyticVariant.CRF_OPTIMUM: "N ≥ 10",
}


@dataclass(frozen=True)
class AnalyticResult:
    """
    Valores de uma fórmula com metadados de validade.

    Attributes:
        variant: Fórmula avaliada
        values: Quantidades nomeadas (Sz, Sx2, xi2, ...)
        valid: Se os parâmetros estão no regime da fórmula
        validity_note: Descrição do regime
        warnings: Avisos emitidos na avaliação
    """

    variant: AnalyticVariant
    values: Dict[str, float]
    valid: bool = True
    validity_note: str = ''
    warnings: Tuple[str, ...] = field(default_factory=tuple)

    def __getitem__(self, key: str) -> float:
        return self.values[key]

    def get(self, key: str, default: Optional[float] = None) -> Optional[float]:
        return self.values.get(key, default)

    def to_record(self, n_particles: int, contrast_kind: str = 'z') -> ObservableRecord:
        """
        Converte para ObservableRecord (fonte = nome da variante).

        Args:
            n_particles: N
            contrast_kind: 'z' ou 'yz'

        Returns:
            ObservableRecord com os campos disponíveis
        """
        values = self.values
        sx = values.get('Sx', 0.0)
        sx2 = values.get('Sx2')
        var_sx = values.get('var_sx', None if sx2 is None else sx2 - sx ** 2)
        xi2 = values.get('xi2')
        if xi2 is None and var_sx is not None and values.get('Sz') is not None:
            xi2 = squeezing_parameter(
                n_particles, var_sx, values['Sz'], values.get('Sy', 0.0), contrast_kind
            )
        flags = [] if self.valid else ['outside_validity']
        flags.extend(self.warnings)
        return ObservableRecord(
            source=self.variant.value,
            sx=values.get('Sx'),
            sy=values.get('Sy'),
            sz=values.get('Sz'),
            sx2=sx2,
            var_sx=var_sx,
            xi2=xi2,
            contrast_kind=contrast_kind,
            flags=flags,
        )
