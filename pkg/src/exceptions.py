"""Hierarquia de erros do pacote."""

from typing import Optional


class DickeError(Exception):
    """Erro base de todos os módulos."""


class DomainError(DickeError, ValueError):
    """Argumento fora do domínio de validade."""


class DimensionMismatchError(DomainError):
    """Dimensões de operador e estado incompatíveis."""


class NonHermitianError(DomainError):
    """Matriz que deveria ser hermitiana não é."""

    def __init__(self, message: str, deviation: float):
        super().__init__(message)
        self.deviation = deviation


class ConvergenceError(DickeError, RuntimeError):
    """Procedimento numérico não convergiu.

    Carrega a melhor estimativa disponível e o limite de erro associado.
    """

    def __init__(
        self,
        message: str,
        best_estimate: Optional[float] = None,
        error_bound: Optional[float] = None
    ):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.error_bound = error_bound


class IllConditionedError(DickeError, RuntimeError):
    """Resíduo ou número de condição fora do aceitável."""

    def __init__(self, message: str, condition_estimate: Optional[float] = None):
        super().__init__(message)
        self.condition_estimate = condition_estimate


class DegenerateNullSpaceError(DickeError, RuntimeError):
    """Núcleo do Liouvilliano com dimensão maior que um."""

    def __init__(self, message: str, singular_values=None):
        super().__init__(message)
        self.singular_values = singular_values


class NoMinimumError(DickeError, RuntimeError):
    """Intervalo de busca sem mínimo interior."""


class OutputError(DickeError, OSError):
    """Falha de leitura ou escrita de artefatos; a mensagem inclui o caminho."""

    def __init__(self, message: str, path=None):
        super().__init__(message)
        self.path = path
