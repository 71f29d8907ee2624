"""
Emissão de resultados em CSV e JSON
Colunas em ordem fixa e floats com formato fixo: a mesma configuração
produz arquivos byte a byte idênticos.
"""

import json
import logging
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import pandas as pd
from pydantic import BaseModel, TypeAdapter, ValidationError

from src.dicke import HusimiGrid
from src.exceptions import DomainError, OutputError
from src.utils.formatters import FLOAT_FORMAT
from .config import OBSERVABLE_FIELDS
from .records import FitResult, OptimumRecord, SweepResult

logger = logging.getLogger(__name__)

POINT_COLUMNS = ('index', 'n_particles', 'parameter_name', 'parameter', 'grid_value', 'source')
TRAILING_COLUMNS = ('flags', 'error')
OPTIMUM_COLUMNS = ('model', 'n_particles', 'parameter_name', 'param_min', 'xi2_min_numeric',
                   'param_min_analytic', 'xi2_min_analytic', 'evaluations')
FIT_COLUMNS = ('family', 'model', 'a', 'b', 'residual', 'n_min', 'n_max', 'n_points')

PathLike = Union[str, Path]


def sweep_to_frame(result: SweepResult) -> pd.DataFrame:
    """
    Tabela longa da varredura: uma linha por ponto e por fonte.

    A fonte 'numeric' vem primeiro; as variantes analíticas seguem a ordem
    pedida na configuração.
    """
    fields = [name for name in OBSERVABLE_FIELDS if name in result.config.observables]
    columns = list(POINT_COLUMNS) + fields + list(TRAILING_COLUMNS)
    rows = []
    for point in result.points:
        base = {
            'index': point.index,
            'n_particles': point.n_particles,
            'parameter_name': point.parameter_name,
            'parameter': point.parameter,
            'grid_value': point.grid_value,
        }
        records = [('numeric', point.numeric)]
        records.extend((name, point.analytics.get(name)) for name in result.config.analytics)
        for source, record in records:
            if source != 'numeric' and record is None:
                continue
            row = dict(base, source=source, error=point.error if source == 'numeric' else None)
            flags = list(record.flags) if record is not None else []
            if source == 'numeric':
                flags.extend(point.flags)
            row['flags'] = ';'.join(flags)
            for name in fields:
                row[name] = None if record is None else getattr(record, name)
            rows.append(row)
    return pd.DataFrame(rows, columns=columns)


def optimum_to_frame(records: Iterable[OptimumRecord]) -> pd.DataFrame:
    """Tabela (N, parâmetro ótimo, ξ²_min numérico e analítico)."""
    return pd.DataFrame([record.model_dump() for record in records], columns=list(OPTIMUM_COLUMNS))


def fits_to_frame(fits: Iterable[FitResult]) -> pd.DataFrame:
    rows = [{
        'family': fit.family,
        'model': fit.model,
        'a': fit.coefficients.get('a'),
        'b': fit.coefficients.get('b'),
        'residual': fit.residual,
        'n_min': fit.n_window[0],
        'n_max': fit.n_window[1],
        'n_points': fit.n_points,
    } for fit in fits]
    return pd.DataFrame(rows, columns=list(FIT_COLUMNS))


def write_csv(frame: pd.DataFrame, path: PathLike) -> Path:
    """Escreve CSV com formato fixo de floats."""
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(path, index=False, float_format=FLOAT_FORMAT)
    except OSError as exc:
        raise OutputError(f"Não foi possível escrever {path}: {exc}", path) from exc
    logger.info("Escrito %s (%d linhas)", path, len(frame))
    return path


def to_json_text(payload: Union[BaseModel, Sequence[BaseModel]]) -> str:
    """JSON com chaves ordenadas de um modelo pydantic ou de uma lista deles."""
    if isinstance(payload, BaseModel):
        data = json.loads(payload.model_dump_json())
    else:
        data = [json.loads(item.model_dump_json()) for item in payload]
    return json.dumps(data, indent=2, sort_keys=True) + '\n'


def write_json(payload: Union[BaseModel, Sequence[BaseModel]], path: PathLike) -> Path:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(to_json_text(payload))
    except OSError as exc:
        raise OutputError(f"Não foi possível escrever {path}: {exc}", path) from exc
    logger.info("Escrito %s", path)
    return path


def emit(result: SweepResult, out_dir: PathLike, fmt: str = 'csv', stem: str = 'sweep') -> List[Path]:
    """
    Grava o resultado de uma varredura.

    Args:
        result: SweepResult
        out_dir: Diretório de saída
        fmt: 'csv' (tabela longa + ajustes) ou 'json' (SweepResult completo)
        stem: Prefixo dos arquivos

    Returns:
        Caminhos escritos
    """
    out_dir = Path(out_dir)
    if fmt == 'json':
        return [write_json(result, out_dir / f"{stem}.json")]
    if fmt != 'csv':
        raise DomainError(f"Formato desconhecido: {fmt}")
    paths = [write_csv(sweep_to_frame(result), out_dir / f"{stem}.csv")]
    if result.fits:
        paths.append(write_csv(fits_to_frame(result.fits), out_dir / f"{stem}_fits.csv"))
    return paths


def emit_optimum(records: Sequence[OptimumRecord], out_dir: PathLike, fmt: str = 'csv') -> Path:
    out_dir = Path(out_dir)
    if fmt == 'json':
        return write_json(list(records), out_dir / 'optimum.json')
    return write_csv(optimum_to_frame(records), out_dir / 'optimum.csv')


def emit_fit(fits: Sequence[FitResult], out_dir: PathLike, fmt: str = 'csv') -> Path:
    out_dir = Path(out_dir)
    if fmt == 'json':
        return write_json(list(fits), out_dir / 'fit.json')
    return write_csv(fits_to_frame(fits), out_dir / 'fit.csv')


def emit_husimi(grid: HusimiGrid, path: PathLike) -> Path:
    """Grade de Husimi em CSV com os diagnósticos (pico, max/mediana) em JSON ao lado."""
    try:
        return grid.to_csv(path)
    except OSError as exc:
        raise OutputError(f"Não foi possível escrever {path}: {exc}", path) from exc


FitPoints = List[Tuple[float, float]]


def _single_model(values: Iterable[object], path: Path) -> Optional[str]:
    models = {str(value) for value in values if isinstance(value, str) and value}
    if len(models) > 1:
        raise DomainError(f"{path}: pontos de modelos diferentes ({', '.join(sorted(models))})")
    return models.pop() if models else None


def load_fit_input(path: PathLike) -> Tuple[FitPoints, Optional[str]]:
    """
    Lê pares (N, ξ²_min) para o ajuste de escala e o modelo que os gerou.

    Aceita CSV com colunas (N, xi2_min) ou (n_particles, xi2_min_numeric), e o
    JSON emitido por scan-optimum. O modelo vem da coluna/campo 'model' quando
    existe; caso contrário é None.
    """
    path = Path(path)
    try:
        if path.suffix == '.json':
            records = TypeAdapter(List[OptimumRecord]).validate_json(path.read_text())
            points = [(float(record.n_particles), record.xi2_min_numeric) for record in records]
            return points, _single_model((record.model for record in records), path)
        frame = pd.read_csv(path)
    except OSError as exc:
        raise OutputError(f"Não foi possível ler {path}: {exc}", path) from exc
    except ValidationError as exc:
        raise DomainError(f"{path}: registros de ótimo inválidos: {exc}") from exc
    model = _single_model(frame['model'], path) if 'model' in frame.columns else None
    for n_column, xi2_column in (('N', 'xi2_min'), ('n_particles', 'xi2_min_numeric')):
        if n_column in frame.columns and xi2_column in frame.columns:
            return list(zip(frame[n_column].astype(float), frame[xi2_column].astype(float))), model
    raise DomainError(f"{path}: colunas (N, xi2_min) ou (n_particles, xi2_min_numeric) ausentes")


def load_fit_points(path: PathLike) -> FitPoints:
    """Apenas os pares (N, ξ²_min) de load_fit_input."""
    return load_fit_input(path)[0]
