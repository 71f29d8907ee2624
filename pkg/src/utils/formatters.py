"""
Formatadores de dados
Funções para formatação estável de números em tabelas e resumos.
"""

import math
from typing import Iterable, List, Optional, Sequence

# formato fixo para CSV: mesma configuração gera bytes idênticos
FLOAT_FORMAT = '%.12e'


def format_float(value: Optional[float], digits: int = 12) -> str:
    """
    Formata um número em notação científica com precisão fixa.

    Args:
        value: Valor (None vira string vazia)
        digits: Casas decimais da mantissa

    Returns:
        String formatada (ex: "1.234500000000e-03")
    """
    if value is None:
        return ''
    if isinstance(value, float) and math.isnan(value):
        return 'nan'
    return f"{value:.{digits}e}"


def format_percent(value: float, decimals: int = 2) -> str:
    """
    Formata desvio relativo como percentual.

    Args:
        value: Valor decimal (ex: 0.0125 para 1.25%)
        decimals: Número de casas decimais

    Returns:
        String formatada (ex: "1.25%")
    """
    return f"{value * 100:.{decimals}f}%"


def format_table(headers: Sequence[str], rows: Iterable[Sequence]) -> str:
    """
    Monta uma tabela de texto alinhada para o terminal.

    Args:
        headers: Títulos das colunas
        rows: Linhas (números são formatados com 6 algarismos)

    Returns:
        Tabela como string
    """
    rendered: List[List[str]] = [list(headers)]
    for row in rows:
        rendered.append([
            f"{cell:.6g}" if isinstance(cell, float) else str(cell)
            for cell in row
        ])
    widths = [max(len(line[i]) for line in rendered) for i in range(len(headers))]
    lines = [
        "  ".join(cell.rjust(width) for cell, width in zip(line, widths))
        for line in rendered
    ]
    lines.insert(1, "  ".join("-" * width for width in widths))
    return "\n".join(lines)
