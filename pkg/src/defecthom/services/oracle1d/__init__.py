"""Necessary imports for export."""

from .oracle_service import OracleService
from .oracle_service_contract import OracleServiceContract
from .quadrature import cell_average, cumulative_integral, half_line_integral, integrate

__all__ = [
    "OracleService",
    "OracleServiceContract",
    "cell_average",
    "cumulative_integral",
    "half_line_integral",
    "integrate",
]
