"""Dense-inverse revised simplex with row duals."""

from . import kernels
from .kkt import KktDiagnostics, check_kkt
from .problem import INF, LpProblem, LpSolution
from .simplex import DEFAULT_CONFIG, IterationLimitError, SimplexConfig, solve

__all__ = [
    "DEFAULT_CONFIG",
    "INF",
    "IterationLimitError",
    "KktDiagnostics",
    "LpProblem",
    "LpSolution",
    "SimplexConfig",
    "check_kkt",
    "kernels",
    "solve",
]
