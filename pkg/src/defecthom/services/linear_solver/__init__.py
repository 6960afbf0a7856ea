"""Necessary imports for export."""

from .linear_solver_service import LinearSolverService
from .linear_solver_service_contract import LinearSolverServiceContract

__all__ = ["LinearSolverService", "LinearSolverServiceContract"]
