"""Necessary imports for export."""

from .run_command import RunCommand, RunnerFactory
from .validate_command import ValidateCommand

__all__ = ["RunCommand", "RunnerFactory", "ValidateCommand"]
