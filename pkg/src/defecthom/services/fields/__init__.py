"""Necessary imports for export."""

from .field_calculus_service import FieldCalculusService
from .field_calculus_service_contract import DERIVATIVE_KINDS, FieldCalculusServiceContract
from .shells import dyadic_radii, fit_power_law, whole_shell_reach

__all__ = [
    "DERIVATIVE_KINDS",
    "FieldCalculusService",
    "FieldCalculusServiceContract",
    "dyadic_radii",
    "fit_power_law",
    "whole_shell_reach",
]
