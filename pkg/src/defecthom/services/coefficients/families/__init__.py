"""Necessary imports for export."""

from .algebraic_decay_family import AlgebraicDecayFamily
from .coefficient_family import CoefficientFamily
from .constant_drift_family import ConstantDriftFamily
from .custom_family import CustomFamily
from .gaussian_bump_family import GaussianBumpFamily
from .gradient_defect_family import GradientDefectFamily
from .identity_family import IdentityFamily
from .shear_family import ShearFamily
from .sin_drift_family import SinDriftFamily

__all__ = [
    "AlgebraicDecayFamily",
    "CoefficientFamily",
    "ConstantDriftFamily",
    "CustomFamily",
    "GaussianBumpFamily",
    "GradientDefectFamily",
    "IdentityFamily",
    "ShearFamily",
    "SinDriftFamily",
]
