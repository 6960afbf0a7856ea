"""Mock Field Calculus Service - returns preset results and records calls."""

from dataclasses import dataclass

import numpy as np

from defecthom.models import Field, OperationResult, Region, ShellProfile

from .field_calculus_service_contract import FieldCalculusServiceContract


@dataclass
class DifferentiateParams:
    """Params of the differentiate method."""

    f: Field
    kind: str


@dataclass
class LqNormParams:
    """Params of the lq_norm method."""

    f: Field
    exponents: list[float]
    region: Region | None


@dataclass
class ProfileParams:
    """Params of the annular_profile and sublinearity_ratio methods."""

    f: Field
    q: float
    max_radius: float | None


class MockFieldCalculusService(FieldCalculusServiceContract):
    """Every operation answers with its preset *_result attribute."""

    def __init__(self):
        self.differentiate_params: list[DifferentiateParams] = []
        self.differentiate_result = OperationResult[Field].fail("no preset field")
        self.mean_params: list[Field] = []
        self.mean_result = OperationResult[float | np.ndarray].succeed(0.0)
        self.lq_norm_params: list[LqNormParams] = []
        self.lq_norm_result = OperationResult[float].succeed(0.0)
        self.annular_profile_params: list[ProfileParams] = []
        self.annular_profile_result = OperationResult[ShellProfile].fail("no preset profile")
        self.sublinearity_ratio_params: list[ProfileParams] = []
        self.sublinearity_ratio_result = OperationResult[ShellProfile].fail("no preset profile")

    def differentiate(self, f: Field, kind: str) -> OperationResult[Field]:
        self.differentiate_params.append(DifferentiateParams(f, kind))
        return self.differentiate_result

    def mean(self, f: Field) -> OperationResult[float | np.ndarray]:
        self.mean_params.append(f)
        return self.mean_result

    def lq_norm(
        self, f: Field, exponents: list[float], region: Region | None = None
    ) -> OperationResult[float]:
        self.lq_norm_params.append(LqNormParams(f, exponents, region))
        return self.lq_norm_result

    def annular_profile(
        self, f: Field, q: float, max_radius: float | None = None
    ) -> OperationResult[ShellProfile]:
        self.annular_profile_params.append(ProfileParams(f, q, max_radius))
        return self.annular_profile_result

    def sublinearity_ratio(
        self, w: Field, max_radius: float | None = None
    ) -> OperationResult[ShellProfile]:
        self.sublinearity_ratio_params.append(ProfileParams(w, 0.0, max_radius))
        return self.sublinearity_ratio_result
