"""User-described coefficients: truncated Fourier series plus localized bumps."""

import math
from typing import Any

import numpy as np

from defecthom.models import BoxGrid, CoefficientSet

from .coefficient_family import CoefficientFamily
from .profiles import check_dimension, identity, periodic

PROFILES = ("gaussian", "algebraic")


class CustomFamily(CoefficientFamily):
    """
    a_per = Id + sum of cosine modes, b_per = sum of cosine modes, and the defect a sum
    of Gaussian or algebraic bumps.

    A mode is {"component": [i, j] or [i], "amplitude", "wavevector", "phase"} and adds
    amplitude cos(2 pi k.x + phase); matrix modes are added symmetrically. A bump is
    {"target": "a" or "b", "component", "amplitude", "profile", "width", "gamma", "center"}.
    """

    name = "custom"

    def defaults(self) -> dict[str, Any]:
        return {"d": 2, "a_modes": [], "b_modes": [], "bumps": [], "r": 1.2, "s": 1.2}

    def build(self, params: dict[str, Any]) -> CoefficientSet:
        resolved = self.resolve(params)
        d = int(resolved["d"])
        check_dimension(d)
        a_modes = [self._mode(mode, d, 2) for mode in resolved["a_modes"]]
        b_modes = [self._mode(mode, d, 1) for mode in resolved["b_modes"]]
        bumps = [self._bump(bump, d) for bump in resolved["bumps"]]
        a_bumps = [bump for bump in bumps if bump["target"] == "a"]
        b_bumps = [bump for bump in bumps if bump["target"] == "b"]

        def a_per(x: np.ndarray) -> np.ndarray:
            result = identity(x)
            for mode in a_modes:
                wave = mode["amplitude"] * self._cosine(x, mode)
                i, j = mode["component"]
                result[i, j] += wave
                if i != j:
                    result[j, i] += wave
            return result

        def b_per(x: np.ndarray) -> np.ndarray:
            result = np.zeros(x.shape)
            for mode in b_modes:
                result[mode["component"][0]] += mode["amplitude"] * self._cosine(x, mode)
            return result

        def a_tilde(x: np.ndarray) -> np.ndarray:
            result = np.zeros((d, d) + x.shape[1:])
            for bump in a_bumps:
                value = bump["amplitude"] * self._profile(x, bump)
                i, j = bump["component"]
                result[i, j] += value
                if i != j:
                    result[j, i] += value
            return result

        def b_tilde(x: np.ndarray) -> np.ndarray:
            result = np.zeros(x.shape)
            for bump in b_bumps:
                result[bump["component"][0]] += bump["amplitude"] * self._profile(x, bump)
            return result

        coefficients = CoefficientSet(
            name=self.name,
            d=d,
            a_per=periodic(a_per),
            b_per=periodic(b_per),
            a_tilde=a_tilde if a_bumps else None,
            b_tilde=b_tilde if b_bumps else None,
            r=float(resolved["r"]),
            s=float(resolved["s"]),
            params=resolved,
            outside_hypothesis=d < 3,
        )
        lambda_min, lambda_max = self._ellipticity(coefficients)
        if lambda_min <= 0.0:
            raise ValueError(
                "custom coefficients are not uniformly elliptic: "
                f"smallest eigenvalue {lambda_min:.3g}"
            )
        return CoefficientSet(
            name=coefficients.name,
            d=d,
            a_per=coefficients.a_per,
            b_per=coefficients.b_per,
            a_tilde=coefficients.a_tilde,
            b_tilde=coefficients.b_tilde,
            r=coefficients.r,
            s=coefficients.s,
            lambda_min=lambda_min,
            lambda_max=lambda_max,
            params=resolved,
            outside_hypothesis=coefficients.outside_hypothesis,
        )

    def _mode(self, mode: dict[str, Any], d: int, rank: int) -> dict[str, Any]:
        component = [int(index) for index in mode["component"]]
        wavevector = [int(k) for k in mode.get("wavevector", [1] + [0] * (d - 1))]
        if len(component) != rank or any(not 0 <= index < d for index in component):
            raise ValueError(
                f"mode component {mode['component']} does not fit rank {rank}, d = {d}"
            )
        if len(wavevector) != d:
            raise ValueError(f"wavevector {wavevector} must have {d} integer entries")
        return {
            "component": component,
            "amplitude": float(mode["amplitude"]),
            "wavevector": np.array(wavevector, dtype=float),
            "phase": float(mode.get("phase", 0.0)),
        }

    def _bump(self, bump: dict[str, Any], d: int) -> dict[str, Any]:
        target = bump["target"]
        if target not in ("a", "b"):
            raise ValueError(f'bump target must be "a" or "b", got "{target}"')
        rank = 2 if target == "a" else 1
        component = [int(index) for index in bump["component"]]
        if len(component) != rank or any(not 0 <= index < d for index in component):
            raise ValueError(f"bump component {bump['component']} does not fit target {target}")
        profile = bump.get("profile", "gaussian")
        if profile not in PROFILES:
            raise ValueError(f'bump profile must be one of {", ".join(PROFILES)}, got "{profile}"')
        width = float(bump.get("width", 1.0))
        if width <= 0.0:
            raise ValueError(f"bump width must be positive, got {width}")
        center = np.array(bump.get("center", [0.0] * d), dtype=float)
        if center.shape != (d,):
            raise ValueError(f"bump center must have {d} entries")
        return {
            "target": target,
            "component": component,
            "amplitude": float(bump["amplitude"]),
            "profile": profile,
            "width": width,
            "gamma": float(bump.get("gamma", 4.0)),
            "center": center,
        }

    def _cosine(self, x: np.ndarray, mode: dict[str, Any]) -> np.ndarray:
        phase = np.tensordot(mode["wavevector"], x, axes=(0, 0))
        return np.cos(2.0 * math.pi * phase + mode["phase"])

    def _profile(self, x: np.ndarray, bump: dict[str, Any]) -> np.ndarray:
        shifted = x - bump["center"].reshape((-1,) + (1,) * (x.ndim - 1))
        scaled = np.sum(shifted**2, axis=0) / bump["width"] ** 2
        if bump["profile"] == "gaussian":
            return np.exp(-0.5 * scaled)
        return (1.0 + scaled) ** (-0.5 * bump["gamma"])

    def _ellipticity(self, coefficients: CoefficientSet) -> tuple[float, float]:
        probe = BoxGrid(coefficients.d, 2, 32 if coefficients.d < 3 else 16)
        a = coefficients.sample_a(probe).values
        a_per = coefficients.sample_a_per(probe).values
        eigenvalues = np.concatenate(
            [
                np.linalg.eigvalsh(np.moveaxis(a, (0, 1), (-2, -1))).ravel(),
                np.linalg.eigvalsh(np.moveaxis(a_per, (0, 1), (-2, -1))).ravel(),
            ]
        )
        return float(np.min(eigenvalues)), float(np.max(eigenvalues))
