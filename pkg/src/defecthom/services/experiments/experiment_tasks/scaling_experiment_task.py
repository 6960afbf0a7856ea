"""Scaling of the Hessian of u_eps with eps."""

from defecthom.models import CoefficientSet, ExperimentOutcome, OperationResult, TorusGrid
from defecthom.models.configuration import ExperimentConfig
from defecthom.services.configuration import build_eps_problem
from defecthom.services.fields import FieldCalculusServiceContract
from defecthom.services.multiscale import MultiscaleServiceContract

from ..artifact_writer import ArtifactWriter
from ..cell_provider import CellProvider
from .experiment_task import ExperimentTask

FLAT_CORRECTOR = 1e-8
SLOPE_TOLERANCE = 0.15


class ScalingExperimentTask(ExperimentTask):
    """
    Fits |D2 u_eps|_L^beta ~ eps^slope. The slope is -1 unless every periodic corrector
    has a vanishing Hessian, in which case it is 0.
    """

    def __init__(
        self,
        cell_provider: CellProvider,
        field_calculus: FieldCalculusServiceContract,
        multiscale: MultiscaleServiceContract,
    ):
        self.cell_provider = cell_provider
        self.field_calculus = field_calculus
        self.multiscale = multiscale

    def run(
        self, config: ExperimentConfig, coefficients: CoefficientSet, writer: ArtifactWriter
    ) -> OperationResult[ExperimentOutcome]:
        d = coefficients.d
        cell_result = self.cell_provider.provide(coefficients, TorusGrid(d, config.grid.n_cell))
        if not cell_result.success or cell_result.data is None:
            return cell_result.as_fail()

        corrector_curvature = 0.0
        for corrector in cell_result.data.w_per:
            hessian_result = self.field_calculus.differentiate(corrector, "hess")
            if not hessian_result.success or hessian_result.data is None:
                return hessian_result.as_fail()
            corrector_curvature = max(corrector_curvature, hessian_result.data.max_abs())
        expected = -1.0 if corrector_curvature > FLAT_CORRECTOR else 0.0

        beta = float(config.setting("beta", 2.0))
        problem = build_eps_problem(config, d)
        fit_result = self.multiscale.hessian_scaling(problem, coefficients, beta)
        if not fit_result.success or fit_result.data is None:
            return fit_result.as_fail()
        fit = fit_result.data

        summary = {
            "beta": beta,
            "eps_list": list(problem.eps_list),
            "fit": fit.as_object(),
            "expected_slope": expected,
            "corrector_hessian_max": corrector_curvature,
        }
        write_result = writer.write_json("scaling_summary.json", summary)
        if not write_result.success:
            return write_result.as_fail()
        return OperationResult[ExperimentOutcome].succeed(
            ExperimentOutcome(
                files=list(writer.files),
                contracts={"hessian_slope_matches": abs(fit.slope - expected) <= SLOPE_TOLERANCE},
                residuals={"hessian_slope": fit.slope, "fit_residual": fit.residual},
                summary=summary,
            )
        )
