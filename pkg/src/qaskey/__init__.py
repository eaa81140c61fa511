"""Associated q-Askey-Wilson polynomials: recurrence, solutions, continued
fractions, orthogonality weight and the supporting basic hypergeometric
machinery."""
from .aqaw import (QParameters, RecurrenceCoefficients, SpectralPoint, assoc_polynomial_values, coefficients,
                   eval_assoc_polynomial, eval_aw_4phi3, eval_aw_symmetric, is_real_orthogonality,
                   reflection_residual)
from .cf import (CfConfig, CfResult, cf_direct, cf_direct_result, cf_pincherle, closed_form_3_3,
                 closed_form_3_4, lentz_convergents, stieltjes_transform)
from .contiguous import Relation, TenPhiNineSpec, relation_residual
from .exceptions import (DegenerateError, DomainError, GuardError, ImaginaryResidueWarning, NonConvergence,
                         PoleError, QSeriesError, SpectrumError)
from .hyperseries import PhiSeriesSpec, VwpW, W, eval_phi, eval_vwp, eval_W
from .qcore import (DEFAULT_TOL, INF, SeriesValue, ToleranceConfig, extended_precision, qpoch, qpoch_finite,
                    qpoch_infinite, qpoch_multi)
from .solutions import (SolutionId, eval_solution, minimal_solution, minimal_solution_id,
                        proportionality_variation, recurrence_residual)
from .spectral import (GuardResult, boundary_density, boundary_density_extrapolated, classical_aw_weight,
                       discrete_spectrum_guard, expected_norms, orthogonality_check, qdougall_residual,
                       stieltjes_check, weight_density, weight_density_alt, weight_density_wronskian,
                       weight_table, wronskian, wronskian_closed_form)

__version__ = "0.1.0"

__all__ = [
    "QParameters", "RecurrenceCoefficients", "SpectralPoint", "assoc_polynomial_values", "coefficients",
    "eval_assoc_polynomial", "eval_aw_4phi3", "eval_aw_symmetric", "is_real_orthogonality",
    "reflection_residual", "CfConfig", "CfResult", "cf_direct", "cf_direct_result", "cf_pincherle",
    "closed_form_3_3", "closed_form_3_4", "lentz_convergents", "stieltjes_transform", "Relation",
    "TenPhiNineSpec", "relation_residual", "DegenerateError", "DomainError", "GuardError",
    "ImaginaryResidueWarning", "NonConvergence", "PoleError", "QSeriesError", "SpectrumError",
    "PhiSeriesSpec", "VwpW", "W", "eval_phi", "eval_vwp", "eval_W", "DEFAULT_TOL", "INF", "SeriesValue",
    "ToleranceConfig", "extended_precision", "qpoch", "qpoch_finite", "qpoch_infinite", "qpoch_multi",
    "SolutionId", "eval_solution", "minimal_solution", "minimal_solution_id", "proportionality_variation",
    "recurrence_residual", "GuardResult", "boundary_density", "boundary_density_extrapolated",
    "classical_aw_weight", "discrete_spectrum_guard", "expected_norms", "orthogonality_check",
    "qdougall_residual", "stieltjes_check", "weight_density", "weight_density_alt",
    "weight_density_wronskian", "weight_table", "wronskian", "wronskian_closed_form", "__version__",
]
