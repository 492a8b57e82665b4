"""Coupling scans, exceptional points, island boundary and perturbation scenarios."""

from .boundary import (
    GOLDEN,
    BoundaryBranch,
    BoundarySample,
    boundary_curve,
    boundary_lambda_hat_max,
    boundary_mu_hat,
    boundary_sample_for_coupling,
    exceptional_point_for_sample,
    minus_quartet_lambda_max,
    minus_quartet_z_max,
    verify_boundary,
)
from .perturbation import (
    DEFAULT_PERTURBATION_TOL,
    PerturbationResult,
    PerturbedLevels,
    Scenario,
    classify_complex_levels,
    perturbation_scenarios,
    perturbed_levels,
)
from .scan import (
    DEFAULT_BISECTION_WIDTH,
    ScanResult,
    bisect_transition,
    find_chain_exceptional_point,
    find_exceptional_point,
    scan_z,
    validate_grid,
)

__all__ = [
    'DEFAULT_BISECTION_WIDTH',
    'DEFAULT_PERTURBATION_TOL',
    'GOLDEN',
    'BoundaryBranch',
    'BoundarySample',
    'PerturbationResult',
    'PerturbedLevels',
    'ScanResult',
    'Scenario',
    'bisect_transition',
    'boundary_curve',
    'boundary_lambda_hat_max',
    'boundary_mu_hat',
    'boundary_sample_for_coupling',
    'classify_complex_levels',
    'exceptional_point_for_sample',
    'find_chain_exceptional_point',
    'find_exceptional_point',
    'minus_quartet_lambda_max',
    'minus_quartet_z_max',
    'perturbation_scenarios',
    'perturbed_levels',
    'scan_z',
    'validate_grid',
    'verify_boundary',
]
