"""Metric operators and the metric-weighted inner product."""

from .operators import (
    MetricCandidate,
    assess_metric,
    bandwidth,
    bandwidth_profile,
    in_span,
    inner_product,
    intertwining_basis,
    intertwining_residual,
    metric_from_left_eigenvectors,
    validity_report,
)

__all__ = [
    'MetricCandidate',
    'assess_metric',
    'bandwidth',
    'bandwidth_profile',
    'in_span',
    'inner_product',
    'intertwining_basis',
    'intertwining_residual',
    'metric_from_left_eigenvectors',
    'validity_report',
]
