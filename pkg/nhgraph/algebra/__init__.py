"""Characteristic polynomials, secular factors and polynomial roots."""

from .charpoly import (
    MAX_CHARPOLY_DIM,
    ReducedParameters,
    characteristic_polynomial,
    degenerate_secular,
    energy_from_x,
    format_polynomial,
    minus_cubic,
    quartic_minus,
    quartic_plus,
    reduced_scale,
    reduced_secular,
    relative_coefficient_error,
    secular_in_reduced_variable,
    split_quartics,
)
from .roots import coefficients, polynomial_roots, reality_mask, residuals, sort_complex

__all__ = [
    'MAX_CHARPOLY_DIM',
    'ReducedParameters',
    'characteristic_polynomial',
    'coefficients',
    'degenerate_secular',
    'energy_from_x',
    'format_polynomial',
    'minus_cubic',
    'polynomial_roots',
    'quartic_minus',
    'quartic_plus',
    'reality_mask',
    'reduced_scale',
    'reduced_secular',
    'relative_coefficient_error',
    'residuals',
    'secular_in_reduced_variable',
    'sort_complex',
    'split_quartics',
]
