"""Eigenvalue computation and reality classification."""

from .eigensolver import (
    DEFAULT_REALITY_TOL,
    Spectrum,
    classify_reality,
    eigenvalues,
    eigenvectors,
    n_real,
    near_exceptional_pairs,
)

__all__ = [
    'DEFAULT_REALITY_TOL',
    'Spectrum',
    'classify_reality',
    'eigenvalues',
    'eigenvectors',
    'n_real',
    'near_exceptional_pairs',
]
