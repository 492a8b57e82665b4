"""Dense real nonsymmetric eigenvalues and reality classification."""

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
import scipy.linalg

from nhgraph.algebra.roots import reality_mask
from nhgraph.errors import ConfigurationError, ConvergenceError

DEFAULT_REALITY_TOL = 1e-8


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted by real then imaginary part, with reality flags."""

    eigenvalues: np.ndarray
    reality_flags: np.ndarray

    @property
    def n_real(self) -> int:
        return int(np.count_nonzero(self.reality_flags))

    @property
    def dim(self) -> int:
        return len(self.eigenvalues)

    @property
    def is_real(self) -> bool:
        return self.n_real == self.dim

    @property
    def real_parts(self) -> np.ndarray:
        return self.eigenvalues.real

    @property
    def imag_parts(self) -> np.ndarray:
        # entries classified as real are reported with zero imaginary part
        return np.where(self.reality_flags, 0.0, self.eigenvalues.imag)

    @classmethod
    def from_values(cls, values: np.ndarray, tol: float = DEFAULT_REALITY_TOL) -> "Spectrum":
        values = np.asarray(values, dtype=complex)
        order = np.lexsort((values.imag, values.real))
        values = values[order]
        return cls(eigenvalues=values, reality_flags=reality_mask(values, tol))


def _validated(matrix: np.ndarray) -> np.ndarray:
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise ConfigurationError(f"Expected a non-empty square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ConfigurationError("Matrix has non-finite entries")
    return a


def eigenvalues(matrix: np.ndarray, tol: float = DEFAULT_REALITY_TOL) -> Spectrum:
    """All eigenvalues of a real square matrix.

    The matrix is balanced and reduced to Hessenberg form before the
    shifted QR iteration of LAPACK runs on it.

    Raises:
        ConvergenceError: QR iteration failed to converge
    """
    a = _validated(matrix)
    balanced, _ = scipy.linalg.matrix_balance(a, permute=True, scale=True)
    hess = scipy.linalg.hessenberg(balanced)
    try:
        values = scipy.linalg.eigvals(hess, check_finite=False)
    except scipy.linalg.LinAlgError as e:
        raise ConvergenceError(f"QR iteration failed on a {a.shape[0]}x{a.shape[0]} matrix: {e}")
    return Spectrum.from_values(values, tol)


def eigenvectors(matrix: np.ndarray, tol: float = DEFAULT_REALITY_TOL) -> Tuple[Spectrum, np.ndarray]:
    """Eigenvalues with unit-norm right eigenvectors as columns, in spectrum order."""
    a = _validated(matrix)
    try:
        values, vectors = scipy.linalg.eig(a)
    except scipy.linalg.LinAlgError as e:
        raise ConvergenceError(f"QR iteration failed on a {a.shape[0]}x{a.shape[0]} matrix: {e}")
    order = np.lexsort((values.imag, values.real))
    vectors = vectors[:, order]
    vectors = vectors / np.linalg.norm(vectors, axis=0)
    return Spectrum(eigenvalues=values[order], reality_flags=reality_mask(values[order], tol)), vectors


def n_real(matrix: np.ndarray, tol: float = DEFAULT_REALITY_TOL) -> int:
    """Number of real eigenvalues of a matrix."""
    return eigenvalues(matrix, tol).n_real


def classify_reality(spectrum: Spectrum, tol: float = DEFAULT_REALITY_TOL) -> Tuple[int, List[Tuple[int, int]]]:
    """Count real eigenvalues and list near-degenerate neighbouring real pairs.

    Args:
        spectrum: Sorted spectrum
        tol: Mixed absolute/relative tolerance

    Returns:
        (n_real, merged_pairs) with merged_pairs as index pairs into the
        sorted eigenvalues; these are exceptional-point candidates
    """
    if not tol > 0:
        raise ConfigurationError(f"Reality tolerance must be positive, got {tol}")
    values = spectrum.eigenvalues
    real = reality_mask(values, tol)
    merged = []
    indices = np.flatnonzero(real)
    for i, j in zip(indices[:-1], indices[1:]):
        gap = abs(values[j].real - values[i].real)
        if gap < tol * max(1.0, abs(values[i].real)):
            merged.append((int(i), int(j)))
    return int(real.sum()), merged


def near_exceptional_pairs(spectrum: Spectrum, tol: float = DEFAULT_REALITY_TOL) -> List[Tuple[int, int]]:
    """Index pairs of eigenvalues closer than sqrt(tol) * max(1, |E|).

    Two levels meeting at an exceptional point split like the square root
    of any perturbation, so a level pair this close cannot be classified
    reliably at tolerance tol. Real pairs and conjugate pairs both count.
    """
    if not tol > 0:
        raise ConfigurationError(f"Reality tolerance must be positive, got {tol}")
    values = spectrum.eigenvalues
    radius = np.sqrt(tol) * np.maximum(1.0, np.abs(values))
    distance = np.abs(values[:, None] - values[None, :])
    close = np.triu(distance < radius[:, None], k=1)
    return [(int(i), int(j)) for i, j in zip(*np.nonzero(close))]
