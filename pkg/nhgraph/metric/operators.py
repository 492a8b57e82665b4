"""Metric operators Theta with Theta H = H^T Theta for real non-symmetric H.

Left eigenvectors are the rows of the inverse of the right eigenvector
matrix, which fixes the biorthogonal normalization <L_m|R_n> = delta_mn.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence

import numpy as np
import scipy.linalg

from nhgraph.errors import ConfigurationError, MetricRefusedError
from nhgraph.spectra.eigensolver import DEFAULT_REALITY_TOL, eigenvectors

SYMMETRY_TOL = 1e-10
INTERTWINING_TOL = 1e-10
# Above this condition number of the eigenvector matrix H counts as defective
MAX_EIGENVECTOR_CONDITION = 1e8
MAX_BASIS_DIM = 16
# Relative magnitude below which a diagonal of Theta counts as empty
BANDWIDTH_CUTOFF = 1e-12


@dataclass(frozen=True)
class MetricCandidate:
    """A candidate metric with its validity flags."""

    theta: np.ndarray
    weights: np.ndarray
    symmetric: bool
    positive_definite: bool
    intertwines: bool
    residual: float
    min_eigenvalue: float

    @property
    def is_valid(self) -> bool:
        return self.symmetric and self.positive_definite and self.intertwines


def _square(matrix: np.ndarray, name: str) -> np.ndarray:
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise ConfigurationError(f"{name} must be a non-empty square matrix, got shape {a.shape}")
    return a


def _symmetric(theta: np.ndarray) -> bool:
    scale = max(np.linalg.norm(theta), np.finfo(float).tiny)
    return bool(np.linalg.norm(theta - theta.T) <= SYMMETRY_TOL * scale)


def _positive_definite(theta: np.ndarray) -> bool:
    try:
        scipy.linalg.cholesky(0.5 * (theta + theta.T), lower=True)
    except scipy.linalg.LinAlgError:
        return False
    return True


def intertwining_residual(theta: np.ndarray, hamiltonian: np.ndarray) -> float:
    """||Theta H - H^T Theta|| / (||Theta|| ||H||)."""
    scale = np.linalg.norm(theta) * np.linalg.norm(hamiltonian)
    if scale == 0:
        return 0.0
    return float(np.linalg.norm(theta @ hamiltonian - hamiltonian.T @ theta) / scale)


def assess_metric(theta: np.ndarray, hamiltonian: np.ndarray, weights: Optional[np.ndarray] = None) -> MetricCandidate:
    """Compute the validity flags of a given Theta against H."""
    theta = _square(theta, "Theta")
    hamiltonian = _square(hamiltonian, "H")
    if theta.shape != hamiltonian.shape:
        raise ConfigurationError(f"Theta {theta.shape} and H {hamiltonian.shape} differ in shape")
    residual = intertwining_residual(theta, hamiltonian)
    return MetricCandidate(
        theta=theta,
        weights=np.ones(theta.shape[0]) if weights is None else np.asarray(weights, dtype=float),
        symmetric=_symmetric(theta),
        positive_definite=_positive_definite(theta),
        intertwines=residual < INTERTWINING_TOL,
        residual=residual,
        min_eigenvalue=float(np.linalg.eigvalsh(0.5 * (theta + theta.T)).min()),
    )


def _validated_weights(weights: Optional[Sequence[float]], dim: int) -> np.ndarray:
    if weights is None:
        return np.ones(dim)
    w = np.asarray(weights, dtype=float).ravel()
    if w.size != dim:
        raise ConfigurationError(f"Expected {dim} weights, got {w.size}")
    if not np.all(np.isfinite(w)) or np.any(w <= 0):
        raise ConfigurationError("Metric weights must be finite and positive")
    return w


def metric_from_left_eigenvectors(
    hamiltonian: np.ndarray,
    weights: Optional[Sequence[float]] = None,
    tol: float = DEFAULT_REALITY_TOL,
) -> MetricCandidate:
    """Theta = sum_n eta_n l_n l_n^T over the left eigenvectors l_n of H.

    Args:
        hamiltonian: Real square diagonalizable matrix with a real spectrum
        weights: Positive eta_n in the order of the sorted eigenvalues; all 1 if None
        tol: Reality tolerance for the spectrum check

    Raises:
        MetricRefusedError: complex eigenvalues or a numerically defective
            eigenvector matrix, as at an exceptional point
    """
    h = _square(hamiltonian, "H")
    w = _validated_weights(weights, h.shape[0])

    spectrum, vectors = eigenvectors(h, tol)
    if not spectrum.is_real:
        raise MetricRefusedError(
            f"H has {spectrum.dim - spectrum.n_real} complex eigenvalues; no real metric exists"
        )
    # real eigenvalues give eigenvectors real up to a phase per column
    pivots = np.argmax(np.abs(vectors), axis=0)
    phases = vectors[pivots, np.arange(vectors.shape[1])]
    right = (vectors * (np.abs(phases) / phases)).real
    condition = np.linalg.cond(right)
    if not np.isfinite(condition) or condition > MAX_EIGENVECTOR_CONDITION:
        raise MetricRefusedError(
            f"Eigenvector matrix is numerically singular (condition {condition:.3g}); H is defective"
        )

    left = scipy.linalg.inv(right)
    theta = left.T @ (w[:, None] * left)
    theta = 0.5 * (theta + theta.T)
    return assess_metric(theta, h, w)


def intertwining_basis(hamiltonian: np.ndarray) -> List[np.ndarray]:
    """Basis of the symmetric solutions of Theta H = H^T Theta.

    Each basis matrix has unit Frobenius norm.
    """
    h = _square(hamiltonian, "H")
    n = h.shape[0]
    if n > MAX_BASIS_DIM:
        raise ConfigurationError(f"Intertwining basis limited to dim <= {MAX_BASIS_DIM}, got {n}")

    upper = list(zip(*np.triu_indices(n)))
    generators = []
    for i, j in upper:
        e = np.zeros((n, n))
        e[i, j] = e[j, i] = 1.0
        generators.append(e)

    operator = np.column_stack([(e @ h - h.T @ e).ravel() for e in generators])
    null = scipy.linalg.null_space(operator)

    basis = []
    for column in null.T:
        theta = sum(c * e for c, e in zip(column, generators))
        basis.append(theta / np.linalg.norm(theta))
    return basis


def in_span(theta: np.ndarray, basis: Sequence[np.ndarray]) -> float:
    """Relative least-squares residual of Theta against the span of a basis."""
    target = np.asarray(theta, dtype=float).ravel()
    norm = np.linalg.norm(target)
    if norm == 0:
        return 0.0
    if not basis:
        return 1.0
    columns = np.column_stack([np.asarray(b, dtype=float).ravel() for b in basis])
    coeffs, *_ = np.linalg.lstsq(columns, target, rcond=None)
    return float(np.linalg.norm(columns @ coeffs - target) / norm)


def inner_product(psi: Sequence[float], phi: Sequence[float], theta: np.ndarray) -> float:
    """psi^T Theta phi for a symmetric positive-definite Theta.

    Raises:
        MetricRefusedError: Theta is not symmetric positive definite
    """
    t = _square(theta, "Theta")
    x = np.asarray(psi, dtype=float).ravel()
    y = np.asarray(phi, dtype=float).ravel()
    if x.size != t.shape[0] or y.size != t.shape[0]:
        raise ConfigurationError(
            f"Vectors of length {x.size} and {y.size} do not match Theta of size {t.shape[0]}"
        )
    if not (_symmetric(t) and _positive_definite(t)):
        raise MetricRefusedError("Theta is not symmetric positive definite; not a physical inner product")
    return float(x @ t @ y)


def bandwidth_profile(theta: np.ndarray) -> np.ndarray:
    """Largest |Theta_ij| on each diagonal offset |i-j|, relative to the largest entry."""
    t = _square(theta, "Theta")
    peak = np.abs(t).max()
    if peak == 0:
        return np.zeros(t.shape[0])
    n = t.shape[0]
    return np.array(
        [max(np.abs(np.diag(t, k)).max(), np.abs(np.diag(t, -k)).max()) / peak for k in range(n)]
    )


def bandwidth(theta: np.ndarray, cutoff: float = BANDWIDTH_CUTOFF) -> int:
    """Largest diagonal offset carrying an entry above cutoff; 0 for diagonal metrics."""
    profile = bandwidth_profile(theta)
    occupied = np.flatnonzero(profile > cutoff)
    return int(occupied.max()) if occupied.size else 0


def validity_report(candidate: MetricCandidate, hamiltonian: np.ndarray) -> Dict[str, Any]:
    """JSON-ready validity summary of a metric against H."""
    checked = assess_metric(candidate.theta, hamiltonian, candidate.weights)
    return {
        "symmetric": checked.symmetric,
        "spd": checked.positive_definite,
        "intertwines": checked.intertwines,
        "residual": checked.residual,
        "min_eigenvalue": checked.min_eigenvalue,
        "bandwidth": bandwidth(checked.theta),
        "bandwidth_profile": bandwidth_profile(checked.theta).tolist(),
    }
