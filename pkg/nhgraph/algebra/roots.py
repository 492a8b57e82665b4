"""Polynomial root finding by Aberth-Ehrlich simultaneous iteration.

Used as an oracle independent of the matrix eigensolver, so it never goes
through a companion-matrix eigenvalue routine.
"""

from typing import Sequence, Union

import numpy as np
from numpy.polynomial import Polynomial
from numpy.polynomial import polynomial as P
from scipy.optimize import linear_sum_assignment
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from nhgraph.errors import ConvergenceError

PolynomialLike = Union[Polynomial, Sequence[float], np.ndarray]

# Backward-error acceptance, in units of machine epsilon per degree
_BACKWARD_FACTOR = 8.0
# Rotation of the initial circle, keeps starting points off the real axis pairs
_ANGLE_OFFSET = 0.4


def coefficients(p: PolynomialLike) -> np.ndarray:
    """Ascending real coefficients with trailing zeros trimmed."""
    coef = p.coef if isinstance(p, Polynomial) else np.asarray(p, dtype=float)
    coef = np.asarray(coef, dtype=float)
    nonzero = np.flatnonzero(coef)
    if nonzero.size == 0:
        return np.zeros(1)
    return coef[:nonzero[-1] + 1]


def reality_mask(values: np.ndarray, tol: float) -> np.ndarray:
    """Mark values whose imaginary part is negligible: |Im| < tol * max(1, |Re|)."""
    values = np.asarray(values, dtype=complex)
    return np.abs(values.imag) < tol * np.maximum(1.0, np.abs(values.real))


def sort_complex(values: np.ndarray) -> np.ndarray:
    """Sort by real part, then imaginary part."""
    values = np.asarray(values, dtype=complex)
    return values[np.lexsort((values.imag, values.real))]


def _initial_radius(monic: np.ndarray) -> float:
    """Upper estimate of the root moduli of a monic polynomial."""
    n = len(monic) - 1
    bounds = [abs(monic[n - k]) ** (1.0 / k) for k in range(1, n + 1)]
    return max(max(bounds), 1e-3)


def _evaluation_scale(z: np.ndarray, coef: np.ndarray) -> np.ndarray:
    """Size of the terms summed when evaluating p at z."""
    return P.polyval(np.abs(z), np.abs(coef))


def _inclusion_radii(z: np.ndarray, monic: np.ndarray) -> np.ndarray:
    """Radii n |W_i| of the Weierstrass inclusion disks around the approximations.

    Each connected union of k disks holds exactly k roots. The residual is
    padded by the rounding error of its own evaluation.
    """
    degree = len(z)
    rounding = degree * np.finfo(float).eps * _evaluation_scale(z, monic)
    values = np.abs(P.polyval(z, monic)) + rounding
    diff = z[:, None] - z[None, :]
    np.fill_diagonal(diff, 1.0)
    denom = np.abs(np.prod(diff, axis=1))
    return np.where(denom > 0, degree * values / np.where(denom > 0, denom, 1.0), np.inf)


def _merge_clusters(z: np.ndarray, radii: np.ndarray):
    """Replace every group of overlapping inclusion disks by its centroid.

    Returns:
        Tuple (roots, reach) where reach bounds the distance from each
        returned root to the true roots it stands for
    """
    distance = np.abs(z[:, None] - z[None, :])
    overlap = distance <= radii[:, None] + radii[None, :]
    n_groups, labels = connected_components(csr_matrix(overlap), directed=False)

    roots = z.copy()
    reach = radii.copy()
    for group in range(n_groups):
        members = np.flatnonzero(labels == group)
        if members.size == 1:
            continue
        centre = z[members].mean()
        roots[members] = centre
        reach[members] = np.max(np.abs(z[members] - centre) + radii[members])
    return roots, reach


def _close_under_conjugation(roots: np.ndarray, reach: np.ndarray) -> np.ndarray:
    """Make the root set of a real polynomial exactly closed under conjugation.

    Roots whose reach touches the real axis become real; the rest are matched
    upper to lower half plane and replaced by symmetric pairs.
    """
    roots = roots.copy()
    real = np.abs(roots.imag) <= reach
    upper = [i for i in np.flatnonzero(~real) if roots[i].imag > 0]
    lower = [i for i in np.flatnonzero(~real) if roots[i].imag < 0]

    # an unmatched root can only be a real one with an underestimated reach
    while len(upper) != len(lower):
        side = upper if len(upper) > len(lower) else lower
        nearest = min(side, key=lambda i: abs(roots[i].imag) / max(reach[i], np.finfo(float).tiny))
        side.remove(nearest)
        real[nearest] = True

    roots[real] = roots[real].real
    if upper:
        cost = np.abs(roots[upper][:, None] - roots[lower][None, :].conj())
        rows, cols = linear_sum_assignment(cost)
        for row, col in zip(rows, cols):
            i, j = upper[row], lower[col]
            pair = 0.5 * (roots[i] + roots[j].conj())
            roots[i], roots[j] = pair, pair.conj()
    return roots


def polynomial_roots(p: PolynomialLike, max_iter: int = 500) -> np.ndarray:
    """All complex roots of a real polynomial.

    After the iteration, approximations whose inclusion disks overlap are
    merged into their centroid with multiplicity, and the result is closed
    under conjugation: real roots carry an exact zero imaginary part and
    complex roots come in exact conjugate pairs.

    Args:
        p: Polynomial or ascending coefficient sequence
        max_iter: Iteration cap of the simultaneous iteration

    Returns:
        Roots sorted by real part then imaginary part, repeated according
        to multiplicity

    Raises:
        ValueError: Degree below one
        ConvergenceError: Iteration cap reached
    """
    coef = coefficients(p)
    degree = len(coef) - 1
    if degree < 1:
        raise ValueError("Root finding needs a polynomial of degree >= 1")

    monic = coef / coef[-1]
    if degree == 1:
        return np.array([complex(-monic[0])])

    deriv = P.polyder(monic)
    threshold = _BACKWARD_FACTOR * degree * np.finfo(float).eps

    angles = 2 * np.pi * np.arange(degree) / degree + _ANGLE_OFFSET
    z = _initial_radius(monic) * np.exp(1j * angles)

    for _ in range(max_iter):
        values = P.polyval(z, monic)
        scale = _evaluation_scale(z, monic)
        converged = np.abs(values) <= threshold * scale
        if converged.all():
            roots, reach = _merge_clusters(z, _inclusion_radii(z, monic))
            return sort_complex(_close_under_conjugation(roots, reach))

        derivs = P.polyval(z, deriv)
        derivs = np.where(derivs == 0, threshold * scale, derivs)
        ratio = values / derivs

        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        diff = np.where(diff == 0, threshold, diff)
        inverse = 1.0 / diff
        np.fill_diagonal(inverse, 0.0)
        repulsion = inverse.sum(axis=1)

        correction = ratio / (1.0 - ratio * repulsion)
        correction = np.where(np.isfinite(correction), correction, ratio)
        z = np.where(converged, z, z - correction)

    raise ConvergenceError(f"Aberth iteration did not converge in {max_iter} steps (degree {degree})")


def residuals(p: PolynomialLike, roots: np.ndarray) -> np.ndarray:
    """Relative residuals |p(r)| / sum_k |c_k| |r|^k at the given roots.

    Same normalization as the stopping test of polynomial_roots.
    """
    coef = coefficients(p)
    roots = np.asarray(roots, dtype=complex)
    return np.abs(P.polyval(roots, coef)) / _evaluation_scale(roots, coef)
