"""Coupling scans and exceptional-point location by bisection on the real-level count."""

from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from nhgraph.errors import BracketError, ConfigurationError, ConvergenceError
from nhgraph.graphs.hamiltonians import build_coupled_chain, build_loop_graph, unreparameterize
from nhgraph.spectra.eigensolver import (
    DEFAULT_REALITY_TOL,
    Spectrum,
    eigenvalues,
    n_real,
    near_exceptional_pairs,
)

DEFAULT_BISECTION_WIDTH = 1e-10


@dataclass
class ScanResult:
    """Spectra of the loop Hamiltonian along a z grid at fixed gamma and delta."""

    gamma: float
    delta: float
    K: int
    z: np.ndarray
    spectra: List[Spectrum] = field(default_factory=list)
    # per grid point, level pairs too close to classify
    close_pairs: List[List[Tuple[int, int]]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.spectra)

    @property
    def dim(self) -> int:
        return 2 * self.K + 2

    @property
    def n_real(self) -> np.ndarray:
        """Real-level count per grid point."""
        return np.array([s.n_real for s in self.spectra], dtype=int)

    @property
    def near_ep(self) -> np.ndarray:
        """Grid points whose reality count is unreliable because two levels nearly meet."""
        return np.array([bool(pairs) for pairs in self.close_pairs], dtype=bool)

    @property
    def real_parts(self) -> np.ndarray:
        """Sorted real parts, one row per grid point."""
        return np.array([s.real_parts for s in self.spectra])

    @property
    def imag_parts(self) -> np.ndarray:
        return np.array([s.imag_parts for s in self.spectra])

    def transitions(self) -> List[int]:
        """Grid indices i where n_real changes between z[i] and z[i+1]."""
        counts = self.n_real
        return [int(i) for i in np.flatnonzero(np.diff(counts))]


def validate_grid(values: Sequence[float]) -> np.ndarray:
    """Check a coupling grid is non-empty, finite and strictly increasing."""
    grid = np.asarray(values, dtype=float).ravel()
    if grid.size == 0:
        raise ConfigurationError("Empty grid")
    if not np.all(np.isfinite(grid)):
        raise ConfigurationError("Grid has non-finite entries")
    if grid.size > 1 and np.any(np.diff(grid) <= 0):
        raise ConfigurationError("Grid values must be strictly increasing")
    return grid


def scan_z(
    gamma: float,
    delta: float,
    z_grid: Sequence[float],
    K: int = 3,
    tol: float = DEFAULT_REALITY_TOL,
    on_point: Optional[Callable[[float, Spectrum], None]] = None,
) -> ScanResult:
    """Compute the loop spectrum at every z of a grid.

    Args:
        gamma: Symmetric loop coupling (g+h)/2
        delta: Antisymmetric loop coupling (g-h)/2
        z_grid: Strictly increasing z values
        K: Wedge length of the loop graph
        tol: Reality tolerance
        on_point: Optional callback per grid point, used for progress display

    Returns:
        ScanResult with one spectrum per grid point, in grid order, and the
        level pairs flagged as near an exceptional point
    """
    grid = validate_grid(z_grid)
    g, h = unreparameterize(gamma, delta)
    result = ScanResult(gamma=float(gamma), delta=float(delta), K=K, z=grid)
    for z in grid:
        try:
            spectrum = eigenvalues(build_loop_graph(K, g, h, float(z)), tol)
        except ConvergenceError as e:
            raise ConvergenceError(f"Eigensolver failed at z = {z:.12g}: {e}")
        result.spectra.append(spectrum)
        result.close_pairs.append(near_exceptional_pairs(spectrum, tol))
        if on_point is not None:
            on_point(float(z), spectrum)
    return result


def bisect_transition(
    count: Callable[[float], int],
    lo: float,
    hi: float,
    width: float = DEFAULT_BISECTION_WIDTH,
    max_steps: int = 200,
) -> float:
    """Locate where an integer-valued function changes between lo and hi.

    The returned point lies within width of the first change of count away
    from its value at lo.

    Raises:
        ConfigurationError: lo >= hi or width not positive
        BracketError: count(lo) == count(hi)
    """
    if not lo < hi:
        raise ConfigurationError(f"Bracket must satisfy lo < hi, got [{lo}, {hi}]")
    if not width > 0:
        raise ConfigurationError(f"Bisection width must be positive, got {width}")

    at_lo, at_hi = count(lo), count(hi)
    if at_lo == at_hi:
        raise BracketError(
            f"Bracket [{lo:.12g}, {hi:.12g}] shows {at_lo} real levels at both ends"
        )

    for _ in range(max_steps):
        if hi - lo <= width:
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if count(mid) == at_lo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def find_exceptional_point(
    gamma: float,
    delta: float,
    z_lo: float,
    z_hi: float,
    K: int = 3,
    tol: float = DEFAULT_REALITY_TOL,
    width: float = DEFAULT_BISECTION_WIDTH,
) -> float:
    """z at which the loop spectrum changes its number of real levels inside [z_lo, z_hi]."""
    g, h = unreparameterize(gamma, delta)
    return bisect_transition(
        lambda z: n_real(build_loop_graph(K, g, h, z), tol), z_lo, z_hi, width
    )


def find_chain_exceptional_point(
    K: int,
    nu_lo: float,
    nu_hi: float,
    tol: float = DEFAULT_REALITY_TOL,
    width: float = DEFAULT_BISECTION_WIDTH,
) -> float:
    """Coupling nu at which the decorated chain loses reality inside [nu_lo, nu_hi]."""
    return bisect_transition(
        lambda nu: n_real(build_coupled_chain(K, nu), tol), nu_lo, nu_hi, width
    )
