"""Analytic boundary of the strong-coupling island of reality at delta = 0.

The plus quartet in the shifted variables x = 2E - 5, lam_hat = 4(z^2-1),
mu_hat = 16(gamma^2-1) has a double root x = y on a curve parametrized by
y in [-c, -1], c the golden ratio. Solving the quartic and its x-derivative
for (mu_hat, lam_hat) gives two branches, each pairing one mu_hat root with
one lam_hat expression.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

import numpy as np
from numpy.polynomial import Polynomial
from scipy.optimize import brentq

from nhgraph.algebra.roots import polynomial_roots, reality_mask
from nhgraph.errors import ConfigurationError, DegenerateIslandError
from nhgraph.graphs.hamiltonians import build_loop_graph
from nhgraph.spectra.eigensolver import DEFAULT_REALITY_TOL, eigenvalues
from nhgraph.stability.scan import DEFAULT_BISECTION_WIDTH, find_exceptional_point

GOLDEN = (1 + math.sqrt(5)) / 2

# Rounding slack of the radicand 1 - y - y^2 at the golden-ratio end
_RADICAND_SLACK = 1e-12

# E^3 - 7E^2 + 15E - 10, the minus-quartet cubic at z = 1
_MINUS_CUBIC_AT_THRESHOLD = Polynomial([-10.0, 15.0, -7.0, 1.0])
# 2y^3 - 16y^2 + 42y - 35, whose real root is the extremum of the minus window
_MINUS_EXTREMUM_CUBIC = Polynomial([-35.0, 42.0, -16.0, 2.0])


class BoundaryBranch(str, Enum):
    """Branch of the island boundary, named after its mu_hat root."""

    PLUS = "plus"
    MINUS = "minus"


@dataclass(frozen=True)
class BoundarySample:
    """One point of the island boundary with its physical couplings."""

    y: float
    mu_hat: float
    lambda_hat_max: float
    branch: BoundaryBranch
    g: float
    z_max: float

    @property
    def gamma(self) -> float:
        # g = h on the boundary
        return self.g

    @property
    def is_interior(self) -> bool:
        return -GOLDEN < self.y < -1


def _radical(y: float) -> float:
    if not -GOLDEN - _RADICAND_SLACK <= y <= -1 + _RADICAND_SLACK:
        raise ConfigurationError(f"y = {y!r} outside the boundary range [-{GOLDEN:.12g}, -1]")
    # 1 - y - y^2 in factored form, exactly zero at y = -c
    radicand = (y + GOLDEN) * (GOLDEN - 1 - y)
    if radicand < -_RADICAND_SLACK:
        raise ConfigurationError(f"Negative radicand {radicand:.3g} at y = {y!r}")
    return math.sqrt(max(radicand, 0.0))


def boundary_mu_hat(y: float) -> Tuple[float, float]:
    """(mu_hat_minus, mu_hat_plus) = -y^2 + 3 -/+ 2 sqrt(1 - y - y^2)."""
    r = _radical(y)
    base = 3 - y * y
    return base - 2 * r, base + 2 * r


def boundary_lambda_hat_max(y: float) -> Tuple[float, float]:
    """Largest admissible lam_hat paired with each mu_hat branch.

    Returns (lam_hat_minus, lam_hat_plus) where lam_hat_plus belongs to
    mu_hat_plus: (y+1)(y^2+y-2+2r)/(-y), and lam_hat_minus uses -2r.
    """
    r = _radical(y)
    base = y * y + y - 2
    scale = (y + 1) / (-y)
    return scale * (base - 2 * r), scale * (base + 2 * r)


def _sample(y: float, branch: BoundaryBranch) -> BoundarySample:
    mu_minus, mu_plus = boundary_mu_hat(y)
    lam_minus, lam_plus = boundary_lambda_hat_max(y)
    if branch is BoundaryBranch.PLUS:
        mu, lam = mu_plus, lam_plus
    else:
        mu, lam = mu_minus, lam_minus
    return BoundarySample(
        y=float(y),
        mu_hat=float(mu),
        lambda_hat_max=float(lam),
        branch=branch,
        g=math.sqrt(max(1 + mu / 16, 0.0)),
        z_max=math.sqrt(max(1 + lam / 4, 0.0)),
    )


def boundary_curve(
    n_samples: int, branches: Optional[Tuple[BoundaryBranch, ...]] = None
) -> List[BoundarySample]:
    """Sample the boundary uniformly in y on [-c, -1], endpoints included.

    Samples are ordered by branch (minus first) and then by increasing y.
    """
    if isinstance(n_samples, bool) or not isinstance(n_samples, (int, np.integer)) or n_samples < 2:
        raise ConfigurationError(f"Boundary needs at least 2 samples, got {n_samples!r}")
    if branches is None:
        branches = (BoundaryBranch.MINUS, BoundaryBranch.PLUS)
    ys = np.linspace(-GOLDEN, -1.0, int(n_samples))
    return [_sample(float(y), branch) for branch in branches for y in ys]


def boundary_sample_for_coupling(gamma: float, branch: BoundaryBranch = BoundaryBranch.PLUS) -> BoundarySample:
    """Boundary point of a branch whose coupling g equals gamma.

    Raises:
        ConfigurationError: gamma not reached by the branch
    """
    branch = BoundaryBranch(branch)
    target = 16 * (gamma * gamma - 1)
    index = 1 if branch is BoundaryBranch.PLUS else 0

    def mismatch(y: float) -> float:
        return boundary_mu_hat(y)[index] - target

    lo, hi = mismatch(-GOLDEN), mismatch(-1.0)
    if lo == 0:
        return _sample(-GOLDEN, branch)
    if hi == 0:
        return _sample(-1.0, branch)
    if lo * hi > 0:
        raise ConfigurationError(
            f"gamma = {gamma:.12g} (mu_hat = {target:.6g}) is not reached by the {branch.value} branch"
        )
    y = brentq(mismatch, -GOLDEN, -1.0, xtol=1e-14)
    return _sample(y, branch)


def minus_quartet_lambda_max() -> Tuple[float, float]:
    """Extremum of the minus-quartet reality window.

    Returns:
        (y, lambda_max) with y the unique real root of 2y^3 - 16y^2 + 42y - 35
        and lambda_max = -Q'(y) for Q(E) = E^3 - 7E^2 + 15E - 10
    """
    roots = polynomial_roots(_MINUS_EXTREMUM_CUBIC)
    real = roots[reality_mask(roots, DEFAULT_REALITY_TOL)]
    assert len(real) == 1, f"expected one real root, found {len(real)}"
    y = float(real[0].real)
    slope = _MINUS_CUBIC_AT_THRESHOLD.deriv()
    assert _MINUS_CUBIC_AT_THRESHOLD.deriv(2)(y) < 0, "extremum is not a maximum"
    return y, float(-slope(y))


def minus_quartet_z_max() -> float:
    """Largest |z| keeping the minus quartet real at delta = 0: sqrt(1 + lambda_max)."""
    _, lam = minus_quartet_lambda_max()
    return math.sqrt(1 + lam)


def _fully_real(g: float, z: float, tol: float) -> bool:
    return eigenvalues(build_loop_graph(3, g, g, z), tol).is_real


def verify_boundary(
    sample: BoundarySample, margin: float = 1e-4, tol: float = DEFAULT_REALITY_TOL
) -> bool:
    """Check the spectrum is real just inside z_max and not just outside.

    Also requires the minus-quartet limit not to cut the window below z_max.

    Raises:
        ConfigurationError: margin not in (0, 1)
        DegenerateIslandError: the window (1, z_max) is too thin for the margin
    """
    if not 0 < margin < 1:
        raise ConfigurationError(f"Margin must lie in (0, 1), got {margin!r}")
    if sample.lambda_hat_max <= 0 or sample.z_max * (1 - margin) <= 1:
        raise DegenerateIslandError(
            f"Island at y = {sample.y:.12g} has z_max = {sample.z_max:.12g}, "
            f"too close to 1 for margin {margin:g}"
        )
    if minus_quartet_z_max() < sample.z_max:
        return False
    inside = sample.z_max * (1 - margin)
    outside = sample.z_max * (1 + margin)
    return _fully_real(sample.g, inside, tol) and not _fully_real(sample.g, outside, tol)


def exceptional_point_for_sample(
    sample: BoundarySample,
    tol: float = DEFAULT_REALITY_TOL,
    width: float = DEFAULT_BISECTION_WIDTH,
) -> float:
    """Numerical exceptional point on the line g = h = sample.g, bracketing z_max."""
    half = (sample.z_max - 1) / 2
    if half <= 0:
        raise DegenerateIslandError(f"No island above z = 1 at y = {sample.y:.12g}")
    return find_exceptional_point(
        sample.g, 0.0, 1 + half, sample.z_max + half, K=3, tol=tol, width=width
    )
