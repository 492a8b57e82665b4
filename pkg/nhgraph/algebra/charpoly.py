"""Characteristic polynomials and the closed-form secular factors of the K=3 loop.

Polynomials are :class:`numpy.polynomial.Polynomial` instances with ascending
coefficients in the energy E (or the reduced variable x = 2E - 5).
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

import numpy as np
from numpy.polynomial import Polynomial

from nhgraph.errors import ConfigurationError

# Faddeev-LeVerrier keeps double precision accurate to this size
MAX_CHARPOLY_DIM = 64

ENERGY = Polynomial([0.0, 1.0])


def characteristic_polynomial(matrix: np.ndarray) -> Polynomial:
    """Monic det(E*I - M) by the Faddeev-LeVerrier trace recursion.

    Raises:
        ConfigurationError: Non-square input or dimension above MAX_CHARPOLY_DIM
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise ConfigurationError(f"Expected a non-empty square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n > MAX_CHARPOLY_DIM:
        raise ConfigurationError(
            f"Characteristic polynomial limited to dim <= {MAX_CHARPOLY_DIM}, got {n}"
        )

    coeffs = np.zeros(n + 1)
    coeffs[n] = 1.0
    identity = np.eye(n)
    m = np.zeros_like(a)
    for k in range(1, n + 1):
        m = a @ m + coeffs[n - k + 1] * identity
        coeffs[n - k] = -np.trace(a @ m) / k
    return Polynomial(coeffs)


def quartic_plus(z: float, gamma: float) -> Polynomial:
    """delta-independent quartic factor E^4 - 9E^3 + P+ E^2 + Q+ E + R+."""
    z2, g2 = z * z, gamma * gamma
    p = z2 + 24 + 4 * g2
    q = -5 * z2 - 19 - 16 * g2
    r = 2 * z2 + 4 * g2 * z2 + 12 * g2 + 2
    return Polynomial([r, q, p, -9.0, 1.0])


def quartic_minus(z: float, delta: float) -> Polynomial:
    """gamma-independent quartic factor E^4 - 9E^3 + P- E^2 + Q- E + R-."""
    z2, d2 = z * z, delta * delta
    p = 28 + z2 + 4 * d2
    q = -35 - 5 * z2 - 16 * d2
    r = 14 + 6 * z2 + 12 * d2 + 4 * d2 * z2
    return Polynomial([r, q, p, -9.0, 1.0])


def minus_cubic(z: float) -> Polynomial:
    """Cubic E^3 - 7E^2 + (14+z^2)E - (7+3z^2), the non-constant part of quartic_minus at delta=0."""
    z2 = z * z
    return Polynomial([-(7 + 3 * z2), 14 + z2, -7.0, 1.0])


def degenerate_secular(z: float) -> Polynomial:
    """Secular polynomial of the loop at g = h = 1: (E-2)^2 * cubic(z)^2."""
    return (ENERGY - 2) ** 2 * minus_cubic(z) ** 2


@dataclass(frozen=True)
class ReducedParameters:
    """Shifted couplings and energy used by the reduced secular form."""

    lam: float
    mu: float
    lam_hat: float
    mu_hat: float
    x: float

    @classmethod
    def from_physical(cls, z: float, gamma: float, energy: float = 0.0) -> "ReducedParameters":
        lam = z * z - 1
        mu = gamma * gamma - 1
        return cls(lam=lam, mu=mu, lam_hat=4 * lam, mu_hat=16 * mu, x=2 * energy - 5)

    @property
    def energy(self) -> float:
        return energy_from_x(self.x)


def energy_from_x(x: float) -> float:
    """E = (x + 5) / 2."""
    return (x + 5) / 2


def reduced_secular(lam_hat: float, mu_hat: float) -> Polynomial:
    """S(x) = (x^2 + mu_hat - 5)(x + 1)^2 + lam_hat (x^2 + mu_hat - 1)."""
    x = Polynomial([0.0, 1.0])
    return (x ** 2 + mu_hat - 5) * (x + 1) ** 2 + lam_hat * (x ** 2 + mu_hat - 1)


_X_TO_ENERGY = Polynomial([2.5, 0.5])


@lru_cache(maxsize=None)
def reduced_scale() -> float:
    """Constant c with S(x) = c * quartic_plus((x+5)/2), fixed from leading coefficients.

    The relation is checked at a reference point on first use.
    """
    composed = quartic_plus(1.2, 1.1)(_X_TO_ENERGY)
    reference = reduced_secular(4 * (1.2 ** 2 - 1), 16 * (1.1 ** 2 - 1))
    scale = reference.coef[-1] / composed.coef[-1]
    mismatch = relative_coefficient_error(scale * composed, reference)
    assert mismatch < 1e-12, f"reduced secular form disagrees with quartic_plus ({mismatch:.3g})"
    return float(scale)


def secular_in_reduced_variable(z: float, gamma: float) -> Polynomial:
    """quartic_plus(z, gamma) rewritten in x = 2E - 5 and scaled to match S."""
    return reduced_scale() * quartic_plus(z, gamma)(_X_TO_ENERGY)


def relative_coefficient_error(p: Polynomial, q: Polynomial) -> float:
    """max |p_k - q_k| over the largest coefficient magnitude of either."""
    a, b = np.asarray(p.coef, dtype=float), np.asarray(q.coef, dtype=float)
    size = max(len(a), len(b))
    a = np.pad(a, (0, size - len(a)))
    b = np.pad(b, (0, size - len(b)))
    reference = max(np.abs(a).max(), np.abs(b).max(), np.finfo(float).tiny)
    return float(np.abs(a - b).max() / reference)


def split_quartics(z: float, gamma: float, delta: float) -> Tuple[Polynomial, Polynomial]:
    """Both quartic factors of the K=3 secular equation at (gamma, delta, z)."""
    return quartic_plus(z, gamma), quartic_minus(z, delta)


def format_polynomial(p: Polynomial, variable: str = "E", digits: int = 12) -> str:
    """Human-readable expansion, highest degree first, e.g. ``E^2 - 4 E + 3``."""
    terms = []
    for power in range(len(p.coef) - 1, -1, -1):
        c = float(p.coef[power])
        if c == 0:
            continue
        magnitude = abs(c)
        if power == 0:
            body = f"{magnitude:.{digits}g}"
        else:
            monomial = variable if power == 1 else f"{variable}^{power}"
            body = monomial if magnitude == 1 else f"{magnitude:.{digits}g} {monomial}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(terms) if terms else "0"
