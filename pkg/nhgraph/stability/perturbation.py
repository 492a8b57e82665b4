"""Which levels complexify when the secular determinant is shifted by a constant.

Near the lower end of the island, the shift det(E - H) + epsilon either removes the hump
between the two central levels or the two wells next to it. Only the
membership of conjugate pairs in the sorted root list is inspected.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import FrozenSet, List, Sequence

import numpy as np

from nhgraph.algebra.charpoly import characteristic_polynomial
from nhgraph.algebra.roots import polynomial_roots, reality_mask
from nhgraph.graphs.hamiltonians import build_loop_graph, unreparameterize
from nhgraph.stability.scan import validate_grid

DEFAULT_PERTURBATION_TOL = 1e-6


class Scenario(str, Enum):
    """Complexification pattern of a shifted secular determinant."""

    CENTRAL_PAIR = "central-pair"
    TWO_NONCENTRAL_PAIRS = "two-noncentral-pairs"
    OTHER = "other"


@dataclass(frozen=True)
class PerturbedLevels:
    """Roots of the shifted determinant at one z."""

    z: float
    roots: np.ndarray
    complex_indices: FrozenSet[int]

    @property
    def n_real(self) -> int:
        return len(self.roots) - len(self.complex_indices)


@dataclass
class PerturbationResult:
    gamma: float
    delta: float
    epsilon: float
    records: List[PerturbedLevels] = field(default_factory=list)
    scenario: Scenario = Scenario.OTHER


def classify_complex_levels(indices: FrozenSet[int], dim: int) -> Scenario:
    """Name the pattern of complex positions in a sorted root list of length dim."""
    mid = dim // 2
    if indices == frozenset({mid - 1, mid}):
        return Scenario.CENTRAL_PAIR
    noncentral = (
        frozenset(range(mid - 2, mid + 2)),
        frozenset({mid - 2, mid - 1}),
        frozenset({mid, mid + 1}),
    )
    if indices in noncentral:
        return Scenario.TWO_NONCENTRAL_PAIRS
    return Scenario.OTHER


def perturbed_levels(
    gamma: float, delta: float, z: float, epsilon: float, K: int = 3, tol: float = DEFAULT_PERTURBATION_TOL
) -> PerturbedLevels:
    """Roots of det(E - H) + epsilon at one coupling point."""
    g, h = unreparameterize(gamma, delta)
    secular = characteristic_polynomial(build_loop_graph(K, g, h, z)) + epsilon
    roots = polynomial_roots(secular)
    flags = reality_mask(roots, tol)
    return PerturbedLevels(
        z=float(z),
        roots=roots,
        complex_indices=frozenset(int(i) for i in np.flatnonzero(~flags)),
    )


def perturbation_scenarios(
    gamma: float,
    z_grid: Sequence[float],
    epsilon: float,
    delta: float = 0.0,
    K: int = 3,
    tol: float = DEFAULT_PERTURBATION_TOL,
) -> PerturbationResult:
    """Roots of the shifted determinant along a z grid and the resulting scenario.

    The scenario is read at the lowest z of the grid, closest to where the
    unperturbed levels meet at E = 2.
    """
    grid = validate_grid(z_grid)
    result = PerturbationResult(gamma=float(gamma), delta=float(delta), epsilon=float(epsilon))
    for z in grid:
        result.records.append(perturbed_levels(gamma, delta, float(z), epsilon, K, tol))
    first = result.records[0]
    result.scenario = classify_complex_levels(first.complex_indices, len(first.roots))
    return result
