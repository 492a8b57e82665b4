"""Hamiltonian matrices of discrete chains and single-loop quantum graphs.

All matrices use grid spacing 1, so energies are in dimensionless grid units.

Loop node order (dimension 2K+2)::

    x_{-K}, ..., x_{-1}, x_{0+}, x_{0-}, x_{1}, ..., x_{K}

The branch vertices x_{-1} and x_{1} carry diagonal 3, every other node 2.
"""

import json
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Tuple

import numpy as np

from nhgraph.errors import GraphSpecError


class GraphKind(str, Enum):
    """Supported lattice topologies."""

    CHAIN = "chain"
    LOOP = "loop"


# Coupling names accepted per kind
_COUPLINGS = {
    GraphKind.CHAIN: ("nu",),
    GraphKind.LOOP: ("g", "h", "z"),
}


@dataclass(frozen=True)
class GraphSpec:
    """Node/edge description of a chain or loop graph with its couplings."""

    kind: GraphKind
    K: int
    couplings: Dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        try:
            kind = GraphKind(self.kind)
        except ValueError:
            raise GraphSpecError(f"Unknown graph kind '{self.kind}' (expected 'chain' or 'loop')")
        object.__setattr__(self, "kind", kind)

        if isinstance(self.K, bool) or not isinstance(self.K, int):
            raise GraphSpecError(f"K must be an integer, got {self.K!r}")
        if self.K < 1:
            raise GraphSpecError("K = 0 describes an empty lattice")
        if kind is GraphKind.LOOP and self.K < 2:
            raise GraphSpecError("Loop graphs need K >= 2 so that z and g/h decorate distinct edges")

        allowed = _COUPLINGS[kind]
        unknown = set(self.couplings) - set(allowed)
        if unknown:
            raise GraphSpecError(
                f"Unknown couplings for {kind.value}: {', '.join(sorted(unknown))} "
                f"(allowed: {', '.join(allowed)})"
            )
        cleaned = {}
        for name in allowed:
            value = self.couplings.get(name, 0.0)
            if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
                raise GraphSpecError(f"Coupling {name} must be a finite number, got {value!r}")
            cleaned[name] = float(value)
        object.__setattr__(self, "couplings", cleaned)

    @property
    def dim(self) -> int:
        """Matrix dimension implied by the graph."""
        return 2 * self.K if self.kind is GraphKind.CHAIN else 2 * self.K + 2

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "GraphSpec":
        """Build a spec from its JSON document form."""
        if not isinstance(data, dict):
            raise GraphSpecError("Graph spec must be a JSON object")
        missing = {"kind", "K"} - set(data)
        if missing:
            raise GraphSpecError(f"Graph spec is missing: {', '.join(sorted(missing))}")
        return cls(kind=data["kind"], K=data["K"], couplings=dict(data.get("couplings") or {}))

    @classmethod
    def from_json(cls, text: str) -> "GraphSpec":
        """Parse a JSON document into a spec."""
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise GraphSpecError(f"Invalid graph spec JSON: {e}")
        return cls.from_dict(data)

    def to_dict(self) -> Dict[str, Any]:
        """Return the JSON document form."""
        return {"kind": self.kind.value, "K": self.K, "couplings": dict(self.couplings)}

    def to_json(self) -> str:
        """Serialize to a JSON document."""
        return json.dumps(self.to_dict(), sort_keys=True)


@dataclass(frozen=True)
class ParameterPoint:
    """Loop couplings (g, h, z) with the symmetric/antisymmetric split."""

    g: float
    h: float
    z: float

    @property
    def gamma(self) -> float:
        return (self.g + self.h) / 2

    @property
    def delta(self) -> float:
        return (self.g - self.h) / 2

    @classmethod
    def from_gamma_delta(cls, gamma: float, delta: float, z: float) -> "ParameterPoint":
        g, h = unreparameterize(gamma, delta)
        return cls(g=g, h=h, z=z)


def reparameterize(g: float, h: float) -> Tuple[float, float]:
    """Map (g, h) to (gamma, delta) = ((g+h)/2, (g-h)/2)."""
    return (g + h) / 2, (g - h) / 2


def unreparameterize(gamma: float, delta: float) -> Tuple[float, float]:
    """Inverse of :func:`reparameterize`: g = gamma+delta, h = gamma-delta."""
    return gamma + delta, gamma - delta


def _require_size(K: int, minimum: int, what: str) -> None:
    if isinstance(K, bool) or not isinstance(K, (int, np.integer)):
        raise GraphSpecError(f"K must be an integer, got {K!r}")
    if K < 1:
        raise GraphSpecError("K = 0 describes an empty lattice")
    if K < minimum:
        raise GraphSpecError(f"{what} needs K >= {minimum}, got K = {K}")


def build_free_chain(K: int) -> np.ndarray:
    """Dirichlet chain Laplacian of 2K sites: tridiagonal (-1, 2, -1)."""
    _require_size(K, 1, "chain")
    n = 2 * K
    off = -np.ones(n - 1)
    return 2.0 * np.eye(n) + np.diag(off, 1) + np.diag(off, -1)


def build_coupled_chain(K: int, nu: float) -> np.ndarray:
    """Free chain with the central bond decorated antisymmetrically by nu.

    Entries (K, K+1) = -1-nu and (K+1, K) = -1+nu in 1-based indexing.
    """
    matrix = build_free_chain(K)
    matrix[K - 1, K] = -1.0 - nu
    matrix[K, K - 1] = -1.0 + nu
    return matrix


def loop_branch_indices(K: int) -> Tuple[int, int, int, int]:
    """0-based positions of x_{-1}, x_{0+}, x_{0-}, x_{1} in a loop of wedge length K."""
    left = K - 1
    return left, left + 1, left + 2, left + 3


def build_loop_graph(K: int, g: float, h: float, z: float) -> np.ndarray:
    """Single-loop graph Hamiltonian H^(K)(g, h; z) of dimension 2K+2.

    Plain edges carry -1; the outermost edges carry the z decoration, the
    four loop edges carry g and h with the sign pattern of the K=3 model.
    """
    _require_size(K, 2, "loop graph")
    n = 2 * K + 2
    left, upper, lower, right = loop_branch_indices(K)

    matrix = 2.0 * np.eye(n)
    matrix[left, left] = 3.0
    matrix[right, right] = 3.0

    # left wedge x_{-K} ... x_{-1} and right wedge x_{1} ... x_{K}
    for i in list(range(0, left)) + list(range(right, n - 1)):
        matrix[i, i + 1] = -1.0
        matrix[i + 1, i] = -1.0

    matrix[0, 1] = -1.0 - z
    matrix[1, 0] = -1.0 + z
    matrix[n - 2, n - 1] = -1.0 + z
    matrix[n - 1, n - 2] = -1.0 - z

    matrix[left, upper] = -1.0 - g
    matrix[upper, left] = -1.0 + g
    matrix[left, lower] = -1.0 - h
    matrix[lower, left] = -1.0 + h
    matrix[upper, right] = -1.0 + h
    matrix[right, upper] = -1.0 - h
    matrix[lower, right] = -1.0 + g
    matrix[right, lower] = -1.0 - g
    return matrix


def build_hamiltonian(spec: GraphSpec) -> np.ndarray:
    """Build the matrix described by a :class:`GraphSpec`."""
    if spec.kind is GraphKind.CHAIN:
        return build_coupled_chain(spec.K, spec.couplings["nu"])
    c = spec.couplings
    return build_loop_graph(spec.K, c["g"], c["h"], c["z"])


def node_labels(spec: GraphSpec) -> List[str]:
    """Human-readable node names in matrix order."""
    if spec.kind is GraphKind.CHAIN:
        return [f"n{i}" for i in range(1, spec.dim + 1)]
    K = spec.K
    return ([f"x{-k}" for k in range(K, 0, -1)]
            + ["x0+", "x0-"]
            + [f"x{k}" for k in range(1, K + 1)])


def adjacency(spec: GraphSpec) -> np.ndarray:
    """Boolean adjacency of the graph, without self loops."""
    if spec.kind is GraphKind.CHAIN:
        pattern = build_free_chain(spec.K)
    else:
        pattern = build_loop_graph(spec.K, 0.0, 0.0, 0.0)
    mask = pattern != 0
    np.fill_diagonal(mask, False)
    return mask
