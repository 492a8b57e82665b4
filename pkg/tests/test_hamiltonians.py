"""Tests for the Hamiltonian builders."""

import sys
import unittest
from pathlib import Path

import numpy as np

# Add the project root directory to the Python path
sys.path.append(str(Path(__file__).parent.parent))

from nhgraph.errors import ConfigurationError, GraphSpecError
from nhgraph.graphs import (
    GraphKind,
    GraphSpec,
    ParameterPoint,
    adjacency,
    build_coupled_chain,
    build_free_chain,
    build_hamiltonian,
    build_loop_graph,
    node_labels,
    reparameterize,
    unreparameterize,
)


class TestChains(unittest.TestCase):
    """Test cases for chain Hamiltonians."""

    def test_free_chain(self):
        """Test the free chain is the tridiagonal (-1, 2, -1) Laplacian."""
        h = build_free_chain(2)
        expected = np.array([
            [2, -1, 0, 0],
            [-1, 2, -1, 0],
            [0, -1, 2, -1],
            [0, 0, -1, 2],
        ], dtype=float)
        np.testing.assert_array_equal(h, expected)

    def test_free_chain_spectrum(self):
        """Test free chain eigenvalues 2 - 2cos(k pi / (2K+1))."""
        K = 3
        values = np.sort(np.linalg.eigvalsh(build_free_chain(K)))
        k = np.arange(1, 2 * K + 1)
        np.testing.assert_allclose(values, np.sort(2 - 2 * np.cos(k * np.pi / (2 * K + 1))), atol=1e-12)

    def test_coupled_chain_center(self):
        """Test only the central bond carries nu, antisymmetrically."""
        h = build_coupled_chain(2, 0.3)
        self.assertAlmostEqual(h[1, 2], -1.3)
        self.assertAlmostEqual(h[2, 1], -0.7)
        self.assertEqual(h[0, 1], -1.0)
        self.assertEqual(h[3, 2], -1.0)
        np.testing.assert_array_equal(build_coupled_chain(2, 0.0), build_free_chain(2))

    def test_two_site_chain(self):
        """Test the 2x2 chain matrix."""
        np.testing.assert_allclose(build_coupled_chain(1, 0.5), [[2.0, -1.5], [-0.5, 2.0]])

    def test_empty_lattice(self):
        """Test K = 0 is rejected."""
        with self.assertRaises(GraphSpecError):
            build_free_chain(0)
        with self.assertRaises(ConfigurationError):
            build_coupled_chain(0, 0.1)


class TestLoopGraph(unittest.TestCase):
    """Test cases for the single-loop graph."""

    def test_diagonal(self):
        """Test branch vertices carry 3 and other nodes 2."""
        h = build_loop_graph(3, 0.0, 0.0, 0.0)
        self.assertEqual(h.shape, (8, 8))
        np.testing.assert_array_equal(np.diag(h), [2, 2, 3, 2, 2, 3, 2, 2])
        self.assertEqual(np.trace(h), 18)

    def test_hermitian_at_zero_coupling(self):
        """Test the undecorated loop is symmetric."""
        h = build_loop_graph(3, 0.0, 0.0, 0.0)
        np.testing.assert_array_equal(h, h.T)

    def test_decoration_pattern(self):
        """Test the placement and signs of g, h and z for K = 3."""
        g, hh, z = 0.3, 0.7, 0.5
        m = build_loop_graph(3, g, hh, z)
        # outermost edges
        self.assertAlmostEqual(m[0, 1], -1 - z)
        self.assertAlmostEqual(m[1, 0], -1 + z)
        self.assertAlmostEqual(m[6, 7], -1 + z)
        self.assertAlmostEqual(m[7, 6], -1 - z)
        # loop edges between x-1 (2), x0+ (3), x0- (4), x1 (5)
        self.assertAlmostEqual(m[2, 3], -1 - g)
        self.assertAlmostEqual(m[3, 2], -1 + g)
        self.assertAlmostEqual(m[2, 4], -1 - hh)
        self.assertAlmostEqual(m[4, 2], -1 + hh)
        self.assertAlmostEqual(m[3, 5], -1 + hh)
        self.assertAlmostEqual(m[5, 3], -1 - hh)
        self.assertAlmostEqual(m[4, 5], -1 + g)
        self.assertAlmostEqual(m[5, 4], -1 - g)
        # undecorated wedge edges and the missing x0+ - x0- bond
        self.assertEqual(m[1, 2], -1.0)
        self.assertEqual(m[5, 6], -1.0)
        self.assertEqual(m[3, 4], 0.0)

    def test_antisymmetric_part(self):
        """Test H - H^T only involves the decorated edges."""
        m = build_loop_graph(3, 0.2, 0.4, 0.6)
        skew = m - m.T
        self.assertEqual(np.count_nonzero(skew), 12)

    def test_small_loop(self):
        """Test K = 2 builds a 6x6 matrix and K = 1 is rejected."""
        m = build_loop_graph(2, 0.1, 0.1, 0.1)
        self.assertEqual(m.shape, (6, 6))
        np.testing.assert_array_equal(np.diag(m), [2, 3, 2, 2, 3, 2])
        with self.assertRaises(GraphSpecError):
            build_loop_graph(1, 0.0, 0.0, 0.0)

    def test_adjacency(self):
        """Test the loop graph has the wedge edges plus the four loop edges."""
        spec = GraphSpec(kind="loop", K=3)
        mask = adjacency(spec)
        self.assertEqual(mask.sum() // 2, 8)
        self.assertFalse(mask[3, 4])
        # branch vertices have degree 3
        self.assertEqual(mask[2].sum(), 3)
        self.assertEqual(mask[5].sum(), 3)


class TestGraphSpec(unittest.TestCase):
    """Test cases for GraphSpec and parameter points."""

    def test_defaults_and_dim(self):
        """Test missing couplings default to zero."""
        spec = GraphSpec(kind="loop", K=3, couplings={"z": 0.5})
        self.assertIs(spec.kind, GraphKind.LOOP)
        self.assertEqual(spec.couplings, {"g": 0.0, "h": 0.0, "z": 0.5})
        self.assertEqual(spec.dim, 8)
        self.assertEqual(GraphSpec(kind="chain", K=2).dim, 4)

    def test_json_round_trip(self):
        """Test JSON form preserves the spec."""
        spec = GraphSpec(kind="chain", K=1, couplings={"nu": 0.5})
        again = GraphSpec.from_json(spec.to_json())
        self.assertEqual(again, spec)
        np.testing.assert_array_equal(build_hamiltonian(again), build_coupled_chain(1, 0.5))

    def test_invalid_specs(self):
        """Test validation of kind, K and couplings."""
        with self.assertRaises(GraphSpecError):
            GraphSpec(kind="star", K=3)
        with self.assertRaises(GraphSpecError):
            GraphSpec(kind="chain", K=0)
        with self.assertRaises(GraphSpecError):
            GraphSpec(kind="chain", K=1.5)
        with self.assertRaises(GraphSpecError):
            GraphSpec(kind="chain", K=1, couplings={"g": 0.1})
        with self.assertRaises(GraphSpecError):
            GraphSpec(kind="loop", K=3, couplings={"z": float("nan")})
        with self.assertRaises(GraphSpecError):
            GraphSpec.from_json("{not json")
        with self.assertRaises(GraphSpecError):
            GraphSpec.from_dict({"kind": "loop"})

    def test_node_labels(self):
        """Test node labels follow matrix order."""
        self.assertEqual(
            node_labels(GraphSpec(kind="loop", K=3)),
            ["x-3", "x-2", "x-1", "x0+", "x0-", "x1", "x2", "x3"],
        )
        self.assertEqual(node_labels(GraphSpec(kind="chain", K=1)), ["n1", "n2"])

    def test_reparameterization(self):
        """Test the (g, h) <-> (gamma, delta) maps are inverse."""
        gamma, delta = reparameterize(1.2, 0.4)
        self.assertAlmostEqual(gamma, 0.8)
        self.assertAlmostEqual(delta, 0.4)
        g, h = unreparameterize(gamma, delta)
        self.assertAlmostEqual(g, 1.2)
        self.assertAlmostEqual(h, 0.4)
        point = ParameterPoint.from_gamma_delta(1.0, 0.25, 0.5)
        self.assertAlmostEqual(point.g, 1.25)
        self.assertAlmostEqual(point.h, 0.75)
        self.assertAlmostEqual(point.gamma, 1.0)
        self.assertAlmostEqual(point.delta, 0.25)


if __name__ == "__main__":
    unittest.main()
