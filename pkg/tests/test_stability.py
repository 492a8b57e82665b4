"""Tests for coupling scans and exceptional-point location."""

import sys
import unittest
from pathlib import Path

import numpy as np

# Add the project root directory to the Python path
sys.path.append(str(Path(__file__).parent.parent))

from nhgraph.errors import BracketError, ConfigurationError, SearchError
from nhgraph.graphs import build_coupled_chain
from nhgraph.spectra import n_real
from nhgraph.stability import (
    bisect_transition,
    find_chain_exceptional_point,
    find_exceptional_point,
    scan_z,
)


class TestScan(unittest.TestCase):
    """Test cases for scan_z."""

    def test_weak_coupling_window(self):
        """Test n_real = 8 for |z| < 1 at gamma = delta = 0."""
        result = scan_z(0.0, 0.0, np.linspace(-0.999, 0.999, 201))
        self.assertEqual(len(result), 201)
        self.assertTrue(np.all(result.n_real == 8))

    def test_first_pair_lost_above_one(self):
        """Test one pair is complex just above z = 1 and more beyond the minus limit."""
        near = scan_z(0.0, 0.0, np.linspace(1.001, 1.06, 60))
        self.assertTrue(np.all(near.n_real == 6))
        far = scan_z(0.0, 0.0, np.linspace(1.001, 3.0, 200))
        self.assertTrue(np.all(far.n_real < 8))
        self.assertTrue(np.all(far.n_real >= 2))

    def test_robust_levels(self):
        """Test the lowest and highest levels stay real at strong coupling."""
        result = scan_z(0.0, 0.0, np.linspace(1.1, 3.0, 20))
        for spectrum in result.spectra:
            self.assertTrue(spectrum.reality_flags[0])
            self.assertTrue(spectrum.reality_flags[-1])

    def test_near_degenerate_doublets(self):
        """Test gamma = 0.98 keeps the weak-coupling reality pattern."""
        result = scan_z(0.98, 0.0, np.linspace(0.0, 0.95, 40))
        self.assertTrue(np.all(result.n_real == 8))

    def test_strong_coupling_below_island(self):
        """Test gamma = 1.035 misses one pair for 0 < z < 1."""
        result = scan_z(1.035, 0.0, np.linspace(0.05, 0.95, 40))
        self.assertTrue(np.all(result.n_real == 6))

    def test_island_window(self):
        """Test the spectrum is fully real inside 1 < z < 1.02 at gamma = 1.035."""
        result = scan_z(1.035, 0.0, np.linspace(1.002, 1.02, 19))
        self.assertTrue(np.all(result.n_real == 8))

    def test_mirror_grid(self):
        """Test scans are invariant under z -> -z."""
        grid = np.linspace(0.15, 2.95, 15)
        right = scan_z(0.5, 0.0, grid)
        left = scan_z(0.5, 0.0, -grid[::-1])
        np.testing.assert_array_equal(right.n_real, left.n_real[::-1])
        np.testing.assert_allclose(right.real_parts, left.real_parts[::-1], atol=1e-8)

    def test_transitions(self):
        """Test transition indices bracket the change of n_real."""
        result = scan_z(0.0, 0.0, [0.9, 0.95, 1.05, 1.1])
        self.assertEqual(result.transitions(), [1, 2])

    def test_near_ep_flags(self):
        """Test the merging point z = 1 of the weak-coupling loop is flagged."""
        result = scan_z(0.0, 0.0, [0.5, 1.0, 1.5])
        self.assertEqual(len(result.close_pairs), 3)
        self.assertFalse(result.near_ep[0])
        self.assertTrue(result.near_ep[1])
        self.assertTrue(all(j > i for i, j in result.close_pairs[1]))

    def test_invalid_grid(self):
        """Test empty or non-increasing grids are rejected."""
        with self.assertRaises(ConfigurationError):
            scan_z(0.0, 0.0, [])
        with self.assertRaises(ConfigurationError):
            scan_z(0.0, 0.0, [0.5, 0.4])

    def test_progress_callback(self):
        """Test the per-point callback sees every grid value in order."""
        seen = []
        scan_z(0.0, 0.0, [0.1, 0.2, 0.3], on_point=lambda z, s: seen.append(z))
        self.assertEqual(seen, [0.1, 0.2, 0.3])


class TestChainWindow(unittest.TestCase):
    """Test cases for the decorated chain family."""

    def test_real_inside_unit_interval(self):
        """Test all 2K levels are real for |nu| < 1, K = 1..4."""
        for K in range(1, 5):
            for nu in np.linspace(-0.999, 0.999, 41):
                self.assertEqual(n_real(build_coupled_chain(K, nu)), 2 * K, msg=f"K={K}, nu={nu}")

    def test_complex_outside(self):
        """Test at least one pair is complex at |nu| = 1.5."""
        for K in range(1, 5):
            for nu in (-1.5, 1.5):
                self.assertLessEqual(n_real(build_coupled_chain(K, nu)), 2 * K - 2)


class TestExceptionalPoints(unittest.TestCase):
    """Test cases for bisection on the real-level count."""

    def test_generic_bisection(self):
        """Test a step function is located to the requested width."""
        x = bisect_transition(lambda v: int(v > 0.3), 0.0, 1.0, width=1e-12)
        self.assertAlmostEqual(x, 0.3, places=11)

    def test_same_count_rejected(self):
        """Test a bracket without a change raises BracketError."""
        with self.assertRaises(BracketError):
            bisect_transition(lambda v: 1, 0.0, 1.0)
        with self.assertRaises(SearchError):
            find_exceptional_point(0.0, 0.0, 0.1, 0.5)

    def test_bad_bracket(self):
        """Test reversed brackets and non-positive widths are configuration errors."""
        with self.assertRaises(ConfigurationError):
            bisect_transition(lambda v: int(v > 0.3), 1.0, 0.0)
        with self.assertRaises(ConfigurationError):
            bisect_transition(lambda v: int(v > 0.3), 0.0, 1.0, width=0.0)

    def test_chain_exceptional_point(self):
        """Test nu_EP = 1 for the chains."""
        for K in (1, 2, 3):
            self.assertAlmostEqual(find_chain_exceptional_point(K, 0.5, 1.5), 1.0, places=6)

    def test_weak_coupling_exceptional_point(self):
        """Test the first loop merger sits at z = 1 for gamma = delta = 0."""
        self.assertAlmostEqual(find_exceptional_point(0.0, 0.0, 0.5, 1.03), 1.0, places=6)

    def test_island_upper_edge(self):
        """Test the island at gamma = 1.035 closes near z = 1.022."""
        z_ep = find_exceptional_point(1.035, 0.0, 1.001, 1.1)
        self.assertLess(abs(z_ep - 1.022), 2e-3)

    def test_strong_coupling_edge(self):
        """Test the next transition at gamma = 1.035 sits near z = 3."""
        z_ep = find_exceptional_point(1.035, 0.0, 2.0, 4.0)
        self.assertLess(abs(z_ep - 3.0), 0.3)


if __name__ == "__main__":
    unittest.main()
