"""Tests for the command line front end."""

import contextlib
import csv
import io
import json
import os
import sys
import tempfile
import unittest
from pathlib import Path

from rich.console import Console

# Add the project root directory to the Python path
sys.path.append(str(Path(__file__).parent.parent))

from nhgraph.ui.cli import CLI
from nhgraph.ui.console import NHGRAPH_THEME


class CLITestCase(unittest.TestCase):
    """Runs the CLI against in-memory streams."""

    def run_cli(self, *args):
        """Run one command; return (exit code, stdout text, diagnostics text)."""
        stdout = io.StringIO()
        diagnostics = io.StringIO()
        console = Console(file=diagnostics, theme=NHGRAPH_THEME, width=200)
        with contextlib.redirect_stderr(io.StringIO()):
            code = CLI(console=console, stdout=stdout).run(list(args))
        return code, stdout.getvalue(), diagnostics.getvalue()

    def rows(self, text):
        """Parse CSV text into a header and data rows."""
        table = list(csv.reader(io.StringIO(text)))
        return table[0], table[1:]


class TestBuild(CLITestCase):
    """Test cases for the build command."""

    def test_default_loop(self):
        """Test the default loop matrix and its node labels."""
        code, out, _ = self.run_cli('build')
        self.assertEqual(code, 0)
        header, rows = self.rows(out)
        self.assertEqual(header, ['x-3', 'x-2', 'x-1', 'x0+', 'x0-', 'x1', 'x2', 'x3'])
        self.assertEqual(len(rows), 8)
        self.assertEqual([rows[i][i] for i in range(8)], ['2', '2', '3', '2', '2', '3', '2', '2'])
        self.assertEqual(rows[0][2], '0')

    def test_chain(self):
        """Test the two-site chain with a non-Hermitian central bond."""
        code, out, _ = self.run_cli('build', '--model', 'chain', '--K', '1', '--nu', '0.5')
        self.assertEqual(code, 0)
        self.assertEqual(out, "n1,n2\n2,-1.5\n-0.5,2\n")

    def test_charpoly(self):
        """Test the characteristic polynomial of the Hermitian two-site chain."""
        code, out, _ = self.run_cli('build', '--model', 'chain', '--K', '1', '--nu', '0', '--charpoly')
        self.assertEqual(code, 0)
        self.assertEqual(out, "power,coefficient\n2,1\n1,-4\n0,3\n")

    def test_spectrum(self):
        """Test the spectrum row of the two-site chain at nu = 2."""
        code, out, _ = self.run_cli('build', '--model', 'chain', '--K', '1', '--nu', '2', '--spectrum')
        self.assertEqual(code, 0)
        header, rows = self.rows(out)
        self.assertEqual(header, ['dim', 'ReE_1', 'ImE_1', 'ReE_2', 'ImE_2'])
        self.assertEqual(rows[0][0], '2')
        self.assertAlmostEqual(float(rows[0][1]), 2.0, places=10)
        self.assertAlmostEqual(float(rows[0][2]), -3 ** 0.5, places=10)

    def test_spec_file(self):
        """Test a JSON graph spec file replaces the model flags."""
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'graph.json')
            with open(path, 'w', encoding='utf-8') as f:
                json.dump({'kind': 'chain', 'K': 2, 'couplings': {'nu': 0.0}}, f)
            code, out, _ = self.run_cli('build', '--spec', path)
        self.assertEqual(code, 0)
        header, rows = self.rows(out)
        self.assertEqual(header, ['n1', 'n2', 'n3', 'n4'])

    def test_bad_input(self):
        """Test malformed flags and inconsistent couplings exit with 2."""
        self.assertEqual(self.run_cli('build', '--K', 'three')[0], 2)
        self.assertEqual(self.run_cli('build', '--model', 'loop', '--nu', '0.5')[0], 2)
        self.assertEqual(self.run_cli('build', '--model', 'chain', '--g', '0.5')[0], 2)
        self.assertEqual(self.run_cli('build', '--model', 'loop', '--K', '1')[0], 2)
        self.assertEqual(self.run_cli('build', '--charpoly', '--spectrum')[0], 2)
        self.assertEqual(self.run_cli('build', '--tol', '-1')[0], 2)

    def test_out_file(self):
        """Test --out writes the data to a file instead of stdout."""
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'matrix.csv')
            code, out, _ = self.run_cli('build', '--model', 'chain', '--K', '1', '--nu', '0.5', '--out', path)
            with open(path, encoding='utf-8') as f:
                written = f.read()
        self.assertEqual(code, 0)
        self.assertEqual(out, '')
        self.assertEqual(written, "n1,n2\n2,-1.5\n-0.5,2\n")

    def test_deterministic(self):
        """Test repeated runs print identical data."""
        args = ('build', '--g', '1.035', '--h', '1.035', '--z', '1.01', '--spectrum')
        self.assertEqual(self.run_cli(*args)[1], self.run_cli(*args)[1])


class TestScan(CLITestCase):
    """Test cases for the scan command."""

    def test_weak_coupling(self):
        """Test the n_real column of a short scan."""
        code, out, _ = self.run_cli('scan', '--gamma', '0', '--z', '0.5:1.5:0.5')
        self.assertEqual(code, 0)
        header, rows = self.rows(out)
        self.assertEqual(header[0], 'z')
        self.assertEqual(header[-2:], ['n_real', 'near_ep'])
        self.assertEqual(len(header), 1 + 8 + 8 + 2)
        self.assertEqual([row[0] for row in rows], ['0.5', '1', '1.5'])
        self.assertEqual(rows[0][-2:], ['8', 'false'])
        self.assertEqual(rows[1][-1], 'true')
        self.assertEqual(rows[2][-2], '4')

    def test_bad_grid(self):
        """Test malformed grids exit with 2."""
        self.assertEqual(self.run_cli('scan', '--z', '1:0:0.1')[0], 2)
        self.assertEqual(self.run_cli('scan', '--z', '0:1')[0], 2)

    def test_config_override(self):
        """Test --config overrides defaults and flags override --config."""
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'user.json')
            with open(path, 'w', encoding='utf-8') as f:
                json.dump({'scan': {'z': '0.1:0.3:0.1'}}, f)
            _, out, _ = self.run_cli('scan', '--config', path)
            self.assertEqual(len(self.rows(out)[1]), 3)
            _, out, _ = self.run_cli('scan', '--config', path, '--z', '0.1:0.2:0.1')
            self.assertEqual(len(self.rows(out)[1]), 2)

    def test_missing_config(self):
        """Test a missing config file exits with 2."""
        self.assertEqual(self.run_cli('scan', '--config', '/nonexistent/nhgraph.yaml')[0], 2)


class TestExceptionalPointCommand(CLITestCase):
    """Test cases for the ep command."""

    def test_loop_default(self):
        """Test the island edge at gamma = 1.035."""
        code, out, _ = self.run_cli('ep')
        self.assertEqual(code, 0)
        result = json.loads(out)
        self.assertEqual(result['model'], 'loop')
        self.assertLess(abs(result['z_ep'] - 1.022), 2e-3)

    def test_chain(self):
        """Test the chain exceptional point at nu = 1."""
        code, out, _ = self.run_cli('ep', '--model', 'chain', '--K', '2')
        self.assertEqual(code, 0)
        self.assertAlmostEqual(json.loads(out)['nu_ep'], 1.0, places=6)

    def test_no_transition(self):
        """Test a bracket without a change of n_real exits with 3."""
        self.assertEqual(self.run_cli('ep', '--bracket', '0.1', '0.5')[0], 3)

    def test_reversed_bracket(self):
        """Test a reversed bracket exits with 2."""
        self.assertEqual(self.run_cli('ep', '--bracket', '1.1', '1.001')[0], 2)


class TestBoundaryCommand(CLITestCase):
    """Test cases for the boundary command."""

    def test_default(self):
        """Test both branches are emitted."""
        code, out, _ = self.run_cli('boundary')
        self.assertEqual(code, 0)
        header, rows = self.rows(out)
        self.assertEqual(header, ['y', 'branch', 'mu_hat', 'lambda_hat_max', 'g', 'z_max'])
        self.assertEqual(len(rows), 128)
        self.assertEqual({row[1] for row in rows}, {'plus', 'minus'})

    def test_verify_column(self):
        """Test --verify adds a verified column and skips the pinch at y = -1."""
        code, out, diagnostics = self.run_cli('boundary', '--samples', '5', '--branch', 'plus', '--verify')
        self.assertEqual(code, 0)
        header, rows = self.rows(out)
        self.assertEqual(header[-1], 'verified')
        self.assertEqual(len(rows), 5)
        self.assertTrue(all(row[-1] in ('true', 'false', 'skipped') for row in rows))
        self.assertEqual(rows[-1][-1], 'skipped')
        self.assertIn('Boundary verification', diagnostics)

    def test_too_few_samples(self):
        """Test fewer than two samples exits with 2."""
        self.assertEqual(self.run_cli('boundary', '--samples', '1')[0], 2)


class TestMetricCommand(CLITestCase):
    """Test cases for the metric command."""

    def test_chain(self):
        """Test the default chain metric."""
        code, out, _ = self.run_cli('metric', '--nu', '0.5')
        self.assertEqual(code, 0)
        header, rows = self.rows(out)
        self.assertEqual(header, ['n1', 'n2'])
        self.assertLess(abs(float(rows[0][1])), 1e-10)

    def test_refusal(self):
        """Test a complex spectrum exits with 4."""
        code, out, diagnostics = self.run_cli('metric', '--nu', '1.5')
        self.assertEqual(code, 4)
        self.assertEqual(out, '')
        self.assertIn('ERROR', diagnostics)

    def test_loop_report(self):
        """Test the loop metric and its JSON validity report."""
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'report.json')
            code, out, _ = self.run_cli('metric', '--model', 'loop', '--report', path)
            with open(path, encoding='utf-8') as f:
                report = json.load(f)
        self.assertEqual(code, 0)
        self.assertEqual(len(self.rows(out)[1]), 8)
        self.assertTrue(report['symmetric'])
        self.assertTrue(report['spd'])
        self.assertTrue(report['intertwines'])

    def test_bad_weights(self):
        """Test malformed weights exit with 2."""
        self.assertEqual(self.run_cli('metric', '--weights', '1,x')[0], 2)
        self.assertEqual(self.run_cli('metric', '--weights', '1,2,3')[0], 2)


class TestPerturbAndFigure(CLITestCase):
    """Test cases for the perturb and figure commands."""

    def test_perturb_default(self):
        """Test the positive shift complexifies the levels next to the centre."""
        code, out, diagnostics = self.run_cli('perturb')
        self.assertEqual(code, 0)
        header, rows = self.rows(out)
        self.assertEqual(header[-2:], ['n_real', 'complex_levels'])
        self.assertEqual(len(rows), 21)
        self.assertEqual(rows[0][-1], '3 4 5 6')
        self.assertIn('two-noncentral-pairs', diagnostics)

    def test_perturb_negative(self):
        """Test the negative shift complexifies the central pair."""
        code, out, _ = self.run_cli('perturb', '--epsilon=-1e-5')
        self.assertEqual(code, 0)
        self.assertEqual(self.rows(out)[1][0][-1], '4 5')

    def test_figure_boundary(self):
        """Test the boundary figure preset."""
        code, out, _ = self.run_cli('figure', 'fig6')
        self.assertEqual(code, 0)
        self.assertEqual(len(self.rows(out)[1]), 402)

    def test_figure_scan(self):
        """Test a scan figure preset covers its grid."""
        code, out, _ = self.run_cli('figure', 'fig2')
        self.assertEqual(code, 0)
        self.assertEqual(len(self.rows(out)[1]), 601)

    def test_unknown_figure(self):
        """Test an unknown figure exits with 2 and lists the presets."""
        code, _, diagnostics = self.run_cli('figure', 'fig99')
        self.assertEqual(code, 2)
        self.assertIn('fig2', diagnostics)


class TestGlobalFlags(CLITestCase):
    """Test cases for flags shared by every command."""

    def test_no_command(self):
        """Test running without a command prints help and succeeds."""
        with contextlib.redirect_stdout(io.StringIO()):
            self.assertEqual(self.run_cli()[0], 0)

    def test_quiet(self):
        """Test --quiet silences diagnostics but not data."""
        code, out, diagnostics = self.run_cli('build', '--quiet')
        self.assertEqual(code, 0)
        self.assertTrue(out)
        self.assertEqual(diagnostics, '')

    def test_flags_before_command(self):
        """Test global flags are accepted before the subcommand."""
        code, out, _ = self.run_cli('--quiet', 'build', '--model', 'chain', '--K', '1', '--nu', '0.5')
        self.assertEqual(code, 0)
        self.assertEqual(out, "n1,n2\n2,-1.5\n-0.5,2\n")


if __name__ == "__main__":
    unittest.main()
