"""Command line interface for the nhgraph application."""

import argparse
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, TextIO

from rich.console import Console
from rich.progress import BarColumn, Progress, TextColumn
from rich.table import Table

from nhgraph.algebra.charpoly import characteristic_polynomial, format_polynomial
from nhgraph.config import Config, parse_grid, require_positive
from nhgraph.errors import (
    ConfigurationError,
    DegenerateIslandError,
    GraphSpecError,
    MetricRefusedError,
    NHGraphError,
)
from nhgraph.graphs.hamiltonians import GraphKind, GraphSpec, build_hamiltonian, node_labels
from nhgraph.metric.operators import metric_from_left_eigenvectors, validity_report
from nhgraph.reports.figures import FigureBuilder
from nhgraph.reports.writers import DataWriter
from nhgraph.spectra.eigensolver import eigenvalues
from nhgraph.stability.boundary import BoundaryBranch, boundary_curve, verify_boundary
from nhgraph.stability.perturbation import perturbation_scenarios
from nhgraph.stability.scan import (
    find_chain_exceptional_point,
    find_exceptional_point,
    scan_z,
)
from nhgraph.ui.console import make_console

EPILOG = (
    "Parameters are resolved as: command line flags, then the file given with "
    "--config (YAML or JSON), then the shipped defaults."
)

_LOOP_COUPLINGS = ("g", "h", "z")


class CLI:
    """Command line interface for the nhgraph application."""

    def __init__(self, console: Optional[Console] = None, stdout: Optional[TextIO] = None):
        """Initialize the CLI interface.

        Args:
            console: Diagnostics console; a stderr console if None
            stdout: Stream receiving CSV/JSON data when --out is not given
        """
        self.console = console or make_console()
        self.stdout = stdout
        self.config: Optional[Config] = None
        self.writer = DataWriter()
        self.tol = 1e-8
        self.out: Optional[Path] = None

    def run(self, args: Optional[List[str]] = None) -> int:
        """Run the CLI application.

        Args:
            args: Command line arguments

        Returns:
            Process exit code
        """
        parser = self._create_argument_parser()
        try:
            parsed_args = parser.parse_args(args)
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else 2

        if parsed_args.command is None:
            parser.print_help()
            return 0

        if getattr(parsed_args, 'quiet', False):
            self.console.quiet = True

        handlers = {
            'build': self._handle_build,
            'scan': self._handle_scan,
            'ep': self._handle_ep,
            'boundary': self._handle_boundary,
            'metric': self._handle_metric,
            'perturb': self._handle_perturb,
            'figure': self._handle_figure,
        }

        try:
            self._configure(parsed_args)
            handlers[parsed_args.command](parsed_args)
        except NHGraphError as e:
            self.console.print(f"[error][ERROR] {e}[/error]")
            return e.exit_code
        except OSError as e:
            self.console.print(f"[error][ERROR] {e}[/error]")
            return ConfigurationError.exit_code
        return 0

    def _create_argument_parser(self) -> argparse.ArgumentParser:
        """Create the argument parser for CLI commands.

        Returns:
            Configured argument parser
        """
        # Global flags, accepted before or after the subcommand
        common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
        common.add_argument('--config', help='YAML or JSON file overriding the defaults')
        common.add_argument('--out', help='Write data to this file instead of stdout')
        common.add_argument('--tol', type=float, help='Reality tolerance for imaginary parts')
        common.add_argument('--quiet', action='store_true', help='Suppress diagnostics on stderr')

        parser = argparse.ArgumentParser(
            prog='nhgraph',
            description='nhgraph - Spectra, exceptional points and metrics of non-Hermitian graph Hamiltonians',
            epilog=EPILOG,
            parents=[common],
        )

        subparsers = parser.add_subparsers(dest='command', help='Command')

        # Build command
        build_parser = subparsers.add_parser('build', parents=[common], epilog=EPILOG,
                                             help='Emit a Hamiltonian matrix as CSV')
        build_parser.add_argument('--model', choices=['chain', 'loop'], help='Graph kind')
        build_parser.add_argument('--K', type=int, help='Lattice half-length')
        build_parser.add_argument('--nu', type=float, help='Chain coupling')
        build_parser.add_argument('--g', type=float, help='Loop coupling g')
        build_parser.add_argument('--h', type=float, help='Loop coupling h')
        build_parser.add_argument('--z', type=float, help='Outer edge coupling z')
        build_parser.add_argument('--spec', help='JSON graph spec file (overrides model flags)')
        what = build_parser.add_mutually_exclusive_group()
        what.add_argument('--charpoly', action='store_true', help='Emit characteristic polynomial coefficients')
        what.add_argument('--spectrum', action='store_true', help='Emit the sorted spectrum as one CSV row')

        # Scan command
        scan_parser = subparsers.add_parser('scan', parents=[common], epilog=EPILOG,
                                            help='Loop spectrum along a z grid')
        scan_parser.add_argument('--gamma', type=float, help='Symmetric coupling (g+h)/2')
        scan_parser.add_argument('--delta', type=float, help='Antisymmetric coupling (g-h)/2')
        scan_parser.add_argument('--K', type=int, help='Loop wedge length')
        scan_parser.add_argument('--z', help='Grid start:stop:step (stop inclusive)')

        # EP command
        ep_parser = subparsers.add_parser('ep', parents=[common], epilog=EPILOG,
                                          help='Locate an exceptional point by bisection')
        ep_parser.add_argument('--model', choices=['chain', 'loop'], help='Graph kind')
        ep_parser.add_argument('--gamma', type=float, help='Symmetric loop coupling')
        ep_parser.add_argument('--delta', type=float, help='Antisymmetric loop coupling')
        ep_parser.add_argument('--K', type=int, help='Lattice half-length')
        ep_parser.add_argument('--bracket', type=float, nargs=2, metavar=('LO', 'HI'),
                               help='Coupling bracket (z for loops, nu for chains)')

        # Boundary command
        boundary_parser = subparsers.add_parser('boundary', parents=[common], epilog=EPILOG,
                                                help='Trace the strong-coupling island boundary')
        boundary_parser.add_argument('--samples', type=int, help='Samples per branch (>= 2)')
        boundary_parser.add_argument('--branch', choices=['plus', 'minus', 'both'], help='Branches to emit')
        boundary_parser.add_argument('--margin', type=float, help='Relative z margin of the verification')
        boundary_parser.add_argument('--verify', action='store_true', help='Check every sample against the eigensolver')

        # Metric command
        metric_parser = subparsers.add_parser('metric', parents=[common], epilog=EPILOG,
                                              help='Construct a metric operator')
        metric_parser.add_argument('--model', choices=['chain', 'loop'], help='Graph kind')
        metric_parser.add_argument('--K', type=int, help='Lattice half-length')
        metric_parser.add_argument('--nu', type=float, help='Chain coupling')
        metric_parser.add_argument('--g', type=float, help='Loop coupling g')
        metric_parser.add_argument('--h', type=float, help='Loop coupling h')
        metric_parser.add_argument('--z', type=float, help='Outer edge coupling z')
        metric_parser.add_argument('--weights', help='Comma separated positive weights, one per level')
        metric_parser.add_argument('--report', help='Write the validity report JSON to this file')

        # Perturb command
        perturb_parser = subparsers.add_parser('perturb', parents=[common], epilog=EPILOG,
                                               help='Classify levels complexified by a shifted determinant')
        perturb_parser.add_argument('--gamma', type=float, help='Symmetric loop coupling')
        perturb_parser.add_argument('--delta', type=float, help='Antisymmetric loop coupling')
        perturb_parser.add_argument('--epsilon', type=float, help='Constant added to det(E - H)')
        perturb_parser.add_argument('--z', help='Grid start:stop:step (stop inclusive)')

        # Figure command
        figure_parser = subparsers.add_parser('figure', parents=[common], epilog=EPILOG,
                                              help='Emit the dataset of a figure preset')
        figure_parser.add_argument('name', help='Preset name, e.g. fig2')

        return parser

    def _configure(self, args: argparse.Namespace) -> None:
        """Load configuration and apply the global flags."""
        config_path = getattr(args, 'config', None)
        self.config = Config(Path(config_path) if config_path else None, console=self.console)
        self.writer = DataWriter(self.config.get_significant_digits())
        tol = getattr(args, 'tol', None)
        self.tol = require_positive('--tol', tol) if tol is not None else self.config.get_reality_tol()
        out = getattr(args, 'out', None)
        self.out = Path(out) if out else None

    def _resolve(self, args: argparse.Namespace, defaults: Dict[str, Any], name: str) -> Any:
        """Flag value if given, otherwise the configured default."""
        value = getattr(args, name, None)
        return value if value is not None else defaults.get(name)

    def _emit(self, text: str) -> None:
        DataWriter.emit(text, self.out, self.stdout)
        if self.out is not None:
            self.console.print(f"[success]Wrote {self.out}[/success]")

    def _graph_spec(self, args: argparse.Namespace, defaults: Dict[str, Any]) -> GraphSpec:
        """Build a GraphSpec from flags layered over a defaults block."""
        model = self._resolve(args, defaults, 'model')
        try:
            kind = GraphKind(model)
        except ValueError:
            raise GraphSpecError(f"Unknown model {model!r} (expected 'chain' or 'loop')")

        block = dict(defaults)
        block.update(defaults.get(kind.value) or {})
        if kind is GraphKind.CHAIN:
            stray = [name for name in _LOOP_COUPLINGS if getattr(args, name, None) is not None]
            if stray:
                raise GraphSpecError(f"Chain models take --nu only, got --{', --'.join(stray)}")
            couplings = {'nu': self._resolve(args, block, 'nu')}
        else:
            if getattr(args, 'nu', None) is not None:
                raise GraphSpecError("Loop models take --g, --h and --z, not --nu")
            couplings = {name: self._resolve(args, block, name) for name in _LOOP_COUPLINGS}
        couplings = {k: (0.0 if v is None else v) for k, v in couplings.items()}
        return GraphSpec(kind=kind, K=self._resolve(args, block, 'K'), couplings=couplings)

    def _handle_build(self, args: argparse.Namespace) -> None:
        """Handle the build command.

        Args:
            args: Parsed arguments
        """
        if args.spec:
            spec = GraphSpec.from_json(Path(args.spec).read_text(encoding='utf-8'))
        else:
            spec = self._graph_spec(args, self.config.get_command_defaults('build'))
        matrix = build_hamiltonian(spec)
        self.console.print(f"[info]Built {spec.kind.value} Hamiltonian of dimension {spec.dim}[/info]")

        if args.charpoly:
            polynomial = characteristic_polynomial(matrix)
            self.console.print(f"[value]det(E - H) = {format_polynomial(polynomial)}[/value]")
            self._emit(self.writer.polynomial_csv(polynomial))
        elif args.spectrum:
            spectrum = eigenvalues(matrix, self.tol)
            self.console.print(f"[info]{spectrum.n_real} of {spectrum.dim} eigenvalues real[/info]")
            self._emit(self.writer.spectrum_csv([spectrum]))
        else:
            self._emit(self.writer.matrix_csv(matrix, node_labels(spec)))

    def _handle_scan(self, args: argparse.Namespace) -> None:
        """Handle the scan command.

        Args:
            args: Parsed arguments
        """
        defaults = self.config.get_command_defaults('scan')
        gamma = float(self._resolve(args, defaults, 'gamma'))
        delta = float(self._resolve(args, defaults, 'delta'))
        K = self._resolve(args, defaults, 'K')
        grid = parse_grid(self._resolve(args, defaults, 'z'))

        with Progress(
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            TextColumn("[cyan]({task.completed}/{task.total})"),
            console=self.console,
            transient=True,
        ) as progress:
            task = progress.add_task(f"Scanning {len(grid)} z values...", total=len(grid))
            result = scan_z(gamma, delta, grid, K=K, tol=self.tol,
                            on_point=lambda z, s: progress.advance(task))

        self._print_transitions(result)
        self._emit(self.writer.scan_csv(result))

    def _print_transitions(self, result) -> None:
        counts = result.n_real
        table = Table(title=f"Reality transitions (gamma={result.gamma:g}, delta={result.delta:g})")
        table.add_column("z from", style="cyan")
        table.add_column("z to", style="cyan")
        table.add_column("n_real", justify="center", style="magenta")
        for i in result.transitions():
            table.add_row(self.writer.number(result.z[i]), self.writer.number(result.z[i + 1]),
                          f"{counts[i]} -> {counts[i + 1]}")
        if not result.transitions():
            self.console.print(f"[info]n_real = {counts[0]} on the whole grid[/info]")
        else:
            self.console.print(table)
        flagged = result.z[result.near_ep]
        if flagged.size:
            listed = ", ".join(self.writer.number(z) for z in flagged[:5])
            more = f" and {flagged.size - 5} more" if flagged.size > 5 else ""
            self.console.print(f"[warning]Levels nearly merge at z = {listed}{more}; "
                               f"n_real there is not reliable[/warning]")

    def _handle_ep(self, args: argparse.Namespace) -> None:
        """Handle the ep command.

        Args:
            args: Parsed arguments
        """
        defaults = self.config.get_command_defaults('ep')
        model = self._resolve(args, defaults, 'model')
        if model not in ('chain', 'loop'):
            raise ConfigurationError(f"Unknown model {model!r} (expected 'chain' or 'loop')")
        block = dict(defaults.get(model) or {})
        K = self._resolve(args, block, 'K')
        bracket = self._resolve(args, block, 'bracket')
        if not isinstance(bracket, (list, tuple)) or len(bracket) != 2:
            raise ConfigurationError(f"Bracket must be two numbers, got {bracket!r}")
        lo, hi = (float(v) for v in bracket)
        width = self.config.get_bisection_width()

        if model == 'chain':
            value = find_chain_exceptional_point(K, lo, hi, tol=self.tol, width=width)
            result = {'model': 'chain', 'K': K, 'bracket': [lo, hi], 'nu_ep': value}
        else:
            gamma = float(self._resolve(args, defaults, 'gamma'))
            delta = float(self._resolve(args, defaults, 'delta'))
            value = find_exceptional_point(gamma, delta, lo, hi, K=K, tol=self.tol, width=width)
            result = {'model': 'loop', 'K': K, 'gamma': gamma, 'delta': delta,
                      'bracket': [lo, hi], 'z_ep': value}

        self.console.print(f"[success]Exceptional point at {self.writer.number(value)}[/success]")
        self._emit(self.writer.json_text(result))

    def _handle_boundary(self, args: argparse.Namespace) -> None:
        """Handle the boundary command.

        Args:
            args: Parsed arguments
        """
        defaults = self.config.get_command_defaults('boundary')
        samples = self._resolve(args, defaults, 'samples')
        branch = self._resolve(args, defaults, 'branch')
        margin = require_positive('margin', self._resolve(args, defaults, 'margin'))
        if branch == 'both':
            branches = (BoundaryBranch.MINUS, BoundaryBranch.PLUS)
        elif branch in ('plus', 'minus'):
            branches = (BoundaryBranch(branch),)
        else:
            raise ConfigurationError(f"Unknown branch {branch!r} (expected plus, minus or both)")

        curve = boundary_curve(samples, branches)
        verified = None
        if args.verify:
            verified = []
            for sample in curve:
                try:
                    verified.append("true" if verify_boundary(sample, margin, self.tol) else "false")
                except DegenerateIslandError:
                    verified.append("skipped")
            self._print_verification(curve, verified)

        self._emit(self.writer.boundary_csv(curve, verified))

    def _print_verification(self, curve, verified: List[str]) -> None:
        table = Table(title="Boundary verification")
        table.add_column("Branch", style="cyan")
        table.add_column("Passed", justify="right", style="green")
        table.add_column("Failed", justify="right", style="red")
        table.add_column("Skipped", justify="right", style="yellow")
        for branch in BoundaryBranch:
            marks = [v for s, v in zip(curve, verified) if s.branch is branch]
            if marks:
                table.add_row(branch.value, str(marks.count("true")),
                              str(marks.count("false")), str(marks.count("skipped")))
        self.console.print(table)

    def _handle_metric(self, args: argparse.Namespace) -> None:
        """Handle the metric command.

        Args:
            args: Parsed arguments
        """
        defaults = self.config.get_command_defaults('metric')
        spec = self._graph_spec(args, defaults)
        hamiltonian = build_hamiltonian(spec)

        weights = self._resolve(args, defaults, 'weights')
        if isinstance(weights, str):
            try:
                weights = [float(w) for w in weights.split(',')]
            except ValueError:
                raise ConfigurationError(f"Weights must be comma separated numbers, got {weights!r}")

        candidate = metric_from_left_eigenvectors(hamiltonian, weights, tol=self.tol)
        report = validity_report(candidate, hamiltonian)
        if not candidate.is_valid:
            raise MetricRefusedError(
                f"Constructed metric fails validation (symmetric={report['symmetric']}, "
                f"spd={report['spd']}, residual={report['residual']:.3g})"
            )

        table = Table(title=f"Metric for {spec.kind.value} K={spec.K}")
        table.add_column("Check", style="cyan")
        table.add_column("Value", style="magenta")
        for key in ('symmetric', 'spd', 'intertwines', 'residual', 'min_eigenvalue', 'bandwidth'):
            value = report[key]
            table.add_row(key, self.writer.number(value) if isinstance(value, float) else str(value))
        self.console.print(table)

        if args.report:
            DataWriter.emit(self.writer.json_text(report), args.report)
            self.console.print(f"[success]Wrote {args.report}[/success]")
        self._emit(self.writer.matrix_csv(candidate.theta, node_labels(spec)))

    def _handle_perturb(self, args: argparse.Namespace) -> None:
        """Handle the perturb command.

        Args:
            args: Parsed arguments
        """
        defaults = self.config.get_command_defaults('perturbation')
        result = perturbation_scenarios(
            float(self._resolve(args, defaults, 'gamma')),
            parse_grid(self._resolve(args, defaults, 'z')),
            float(self._resolve(args, defaults, 'epsilon')),
            delta=float(self._resolve(args, defaults, 'delta') or 0.0),
            tol=self.config.get_perturbation_tol(),
        )
        self.console.print(f"[success]Scenario: {result.scenario.value}[/success]")
        self._emit(self.writer.perturbation_csv(result))

    def _handle_figure(self, args: argparse.Namespace) -> None:
        """Handle the figure command.

        Args:
            args: Parsed arguments
        """
        builder = FigureBuilder(self.config, self.writer, tol=self.tol)
        figure = builder.build(args.name)

        table = Table(title=f"{figure.name} ({figure.kind})")
        table.add_column("Quantity", style="cyan")
        table.add_column("Value", style="magenta")
        for key, value in figure.summary.items():
            table.add_row(key, str(value))
        self.console.print(table)
        self._emit(figure.csv)
