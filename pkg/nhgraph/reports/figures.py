"""Datasets behind the spectral, boundary and perturbation figures."""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from nhgraph.config import Config, parse_grid
from nhgraph.errors import ConfigurationError
from nhgraph.reports.writers import DataWriter
from nhgraph.stability.boundary import boundary_curve
from nhgraph.stability.perturbation import perturbation_scenarios
from nhgraph.stability.scan import scan_z


@dataclass
class FigureData:
    """CSV text of a figure with a short summary for the console."""

    name: str
    kind: str
    csv: str
    summary: Dict[str, Any] = field(default_factory=dict)


class FigureBuilder:
    """Builds figure datasets from the presets of the configuration."""

    KINDS = ("scan", "boundary", "perturbation")

    def __init__(self, config: Config, writer: Optional[DataWriter] = None, tol: Optional[float] = None):
        """Initialize the builder.

        Args:
            config: Configuration holding the figure presets
            writer: Output formatter
            tol: Reality tolerance; the configured one if None
        """
        self.config = config
        self.writer = writer or DataWriter(config.get_significant_digits())
        self.tol = tol if tol is not None else config.get_reality_tol()

    def build(self, name: str) -> FigureData:
        """Compute the dataset of a named figure preset."""
        preset = self.config.get_figure(name)
        kind = preset.get("kind")
        if kind == "scan":
            return self._scan(name, preset)
        if kind == "boundary":
            return self._boundary(name, preset)
        if kind == "perturbation":
            return self._perturbation(name, preset)
        raise ConfigurationError(
            f"Figure '{name}' has kind {kind!r}; expected one of {', '.join(self.KINDS)}"
        )

    def _scan(self, name: str, preset: Dict[str, Any]) -> FigureData:
        result = scan_z(
            float(preset.get("gamma", 0.0)),
            float(preset.get("delta", 0.0)),
            parse_grid(preset["z"]),
            K=int(preset.get("K", 3)),
            tol=self.tol,
        )
        transitions = [float(result.z[i]) for i in result.transitions()]
        return FigureData(
            name=name,
            kind="scan",
            csv=self.writer.scan_csv(result),
            summary={
                "points": len(result),
                "n_real range": f"{result.n_real.min()}..{result.n_real.max()}",
                "transitions near z": ", ".join(self.writer.number(z) for z in transitions) or "none",
            },
        )

    def _boundary(self, name: str, preset: Dict[str, Any]) -> FigureData:
        samples = boundary_curve(int(preset.get("samples", 64)))
        return FigureData(
            name=name,
            kind="boundary",
            csv=self.writer.boundary_csv(samples),
            summary={
                "samples": len(samples),
                "min g": self.writer.number(min(s.g for s in samples)),
                "max z_max": self.writer.number(max(s.z_max for s in samples)),
            },
        )

    def _perturbation(self, name: str, preset: Dict[str, Any]) -> FigureData:
        result = perturbation_scenarios(
            float(preset.get("gamma", 1.035)),
            parse_grid(preset["z"]),
            float(preset["epsilon"]),
            delta=float(preset.get("delta", 0.0)),
            tol=self.config.get_perturbation_tol(),
        )
        return FigureData(
            name=name,
            kind="perturbation",
            csv=self.writer.perturbation_csv(result),
            summary={
                "points": len(result.records),
                "epsilon": self.writer.number(result.epsilon),
                "scenario": result.scenario.value,
            },
        )
