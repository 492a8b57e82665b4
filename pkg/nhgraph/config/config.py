"""Configuration module for the nhgraph application."""

import math
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import numpy as np
import yaml
from rich.console import Console

from nhgraph.errors import ConfigurationError
from nhgraph.ui.console import make_console

# Paths
DEFAULT_CONFIG_PATH = Path(__file__).parent / "default-config.yaml"


def load_yaml_config(file_path: Path) -> Dict[str, Any]:
    """Load a YAML (or JSON) configuration file."""
    with open(file_path, 'r', encoding='utf-8') as f:
        data = yaml.safe_load(f) or {}
    if not isinstance(data, dict):
        raise ConfigurationError(f"Configuration in {file_path} must be a mapping")
    return data


def parse_grid(text: Union[str, List[float]]) -> np.ndarray:
    """Parse a ``start:stop:step`` grid description (stop inclusive).

    Args:
        text: Grid string, or an explicit list of values

    Returns:
        Strictly increasing array of grid points
    """
    if isinstance(text, (list, tuple)):
        values = np.asarray(text, dtype=float)
        if values.size == 0:
            raise ConfigurationError("Empty grid")
        if values.size > 1 and np.any(np.diff(values) <= 0):
            raise ConfigurationError("Grid values must be strictly increasing")
        return values

    parts = str(text).split(':')
    if len(parts) != 3:
        raise ConfigurationError(f"Grid '{text}' is not of the form start:stop:step")
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError:
        raise ConfigurationError(f"Grid '{text}' contains non-numeric entries")
    if not all(math.isfinite(v) for v in (start, stop, step)):
        raise ConfigurationError(f"Grid '{text}' contains non-finite entries")
    if step <= 0:
        raise ConfigurationError(f"Grid step must be positive, got {step}")
    if not start < stop:
        raise ConfigurationError(f"Grid start must be below stop, got {start} >= {stop}")

    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return start + step * np.arange(count)


def require_positive(name: str, value: float) -> float:
    """Validate a strictly positive tolerance-like parameter."""
    if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
        raise ConfigurationError(f"{name} must be a positive number, got {value!r}")
    return float(value)


class Config:
    """Configuration manager for the application."""

    def __init__(self, config_path: Optional[Path] = None, console: Optional[Console] = None):
        """Initialize the configuration.

        Args:
            config_path: Optional path to a user YAML/JSON config file
            console: Console for load diagnostics; silent if None
        """
        self.config_path = Path(config_path) if config_path else None
        self.console = console or make_console(quiet=True)
        self._config: Dict[str, Any] = {}
        self._load_config()

    def _load_config(self) -> None:
        """Load the shipped defaults, then the user file if one was given."""
        self.console.print(f"[info][INFO] Loading default configuration from: {DEFAULT_CONFIG_PATH}[/info]")
        try:
            self._config = load_yaml_config(DEFAULT_CONFIG_PATH)
        except (OSError, yaml.YAMLError) as e:
            raise ConfigurationError(f"Failed to load default config: {e}")

        if self.config_path is None:
            return

        if not self.config_path.exists():
            raise ConfigurationError(f"Config file not found: {self.config_path}")
        self.console.print(f"[info][INFO] Loading user configuration from: {self.config_path}[/info]")
        try:
            user_config = load_yaml_config(self.config_path)
        except yaml.YAMLError as e:
            raise ConfigurationError(f"Failed to parse {self.config_path}: {e}")
        self._update_config(user_config)

    def _update_config(self, new_config: Dict[str, Any], target: Optional[Dict[str, Any]] = None) -> None:
        """Recursively update the configuration.

        Args:
            new_config: New configuration values to apply
            target: The target dictionary to update (defaults to self._config)
        """
        if target is None:
            target = self._config

        for key, value in new_config.items():
            if key in target and isinstance(target[key], dict) and isinstance(value, dict):
                self._update_config(value, target[key])
            else:
                target[key] = value

    def get(self, *keys: str, default: Any = None) -> Any:
        """Get a nested config value by key path."""
        value = self._config
        for key in keys:
            if isinstance(value, dict) and key in value:
                value = value[key]
            else:
                return default
        return value

    def get_command_defaults(self, command: str) -> Dict[str, Any]:
        """Get the default parameter block of a CLI command."""
        return dict(self.get(command) or {})

    def get_reality_tol(self) -> float:
        """Get the tolerance below which an imaginary part counts as zero."""
        return require_positive("tolerances.reality", self.get("tolerances", "reality", default=1e-8))

    def get_bisection_width(self) -> float:
        """Get the final bracket width for exceptional-point bisection."""
        return require_positive("tolerances.bisection_width",
                                self.get("tolerances", "bisection_width", default=1e-10))

    def get_perturbation_tol(self) -> float:
        """Get the reality tolerance used for roots of shifted determinants."""
        return require_positive("tolerances.perturbation_reality",
                                self.get("tolerances", "perturbation_reality", default=1e-6))

    def get_significant_digits(self) -> int:
        """Get the number of significant digits for CSV/JSON floats."""
        digits = self.get("output", "significant_digits", default=12)
        if not isinstance(digits, int) or digits < 1:
            raise ConfigurationError(f"output.significant_digits must be a positive integer, got {digits!r}")
        return digits

    def get_figure_names(self) -> List[str]:
        """Get the names of the configured figure presets."""
        return sorted((self.get("figures") or {}).keys())

    def get_figure(self, name: str) -> Dict[str, Any]:
        """Get a figure preset by name."""
        figures = self.get("figures") or {}
        if name not in figures:
            raise ConfigurationError(
                f"Unknown figure '{name}'. Valid names: {', '.join(self.get_figure_names())}"
            )
        return dict(figures[name])
