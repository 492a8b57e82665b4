"""Shared rich console setup for diagnostics."""

from rich.console import Console
from rich.theme import Theme

# Custom theme for consistent styling
NHGRAPH_THEME = Theme({
    "info": "cyan",
    "warning": "yellow",
    "error": "bold red",
    "success": "green",
    "value": "magenta",
})


def make_console(quiet: bool = False) -> Console:
    """Create a stderr console so stdout stays reserved for data."""
    return Console(stderr=True, theme=NHGRAPH_THEME, quiet=quiet)
