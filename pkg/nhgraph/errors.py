"""Exception hierarchy for the nhgraph package.

Every exception carries the exit code the command line front end reports
for it, so library code raises and only the CLI translates.
"""


class NHGraphError(Exception):
    """Base class for all nhgraph errors."""

    exit_code = 1


class ConfigurationError(NHGraphError, ValueError):
    """Invalid user input: graph specs, grids, tolerances, config files."""

    exit_code = 2


class GraphSpecError(ConfigurationError):
    """A graph description that cannot be turned into a Hamiltonian."""


class SearchError(NHGraphError):
    """A numerical search did not produce an answer."""

    exit_code = 3


class BracketError(SearchError):
    """Both ends of a bracket show the same reality count."""


class ConvergenceError(SearchError):
    """An iterative solver hit its iteration cap."""


class DegenerateIslandError(SearchError):
    """A stability window too thin to verify at the requested margin."""


class PhysicalRefusalError(NHGraphError):
    """The request has no physical answer (complex spectrum, EP)."""

    exit_code = 4


class MetricRefusedError(PhysicalRefusalError):
    """No real positive-definite metric exists for the Hamiltonian."""
