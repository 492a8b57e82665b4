"""nhgraph - Spectra, exceptional points and metrics of non-Hermitian graph Hamiltonians."""

from .config import Config, DEFAULT_CONFIG_PATH
from .graphs import GraphSpec, build_coupled_chain, build_hamiltonian, build_loop_graph
from .spectra import Spectrum, classify_reality, eigenvalues
from .__main__ import main

__version__ = "0.1.0"

__all__ = [
    'Config',
    'DEFAULT_CONFIG_PATH',
    'GraphSpec',
    'Spectrum',
    'build_coupled_chain',
    'build_hamiltonian',
    'build_loop_graph',
    'classify_reality',
    'eigenvalues',
    'main'
]
