"""Hamiltonian builders for chain and loop graphs."""

from .hamiltonians import (
    GraphKind,
    GraphSpec,
    ParameterPoint,
    adjacency,
    build_coupled_chain,
    build_free_chain,
    build_hamiltonian,
    build_loop_graph,
    loop_branch_indices,
    node_labels,
    reparameterize,
    unreparameterize,
)

__all__ = [
    'GraphKind',
    'GraphSpec',
    'ParameterPoint',
    'adjacency',
    'build_coupled_chain',
    'build_free_chain',
    'build_hamiltonian',
    'build_loop_graph',
    'loop_branch_indices',
    'node_labels',
    'reparameterize',
    'unreparameterize',
]
