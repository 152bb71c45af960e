"""Low-ply generating sets of graph cycle spaces.

Graphs are passed as ``(n, edges)`` with 0-based vertex ids; an edge's id is
its position in ``edges``. Cycle sets are lists of edge-id lists.
"""

from ._plybasis import (
    ParseError,
    PreconditionError,
    SizeError,
    UsageError,
    basis_number,
    build_adhesion,
    build_pw4t,
    cycle_rank,
    exact_pathwidth,
    fh,
    fundamental,
    is_generating_set,
    maxply,
    normalize,
    parse_graph,
    ply_counts,
    run_cli,
    skeleton_vertices,
    validate_decomposition,
)

__all__ = [
    "ParseError",
    "PreconditionError",
    "SizeError",
    "UsageError",
    "basis_number",
    "build_adhesion",
    "build_pw4t",
    "cycle_rank",
    "exact_pathwidth",
    "fh",
    "fundamental",
    "is_generating_set",
    "max_ply",
    "maxply",
    "normalize",
    "parse_graph",
    "ply_counts",
    "run_cli",
    "skeleton_vertices",
    "validate_decomposition",
]


def max_ply(n, edges, basis):
    """Largest number of basis elements sharing one edge (0 for an empty set)."""
    return max(ply_counts(n, edges, basis), default=0)
