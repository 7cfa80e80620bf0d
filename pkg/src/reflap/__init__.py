"""Reflected Neumann graph Laplacians for graphs with boundary vertices.

Build a graph with a designated boundary, double it across the boundary,
assemble the Dirichlet and reflected Neumann operators, eigendecompose them,
and certify the Cheeger inequality for the first nontrivial eigenvalue of the
normalized reflected Laplacian against the exact boundary-weighted Cheeger
constant.
"""

from .cheeger import (
    CheegerReport,
    CutResult,
    cheeger_exact,
    edge_measure,
    standard_cheeger_exact,
    sweep_cut,
    verify_theorem,
    volume,
)
from .errors import ReflapError
from .graphs import (
    BoundaryGraph,
    DoubledGraph,
    barbell_graph,
    cycle_graph,
    double,
    generate,
    grid_graph,
    induced_subgraph,
    new_boundary_graph,
    parse_graph,
    path_graph,
    serialize_graph,
)
from .operators import AdjacencyBlocks, OperatorSet, adjacency_blocks, assemble, dirichlet_laplacian
from .spectra import (
    ParityReport,
    ReflectedSpectrum,
    Spectrum,
    dirichlet_spectrum,
    parity_classify,
    path_closed_form,
    reflected_spectrum,
    sym_eig,
)

__all__ = [
    "AdjacencyBlocks",
    "BoundaryGraph",
    "CheegerReport",
    "CutResult",
    "DoubledGraph",
    "OperatorSet",
    "ParityReport",
    "ReflapError",
    "ReflectedSpectrum",
    "Spectrum",
    "adjacency_blocks",
    "assemble",
    "barbell_graph",
    "cheeger_exact",
    "cycle_graph",
    "dirichlet_laplacian",
    "dirichlet_spectrum",
    "double",
    "edge_measure",
    "generate",
    "grid_graph",
    "induced_subgraph",
    "new_boundary_graph",
    "parity_classify",
    "parse_graph",
    "path_closed_form",
    "path_graph",
    "reflected_spectrum",
    "serialize_graph",
    "standard_cheeger_exact",
    "sweep_cut",
    "sym_eig",
    "verify_theorem",
    "volume",
]

__version__ = "0.1.0"
