"""Graphs as occupation-number (Fock) states.

Each vertex row of an adjacency matrix is a Fock basis state whose
occupation numbers count edges. Edges are added and removed with normalized
ladder operators; vertex deletion and contraction are built on top of them.
Simple graphs use fermionic modes (occupation at most one), multigraphs use
bosonic modes.
"""

from .edges import EdgeOpKind, EdgeOpSpec, add_edges, ae_apply_row, de_apply_row, delete_edges
from .errors import FockGraphError
from .fock import (
    Amplitude,
    Mode,
    RowState,
    apply_annihilation,
    apply_creation,
    build_row_from_occupations,
    normalize,
    vacuum,
)
from .graph import (
    GraphState,
    Orientation,
    edge_multiplicity,
    empty_graph,
    from_adjacency,
    neighbors,
    to_adjacency,
    validate,
)
from .vertices import (
    ContractionReport,
    add_vertex,
    clean_neighbor_entries,
    clean_row,
    contract,
    delete_vertex,
)

__version__ = "0.1.0"
