"""Graphs stored as one Fock row per vertex.

Row ``i`` of a :class:`GraphState` is the occupation-number state whose
entry ``j`` counts the edges between vertices ``i`` and ``j``; the rows
taken together are the adjacency matrix. Undirected graphs keep each edge
twice (rows ``i`` and ``j``) and the symmetry is an invariant, not a storage
trick.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import (
    ExclusionError,
    InvalidDimensionError,
    InvalidEntryError,
    LabelError,
    LoopError,
    SymmetryError,
    UnknownVertexError,
    VertexIndexError,
)
from .fock import Mode, RowState, build_row_from_occupations

__all__ = [
    "Orientation",
    "GraphState",
    "Violation",
    "from_adjacency",
    "to_adjacency",
    "empty_graph",
    "neighbors",
    "edge_multiplicity",
    "validate",
]


class Orientation(enum.Enum):
    DIRECTED = "directed"
    UNDIRECTED = "undirected"


@dataclass(frozen=True)
class GraphState:
    """Immutable collection of vertex rows.

    The constructor does not check invariants so that broken states can be
    built by hand and inspected with :func:`validate`. Use
    :func:`from_adjacency` for checked construction.
    """

    rows: tuple[RowState, ...]
    mode: Mode
    orientation: Orientation
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        labels = tuple(str(lab) for lab in self.labels) or tuple(
            str(i + 1) for i in range(len(self.rows))
        )
        object.__setattr__(self, "labels", labels)

    @property
    def n_vertices(self):
        return len(self.rows)

    @property
    def directed(self):
        return self.orientation is Orientation.DIRECTED

    def index(self, label) -> int:
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise UnknownVertexError(f"no vertex labelled {label!r}") from None

    def check_index(self, i):
        if not 0 <= i < self.n_vertices:
            raise VertexIndexError(f"vertex index {i} out of range for |V|={self.n_vertices}")
        return i

    def with_rows(self, rows, labels=None) -> GraphState:
        return replace(self, rows=tuple(rows), labels=self.labels if labels is None else tuple(labels))

    def __str__(self):
        lines = [f"GraphState({self.mode.value}, {self.orientation.value}, |V|={self.n_vertices})"]
        for lab, row in zip(self.labels, self.rows):
            lines.append(f"  {lab}: {row}")
        return "\n".join(lines)


def _as_matrix(matrix):
    m = np.asarray(matrix)
    if m.size == 0:
        return np.zeros((0, 0), dtype=np.int64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InvalidDimensionError(f"adjacency matrix must be square, got shape {m.shape}")
    if not np.issubdtype(m.dtype, np.integer):
        if not np.all(np.mod(m, 1) == 0):
            raise InvalidEntryError("adjacency entries must be integers")
    return m.astype(np.int64)


def from_adjacency(matrix, mode: Mode, orientation: Orientation, labels=None) -> GraphState:
    """Encode an adjacency matrix as normalized Fock rows."""
    m = _as_matrix(matrix)
    n = m.shape[0]
    if labels is None:
        labels = [str(i + 1) for i in range(n)]
    labels = [str(lab) for lab in labels]
    if len(labels) != n:
        raise LabelError(f"{len(labels)} labels for {n} vertices")
    if len(set(labels)) != n:
        raise LabelError("vertex labels must be distinct")
    if n and np.any(np.diag(m) != 0):
        i = int(np.flatnonzero(np.diag(m))[0])
        raise LoopError(f"nonzero diagonal entry at ({i},{i})", entry=(i, i))
    if np.any(m < 0):
        i, j = map(int, np.argwhere(m < 0)[0])
        raise InvalidEntryError(f"negative entry at ({i},{j})", entry=(i, j))
    if mode.cap is not None and np.any(m > mode.cap):
        i, j = map(int, np.argwhere(m > mode.cap)[0])
        raise ExclusionError(f"entry {m[i, j]} at ({i},{j}) exceeds fermionic cap", entry=(i, j))
    if orientation is Orientation.UNDIRECTED and not np.array_equal(m, m.T):
        i, j = map(int, np.argwhere(m != m.T)[0])
        raise SymmetryError(f"undirected matrix is asymmetric at ({i},{j})", entry=(i, j))
    rows = [build_row_from_occupations([int(x) for x in m[i]], mode) for i in range(n)]
    return GraphState(tuple(rows), mode, orientation, tuple(labels))


def empty_graph(mode: Mode, orientation: Orientation) -> GraphState:
    return GraphState((), mode, orientation, ())


def to_adjacency(graph: GraphState) -> np.ndarray:
    n = graph.n_vertices
    m = np.zeros((n, n), dtype=np.int64)
    for i, row in enumerate(graph.rows):
        m[i, :] = row.occupations
    return m


def neighbors(graph: GraphState, m: int) -> set[int]:
    """Vertices adjacent to ``m``; in directed graphs, in- and out-neighbours."""
    graph.check_index(m)
    out = {j for j, n in enumerate(graph.rows[m].occupations) if n > 0}
    if graph.directed:
        out |= {j for j, row in enumerate(graph.rows) if row.occupations[m] > 0}
    return out


def edge_multiplicity(graph: GraphState, i: int, j: int) -> int:
    graph.check_index(i)
    graph.check_index(j)
    return graph.rows[i].occupations[j]


@dataclass(frozen=True)
class Violation:
    kind: str
    indices: tuple
    message: str = ""


def validate(graph: GraphState) -> list[Violation]:
    """Report every broken invariant. Never raises on malformed input."""
    out = []
    n = len(graph.rows)
    labels = tuple(graph.labels)
    if len(labels) != n:
        out.append(Violation("labels", (), f"{len(labels)} labels for {n} rows"))
    seen = {}
    for i, lab in enumerate(labels):
        if lab in seen:
            out.append(Violation("labels", (seen[lab], i), f"duplicate label {lab!r}"))
        seen.setdefault(lab, i)

    square = True
    for i, row in enumerate(graph.rows):
        if row.is_zero:
            out.append(Violation("zero-state", (i,), "row is the zero vector"))
            continue
        if len(row.occupations) != n:
            square = False
            out.append(Violation("shape", (i,), f"row length {len(row.occupations)} != {n}"))
        if row.amplitude.squared != 1:
            out.append(Violation("normalization", (i,), f"amp2={row.amplitude.squared}"))
        for j, v in enumerate(row.occupations):
            if v < 0:
                out.append(Violation("negative", (i, j), f"occupation {v}"))
            if graph.mode.cap is not None and v > graph.mode.cap:
                out.append(Violation("exclusion", (i, j), f"occupation {v} exceeds cap"))
        if i < len(row.occupations) and row.occupations[i] != 0:
            out.append(Violation("loop", (i, i), f"diagonal occupation {row.occupations[i]}"))

    if square and graph.orientation is Orientation.UNDIRECTED:
        rows = [r.occupations for r in graph.rows]
        for i in range(n):
            if graph.rows[i].is_zero:
                continue
            for j in range(i + 1, n):
                if graph.rows[j].is_zero:
                    continue
                if rows[i][j] != rows[j][i]:
                    out.append(Violation("symmetry", (i, j), f"{rows[i][j]} != {rows[j][i]}"))
    return out
