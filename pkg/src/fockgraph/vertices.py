"""Adding, deleting and contracting vertices.

Deleting vertex ``m`` happens in three phases: its own row is emptied by
annihilation operators (collecting ``prod(n_mj!)`` in the raw amplitude),
every row that still points at ``m`` is emptied at mode ``m`` with the
normalized edge annihilation operator, and only then are row ``m`` and
mode ``m`` dropped. Contraction captures the removed vertex's edges,
deletes it, and re-attaches those edges to the kept vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .edges import add_edges, de_apply_row
from .errors import LabelError, LoopError
from .fock import Amplitude, RowState, apply_annihilation, normalize
from .graph import GraphState, neighbors

__all__ = [
    "ContractionReport",
    "add_vertex",
    "clean_row",
    "clean_neighbor_entries",
    "delete_vertex",
    "contract",
]


def add_vertex(graph: GraphState, label: str) -> GraphState:
    """Append an isolated vertex, extending every row by one empty mode."""
    label = str(label)
    if label in graph.labels:
        raise LabelError(f"vertex {label!r} already exists")
    rows = [RowState(row.occupations + (0,), row.amplitude) for row in graph.rows]
    rows.append(RowState((0,) * (graph.n_vertices + 1)))
    return graph.with_rows(rows, graph.labels + (label,))


def clean_row(graph: GraphState, m: int) -> tuple[RowState, Amplitude]:
    """Annihilate every edge stored in row ``m``.

    Returns the emptied (normalized) row together with the raw amplitude the
    annihilation operators accumulated, whose square is ``prod(n_mj!)``.
    """
    graph.check_index(m)
    state = graph.rows[m]
    for j in sorted(neighbors(graph, m)):
        n = state.occupations[j]
        if n:
            state = apply_annihilation(state, j, n)
    return normalize(state), state.amplitude


def clean_neighbor_entries(graph: GraphState, m: int) -> GraphState:
    """Empty mode ``m`` in every other row that has edges to ``m``.

    The rows are found from column ``m`` rather than row ``m``, so this still
    works after :func:`clean_row` has emptied row ``m``.
    """
    graph.check_index(m)
    rows = list(graph.rows)
    for j, row in enumerate(graph.rows):
        n = row.occupations[m]
        if j != m and n:
            rows[j] = de_apply_row(row, m, n)
    return graph.with_rows(rows)


def delete_vertex(graph: GraphState, m: int) -> GraphState:
    """Remove vertex ``m`` and every edge incident to it.

    Remaining vertices keep their labels; indices above ``m`` shift down.
    """
    graph.check_index(m)
    emptied, _ = clean_row(graph, m)
    rows = list(graph.rows)
    rows[m] = emptied
    graph = clean_neighbor_entries(graph.with_rows(rows), m)
    kept = [
        RowState(row.occupations[:m] + row.occupations[m + 1:], row.amplitude)
        for r, row in enumerate(graph.rows)
        if r != m
    ]
    labels = graph.labels[:m] + graph.labels[m + 1:]
    return graph.with_rows(kept, labels)


@dataclass(frozen=True)
class ContractionReport:
    kept: str
    removed: str
    transferred: tuple[tuple[str, int], ...] = field(default=())
    saturated: tuple[str, ...] = field(default=())


def contract(graph: GraphState, i: int, j: int) -> tuple[GraphState, ContractionReport]:
    """Merge vertex ``j`` into vertex ``i``.

    ``i`` keeps its label and gains the edges ``j`` had to third vertices.
    Edges between ``i`` and ``j`` disappear. For simple graphs a transfer onto
    an already-present edge is skipped and listed in ``report.saturated``.
    """
    graph.check_index(i)
    graph.check_index(j)
    if i == j:
        raise LoopError(f"cannot contract vertex {graph.labels[i]!r} with itself")
    keep, gone = graph.labels[i], graph.labels[j]

    # (neighbour label, out-multiplicity j->m, in-multiplicity m->j)
    captured = []
    for m in sorted(neighbors(graph, j) - {i}):
        out = graph.rows[j].occupations[m]
        into = graph.rows[m].occupations[j] if graph.directed else 0
        captured.append((graph.labels[m], out, into))

    graph = delete_vertex(graph, j)
    i = graph.index(keep)
    cap = graph.mode.cap
    transferred, saturated = [], []
    for lab, out, into in captured:
        m = graph.index(lab)
        moves = [(i, m, out), (m, i, into)] if graph.directed else [(i, m, out)]
        for src, dst, ne in moves:
            if ne == 0:
                continue
            if cap is not None and graph.rows[src].occupations[dst] + ne > cap:
                if lab not in saturated:
                    saturated.append(lab)
                continue
            graph = add_edges(graph, src, dst, ne)
            transferred.append((lab, ne))
    return graph, ContractionReport(keep, gone, tuple(transferred), tuple(saturated))
