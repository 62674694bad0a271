"""Normalized edge creation and annihilation operators.

``DE_d`` is ``a^d`` divided by ``sqrt(k!/(k-d)!)`` and ``AE_d`` is
``(a^+)^d`` divided by ``sqrt((k+d)!/k!)``, where ``k`` is the occupation
the operator meets when it is applied. Both map a normalized basis row to
a normalized basis row. At graph level an undirected edge lives in two rows
and both are updated; a directed arc only in the source row.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from dataclasses import dataclass

from .errors import ExclusionError, InsufficientEdgesError, InvalidEntryError, LoopError
from .fock import Mode, RowState, apply_annihilation, apply_creation
from .graph import GraphState

__all__ = [
    "EdgeOpKind",
    "EdgeOpSpec",
    "de_raw",
    "ae_raw",
    "de_apply_row",
    "ae_apply_row",
    "delete_edges",
    "add_edges",
]


class EdgeOpKind(enum.Enum):
    CREATE = "create"
    ANNIHILATE = "annihilate"


def _check_count(d):
    if d < 1:
        raise InvalidEntryError(f"edge count must be >= 1, got {d}")


def de_raw(state: RowState, j: int, d: int) -> tuple[RowState, Fraction]:
    """Unnormalized ``a_j^d`` and the squared prefactor it introduced."""
    _check_count(d)
    k = state[j]
    if d > k:
        raise InsufficientEdgesError(f"cannot remove {d} edges at mode {j}: only {k} present")
    raw = apply_annihilation(state, j, d)
    return raw, raw.amplitude.squared / state.amplitude.squared


def ae_raw(state: RowState, j: int, d: int, mode: Mode) -> tuple[RowState, Fraction]:
    """Unnormalized ``(a_j^+)^d`` and the squared prefactor it introduced."""
    _check_count(d)
    k = state[j]
    if mode.cap is not None and k + d > mode.cap:
        raise ExclusionError(f"adding {d} edges at mode {j} (k={k}) exceeds fermionic cap")
    raw = apply_creation(state, j, d, mode)
    return raw, raw.amplitude.squared / state.amplitude.squared


def de_apply_row(state: RowState, j: int, d: int) -> RowState:
    """Remove ``d`` edges at mode ``j``, keeping the amplitude unchanged."""
    raw, factor = de_raw(state, j, d)
    return RowState(raw.occupations, raw.amplitude.scaled(1 / factor))


def ae_apply_row(state: RowState, j: int, d: int, mode: Mode) -> RowState:
    """Add ``d`` edges at mode ``j``, keeping the amplitude unchanged."""
    raw, factor = ae_raw(state, j, d, mode)
    return RowState(raw.occupations, raw.amplitude.scaled(1 / factor))


def _targets(graph, i, j):
    graph.check_index(i)
    graph.check_index(j)
    if i == j:
        raise LoopError(f"edge from vertex {graph.labels[i]!r} to itself")
    if graph.directed:
        return [(i, j)]
    return [(i, j), (j, i)]


def delete_edges(graph: GraphState, i: int, j: int, d: int) -> GraphState:
    """Remove ``d`` parallel edges between ``i`` and ``j``.

    All rows involved are checked before any is touched.
    """
    targets = _targets(graph, i, j)
    _check_count(d)
    for r, c in targets:
        k = graph.rows[r].occupations[c]
        if d > k:
            raise InsufficientEdgesError(
                f"cannot remove {d} edges between {graph.labels[r]!r} and "
                f"{graph.labels[c]!r}: only {k} present"
            )
    rows = list(graph.rows)
    for r, c in targets:
        rows[r] = de_apply_row(rows[r], c, d)
    return graph.with_rows(rows)


def add_edges(graph: GraphState, i: int, j: int, d: int) -> GraphState:
    targets = _targets(graph, i, j)
    _check_count(d)
    cap = graph.mode.cap
    if cap is not None:
        for r, c in targets:
            k = graph.rows[r].occupations[c]
            if k + d > cap:
                raise ExclusionError(
                    f"simple graph already has {k} edge(s) between {graph.labels[r]!r} "
                    f"and {graph.labels[c]!r}; cannot add {d}"
                )
    rows = list(graph.rows)
    for r, c in targets:
        rows[r] = ae_apply_row(rows[r], c, d, graph.mode)
    return graph.with_rows(rows)


@dataclass(frozen=True)
class EdgeOpSpec:
    """An edge operator ``(source, target, count)``.

    The current multiplicity ``k`` is read from whatever graph the operator
    is applied to, never stored.
    """

    source: int
    target: int
    count: int
    kind: EdgeOpKind

    def __post_init__(self):
        if self.source == self.target:
            raise LoopError("edge operator endpoints must differ")
        _check_count(self.count)

    def __call__(self, graph: GraphState) -> GraphState:
        if self.kind is EdgeOpKind.CREATE:
            return add_edges(graph, self.source, self.target, self.count)
        return delete_edges(graph, self.source, self.target, self.count)
