"""Classical adjacency-matrix reference implementation.

Plain integer matrix arithmetic and hand-rolled factorial loops, used as
ground truth for the Fock-space engine. Deliberately naive, and it must not
import the engine modules (``fock``, ``graph``, ``edges``, ``vertices``);
GraphStates are inspected by attribute access only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    ExclusionError,
    InsufficientEdgesError,
    InvalidEntryError,
    LabelError,
    LoopError,
    UnknownVertexError,
)
from .script import Command

__all__ = [
    "OracleGraph",
    "oracle_step",
    "factorial",
    "factorial_ratio",
    "factorial_product",
    "equivalent",
]


@dataclass(frozen=True)
class OracleGraph:
    matrix: np.ndarray
    simple: bool
    directed: bool
    labels: tuple[str, ...]

    @classmethod
    def from_matrix(cls, matrix, simple, directed, labels=None):
        m = np.array(matrix, dtype=np.int64).reshape(len(matrix), len(matrix))
        if labels is None:
            labels = [str(i + 1) for i in range(len(m))]
        return cls(m, simple, directed, tuple(str(x) for x in labels))

    def _idx(self, label):
        if label not in self.labels:
            raise UnknownVertexError(label)
        return self.labels.index(label)


def _drop(matrix, k):
    keep = [r for r in range(matrix.shape[0]) if r != k]
    return matrix[np.ix_(keep, keep)]


def oracle_step(g: OracleGraph, cmd: Command) -> OracleGraph:
    verb, args = cmd.verb, cmd.args
    m = g.matrix.copy()

    if verb in ("MATRIX", "DUMP"):
        return g

    if verb == "ADDV":
        lab = str(args[0])
        if lab in g.labels:
            raise LabelError(lab)
        n = m.shape[0]
        bigger = np.zeros((n + 1, n + 1), dtype=np.int64)
        bigger[:n, :n] = m
        return OracleGraph(bigger, g.simple, g.directed, g.labels + (lab,))

    if verb == "DELV":
        k = g._idx(str(args[0]))
        return OracleGraph(_drop(m, k), g.simple, g.directed, g.labels[:k] + g.labels[k + 1:])

    if verb in ("ADDE", "DELE"):
        i, j = g._idx(str(args[0])), g._idx(str(args[1]))
        d = int(args[2])
        if i == j:
            raise LoopError(args[0])
        if d < 1:
            raise InvalidEntryError(d)
        sign = 1 if verb == "ADDE" else -1
        cells = [(i, j)] if g.directed else [(i, j), (j, i)]
        for r, c in cells:
            m[r, c] += sign * d
        if np.any(m < 0):
            raise InsufficientEdgesError((args[0], args[1], d))
        if g.simple and np.any(m > 1):
            raise ExclusionError((args[0], args[1], d))
        return OracleGraph(m, g.simple, g.directed, g.labels)

    if verb == "CONTRACT":
        i, j = g._idx(str(args[0])), g._idx(str(args[1]))
        if i == j:
            raise LoopError(args[0])
        m[i, :] += m[j, :]
        m[:, i] += m[:, j]
        m[i, i] = 0
        if g.simple:
            m = np.minimum(m, 1)
        m = _drop(m, j)
        return OracleGraph(m, g.simple, g.directed, g.labels[:j] + g.labels[j + 1:])

    raise ValueError(f"unknown verb {verb!r}")


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    out = 1
    for x in range(2, n + 1):
        out *= x
    return out


def factorial_ratio(k: int, d: int, kind: str = "annihilate") -> Fraction:
    """Squared ladder prefactor.

    ``kind="annihilate"`` gives ``k!/(k-d)!``; ``kind="create"`` gives
    ``(k+d)!/k!``.
    """
    if k < 0 or d < 0:
        raise ValueError(f"factorial ratio undefined for k={k}, d={d}")
    if kind == "annihilate":
        if d > k:
            raise ValueError(f"cannot remove {d} from {k}")
        return Fraction(factorial(k), factorial(k - d))
    if kind == "create":
        return Fraction(factorial(k + d), factorial(k))
    raise ValueError(f"unknown kind {kind!r}")


def factorial_product(occupations) -> int:
    out = 1
    for n in occupations:
        out *= factorial(n)
    return out


def equivalent(g: OracleGraph, s) -> bool:
    """True iff ``s`` encodes exactly ``g``'s matrix with unit-amplitude rows."""
    if tuple(s.labels) != tuple(g.labels):
        return False
    n = len(g.labels)
    if len(s.rows) != n or g.matrix.shape != (n, n):
        return False
    for i, row in enumerate(s.rows):
        if row.is_zero or row.amplitude.squared != 1:
            return False
        if len(row.occupations) != n:
            return False
        if any(int(g.matrix[i, j]) != row.occupations[j] for j in range(n)):
            return False
    return True
