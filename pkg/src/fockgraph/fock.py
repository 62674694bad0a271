"""Occupation-number basis rows and raw ladder operators.

A :class:`RowState` is one Fock basis vector ``|n_1, ..., n_L>`` times a
scalar coefficient. Every coefficient produced by the ladder operators is
the square root of a ratio of factorials, so we keep its *square* as an
exact :class:`fractions.Fraction` and never touch floating point.

Anticommutation signs between distinct fermionic modes are not tracked; all
operations here are diagonal in the occupation basis up to a global sign,
which no caller observes.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    CannotNormalizeError,
    ExclusionError,
    InvalidDimensionError,
    InvalidEntryError,
    VertexIndexError,
    ZeroStateError,
)

__all__ = [
    "Mode",
    "Amplitude",
    "RowState",
    "vacuum",
    "zero_state",
    "apply_creation",
    "apply_annihilation",
    "raw_row_from_vacuum",
    "build_row_from_occupations",
    "normalize",
]


class Mode(enum.Enum):
    FERMIONIC = "fermion"
    BOSONIC = "boson"

    @property
    def cap(self):
        """Largest allowed occupation, or None when unbounded."""
        return 1 if self is Mode.FERMIONIC else None


@dataclass(frozen=True)
class Amplitude:
    """Non-negative scalar coefficient, stored as its exact square."""

    squared: Fraction = Fraction(1)

    def __post_init__(self):
        sq = Fraction(self.squared)
        if sq < 0:
            raise ValueError(f"amplitude squared must be >= 0, got {sq}")
        object.__setattr__(self, "squared", sq)

    def scaled(self, factor) -> Amplitude:
        """Multiply the squared amplitude by ``factor``."""
        return Amplitude(self.squared * Fraction(factor))

    def __float__(self):
        # display only
        return math.sqrt(self.squared)

    def __str__(self):
        return str(self.squared)


ONE = Amplitude(Fraction(1))
ZERO = Amplitude(Fraction(0))


@dataclass(frozen=True)
class RowState:
    """A single Fock basis state with an exact amplitude.

    ``is_zero`` marks the null vector of the space, which is not the vacuum.
    Its occupations carry no meaning.
    """

    occupations: tuple[int, ...]
    amplitude: Amplitude = ONE
    is_zero: bool = False

    def __post_init__(self):
        object.__setattr__(self, "occupations", tuple(int(n) for n in self.occupations))

    def __len__(self):
        return len(self.occupations)

    def __getitem__(self, j):
        if self.is_zero:
            raise ZeroStateError("zero state has no occupation numbers")
        return self.occupations[j]

    @property
    def is_normalized(self):
        return not self.is_zero and self.amplitude.squared == 1

    def ket(self):
        return "|" + ",".join(str(n) for n in self.occupations) + ">"

    def __str__(self):
        if self.is_zero:
            return "0"
        return f"{self.ket()} amp2={self.amplitude}"


def vacuum(length: int) -> RowState:
    if length < 1:
        raise InvalidDimensionError(f"vacuum needs at least one mode, got {length}")
    return RowState((0,) * length)


def zero_state(length: int) -> RowState:
    return RowState((0,) * length, ZERO, is_zero=True)


def _check_mode_index(state, j, d):
    if state.is_zero:
        raise ZeroStateError("cannot apply a ladder operator to the zero state")
    if not 0 <= j < len(state):
        raise VertexIndexError(f"mode index {j} out of range for length {len(state)}")
    if d < 0:
        raise InvalidEntryError(f"ladder power must be >= 0, got {d}")


def apply_creation(state: RowState, j: int, d: int, mode: Mode) -> RowState:
    """Apply ``(a_j^+)^d``; the squared amplitude picks up ``(k+d)!/k!``.

    In fermionic mode an occupation above one annihilates the state.
    """
    _check_mode_index(state, j, d)
    k = state.occupations[j]
    if mode.cap is not None and k + d > mode.cap:
        return zero_state(len(state))
    occ = list(state.occupations)
    occ[j] = k + d
    return RowState(tuple(occ), state.amplitude.scaled(math.perm(k + d, d)))


def apply_annihilation(state: RowState, j: int, d: int) -> RowState:
    """Apply ``a_j^d``; the squared amplitude picks up ``k!/(k-d)!``.

    Lowering past the vacuum gives the zero state.
    """
    _check_mode_index(state, j, d)
    k = state.occupations[j]
    if d > k:
        return zero_state(len(state))
    occ = list(state.occupations)
    occ[j] = k - d
    return RowState(tuple(occ), state.amplitude.scaled(math.perm(k, d)))


def _check_occupations(occupations, mode):
    occupations = tuple(int(n) for n in occupations)
    if not occupations:
        raise InvalidDimensionError("a row needs at least one mode")
    for j, n in enumerate(occupations):
        if n < 0:
            raise InvalidEntryError(f"negative occupation {n} at mode {j}")
        if mode.cap is not None and n > mode.cap:
            raise ExclusionError(f"occupation {n} at mode {j} exceeds fermionic cap")
    return occupations


def raw_row_from_vacuum(occupations, mode: Mode) -> RowState:
    """Product of creation operators on the vacuum, without normalization.

    The resulting squared amplitude is ``prod(n_j!)``.
    """
    occupations = _check_occupations(occupations, mode)
    state = vacuum(len(occupations))
    for j, n in enumerate(occupations):
        state = apply_creation(state, j, n, mode)
    return state


def build_row_from_occupations(occupations, mode: Mode) -> RowState:
    """Normalized basis row with the given occupations.

    Built from the vacuum by creation operators; the accumulated
    ``prod(n_j!)`` is divided back out.
    """
    raw = raw_row_from_vacuum(occupations, mode)
    expected = math.prod(math.factorial(n) for n in raw.occupations)
    if raw.amplitude.squared != expected:
        raise AssertionError(
            f"creation prefactor mismatch: {raw.amplitude.squared} != {expected}"
        )
    return normalize(raw)


def normalize(state: RowState) -> RowState:
    if state.is_zero or state.amplitude.squared == 0:
        raise CannotNormalizeError("the zero state cannot be normalized")
    if state.amplitude.squared == 1:
        return state
    return RowState(state.occupations, ONE)
