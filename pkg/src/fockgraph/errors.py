"""Error taxonomy shared by the Fock-space engine and the classical oracle.

Every error carries a ``category`` string. Equivalence tests compare
categories, never messages.
"""


class FockGraphError(Exception):
    """Base error. ``entry`` optionally names the offending matrix cell."""

    category = "error"

    def __init__(self, *args, entry=None):
        super().__init__(*args)
        self.entry = entry


class InvalidDimensionError(FockGraphError, ValueError):
    category = "invalid-dimension"


class InvalidEntryError(FockGraphError, ValueError):
    category = "invalid-entry"


class VertexIndexError(FockGraphError, IndexError):
    category = "index"


class UnknownVertexError(FockGraphError, LookupError):
    category = "unknown-vertex"


class ZeroStateError(FockGraphError, ValueError):
    category = "zero-state"


class CannotNormalizeError(FockGraphError, ValueError):
    category = "cannot-normalize"


class ExclusionError(FockGraphError, ValueError):
    category = "exclusion"


class SymmetryError(FockGraphError, ValueError):
    category = "symmetry"


class LoopError(FockGraphError, ValueError):
    category = "loop"


class LabelError(FockGraphError, ValueError):
    category = "label"


class InsufficientEdgesError(FockGraphError, ValueError):
    category = "insufficient-edges"


class ParseError(FockGraphError, ValueError):
    """Malformed text input. ``line`` is 1-based, or None if not line-specific."""

    category = "parse"

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GraphFileError(ParseError):
    category = "input-parse"


class ScriptParseError(ParseError):
    category = "script-parse"
