"""Transformation script grammar.

One command per line, whitespace-separated tokens, ``#`` to end of line is
a comment::

    ADDV <label>
    DELV <label>
    ADDE <u> <v> <count>
    DELE <u> <v> <count>
    CONTRACT <keep> <remove>
    MATRIX
    DUMP
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ScriptParseError

__all__ = ["Command", "VERBS", "parse_script"]

# verb -> (number of label args, takes a trailing count)
VERBS = {
    "ADDV": (1, False),
    "DELV": (1, False),
    "ADDE": (2, True),
    "DELE": (2, True),
    "CONTRACT": (2, False),
    "MATRIX": (0, False),
    "DUMP": (0, False),
}


@dataclass(frozen=True)
class Command:
    verb: str
    args: tuple = ()
    line: int = 0

    def __str__(self):
        return " ".join([self.verb, *map(str, self.args)])


def _parse_line(text, lineno):
    tokens = text.split("#", 1)[0].split()
    if not tokens:
        return None
    verb, rest = tokens[0], tokens[1:]
    if verb not in VERBS:
        raise ScriptParseError(f"unknown command {verb!r}", lineno)
    n_labels, has_count = VERBS[verb]
    arity = n_labels + has_count
    if len(rest) != arity:
        raise ScriptParseError(f"{verb} takes {arity} argument(s), got {len(rest)}", lineno)
    args = list(rest)
    if has_count:
        try:
            count = int(args[-1])
        except ValueError:
            raise ScriptParseError(f"count must be an integer, got {args[-1]!r}", lineno) from None
        if count < 1:
            raise ScriptParseError(f"count must be >= 1, got {count}", lineno)
        args[-1] = count
    return Command(verb, tuple(args), lineno)


def parse_script(text: str) -> list[Command]:
    """Parse a whole script; the first malformed line raises."""
    commands = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        cmd = _parse_line(line, lineno)
        if cmd is not None:
            commands.append(cmd)
    return commands
