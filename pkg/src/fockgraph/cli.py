"""Command-line front end.

Reads a graph file (adjacency matrix or edge list), runs a transformation
script through the Fock-space engine and writes the emission stream::

    fockgraph --input paw.txt --script steps.txt --emit state

File formats
------------
Both start with a header line ``graph <fermion|boson> <directed|undirected> <n>``
followed by a line of ``n`` labels. The matrix format then has ``n`` rows of
``n`` integers; the edge-list format has lines ``u v [mult]``.

Exit codes: 0 success, 2 usage/config, 3 input parse, 4 script parse,
5 operation error, 6 I/O error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .edges import add_edges, delete_edges
from .errors import FockGraphError, GraphFileError, ParseError
from .fock import Mode
from .graph import GraphState, Orientation, empty_graph, from_adjacency, to_adjacency
from .script import Command, parse_script
from .vertices import add_vertex, contract, delete_vertex

__all__ = [
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_INPUT",
    "EXIT_SCRIPT",
    "EXIT_OPERATION",
    "EXIT_IO",
    "RunConfig",
    "parse_graph_file",
    "format_matrix",
    "dump_state",
    "apply_command",
    "execute",
    "main",
]

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_SCRIPT = 4
EXIT_OPERATION = 5
EXIT_IO = 6

_MODES = {m.value: m for m in Mode}
_ORIENTATIONS = {o.value: o for o in Orientation}


class ConfigError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    input_path: str
    input_format: str = "matrix"
    script_path: str | None = None
    output_path: str | None = None
    emit: str = "matrix"
    # optional expectations checked against the file header
    mode: Mode | None = None
    orientation: Orientation | None = None


def _parse_header(lines):
    if not lines:
        raise GraphFileError("empty graph file", 1)
    tokens = lines[0].split()
    if len(tokens) != 4 or tokens[0] != "graph":
        raise GraphFileError("header must be 'graph <mode> <orientation> <n>'", 1)
    _, mode, orient, n = tokens
    if mode not in _MODES:
        raise GraphFileError(f"unknown mode {mode!r} (expected fermion or boson)", 1)
    if orient not in _ORIENTATIONS:
        raise GraphFileError(f"unknown orientation {orient!r}", 1)
    try:
        n = int(n)
    except ValueError:
        raise GraphFileError(f"vertex count must be an integer, got {n!r}", 1) from None
    if n < 0:
        raise GraphFileError(f"vertex count must be >= 0, got {n}", 1)
    labels = lines[1].split() if len(lines) > 1 else []
    if len(labels) != n:
        raise GraphFileError(f"expected {n} labels, got {len(labels)}", 2)
    if len(set(labels)) != n:
        raise GraphFileError("vertex labels must be distinct", 2)
    return _MODES[mode], _ORIENTATIONS[orient], labels


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphFileError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def _parse_matrix_body(lines, n, mode, orientation, labels):
    body = [(k, ln) for k, ln in enumerate(lines[2:], start=3) if ln.strip()]
    if len(body) != n:
        lineno = body[n][0] if len(body) > n else len(lines) + 1
        raise GraphFileError(f"expected {n} matrix rows, got {len(body)}", lineno)
    matrix = []
    for lineno, text in body:
        row = _ints(text.split(), lineno)
        if len(row) != n:
            raise GraphFileError(f"expected {n} entries, got {len(row)}", lineno)
        matrix.append(row)
    try:
        return from_adjacency(matrix, mode, orientation, labels)
    except FockGraphError as exc:
        lineno = body[exc.entry[0]][0] if exc.entry else None
        raise GraphFileError(str(exc), lineno) from exc


def _parse_edge_body(lines, mode, orientation, labels):
    graph = empty_graph(mode, orientation)
    for lab in labels:
        graph = add_vertex(graph, lab)
    for lineno, text in enumerate(lines[2:], start=3):
        tokens = text.split()
        if not tokens:
            continue
        if len(tokens) not in (2, 3):
            raise GraphFileError("edge line must be 'u v [mult]'", lineno)
        mult = _ints(tokens[2:], lineno)[0] if len(tokens) == 3 else 1
        if mult < 1:
            raise GraphFileError(f"multiplicity must be >= 1, got {mult}", lineno)
        try:
            graph = add_edges(graph, graph.index(tokens[0]), graph.index(tokens[1]), mult)
        except FockGraphError as exc:
            raise GraphFileError(str(exc), lineno) from exc
    return graph


def parse_graph_file(text, fmt="matrix", mode=None, orientation=None) -> GraphState:
    """Parse a graph file. ``mode``/``orientation``, if given, must match the header."""
    lines = text.splitlines()
    file_mode, file_orient, labels = _parse_header(lines)
    if mode is not None and mode is not file_mode:
        raise ConfigError(f"file declares mode {file_mode.value}, expected {mode.value}")
    if orientation is not None and orientation is not file_orient:
        raise ConfigError(
            f"file declares {file_orient.value} graph, expected {orientation.value}"
        )
    if fmt == "matrix":
        return _parse_matrix_body(lines, len(labels), file_mode, file_orient, labels)
    if fmt == "edges":
        return _parse_edge_body(lines, file_mode, file_orient, labels)
    raise ConfigError(f"unknown input format {fmt!r}")


def format_matrix(graph: GraphState) -> str:
    """Render in the matrix input format; parse_graph_file reads it back."""
    lines = [
        f"graph {graph.mode.value} {graph.orientation.value} {graph.n_vertices}",
        " ".join(graph.labels),
    ]
    lines += [" ".join(str(v) for v in row) for row in to_adjacency(graph).tolist()]
    return "\n".join(lines) + "\n"


def dump_state(graph: GraphState) -> str:
    lines = [f"vertices={graph.n_vertices}"]
    for lab, row in zip(graph.labels, graph.rows):
        lines.append(f"{lab} {row.ket()} amp2={row.amplitude.squared}")
    return "\n".join(lines) + "\n"


def apply_command(graph: GraphState, cmd: Command):
    """Run one script command. Returns ``(graph, contraction report or None)``."""
    verb, args = cmd.verb, cmd.args
    if verb == "ADDV":
        return add_vertex(graph, args[0]), None
    if verb == "DELV":
        return delete_vertex(graph, graph.index(args[0])), None
    if verb == "ADDE":
        return add_edges(graph, graph.index(args[0]), graph.index(args[1]), args[2]), None
    if verb == "DELE":
        return delete_edges(graph, graph.index(args[0]), graph.index(args[1]), args[2]), None
    if verb == "CONTRACT":
        return contract(graph, graph.index(args[0]), graph.index(args[1]))
    return graph, None


def _final_emission(graph, emit):
    if emit == "state":
        return dump_state(graph)
    if emit == "trace":
        return "final\n" + dump_state(graph)
    return format_matrix(graph)


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path, text, stdout):
    if path is None or path == "-":
        stdout.write(text)
        stdout.flush()
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def execute(config: RunConfig, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr

    def fail(code, msg):
        stderr.write(f"fockgraph: {msg}\n")
        return code

    if config.emit not in ("matrix", "state", "trace"):
        return fail(EXIT_USAGE, f"unknown emit selection {config.emit!r}")
    if config.input_format not in ("matrix", "edges"):
        return fail(EXIT_USAGE, f"unknown input format {config.input_format!r}")

    try:
        graph_text = _read(config.input_path)
        script_text = _read(config.script_path) if config.script_path else ""
    except OSError as exc:
        return fail(EXIT_IO, f"cannot read {exc.filename}: {exc.strerror}")

    try:
        graph = parse_graph_file(
            graph_text, config.input_format, config.mode, config.orientation
        )
    except ConfigError as exc:
        return fail(EXIT_USAGE, str(exc))
    except FockGraphError as exc:
        return fail(EXIT_INPUT, f"{config.input_path}: {exc}")

    try:
        commands = parse_script(script_text)
    except ParseError as exc:
        return fail(EXIT_SCRIPT, f"{config.script_path}: {exc}")

    out = []
    status = EXIT_OK
    for step, cmd in enumerate(commands, start=1):
        try:
            graph, report = apply_command(graph, cmd)
        except FockGraphError as exc:
            status = fail(
                EXIT_OPERATION,
                f"{config.script_path}: line {cmd.line}: {cmd}: [{exc.category}] {exc}",
            )
            break
        if config.emit == "trace":
            out.append(f"step {step} line {cmd.line}: {cmd}\n")
            if report is not None:
                moved = " ".join(f"{lab}:{n}" for lab, n in report.transferred) or "-"
                sat = " ".join(report.saturated) or "-"
                out.append(f"  transferred={moved} saturated={sat}\n")
        if cmd.verb == "MATRIX":
            out.append(format_matrix(graph))
        elif cmd.verb == "DUMP":
            out.append(dump_state(graph))
    else:
        out.append(_final_emission(graph, config.emit))

    try:
        _write(config.output_path, "".join(out), stdout)
    except OSError as exc:
        return fail(EXIT_IO, f"cannot write {exc.filename}: {exc.strerror}")
    return status


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise ConfigError(message)


def build_parser():
    p = _Parser(prog="fockgraph", description=__doc__.split("\n\n")[0])
    p.add_argument("--input", required=True, metavar="PATH")
    p.add_argument("--format", choices=["matrix", "edges"], default="matrix")
    p.add_argument("--script", metavar="PATH")
    p.add_argument("--output", metavar="PATH", help="default: standard output")
    p.add_argument("--emit", choices=["matrix", "state", "trace"], default="matrix")
    p.add_argument("--mode", choices=sorted(_MODES), help="require this mode in the input")
    p.add_argument(
        "--orientation", choices=sorted(_ORIENTATIONS), help="require this orientation"
    )
    return p


def main(argv=None) -> int:
    try:
        ns = build_parser().parse_args(argv)
    except ConfigError as exc:
        sys.stderr.write(f"fockgraph: {exc}\n")
        return EXIT_USAGE
    config = RunConfig(
        input_path=ns.input,
        input_format=ns.format,
        script_path=ns.script,
        output_path=ns.output,
        emit=ns.emit,
        mode=_MODES[ns.mode] if ns.mode else None,
        orientation=_ORIENTATIONS[ns.orientation] if ns.orientation else None,
    )
    return execute(config)


if __name__ == "__main__":
    sys.exit(main())
