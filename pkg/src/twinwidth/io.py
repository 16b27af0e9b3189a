"""Text formats.

Edge list: first line ``n m``, then ``m`` lines ``u v`` with ``0 <= u < v < n``.
Sequence: one ``survivor absorbed`` line per contraction.
Rotation map: one ``v i w j`` line per edge end.

Writers emit a canonical ordering, so anything they produce reads back and
re-writes to the same bytes.
"""
from __future__ import annotations

from pathlib import Path

from .errors import FormatError, ParameterError
from .graph import ContractionSequence, Graph


def _int_fields(line: str, count: int, lineno: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise FormatError(f"line {lineno}: expected {count} integers, got {line!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise FormatError(f"line {lineno}: non-integer field in {line!r}") from None


def read_edge_list(text: str) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty edge-list")
    n, m = _int_fields(lines[0], 2, 1)
    if len(lines) - 1 != m:
        raise FormatError(f"header promises {m} edges, found {len(lines) - 1}")
    edges = []
    for k, line in enumerate(lines[1:], start=2):
        u, v = _int_fields(line, 2, k)
        if not 0 <= u < v < n:
            raise FormatError(f"line {k}: need 0 <= u < v < n, got {u} {v}")
        edges.append((u, v))
    try:
        return Graph(n, edges)
    except ParameterError as exc:
        raise FormatError(str(exc)) from None


def write_edge_list(g: Graph) -> str:
    out = [f"{g.n} {g.num_edges()}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def read_sequence(text: str) -> ContractionSequence:
    steps = []
    for k, line in enumerate(text.splitlines(), start=1):
        if line.strip():
            steps.append(tuple(_int_fields(line, 2, k)))
    return ContractionSequence(steps)


def write_sequence(seq) -> str:
    return "".join(f"{a} {b}\n" for a, b in seq)


def read_rotation_lines(text: str) -> list[tuple[int, int, int, int]]:
    quads = []
    for k, line in enumerate(text.splitlines(), start=1):
        if line.strip():
            quads.append(tuple(_int_fields(line, 4, k)))
    return quads


def write_rotation_lines(quads) -> str:
    return "".join(f"{v} {i} {w} {j}\n" for v, i, w, j in quads)


def load_graph(path) -> Graph:
    return read_edge_list(Path(path).read_text())


def save_graph(g: Graph, path) -> None:
    Path(path).write_text(write_edge_list(g))


def load_sequence(path) -> ContractionSequence:
    return read_sequence(Path(path).read_text())


def save_sequence(seq, path) -> None:
    Path(path).write_text(write_sequence(seq))
