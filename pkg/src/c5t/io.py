"""Edge-list and graph6 text formats, deterministic JSON."""
from __future__ import annotations

import hashlib
import json
from typing import Optional

from . import __version__
from .graph import Graph, GraphError

SCHEMA = "c5t.report/1"


class ParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_edge_list(text: str, labels: bool = False) -> tuple[Graph, Optional[list[str]]]:
    """Parse ``u v`` lines with optional ``n <count>`` header and ``#`` comments.

    Integer mode: ids are used as-is, order is the header or max id + 1.
    Label mode: tokens are arbitrary labels numbered by first appearance;
    the returned list maps vertex id -> label.
    """
    n_header = None
    pairs: list[tuple[int, int, int]] = []
    names: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if n_header is not None or pairs:
                raise ParseError(lineno, "header 'n <count>' must come first and only once")
            if len(parts) != 2 or not parts[1].isdigit():
                raise ParseError(lineno, f"malformed header {line!r}")
            n_header = int(parts[1])
            continue
        if len(parts) != 2:
            raise ParseError(lineno, f"expected 'u v', got {line!r}")
        if labels:
            u, v = (names.setdefault(p, len(names)) for p in parts)
        else:
            if not all(p.isdigit() for p in parts):
                raise ParseError(lineno, f"expected two non-negative integer vertex ids, got {line!r}")
            u, v = int(parts[0]), int(parts[1])
        pairs.append((lineno, u, v))

    if labels:
        n = len(names)
        if n_header is not None:
            if n_header < n:
                raise ParseError(1, f"header declares {n_header} vertices but {n} labels appear")
            n = n_header
        label_list = list(names) + [str(i) for i in range(len(names), n)]
    else:
        n = max((max(u, v) + 1 for _, u, v in pairs), default=0)
        if n_header is not None:
            n = n_header
        label_list = None
    g = Graph(n)
    for lineno, u, v in pairs:
        try:
            g.add_edge(u, v)
        except GraphError as exc:
            raise ParseError(lineno, str(exc)) from None
    return g, label_list


def format_edge_list(g: Graph, labels: Optional[list[str]] = None) -> str:
    name = (lambda v: labels[v]) if labels else str
    lines = [f"n {g.n}"]
    lines += [f"{name(u)} {name(v)}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def _graph6_size(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    """graph6 string (no header, no newline): size prefix then the upper triangle column-wise."""
    bitlist = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bitlist += [0] * (-len(bitlist) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bitlist[k:k + 6])), 2)) for k in range(0, len(bitlist), 6)
    )
    return _graph6_size(g.n) + body


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    s = s.splitlines()[0].strip() if s else s
    if not s:
        raise ParseError(1, "empty graph6 input")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d < 64 for d in data):
        raise ParseError(1, "character outside the graph6 range")
    if data[0] < 63:
        n, rest = data[0], data[1:]
    elif len(data) > 1 and data[1] < 63:
        if len(data) < 4:
            raise ParseError(1, "truncated graph6 size field")
        n, rest = (data[1] << 12) | (data[2] << 6) | data[3], data[4:]
    else:
        if len(data) < 8:
            raise ParseError(1, "truncated graph6 size field")
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        rest = data[8:]
    need = n * (n - 1) // 2
    if len(rest) != (need + 5) // 6:
        raise ParseError(1, f"graph6 body has {len(rest)} bytes, expected {(need + 5) // 6}")
    g = Graph(n)
    k = 0
    for j in range(1, n):
        for i in range(j):
            if rest[k // 6] >> (5 - k % 6) & 1:
                g.add_edge(i, j)
            k += 1
    return g


def read_graph(text: str, fmt: str = "edgelist", labels: bool = False):
    if fmt == "graph6":
        return from_graph6(text), None
    return parse_edge_list(text, labels)


def write_graph(g: Graph, fmt: str = "edgelist", labels=None) -> str:
    if fmt == "graph6":
        return to_graph6(g) + "\n"
    return format_edge_list(g, labels)


def digest(data: str | bytes) -> str:
    if isinstance(data, str):
        data = data.encode()
    return "sha256:" + hashlib.sha256(data).hexdigest()


def dumps(obj) -> str:
    """Fixed layout: insertion-ordered keys, shortest round-trip floats."""
    return json.dumps(obj, indent=2, ensure_ascii=True, allow_nan=False) + "\n"


def envelope(command: str, input_digest: str, result, run=None) -> dict:
    out = {
        "schema": SCHEMA,
        "command": command,
        "input_digest": input_digest,
        "tool_version": __version__,
        "result": result,
    }
    if run is not None:
        out["run"] = run
    return out
