"""graph6 codec and a plain edge-list format.

graph6 (short form only, n <= 62): one header byte ``63 + n``, then the
upper-triangle adjacency bits in the order (0,1), (0,2), (1,2), (0,3), ...
packed six per byte, most significant bit first, each byte offset by 63,
final group zero-padded.

Edge list::

    # comments run to end of line
    n 3
    0 1
    1 2
"""
from __future__ import annotations

import re
from typing import Iterable

from .errors import CapacityError, Graph6Error, GraphValidationError
from .graph import Graph, edge_code, from_edges, graph_from_code, upper_pairs

GRAPH6_MAX_N = 62
_GRAPH6_PREFIX = ">>graph6<<"


def encode_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise CapacityError(f"graph6 long-form headers are not supported (n={g.n})")
    m = len(upper_pairs(g.n))
    nbytes = -(-m // 6)
    # Pad to a whole number of 6-bit groups, then read the stream MSB-first.
    code = edge_code(g)
    stream = 0
    for k in range(m):
        stream = stream << 1 | (code >> k & 1)
    stream <<= 6 * nbytes - m
    body = [chr(63 + (stream >> 6 * (nbytes - 1 - i) & 63)) for i in range(nbytes)]
    return chr(63 + g.n) + "".join(body)


def decode_graph6(s: str, strict: bool = True) -> Graph:
    """Inverse of :func:`encode_graph6`.

    With ``strict`` (the default) nonzero padding bits are an error; pass
    ``strict=False`` to ignore them.
    """
    s = s.rstrip("\r\n")
    if s.startswith(_GRAPH6_PREFIX):
        s = s[len(_GRAPH6_PREFIX):]
    if not s:
        raise Graph6Error("empty graph6 string")
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} at offset {i} is outside 63..126")
    n = ord(s[0]) - 63
    if n > GRAPH6_MAX_N:
        raise CapacityError("graph6 long-form headers are not supported")
    m = len(upper_pairs(n))
    nbytes = -(-m // 6)
    body = s[1:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated graph6: n={n} needs {nbytes} body bytes, got {len(body)}")
    if len(body) > nbytes:
        raise Graph6Error(f"trailing data after graph6 body ({len(body) - nbytes} extra bytes)")
    stream = 0
    for ch in body:
        stream = stream << 6 | (ord(ch) - 63)
    pad = 6 * nbytes - m
    if strict and stream & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits in graph6 body")
    stream >>= pad
    code = 0
    for k in range(m):
        code |= (stream >> (m - 1 - k) & 1) << k
    return graph_from_code(n, code)


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def _content_lines(text: str) -> Iterable[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphValidationError(f"line {lineno}: not an integer: {token!r}") from None


def parse_edge_list(text: str) -> Graph:
    lines = iter(_content_lines(text))
    header = next(lines, None)
    if header is None:
        raise GraphValidationError("edge list is empty")
    lineno, line = header
    parts = line.split()
    if len(parts) != 2 or parts[0] != "n":
        raise GraphValidationError(f"line {lineno}: expected header 'n <count>', got {line!r}")
    n = _int(parts[1], lineno)
    if n < 0:
        raise GraphValidationError(f"line {lineno}: negative vertex count")
    edges = []
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 2:
            raise GraphValidationError(f"line {lineno}: expected 'u v', got {line!r}")
        u, v = (_int(t, lineno) for t in parts)
        if u == v:
            raise GraphValidationError(f"line {lineno}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphValidationError(f"line {lineno}: vertex out of range 0..{n - 1}")
        edges.append((u, v))
    return from_edges(n, edges)


_HEADER = re.compile(r"n\s+\S+$")


def detect_format(text: str) -> str:
    """``"edgelist"`` if the first content line is an ``n`` header, else ``"graph6"``."""
    first = next(iter(_content_lines(text)), None)
    if first is None:
        raise GraphValidationError("no graph in input")
    return "edgelist" if _HEADER.match(first[1]) else "graph6"


def read_graphs(text: str, fmt: str | None = None, strict: bool = True) -> list[Graph]:
    """Parse every graph in ``text``: one per line for graph6, one per text for edge lists."""
    fmt = fmt or detect_format(text)
    if fmt == "edgelist":
        return [parse_edge_list(text)]
    if fmt != "graph6":
        raise GraphValidationError(f"unknown format {fmt!r}")
    graphs = [decode_graph6(line.strip(), strict) for line in text.splitlines() if line.strip()]
    if not graphs:
        raise GraphValidationError("no graph in input")
    return graphs
