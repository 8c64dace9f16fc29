"""Reading and writing graphs: graph6, plain edge lists, DOT export.

graph6 packing is bit-exact: the size header N(n), then the upper
triangle in column order, six bits per printable character (byte values
63..126).  Encoding always emits the canonical byte form, so a
decode/encode round trip is byte-identical for canonical records.
"""

from __future__ import annotations

import io as _io
from typing import IO, Iterable, Iterator

from .core import Graph, GraphError, MAX_VERTICES, bits

GRAPH6_HEADER = ">>graph6<<"


class FormatError(GraphError):
    """Malformed external graph data; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def _triangle_bits(g: Graph) -> Iterator[int]:
    for v in range(1, g.n):
        col = g.adj[v]
        for u in range(v):
            yield col >> u & 1


def graph6_encode(g: Graph) -> str:
    """The graph6 record of g (no trailing newline, no optional header)."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + chr((n >> 12 & 63) + 63) + chr((n >> 6 & 63) + 63) + chr((n & 63) + 63)
    chunk = 0
    filled = 0
    body = []
    for bit in _triangle_bits(g):
        chunk = chunk << 1 | bit
        filled += 1
        if filled == 6:
            body.append(chr(chunk + 63))
            chunk = 0
            filled = 0
    if filled:
        body.append(chr((chunk << (6 - filled)) + 63))
    return head + "".join(body)


def graph6_decode(record: str) -> Graph:
    """Parse one graph6 record (an optional '>>graph6<<' header is stripped)."""
    s = record.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise FormatError("empty graph6 record")
    data = [ord(c) - 63 for c in s]
    if any(x < 0 or x > 63 for x in data):
        raise FormatError("graph6 record contains bytes outside 63..126")
    if data[0] == 63:  # '~' long-form size
        if len(data) < 4:
            raise FormatError("truncated graph6 size header")
        if data[1] == 63:
            raise FormatError("graph6 records beyond 258047 vertices are not supported")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    if n > MAX_VERTICES:
        raise FormatError(f"{n} vertices exceeds the {MAX_VERTICES}-vertex core")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise FormatError(f"graph6 body has {len(body)} characters, expected {(nbits + 5) // 6}")
    stream = 0
    for x in body:
        stream = stream << 6 | x
    total = 6 * len(body)
    pad = total - nbits
    if pad and stream & ((1 << pad) - 1):
        raise FormatError("nonzero padding bits in graph6 record")
    adj = [0] * n
    pos = total - 1
    for v in range(1, n):
        for u in range(v):
            if stream >> pos & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            pos -= 1
    return Graph(tuple(adj))


def read_graph6(handle: IO[str]) -> Iterator[Graph]:
    """Yield graphs from newline-separated graph6 records, in file order."""
    for lineno, line in enumerate(handle, start=1):
        text = line.strip()
        if not text:
            continue
        try:
            yield graph6_decode(text)
        except FormatError as exc:
            raise FormatError(str(exc), line=lineno) from None


def ingest_graph6(path: str) -> Iterator[Graph]:
    """Stream graphs from a graph6 file; malformed records report their line."""
    with open(path, "r", encoding="ascii") as handle:
        yield from read_graph6(handle)


def write_graph6(graphs: Iterable[Graph], handle: IO[str]) -> None:
    for g in graphs:
        handle.write(graph6_encode(g) + "\n")


def edge_list_encode(g: Graph) -> str:
    """Plain text: first line the vertex count, then one '<u> <v>' per edge."""
    lines = [str(g.n)]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def edge_list_decode(text: str) -> Graph:
    """Parse the plain edge-list format; '#' starts a comment, blanks ignored."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1:
                raise FormatError("first data line must be the vertex count", line=lineno)
            try:
                n = int(parts[0])
            except ValueError:
                raise FormatError(f"bad vertex count {parts[0]!r}", line=lineno) from None
            if n < 0:
                raise FormatError("vertex count must be non-negative", line=lineno)
            continue
        if len(parts) != 2:
            raise FormatError(f"expected 'u v', got {line!r}", line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"non-integer endpoint in {line!r}", line=lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"edge ({u}, {v}) outside 0..{n - 1}", line=lineno)
        if u == v:
            raise FormatError(f"self-loop at {u}", line=lineno)
        edges.append((u, v))
    if n is None:
        raise FormatError("no vertex count found")
    return Graph.from_edges(n, edges)


def dot_encode(g: Graph, name: str = "G") -> str:
    """DOT text for visualization (undirected, default styling)."""
    out = _io.StringIO()
    out.write(f"graph {name} {{\n")
    isolated = [v for v in g.vertices() if g.degree(v) == 0]
    for v in isolated:
        out.write(f"  {v};\n")
    for u, v in g.edges():
        out.write(f"  {u} -- {v};\n")
    out.write("}\n")
    return out.getvalue()
