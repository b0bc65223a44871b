"""graph6 codec (short form, n <= 62) and a plain edge-list text format.

graph6 layout: one byte n+63, then ceil(n(n-1)/2 / 6) bytes packing the
upper triangle of the adjacency matrix in column-major order, six bits per
byte (most significant first), each byte offset by 63.  Padding bits must
be zero.  The optional ">>graph6<<" header is accepted on input and never
written.

Edge-list format: first non-comment line "n m", then m lines "u v" with
0-based integers; '#' starts a comment anywhere on a line.
"""
from __future__ import annotations

from .errors import Graph6Error, GraphError
from .graph import Graph, from_edge_list

HEADER = ">>graph6<<"


def parse_graph6(line: str | bytes) -> Graph:
    if isinstance(line, (bytes, bytearray)):
        try:
            line = line.decode("ascii")
        except UnicodeDecodeError as exc:
            raise Graph6Error(f"non-ASCII byte in graph6 input: {exc}") from None
    s = line.rstrip("\r\n")
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    c0 = ord(s[0])
    if c0 == 126:
        raise Graph6Error("long-form graph6 (n > 62) is not supported")
    if not 63 <= c0 <= 125:
        raise Graph6Error(f"invalid graph6 size character {s[0]!r}")
    n = c0 - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    data = s[1:]
    if len(data) != nbytes:
        raise Graph6Error(
            f"expected {nbytes} data characters for n={n}, got {len(data)}"
        )
    bits = 0
    for ch in data:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6Error(f"invalid graph6 data character {ch!r}")
        bits = bits << 6 | (c - 63)
    total = 6 * nbytes
    pad = total - nbits
    if pad and bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits in graph6 data")
    edges = []
    i = 0
    for col in range(1, n):
        for row in range(col):
            if bits >> (total - 1 - i) & 1:
                edges.append((row, col))
            i += 1
    return Graph(n, edges)


def to_graph6(g: Graph) -> str:
    if g.n > 62:
        raise Graph6Error("graphs with more than 62 vertices have no short form")
    n = g.n
    masks = g.neighbor_masks
    bits = 0
    nbits = 0
    for col in range(1, n):
        colmask = masks[col]
        for row in range(col):
            bits = bits << 1 | (colmask >> row & 1)
            nbits += 1
    nbytes = (nbits + 5) // 6
    bits <<= 6 * nbytes - nbits
    chars = [chr(n + 63)]
    for k in range(nbytes - 1, -1, -1):
        chars.append(chr((bits >> 6 * k & 0x3F) + 63))
    return "".join(chars)


def parse_edgelist(text: str) -> Graph:
    """Parse the "n m" + edge-lines format; '#' comments and blank lines ok."""
    rows: list[str] = []
    for raw in text.splitlines():
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            rows.append(stripped)
    if not rows:
        raise GraphError("empty edge-list input")
    head = rows[0].split()
    if len(head) != 2:
        raise GraphError(f"expected header 'n m', got {rows[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphError(f"expected integer header 'n m', got {rows[0]!r}") from None
    body = rows[1:]
    if len(body) != m:
        raise GraphError(f"header promises {m} edges, found {len(body)} edge lines")
    edges = []
    for row in body:
        parts = row.split()
        if len(parts) != 2:
            raise GraphError(f"expected edge line 'u v', got {row!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"non-integer endpoint in edge line {row!r}") from None
    return from_edge_list(n, edges)


def format_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
