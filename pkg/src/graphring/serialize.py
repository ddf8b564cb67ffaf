"""Bit-exact serialization: graph6 codec, DOT export, edge-list ingestion.

Only the short graph6 form (up to 62 vertices, single size byte) is
supported; larger graphs travel as edge lists.
"""

from __future__ import annotations

from .errors import FormatError, InputError
from .graphs import Graph, normalize

__all__ = ["encode_graph6", "decode_graph6", "export_dot", "parse_edge_list", "export_edge_list"]

_G6_MAX = 62


def encode_graph6(g: Graph) -> str:
    """graph6: byte ``63+n``, then the upper-triangle bits in column order
    ``(i<j, ordered by j then i)``, packed six per byte, each byte ``+63``."""
    if g.n > _G6_MAX:
        raise InputError(
            "graph6 short form supports at most %d vertices, got %d" % (_G6_MAX, g.n)
        )
    out = [chr(63 + g.n)]
    bits = []
    for j in range(1, g.n):
        col = g.rows[j]
        for i in range(j):
            bits.append((col >> i) & 1)
    for k in range(0, len(bits), 6):
        chunk = bits[k : k + 6]
        value = 0
        for b in chunk:
            value = (value << 1) | b
        value <<= 6 - len(chunk)
        out.append(chr(63 + value))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    data = text.strip()
    if not data:
        raise FormatError("empty graph6 string")
    raw = [ord(ch) for ch in data]
    for pos, byte in enumerate(raw):
        if not 63 <= byte <= 126:
            raise FormatError(
                "graph6 byte %r at position %d outside printable range 63..126"
                % (data[pos], pos)
            )
    n = raw[0] - 63
    if n > _G6_MAX:
        raise FormatError("graph6 size byte encodes %d > %d vertices" % (n, _G6_MAX))
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(raw) - 1 != nbytes:
        raise FormatError(
            "graph6 body has %d bytes, expected %d for %d vertices"
            % (len(raw) - 1, nbytes, n)
        )
    bits = []
    for byte in raw[1:]:
        value = byte - 63
        for k in range(5, -1, -1):
            bits.append((value >> k) & 1)
    if any(bits[nbits:]):
        raise FormatError("graph6 padding bits are not zero")
    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    return Graph(n, tuple(rows))


def export_dot(g: Graph) -> str:
    """Undirected DOT: all vertices listed (isolated ones included), then
    the edges in ascending order."""
    lines = ["graph {"]
    for v in range(g.n):
        lines.append("  %d;" % v)
    for i, j in g.edges():
        lines.append("  %d -- %d;" % (i, j))
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Edge-list format: lines ``u v`` of nonnegative integer labels, blank
    lines and ``#`` comments ignored, optional ``n=<count>`` header that
    declares the vertices ``0..count-1`` up front."""
    declared: int | None = None
    vertices: list[int] = []
    seen: set[int] = set()
    edges: list[tuple[int, int]] = []

    def note(v: int) -> None:
        if v not in seen:
            seen.add(v)
            vertices.append(v)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("n="):
            if declared is not None or edges or vertices:
                raise FormatError("line %d: header n= must come first" % lineno)
            try:
                declared = int(line[2:])
            except ValueError:
                raise FormatError("line %d: bad vertex count %r" % (lineno, line[2:]))
            if declared < 0:
                raise FormatError("line %d: negative vertex count" % lineno)
            for v in range(declared):
                note(v)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError("line %d: expected 'u v', got %r" % (lineno, raw))
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError("line %d: non-integer endpoint in %r" % (lineno, raw))
        if u < 0 or v < 0:
            raise FormatError("line %d: negative vertex label" % lineno)
        if declared is not None and (u >= declared or v >= declared):
            raise FormatError(
                "line %d: endpoint beyond declared n=%d" % (lineno, declared)
            )
        note(u)
        note(v)
        edges.append((u, v))
    return normalize(vertices, edges)


def export_edge_list(g: Graph) -> str:
    lines = ["n=%d" % g.n]
    for i, j in g.edges():
        lines.append("%d %d" % (i, j))
    return "\n".join(lines) + "\n"
