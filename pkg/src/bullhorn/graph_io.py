"""graph6, DIMACS ``.col`` and plain edge-list codecs.

graph6 layout: one size byte ``63 + n`` (or ``~`` followed by three bytes for
63 <= n <= 258047), then the upper triangle of the adjacency matrix read
column by column, a(0,1), a(0,2), a(1,2), a(0,3), ..., packed six bits per
byte (most significant first), zero-padded, each byte stored as value + 63.
"""

from __future__ import annotations

import warnings
from typing import Iterable, Iterator

from .errors import GraphFormatError
from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"
_SMALL_MAX = 62
_MEDIUM_MAX = 258047


def _size_bytes(n: int) -> bytes:
    if n <= _SMALL_MAX:
        return bytes([63 + n])
    if n <= _MEDIUM_MAX:
        return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    raise ValueError(f"n={n} too large for graph6")


def encode_graph6(g: Graph, allow_large: bool = True) -> str:
    """graph6 record for ``g`` (no header, no newline).

    With ``allow_large=False`` graphs above 62 vertices are refused instead of
    using the four-byte size prefix.
    """
    n = g.n
    if n > _SMALL_MAX and not allow_large:
        raise ValueError(f"n={n} exceeds {_SMALL_MAX} and the large-size extension is disabled")
    out = bytearray(_size_bytes(n))
    adj = g.adj
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = adj[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(63 + acc)
                acc = 0
                nbits = 0
    if nbits:
        out.append(63 + (acc << (6 - nbits)))
    return out.decode("ascii")


def decode_graph6(line: str | bytes) -> Graph:
    """Parse one graph6 record. Padding bits must be zero."""
    if isinstance(line, bytes):
        try:
            line = line.decode("ascii")
        except UnicodeDecodeError as exc:
            raise GraphFormatError("non-ASCII byte", exc.start) from None
    text = line.strip("\r\n")
    base = 0
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not text:
        raise GraphFormatError("empty graph6 record", base)
    data = text.encode("ascii", errors="replace")
    for i, c in enumerate(data):
        if not 63 <= c <= 126:
            raise GraphFormatError(f"byte {c!r} outside 63..126", base + i)
    if data[0] != 126:
        n = data[0] - 63
        pos = 1
    else:
        if len(data) >= 2 and data[1] == 126:
            raise GraphFormatError("eight-byte size prefix not supported", base + 1)
        if len(data) < 4:
            raise GraphFormatError("truncated size prefix", base + len(data))
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        if n <= _SMALL_MAX:
            raise GraphFormatError("non-canonical size prefix", base)
        pos = 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - pos != need:
        raise GraphFormatError(
            f"expected {need} adjacency bytes for n={n}, found {len(data) - pos}", base + min(len(data), pos + need)
        )
    adj = [0] * n
    k = 0
    body = data[pos:]
    i, j = 0, 1
    for idx, c in enumerate(body):
        val = c - 63
        for shift in range(5, -1, -1):
            bit = val >> shift & 1
            if k < nbits:
                if bit:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                i += 1
                if i == j:
                    i = 0
                    j += 1
            elif bit:
                raise GraphFormatError("nonzero padding bit", base + pos + idx)
            k += 1
    return Graph._trusted(n, tuple(adj))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for raw in lines:
        if raw.strip():
            yield decode_graph6(raw.strip())


def encode_dimacs(g: Graph) -> str:
    edges = g.edges()
    lines = [f"p edge {g.n} {len(edges)}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    return "\n".join(lines) + "\n"


def decode_dimacs(text: str) -> Graph:
    """Parse DIMACS ``.col`` text. Duplicate edges are merged with a warning."""
    n = None
    declared_m = None
    edges: set[tuple[int, int]] = set()
    dupes = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphFormatError("second problem line", lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise GraphFormatError(f"malformed problem line {line!r}", lineno)
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphFormatError(f"malformed problem line {line!r}", lineno) from None
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError("edge before problem line", lineno)
            if len(parts) != 3:
                raise GraphFormatError(f"malformed edge line {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError(f"malformed edge line {line!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"vertex index out of range 1..{n}", lineno)
            if u == v:
                raise GraphFormatError("self-loop", lineno)
            key = (min(u, v) - 1, max(u, v) - 1)
            if key in edges:
                dupes += 1
            edges.add(key)
        else:
            raise GraphFormatError(f"unknown line type {parts[0]!r}", lineno)
    if n is None:
        raise GraphFormatError("missing problem line 'p edge n m'")
    if dupes:
        warnings.warn(f"{dupes} duplicate edge(s) merged", stacklevel=2)
    if declared_m != len(edges) + dupes:
        warnings.warn(f"problem line declares {declared_m} edges, found {len(edges)}", stacklevel=2)
    return Graph.from_edges(n, sorted(edges))


def encode_edge_list(g: Graph) -> str:
    lines = [f"n={g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def decode_edge_list(text: str) -> Graph:
    """Parse ``n=<k>`` followed by one 0-indexed ``u v`` pair per line."""
    lines = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), start=1) if ln.strip()]
    if not lines or not lines[0][1].startswith("n="):
        raise GraphFormatError("edge list must start with 'n=<k>'", 1)
    try:
        n = int(lines[0][1][2:])
    except ValueError:
        raise GraphFormatError("bad vertex count", lines[0][0]) from None
    edges = []
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"malformed edge {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"malformed edge {line!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise GraphFormatError(f"bad edge {line!r}", lineno)
        edges.append((u, v))
    return Graph.from_edges(n, edges)
