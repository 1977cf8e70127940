"""Text formats: graph6 and a plain edge-list format.

graph6 packs the upper triangle of the adjacency matrix, read column by
column, into 6-bit groups offset by 63 into printable ASCII. The size
header is a single byte n+63 for n <= 62, or '~' followed by three
6-bit bytes for 63 <= n <= 258047. Adjacency bits are zero padded to a
multiple of 6; nonzero padding is rejected.

The edge-list format is line oriented: a header line "n m" followed by
m lines "u v" with 0-based endpoints. Lines starting with '#' and blank
lines are ignored.
"""

from __future__ import annotations

from .graphs import Graph, from_edge_list

__all__ = [
    "Graph6Error",
    "format_edge_list",
    "load_graph_text",
    "parse_edge_list",
    "parse_graph6",
    "to_graph6",
]

_OFFSET = 63
_OPTIONAL_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input; messages carry the offending byte offset."""


def _read_size(data: bytes) -> tuple[int, int]:
    if data[0] != 126:  # '~'
        return data[0] - _OFFSET, 1
    if len(data) < 4:
        raise Graph6Error("truncated size header: '~' needs three following bytes")
    if data[1] == 126:
        raise Graph6Error("8-byte graph6 size headers are not supported")
    n = ((data[1] - _OFFSET) << 12) | ((data[2] - _OFFSET) << 6) | (data[3] - _OFFSET)
    if n < 63:
        raise Graph6Error(f"non-canonical long size header for n={n}")
    return n, 4


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (an optional '>>graph6<<' prefix is allowed)."""
    s = text.strip()
    if s.startswith(_OPTIONAL_HEADER):
        s = s[len(_OPTIONAL_HEADER):].strip()
    if not s:
        raise Graph6Error("empty graph6 input")
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError:
        raise Graph6Error("graph6 input is not ASCII") from None
    for offset, byte in enumerate(data):
        if not _OFFSET <= byte <= 126:
            raise Graph6Error(f"invalid graph6 byte 0x{byte:02x} at offset {offset}")
    n, pos = _read_size(data)
    if n == 0:
        raise Graph6Error("graph6 input encodes a graph with no vertices")
    need_bits = n * (n - 1) // 2
    need_bytes = (need_bits + 5) // 6
    got = len(data) - pos
    if got != need_bytes:
        raise Graph6Error(
            f"adjacency section has {got} bytes starting at offset {pos}, "
            f"expected {need_bytes} for n={n}"
        )
    adj = [0] * n
    index = 0
    column = 1  # current upper-triangle column (0-based vertex j)
    row = 0
    for k in range(need_bytes):
        group = data[pos + k] - _OFFSET
        for t in range(6):
            bit = (group >> (5 - t)) & 1
            if index < need_bits:
                if bit:
                    adj[row] |= 1 << column
                    adj[column] |= 1 << row
                row += 1
                if row == column:
                    column += 1
                    row = 0
                index += 1
            elif bit:
                raise Graph6Error(f"nonzero padding bit at offset {pos + k}")
    return Graph(n, adj)


def to_graph6(graph: Graph) -> str:
    """Encode a graph as one graph6 line (no trailing newline)."""
    n = graph.n
    if n <= 62:
        chars = [chr(_OFFSET + n)]
    elif n <= 258047:
        chars = [
            "~",
            chr(_OFFSET + ((n >> 12) & 63)),
            chr(_OFFSET + ((n >> 6) & 63)),
            chr(_OFFSET + (n & 63)),
        ]
    else:
        raise Graph6Error(f"graph on {n} vertices exceeds the supported graph6 size range")
    group = 0
    filled = 0
    for column in range(1, n):
        col_bits = graph.adj[column]
        for row in range(column):
            group = (group << 1) | ((col_bits >> row) & 1)
            filled += 1
            if filled == 6:
                chars.append(chr(_OFFSET + group))
                group = 0
                filled = 0
    if filled:
        group <<= 6 - filled
        chars.append(chr(_OFFSET + group))
    return "".join(chars)


def _content_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def parse_edge_list(text: str) -> Graph:
    """Parse the "n m" edge-list format defined in the module docstring."""
    lines = _content_lines(text)
    if not lines:
        raise ValueError("edge-list input has no content lines")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"edge-list header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError(f"edge-list header must be two integers, got {lines[0]!r}") from None
    if len(lines) - 1 != m:
        raise ValueError(f"edge-list declares {m} edges but has {len(lines) - 1} edge lines")
    edges = []
    for line in lines[1:]:
        toks = line.split()
        if len(toks) != 2:
            raise ValueError(f"edge line must be 'u v', got {line!r}")
        try:
            edges.append((int(toks[0]), int(toks[1])))
        except ValueError:
            raise ValueError(f"edge line must be two integers, got {line!r}") from None
    return from_edge_list(n, edges)


def format_edge_list(graph: Graph) -> str:
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def load_graph_text(text: str) -> Graph:
    """Sniff edge-list versus graph6 content and parse accordingly.

    A two-integer first content line means the edge-list format; anything
    else is treated as a graph6 line. The two cannot collide because a
    space is not a valid graph6 byte.
    """
    lines = _content_lines(text)
    if not lines:
        raise ValueError("no graph content found in input")
    head = lines[0].split()
    if len(head) == 2:
        try:
            int(head[0]), int(head[1])
        except ValueError:
            pass
        else:
            return parse_edge_list(text)
    return parse_graph6(lines[0])
