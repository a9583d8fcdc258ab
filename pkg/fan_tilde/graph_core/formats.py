"""Reading and writing graphs as graph6 lines and plain edge lists.

graph6 packs the upper triangle of the adjacency matrix column by column
(for j = 1..n-1, for i = 0..j-1) into 6-bit groups, each offset by 63.
The order is a single byte n+63 when n <= 62, else byte 126 and three
6-bit groups.

The edge-list format is a line "n m" followed by m lines "u v".
"""

from __future__ import annotations

import re

from fan_tilde.errors import ByteRangeError
from fan_tilde.errors import EmptyInputError
from fan_tilde.errors import GraphFormatError
from fan_tilde.errors import GraphSizeError
from fan_tilde.errors import HeaderError
from fan_tilde.errors import SelfLoopError
from fan_tilde.errors import TokenError
from fan_tilde.errors import TruncatedInputError
from fan_tilde.errors import VertexRangeError
from fan_tilde.graph_core.graph import MAX_VERTICES
from fan_tilde.graph_core.graph import Graph

TYPE_CHECKING = False
if TYPE_CHECKING:
    from collections.abc import Iterator

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_OFFSET = 63
GRAPH6_MAX = 126
# Largest order with a one-byte size field.
GRAPH6_SHORT_ORDER = 62

FORMATS = ("auto", "graph6", "edges")

EDGE_HEADER_PATTERN = re.compile(r"^\s*(\d+)\s+(\d+)\s*$")


def _graph6_order(data: bytes, line: int | None) -> tuple[int, int]:
    """Return (n, number of header bytes)."""
    if data[0] != GRAPH6_MAX:
        return data[0] - GRAPH6_OFFSET, 1
    if len(data) > 1 and data[1] == GRAPH6_MAX:
        raise GraphSizeError(f"graph6 eight-byte order field exceeds {MAX_VERTICES} vertices")
    if len(data) < 4:
        raise HeaderError("graph6 order field ends early", line=line, position=len(data))
    n = 0
    for byte in data[1:4]:
        n = (n << 6) | (byte - GRAPH6_OFFSET)
    return n, 4


def parse_graph6(text: str, *, line: int | None = None) -> Graph:
    text = text.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text.removeprefix(GRAPH6_HEADER)
    if not text:
        raise EmptyInputError("empty graph6 input", line=line)
    try:
        data = text.encode("ascii")
    except UnicodeEncodeError as exc:
        raise ByteRangeError(f"character {text[exc.start]!r} is not printable ASCII", line=line,
                             position=exc.start) from None
    for position, byte in enumerate(data):
        if not GRAPH6_OFFSET <= byte <= GRAPH6_MAX:
            raise ByteRangeError(f"byte {byte} outside {GRAPH6_OFFSET}..{GRAPH6_MAX}", line=line, position=position)

    n, start = _graph6_order(data, line)
    if not 1 <= n <= MAX_VERTICES:
        raise GraphSizeError(f"graph6 order {n} outside 1..{MAX_VERTICES}")
    bit_count = n * (n - 1) // 2
    needed = -(-bit_count // 6)
    body = data[start:]
    if len(body) < needed:
        raise TruncatedInputError(
            f"graph6 body has {len(body)} bytes, order {n} needs {needed}", line=line, position=len(data)
        )
    if len(body) > needed:
        raise GraphFormatError(f"{len(body) - needed} trailing bytes after graph6 body", line=line,
                               position=start + needed)

    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - GRAPH6_OFFSET) >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n <= GRAPH6_SHORT_ORDER:
        out = [n + GRAPH6_OFFSET]
    else:
        out = [GRAPH6_MAX] + [(n >> shift & 0x3F) + GRAPH6_OFFSET for shift in (12, 6, 0)]
    group = filled = 0
    for j in range(1, n):
        for i in range(j):
            group = (group << 1) | (g.adj[i] >> j & 1)
            filled += 1
            if filled == 6:
                out.append(group + GRAPH6_OFFSET)
                group = filled = 0
    if filled:
        out.append((group << (6 - filled)) + GRAPH6_OFFSET)
    return bytes(out).decode("ascii")


def _edge_tokens(raw: str, line: int) -> tuple[int, int]:
    tokens = raw.split()
    if len(tokens) != 2:
        raise TokenError(f"expected two integers, found {len(tokens)} tokens", line=line)
    try:
        return int(tokens[0]), int(tokens[1])
    except ValueError:
        raise TokenError(f"non-integer token in {raw.strip()!r}", line=line) from None


def _content_lines(text: str) -> list[tuple[int, str]]:
    lines = [(num, raw) for num, raw in enumerate(text.splitlines(), start=1) if raw.strip()]
    if not lines:
        raise EmptyInputError("empty edge-list input")
    return lines


def _edge_list_at(lines: list[tuple[int, str]], cursor: int) -> tuple[Graph, int]:
    """The graph whose header is ``lines[cursor]``, and the cursor after it."""
    line_num, raw = lines[cursor]
    n, m = _edge_tokens(raw, line_num)
    if not 1 <= n <= MAX_VERTICES:
        raise GraphSizeError(f"edge-list order {n} outside 1..{MAX_VERTICES}")
    if m < 0:
        raise TokenError(f"negative edge count {m}", line=line_num)
    if m > len(lines) - cursor - 1:
        raise TruncatedInputError(f"{m} edges declared, {len(lines) - cursor - 1} present", line=line_num)
    adj = [0] * n
    for edge_line, edge_raw in lines[cursor + 1:cursor + 1 + m]:
        u, v = _edge_tokens(edge_raw, edge_line)
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge {u} {v} leaves 0..{n - 1}", line=edge_line)
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}", line=edge_line)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj)), cursor + m + 1


def _iter_edge_lists(text: str) -> Iterator[Graph]:
    lines = _content_lines(text)
    cursor = 0
    while cursor < len(lines):
        g, cursor = _edge_list_at(lines, cursor)
        yield g


def parse_edge_list(text: str) -> Graph:
    lines = _content_lines(text)
    g, cursor = _edge_list_at(lines, 0)
    if cursor < len(lines):
        raise TokenError("more lines than the declared edge count", line=lines[cursor][0])
    return g


def emit_edge_list(g: Graph) -> str:
    edges = list(g.edges())
    return "\n".join([f"{g.n} {len(edges)}", *(f"{u} {v}" for u, v in edges)]) + "\n"


def read_graphs(text: str, fmt: str = "auto") -> list[Graph]:
    """Every graph in ``text``.

    ``auto`` picks the edge-list format when the first non-blank line holds
    two integers; graph6 lines never contain whitespace.
    """
    if fmt not in FORMATS:
        raise GraphFormatError(f"unknown format {fmt!r}, expected one of {', '.join(FORMATS)}")
    if fmt == "auto":
        first = next((raw for raw in text.splitlines() if raw.strip()), "")
        fmt = "edges" if EDGE_HEADER_PATTERN.match(first) else "graph6"
    if fmt == "edges":
        return list(_iter_edge_lists(text))
    graphs = [
        parse_graph6(raw, line=line_num)
        for line_num, raw in enumerate(text.splitlines(), start=1)
        if raw.strip()
    ]
    if not graphs:
        raise EmptyInputError("no graph6 lines in input")
    return graphs
