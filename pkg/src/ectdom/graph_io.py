"""Edge-list and graph6 (short form) readers and writers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, TextIO

from .graph import Graph, GraphError, pair_index

__all__ = [
    "GraphDocument",
    "ParseError",
    "iter_graph6",
    "parse_edgelist",
    "parse_graph6",
    "write_edgelist",
    "write_graph6",
]

GRAPH6_MAX_N = 62
EDGELIST_MAX_N = 1_000_000


class ParseError(ValueError):
    """Malformed input; ``line`` is 1-based, ``column`` is a 0-based character offset."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}: "
        if column is not None:
            where += f"col {column}: "
        super().__init__(where + message)


@dataclass(frozen=True)
class GraphDocument:
    graph: Graph
    source_line: int | None = None


def _ints(tokens: list[str], lineno: int) -> list[int]:
    out = []
    for tok in tokens:
        if not tok.isdigit() or not tok.isascii():
            raise ParseError(f"expected a non-negative decimal integer, got {tok!r}", lineno)
        out.append(int(tok))
    return out


def parse_edgelist(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``; ``#`` lines are comments."""
    header = None
    pairs: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if header is None:
            if len(tokens) != 2:
                raise ParseError(f"malformed header {line!r}, expected 'n m'", lineno)
            header = _ints(tokens, lineno)
            if header[0] > EDGELIST_MAX_N:
                raise ParseError(f"vertex count {header[0]} exceeds {EDGELIST_MAX_N}", lineno)
            continue
        if len(tokens) != 2:
            raise ParseError(f"malformed edge line {line!r}, expected 'u v'", lineno)
        u, v = _ints(tokens, lineno)
        n = header[0]
        if u >= n or v >= n:
            raise ParseError(f"endpoint out of range for n={n}: {u} {v}", lineno)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key} (first on line {seen[key]})", lineno)
        seen[key] = lineno
        pairs.append(key)
    if header is None:
        raise ParseError("missing header 'n m'")
    n, m = header
    if len(pairs) != m:
        raise ParseError(f"expected {m} edges, found {len(pairs)}")
    return Graph(n, pairs)


def write_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_graph6(line: str, lineno: int | None = None) -> Graph:
    """Decode one short-form graph6 string (n <= 62)."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string", lineno, 0)
    for col, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 character {ch!r}", lineno, col)
    n = ord(s[0]) - 63
    if n == 63:
        raise ParseError("long-form graph6 (n >= 63) is not supported", lineno, 0)
    p = n * (n - 1) // 2
    need = -(-p // 6)
    body = s[1:]
    if len(body) != need:
        kind = "truncated" if len(body) < need else "overlong"
        raise ParseError(f"{kind} bit stream: expected {need} data bytes for n={n}, got {len(body)}", lineno, 1 + min(len(body), need))
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> (5 - k)) & 1 for k in range(6))
    if any(bits[p:]):
        raise ParseError("nonzero padding bits", lineno, len(s) - 1)
    pairs = []
    for j in range(1, n):
        for i in range(j):
            if bits[pair_index(i, j)]:
                pairs.append((i, j))
    return Graph(n, pairs)


def write_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise GraphError(f"short-form graph6 needs n <= {GRAPH6_MAX_N}, got {g.n}")
    p = g.n * (g.n - 1) // 2
    bits = [0] * (-(-p // 6) * 6)
    for u, v in g.edges:
        bits[pair_index(u, v)] = 1
    chars = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "".join(chars)


def iter_graph6(stream: TextIO) -> Iterator[GraphDocument | ParseError]:
    """Yield a document per non-blank line, or the ParseError for a bad line."""
    for lineno, raw in enumerate(stream, start=1):
        if not raw.strip():
            continue
        try:
            yield GraphDocument(parse_graph6(raw, lineno), lineno)
        except ParseError as err:
            yield err
