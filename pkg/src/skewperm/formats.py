"""Text formats: graph6, edge lists, orientation files and matrices."""
from __future__ import annotations

from fractions import Fraction

from .graph import (
    Graph,
    GraphError,
    OrientedGraph,
    WeightedOrientedGraph,
    orient,
)


class FormatError(ValueError):
    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)


# graph6 -----------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_size(text: str) -> tuple[int, int]:
    """Decode the vertex count; return (n, offset of first data byte)."""

    def val(i: int) -> int:
        if i >= len(text):
            raise FormatError("truncated size field", i)
        c = ord(text[i])
        if not 63 <= c <= 126:
            raise FormatError(f"character {text[i]!r} outside graph6 range", i)
        return c - 63

    first = val(0)
    if first < 63:
        return first, 1
    if len(text) > 1 and ord(text[1]) == 126:
        n = 0
        for i in range(2, 8):
            n = (n << 6) | val(i)
        return n, 8
    n = 0
    for i in range(1, 4):
        n = (n << 6) | val(i)
    return n, 4


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    base = 0
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
        base = len(_G6_HEADER)
    if not s:
        raise FormatError("empty graph6 string", base)
    if s[0] in ":&;":
        raise FormatError("sparse6/digraph6 input is not graph6", base)
    try:
        n, start = _g6_size(s)
    except FormatError as exc:
        raise FormatError(str(exc).split(" (at")[0], base + (exc.offset or 0)) from None
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    data = s[start:]
    if len(data) < nbytes:
        raise FormatError(
            f"truncated bit field: need {nbytes} bytes, got {len(data)}", base + len(s)
        )
    if len(data) > nbytes:
        raise FormatError("trailing characters after bit field", base + start + nbytes)
    bits = []
    for i, ch in enumerate(data):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise FormatError(f"character {ch!r} outside graph6 range", base + start + i)
        c -= 63
        bits.extend((c >> (5 - b)) & 1 for b in range(6))
    if any(bits[nbits:]):
        raise FormatError("nonzero padding bits", base + len(s) - 1)
    edges = []
    k = 0
    # upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                edges.append((u, v))
            k += 1
    return Graph(n, edges)


def write_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = chr(n + 63)
    elif n < 258048:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        head = "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for i in range(0, len(bits), 6):
        c = 0
        for b in bits[i : i + 6]:
            c = (c << 1) | b
        body.append(chr(c + 63))
    return head + "".join(body)


def read_graph6_file(path) -> list[Graph]:
    with open(path) as fh:
        return [parse_graph6(line) for line in fh if line.strip()]


# edge lists and orientation files ----------------------------------------


def parse_rational(token: str) -> Fraction:
    """Integer, ``p/q`` or decimal literal, converted exactly."""
    try:
        return Fraction(token.strip())
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"not a rational number: {token!r}") from None


def _data_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line.split()))
    return out


def _parse_header(lines) -> tuple[int, int]:
    if not lines:
        raise FormatError("empty input: expected header 'n m'")
    lineno, toks = lines[0]
    if len(toks) != 2:
        raise FormatError(f"line {lineno}: header must be 'n m'")
    try:
        n, m = int(toks[0]), int(toks[1])
    except ValueError:
        raise FormatError(f"line {lineno}: header must be two integers") from None
    if n < 0 or m < 0:
        raise FormatError(f"line {lineno}: negative size in header")
    if len(lines) - 1 != m:
        raise FormatError(f"header announces {m} edges, found {len(lines) - 1} lines")
    return n, m


def _parse_pairs(text: str, weighted: bool):
    lines = _data_lines(text)
    n, _ = _parse_header(lines)
    pairs, weights, seen = [], [], set()
    for lineno, toks in lines[1:]:
        if len(toks) not in ((2, 3) if weighted else (2,)):
            raise FormatError(f"line {lineno}: expected 'u v'{' [w]' if weighted else ''}")
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise FormatError(f"line {lineno}: vertex indices must be integers") from None
        if u == v:
            raise FormatError(f"line {lineno}: loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"line {lineno}: vertex out of range 0..{n - 1}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
        pairs.append((u, v))
        if weighted:
            weights.append(parse_rational(toks[2]) if len(toks) == 3 else Fraction(1))
    return n, pairs, weights


def parse_edge_list(text: str) -> Graph:
    n, pairs, _ = _parse_pairs(text, weighted=False)
    return Graph(n, pairs)


def parse_weighted_edge_list(text: str) -> tuple[Graph, tuple[Fraction, ...]]:
    """Edge list with an optional third weight column (default 1), weights in edge order."""
    n, pairs, weights = _parse_pairs(text, weighted=True)
    g = Graph(n, pairs)
    by_edge = {(min(u, v), max(u, v)): w for (u, v), w in zip(pairs, weights)}
    return g, tuple(by_edge[e] for e in g.edges)


def parse_orientation(text: str) -> OrientedGraph:
    n, arcs, _ = _parse_pairs(text, weighted=False)
    g = Graph(n, arcs)
    return orient(g, arcs)


def parse_weighted_orientation(text: str) -> WeightedOrientedGraph:
    n, arcs, weights = _parse_pairs(text, weighted=True)
    g = Graph(n, arcs)
    og = orient(g, arcs)
    by_edge = {(min(u, v), max(u, v)): w for (u, v), w in zip(arcs, weights)}
    try:
        return WeightedOrientedGraph(og, tuple(by_edge[e] for e in g.edges))
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def write_orientation(og: OrientedGraph | WeightedOrientedGraph) -> str:
    if isinstance(og, WeightedOrientedGraph):
        g, arcs, ws = og.graph, og.oriented.arcs, og.weights
    else:
        g, arcs, ws = og.graph, og.arcs, None
    lines = [f"{g.n} {g.m}"]
    for e, (u, v) in enumerate(arcs):
        lines.append(f"{u} {v}" if ws is None else f"{u} {v} {format_rational(ws[e])}")
    return "\n".join(lines) + "\n"


# matrices ------------------------------------------------------------------


def parse_matrix(text: str) -> list[list[Fraction]]:
    lines = _data_lines(text)
    if not lines:
        raise FormatError("empty input: expected matrix order on first line")
    lineno, toks = lines[0]
    if len(toks) != 1:
        raise FormatError(f"line {lineno}: first line must hold the order n")
    try:
        n = int(toks[0])
    except ValueError:
        raise FormatError(f"line {lineno}: matrix order must be an integer") from None
    if n < 0:
        raise FormatError(f"line {lineno}: negative matrix order")
    if len(lines) - 1 != n:
        raise FormatError(f"expected {n} matrix rows, found {len(lines) - 1}")
    rows = []
    for lineno, toks in lines[1:]:
        if len(toks) != n:
            raise FormatError(f"line {lineno}: expected {n} entries, got {len(toks)}")
        rows.append([parse_rational(t) for t in toks])
    return rows


def write_matrix(a) -> str:
    lines = [str(len(a))] + [" ".join(format_rational(x) for x in row) for row in a]
    return "\n".join(lines) + "\n"
