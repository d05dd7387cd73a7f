"""Edge-list and graph6 reading/writing."""

from __future__ import annotations

import sys
from pathlib import Path

from .graph import Graph, GraphError


class ParseError(ValueError):
    pass


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines with 0-based ids.

    ``#`` starts a comment, blank lines are skipped and an ``n <count>`` line
    declares the vertex count (needed for isolated vertices).
    """
    declared = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if len(tokens) != 2 or not tokens[1].isdigit() or int(tokens[1]) < 1:
                raise ParseError(f"line {lineno}: bad header {raw!r}")
            if declared is not None:
                raise ParseError(f"line {lineno}: duplicate 'n' header")
            declared = int(tokens[1])
            continue
        if len(tokens) != 2 or not all(t.isdigit() for t in tokens):
            raise ParseError(f"line {lineno}: expected 'u v', got {raw!r}")
        u, v = int(tokens[0]), int(tokens[1])
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at vertex {u}")
        if declared is not None and max(u, v) >= declared:
            raise ParseError(f"line {lineno}: vertex {max(u, v)} out of range for n={declared}")
        edges.add((min(u, v), max(u, v)))
    if declared is None:
        if not edges:
            raise ParseError("empty edge list without an 'n' header")
        declared = max(v for e in edges for v in e) + 1
    for u, v in edges:
        if v >= declared:
            raise ParseError(f"vertex {v} out of range for n={declared}")
    return Graph.from_edges(declared, sorted(edges))


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_graph6(text: str) -> Graph:
    """Decode a short-form (n <= 62) graph6 string."""
    s = text.strip()
    offset = 0
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
        offset = len(">>graph6<<")
    if not s:
        raise ParseError("empty graph6 string")
    data = s.encode("ascii", errors="replace")
    for i, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise ParseError(f"byte {offset + i}: invalid graph6 character {chr(byte)!r}")
    if data[0] == 126:
        raise ParseError(f"byte {offset}: long-form graph6 (n > 62) is not supported")
    n = data[0] - 63
    if n < 1:
        raise ParseError(f"byte {offset}: graph6 with zero vertices")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[1:]
    if len(body) != need:
        raise ParseError(
            f"byte {offset + 1 + min(len(body), need)}: expected {need} data bytes for n={n}, got {len(body)}"
        )
    bits = []
    for byte in body:
        val = byte - 63
        bits.extend((val >> (5 - k)) & 1 for k in range(6))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def to_graph6(g: Graph) -> str:
    if g.n > 62:
        raise GraphError("only short-form graph6 (n <= 62) is supported")
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        out.append(chr(63 + val))
    return "".join(out)


def _content_lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]


def looks_like_graph6(text: str) -> bool:
    lines = _content_lines(text)
    return bool(lines) and all(len(ln.split()) == 1 and not ln.isdigit() for ln in lines)


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    if fmt == "graph6" or (fmt == "auto" and looks_like_graph6(text)):
        lines = _content_lines(text)
        if len(lines) != 1:
            raise ParseError(f"expected exactly one graph6 line, found {len(lines)}")
        return parse_graph6(lines[0])
    if fmt in ("edges", "auto"):
        return parse_edge_list(text)
    raise ParseError(f"unknown graph format {fmt!r}")


def parse_graphs(text: str, fmt: str = "auto") -> list[Graph]:
    """One graph for edge lists, one per line for graph6."""
    if fmt == "graph6" or (fmt == "auto" and looks_like_graph6(text)):
        return [parse_graph6(ln) for ln in _content_lines(text)]
    return [parse_graph(text, fmt)]


def read_text(path: str | Path) -> str:
    if str(path) == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _path_format(path: str | Path, fmt: str) -> str:
    if fmt == "auto" and str(path).endswith(".g6"):
        return "graph6"
    return fmt


def read_graph(path: str | Path, fmt: str = "auto") -> Graph:
    return parse_graph(read_text(path), _path_format(path, fmt))


def read_graphs(path: str | Path, fmt: str = "auto") -> list[Graph]:
    return parse_graphs(read_text(path), _path_format(path, fmt))
