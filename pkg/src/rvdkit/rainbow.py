"""Vertex colorings, rainbow vertex-cuts and coloring verification."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .graph import Graph, GraphError, local_connectivity, reach_mask


@dataclass(frozen=True)
class VertexColoring:
    """Color of every vertex, indexed by vertex id."""

    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if any(c < 0 for c in self.colors):
            raise ValueError("colors must be nonnegative integers")

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping[int, int]) -> "VertexColoring":
        missing = [v for v in range(n) if v not in mapping]
        if missing:
            raise ValueError(f"coloring misses vertices {missing}")
        extra = [v for v in mapping if not 0 <= v < n]
        if extra:
            raise ValueError(f"coloring names unknown vertices {extra}")
        return cls(tuple(mapping[v] for v in range(n)))

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    @property
    def palette_size(self) -> int:
        return len(set(self.colors))

    def normalized(self) -> "VertexColoring":
        """Rename colors to 1, 2, ... in order of first appearance."""
        rename: dict[int, int] = {}
        for c in self.colors:
            rename.setdefault(c, len(rename) + 1)
        return VertexColoring(tuple(rename[c] for c in self.colors))

    def renamed(self, mapping: Mapping[int, int]) -> "VertexColoring":
        return VertexColoring(tuple(mapping.get(c, c) for c in self.colors))


@dataclass(frozen=True)
class CutCertificate:
    x: int
    y: int
    cut: tuple[int, ...]
    witness: int | None = None  # endpoint e with cut + e rainbow, adjacent pairs only


@dataclass
class Verification:
    valid: bool
    certificates: dict[tuple[int, int], CutCertificate] = field(default_factory=dict)
    violation: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.valid


def is_rainbow(coloring: VertexColoring, s: Iterable[int]) -> bool:
    seen = set()
    for v in s:
        c = coloring[v]
        if c in seen:
            return False
        seen.add(c)
    return True


def _as_mask(s: Iterable[int]) -> int:
    bits = 0
    for v in s:
        bits |= 1 << v
    return bits


def is_vertex_cut(g: Graph, x: int, y: int, s: Iterable[int]) -> bool:
    """Whether ``s`` separates x from y (in G - xy when x and y are adjacent)."""
    if x == y:
        raise GraphError("an x-y vertex-cut needs x != y")
    s = set(s)
    if x in s or y in s:
        raise GraphError("a cut may not contain its own endpoints")
    if any(not 0 <= v < g.n for v in s):
        raise GraphError("cut names an unknown vertex")
    skip = (x, y) if g.has_edge(x, y) else None
    return not reach_mask(g, x, _as_mask(s), skip) >> y & 1


def _rainbow_subsets(vertices: Sequence[int], colors: Sequence[int], size: int):
    """Rainbow subsets of ``vertices`` with exactly ``size`` elements, in
    lexicographic order; at most one vertex per color class is ever taken."""
    chosen: list[int] = []
    used: set[int] = set()

    def rec(start: int):
        if len(chosen) == size:
            yield tuple(chosen)
            return
        for i in range(start, len(vertices) - (size - len(chosen)) + 1):
            v = vertices[i]
            c = colors[v]
            if c in used:
                continue
            chosen.append(v)
            used.add(c)
            yield from rec(i + 1)
            used.discard(c)
            chosen.pop()

    yield from rec(0)


def find_rainbow_cut(g: Graph, coloring: VertexColoring, x: int, y: int) -> CutCertificate | None:
    """Lexicographically least minimum-size x-y rainbow vertex-cut, or None."""
    if x == y:
        raise GraphError("an x-y vertex-cut needs x != y")
    if len(coloring) != g.n:
        raise ValueError("coloring does not cover the graph")
    x, y = min(x, y), max(x, y)
    colors = coloring.colors
    adjacent = g.has_edge(x, y)
    skip = (x, y) if adjacent else None
    others = [v for v in range(g.n) if v != x and v != y]
    start = local_connectivity(g, x, y).value - (1 if adjacent else 0)
    n_colors = len({colors[v] for v in others})
    for size in range(max(0, start), min(len(others), n_colors) + 1):
        for s in _rainbow_subsets(others, colors, size):
            if reach_mask(g, x, _as_mask(s), skip) >> y & 1:
                continue
            if not adjacent:
                return CutCertificate(x, y, s)
            used = {colors[v] for v in s}
            if colors[x] not in used:
                return CutCertificate(x, y, s, witness=x)
            if colors[y] not in used:
                return CutCertificate(x, y, s, witness=y)
    return None


def check_certificate(g: Graph, coloring: VertexColoring, cert: CutCertificate) -> bool:
    """Independent re-check of a certificate against the definition."""
    x, y, s = cert.x, cert.y, cert.cut
    if x in s or y in s or not is_vertex_cut(g, x, y, s):
        return False
    if g.has_edge(x, y):
        return cert.witness in (x, y) and is_rainbow(coloring, (*s, cert.witness))
    return cert.witness is None and is_rainbow(coloring, s)


def verify_coloring(g: Graph, coloring: VertexColoring, stop_at_first: bool = True) -> Verification:
    """Check every unordered pair for a rainbow cut.

    The violation reported is always the lexicographically first failing pair.
    """
    if len(coloring) != g.n:
        raise ValueError(f"coloring has {len(coloring)} entries, graph has {g.n} vertices")
    result = Verification(valid=True)
    for x, y in itertools.combinations(range(g.n), 2):
        cert = find_rainbow_cut(g, coloring, x, y)
        if cert is None:
            if result.valid:
                result.valid = False
                result.violation = (x, y)
            if stop_at_first:
                break
        else:
            result.certificates[(x, y)] = cert
    return result


def parse_coloring(text: str, n: int | None = None) -> VertexColoring:
    """Read ``vertex color`` lines. ``n`` (if given) must match the vertices named."""
    mapping: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2 or not all(t.isdigit() for t in tokens):
            raise ValueError(f"line {lineno}: expected 'vertex color', got {raw!r}")
        v, c = int(tokens[0]), int(tokens[1])
        if v in mapping:
            raise ValueError(f"line {lineno}: vertex {v} colored twice")
        mapping[v] = c
    if n is None:
        n = max(mapping) + 1 if mapping else 0
    return VertexColoring.from_mapping(n, mapping)


def format_coloring(coloring: VertexColoring) -> str:
    return "".join(f"{v} {c}\n" for v, c in enumerate(coloring.colors))
