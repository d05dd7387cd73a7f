"""Small-graph enumeration and canonical forms."""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator

from .graph import Graph, connected

MAX_BUILTIN_ORDER = 7


def _refine(g: Graph) -> list[int]:
    """Stable color refinement; returns canonical cell ranks per vertex."""
    colors = [g.degree(v) for v in range(g.n)]
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in g.adj[v]))) for v in range(g.n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _code(g: Graph, order: tuple[int, ...]) -> int:
    # order[i] = old vertex placed at position i
    code = 0
    for j in range(1, g.n):
        vj = order[j]
        for i in range(j):
            code = code << 1 | (1 if g.has_edge(order[i], vj) else 0)
    return code


def canonical_order(g: Graph) -> tuple[int, ...]:
    """Vertex order maximizing the adjacency code among refinement-respecting
    orders. Isomorphic graphs get identical relabeled graphs.

    Cost is the product of the cell factorials, so this is meant for the
    built-in orders (n <= 7); vertex-transitive graphs beyond that blow up.
    """
    cells_rank = _refine(g)
    cells: dict[int, list[int]] = {}
    for v, r in enumerate(cells_rank):
        cells.setdefault(r, []).append(v)
    groups = [cells[r] for r in sorted(cells)]
    best_code, best_order = -1, None
    for parts in itertools.product(*(itertools.permutations(c) for c in groups)):
        order = tuple(itertools.chain.from_iterable(parts))
        code = _code(g, order)
        if code > best_code:
            best_code, best_order = code, order
    return best_order


def canonical_form(g: Graph) -> tuple[int, int]:
    return g.n, _code(g, canonical_order(g))


def canonical_graph(g: Graph) -> Graph:
    order = canonical_order(g)
    pos = {v: i for i, v in enumerate(order)}
    return Graph.from_edges(g.n, ((pos[u], pos[v]) for u, v in g.edges()))


def _labeled_connected(n: int) -> Iterator[Graph]:
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if bits >> i & 1]
        g = Graph.from_edges(n, edges)
        if connected(g):
            yield g


@lru_cache(maxsize=None)
def _iso_classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, [[]]),)
    found: dict[tuple[int, int], Graph] = {}
    for base in _iso_classes(n - 1):
        edges = base.edges()
        for mask in range(1, 1 << (n - 1)):
            extra = [(v, n - 1) for v in range(n - 1) if mask >> v & 1]
            g = Graph.from_edges(n, edges + extra)
            key = canonical_form(g)
            if key not in found:
                found[key] = canonical_graph(g)
    return tuple(found[k] for k in sorted(found))


def enumerate_connected(n: int, up_to_isomorphism: bool = True) -> Iterator[Graph]:
    """Every connected graph on ``n`` vertices.

    Up to isomorphism, graphs are grown one vertex at a time from the classes
    on ``n - 1`` vertices (every connected graph has a non-cut vertex) and
    deduplicated by canonical form. The labeled stream lists all edge sets.
    """
    if n < 1:
        raise ValueError("order must be at least 1")
    if n > MAX_BUILTIN_ORDER:
        raise ValueError(
            f"built-in enumeration stops at n={MAX_BUILTIN_ORDER}; feed larger graphs as graph6 "
            "(e.g. from nauty's geng -c) instead"
        )
    if up_to_isomorphism:
        yield from _iso_classes(n)
    else:
        yield from _labeled_connected(n)


def dedupe(graphs) -> list[Graph]:
    """Isomorph rejection on an arbitrary stream, keeping first occurrences."""
    seen = set()
    out = []
    for g in graphs:
        key = canonical_form(g)
        if key not in seen:
            seen.add(key)
            out.append(g)
    return out
