"""Deliberately naive reference implementations.

These share no search code with the main paths: subsets are filtered from
``itertools`` output and connectivity is rechecked with a plain set-based
BFS. Only usable on small graphs.
"""

from __future__ import annotations

import itertools

from .graph import Graph
from .rainbow import VertexColoring


def _separated(g: Graph, x: int, y: int, removed: set[int]) -> bool:
    seen = {x}
    todo = [x]
    while todo:
        v = todo.pop()
        for w in g.adj[v]:
            if w in removed or w in seen:
                continue
            if {v, w} == {x, y}:
                continue
            seen.add(w)
            todo.append(w)
    return y not in seen


def naive_rainbow_cut_exists(g: Graph, coloring: VertexColoring, x: int, y: int) -> bool:
    others = [v for v in range(g.n) if v not in (x, y)]
    adjacent = g.has_edge(x, y)
    for r in range(len(others) + 1):
        for s in itertools.combinations(others, r):
            if not _separated(g, x, y, set(s)):
                continue
            cols = [coloring[v] for v in s]
            if adjacent:
                if len(set(cols + [coloring[x]])) == r + 1 or len(set(cols + [coloring[y]])) == r + 1:
                    return True
            elif len(set(cols)) == r:
                return True
    return False


def naive_min_cut_size(g: Graph, x: int, y: int) -> int:
    """Minimum x-y separator size by subset search (G - xy if adjacent)."""
    others = [v for v in range(g.n) if v not in (x, y)]
    for r in range(len(others) + 1):
        for s in itertools.combinations(others, r):
            if _separated(g, x, y, set(s)):
                return r
    raise AssertionError("removing every other vertex must separate x and y")


def naive_local_connectivity(g: Graph, x: int, y: int) -> int:
    return naive_min_cut_size(g, x, y) + (1 if g.has_edge(x, y) else 0)


def naive_connectivity(g: Graph) -> int:
    """Fewest vertices whose removal disconnects or trivializes the graph."""
    for r in range(g.n):
        for s in itertools.combinations(range(g.n), r):
            rest = [v for v in range(g.n) if v not in s]
            if len(rest) <= 1:
                return r
            removed = set(s)
            seen = {rest[0]}
            todo = [rest[0]]
            while todo:
                v = todo.pop()
                for w in g.adj[v]:
                    if w not in removed and w not in seen:
                        seen.add(w)
                        todo.append(w)
            if len(seen) < len(rest):
                return r
    return g.n - 1


def naive_is_rvd_coloring(g: Graph, coloring: VertexColoring) -> bool:
    return all(
        naive_rainbow_cut_exists(g, coloring, x, y) for x, y in itertools.combinations(range(g.n), 2)
    )


def set_partitions(n: int, k: int):
    """Restricted-growth strings of length n with values < k (naive generator)."""
    for rgs in itertools.product(range(k), repeat=n):
        if rgs and rgs[0] != 0:
            continue
        ok = True
        top = -1
        for c in rgs:
            if c > top + 1:
                ok = False
                break
            top = max(top, c)
        if ok:
            yield rgs


def naive_rvd(g: Graph, start: int = 1) -> int:
    """Smallest k admitting a rainbow vertex-disconnection coloring.

    Colorings with fewer than ``start`` colors are not tried; pass a proven
    lower bound to keep the search affordable.
    """
    for k in range(start, g.n + 1):
        for rgs in set_partitions(g.n, k):
            if naive_is_rvd_coloring(g, VertexColoring(tuple(c + 1 for c in rgs))):
                return k
    raise AssertionError("the all-distinct coloring is always valid")
