"""Edge-count extremes for graphs with a prescribed rvd, and their witnesses."""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, comb

from .graph import Graph
from .rainbow import VertexColoring


@dataclass(frozen=True)
class SizeBound:
    n: int
    k: int
    min_size: int
    max_size_lower: int
    max_size_upper: int

    @property
    def max_size_exact(self) -> bool:
        return self.max_size_lower == self.max_size_upper


def min_size(n: int, k: int) -> int:
    """Fewest edges of a connected order-n graph with rvd exactly k (n >= 4)."""
    if n < 4 or not 1 <= k <= n:
        raise ValueError(f"min_size needs n >= 4 and 1 <= k <= n, got n={n}, k={k}")
    if k <= n - 1:
        return n + k - 2
    return 2 * n - 4 + ceil(n / 2)


def max_size_bounds(n: int, k: int) -> tuple[int, int]:
    """(lower, upper) bounds on the most edges a graph with rvd k can have.

    k = 1 only admits trees, so both ends are n - 1.
    """
    if not 1 <= k <= n:
        raise ValueError(f"max_size_bounds needs 1 <= k <= n, got n={n}, k={k}")
    if k == 1:
        return n - 1, n - 1
    if k in (2, 3):
        v = (k + 1) * (n - 1) // 2
        return v, v
    return ceil(k * (n - 1) / 2) - comb(k, 2), k * (n - 1) - comb(k, 2)


def size_bound(n: int, k: int) -> SizeBound:
    lo, hi = max_size_bounds(n, k)
    return SizeBound(n, k, min_size(n, k), lo, hi)


def gen_Gk(n: int, k: int) -> tuple[Graph, VertexColoring]:
    """Sparsest graph with rvd k: u=0, v=1, k common neighbors 2..k+1 and
    pendants on u; for k = n-1 the edge uv is added.

    Returns the graph and a k-coloring accepted by the verifier.
    """
    if not 1 <= k <= n - 1 or n < 3:
        raise ValueError(f"gen_Gk needs n >= 3 and 1 <= k <= n-1, got n={n}, k={k}")
    mids = min(k, n - 2)
    edges = [(0, 2 + i) for i in range(mids)] + [(1, 2 + i) for i in range(mids)]
    edges += [(0, v) for v in range(2 + mids, n)]
    if k == n - 1:
        edges.append((0, 1))
    g = Graph.from_edges(n, edges)
    if k == 1:
        return g, VertexColoring((1,) * n)
    colors = [2] * n
    colors[0] = 1
    for i in range(mids):
        colors[2 + i] = i + 1
    if k == n - 1:
        colors[1] = n - 1
    return g, VertexColoring(tuple(colors))


def gen_H(n: int) -> Graph:
    """G_{n-1} plus a near-perfect matching on the middle vertices (the odd one
    out joins the last pair as a 3-vertex path). Every two vertices have at
    least two common neighbors, with 2n - 4 + ceil(n/2) edges."""
    if n < 4:
        raise ValueError("gen_H needs n >= 4")
    g, _ = gen_Gk(n, n - 1)
    mids = list(range(2, n))
    extra = [(mids[i], mids[i + 1]) for i in range(0, len(mids) - 1, 2)]
    if len(mids) % 2:
        extra.append((mids[-2], mids[-1]))
    return Graph.from_edges(n, g.edges() + extra)


def gen_triangle_blocks(n: int) -> Graph:
    """Chain of triangles sharing cut vertices, plus one pendant edge when n is even."""
    if n < 3:
        raise ValueError("gen_triangle_blocks needs n >= 3")
    edges = []
    t = (n - 1) // 2
    for i in range(t):
        a, b, c = 2 * i, 2 * i + 1, 2 * i + 2
        edges += [(a, b), (b, c), (a, c)]
    if n % 2 == 0:
        edges.append((n - 2, n - 1))
    return Graph.from_edges(n, edges)


def gen_clique_chain(n: int, k: int) -> Graph:
    """Path of copies of K_k glued at cut vertices, closed off by one smaller
    clique K_t, t = n - (k-1) * floor((n-1)/(k-1))."""
    if k < 4 or n < k:
        raise ValueError(f"gen_clique_chain needs k >= 4 and n >= k, got n={n}, k={k}")
    copies = (n - 1) // (k - 1)
    edges = []
    start = 0
    for _ in range(copies):
        block = range(start, start + k)
        edges += [(a, b) for a in block for b in block if a < b]
        start += k - 1
    tail = range(start, n)
    edges += [(a, b) for a in tail for b in tail if a < b]
    return Graph.from_edges(n, edges)
