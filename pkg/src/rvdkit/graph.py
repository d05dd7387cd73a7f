"""Simple undirected graphs on vertices 0..n-1 and the structural algorithms
the rest of the package is built on.

Every graph carries both sorted neighbor tuples and neighbor bitmasks; the
bitmasks make reachability tests a handful of integer operations, which is
what the cut searches spend nearly all of their time on.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised on invalid graph arguments (unknown vertex, missing edge, ...)."""


class Graph:
    """Immutable simple graph. Build with :meth:`from_edges`."""

    __slots__ = ("n", "adj", "masks", "_m", "_cache")

    def __init__(self, n: int, adj: Sequence[Iterable[int]]):
        if n < 1:
            raise GraphError("a graph needs at least one vertex")
        if len(adj) != n:
            raise GraphError("adjacency length does not match n")
        rows = tuple(tuple(sorted(set(a))) for a in adj)
        masks = []
        for v, row in enumerate(rows):
            bits = 0
            for u in row:
                if not 0 <= u < n:
                    raise GraphError(f"vertex {u} out of range 0..{n - 1}")
                if u == v:
                    raise GraphError(f"self-loop at vertex {v}")
                bits |= 1 << u
            masks.append(bits)
        for v, row in enumerate(rows):
            for u in row:
                if not masks[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric at {v}-{u}")
        self.n = n
        self.adj = rows
        self.masks = tuple(masks)
        self._m = sum(len(r) for r in rows) // 2
        self._cache: dict = {}

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, adj)

    @property
    def m(self) -> int:
        return self._m

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def min_degree(self) -> int:
        return min(len(a) for a in self.adj)

    def max_degree(self) -> int:
        return max(len(a) for a in self.adj)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: tuple[int, ...]


@dataclass(frozen=True)
class LocalConnectivityValue:
    x: int
    y: int
    value: int


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"unknown vertex {v}")


def reach_mask(g: Graph, start: int, blocked: int = 0, skip_edge: tuple[int, int] | None = None) -> int:
    """Bitmask of vertices reachable from ``start`` avoiding ``blocked``.

    ``skip_edge`` removes one edge from consideration.
    """
    masks = g.masks
    allowed = ~blocked
    if skip_edge is not None:
        a, b = skip_edge
        ma, mb = 1 << a, 1 << b
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            v = low.bit_length() - 1
            nb = masks[v]
            if skip_edge is not None:
                if v == a:
                    nb &= ~mb
                elif v == b:
                    nb &= ~ma
            nxt |= nb
            f ^= low
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def components(g: Graph) -> list[tuple[int, ...]]:
    remaining = g.all_mask
    out = []
    while remaining:
        v = (remaining & -remaining).bit_length() - 1
        comp = reach_mask(g, v)
        out.append(tuple(u for u in range(g.n) if comp >> u & 1))
        remaining &= ~comp
    return out


def connected(g: Graph) -> bool:
    return reach_mask(g, 0) == g.all_mask


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and connected(g)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on ``vertices``, relabeled in ascending order.

    Returns the graph and the old -> new index map.
    """
    keep = sorted(set(vertices))
    for v in keep:
        _check_vertex(g, v)
    index = {v: i for i, v in enumerate(keep)}
    adj = [[index[u] for u in g.adj[v] if u in index] for v in keep]
    return Graph(len(keep), adj), index


def delete_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    s = set(s)
    for v in s:
        _check_vertex(g, v)
    return induced_subgraph(g, (v for v in range(g.n) if v not in s))


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    _check_vertex(g, u)
    _check_vertex(g, v)
    if not g.has_edge(u, v):
        raise GraphError(f"no edge {u}-{v}")
    return Graph.from_edges(g.n, (e for e in g.edges() if e != (min(u, v), max(u, v))))


def add_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph.from_edges(g.n, itertools.chain(g.edges(), edges))


def common_neighbors(g: Graph, x: int, y: int) -> tuple[int, ...]:
    if x == y:
        raise GraphError("common_neighbors needs two distinct vertices")
    both = g.masks[x] & g.masks[y]
    return tuple(v for v in range(g.n) if both >> v & 1)


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Blocks and cut vertices via the iterative lowpoint algorithm."""
    if g.n < 2:
        raise GraphError("block decomposition needs at least two vertices")
    if not connected(g):
        raise GraphError("block decomposition needs a connected graph; split components first")
    n = g.n
    disc = [-1] * n
    low = [0] * n
    blocks: list[tuple[int, ...]] = []
    cuts: set[int] = set()
    edge_stack: list[tuple[int, int]] = []
    timer = 0

    root = 0
    disc[root] = low[root] = timer
    timer += 1
    root_children = 0
    stack = [(root, -1, iter(g.adj[root]))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                edge_stack.append((v, w))
                disc[w] = low[w] = timer
                timer += 1
                if v == root:
                    root_children += 1
                stack.append((w, v, iter(g.adj[w])))
                advanced = True
                break
            if w != parent and disc[w] < disc[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent == -1:
            continue
        low[parent] = min(low[parent], low[v])
        if low[v] >= disc[parent]:
            if parent != root:
                cuts.add(parent)
            comp: set[int] = set()
            while True:
                a, b = edge_stack.pop()
                comp.add(a)
                comp.add(b)
                if (a, b) == (parent, v):
                    break
            blocks.append(tuple(sorted(comp)))
    if root_children > 1:
        cuts.add(root)
    blocks.sort()
    return BlockDecomposition(tuple(blocks), tuple(sorted(cuts)))


def shortest_cycle(g: Graph) -> tuple[int, ...] | None:
    """Lexicographically least vertex sequence among shortest cycles.

    Cycles are written starting at their least vertex and heading towards the
    smaller of its two cycle neighbors. ``None`` for forests.
    """
    length = girth(g)
    if length == 0:
        return None
    best = None
    for cyc in _cycles_of_length(g, length):
        if best is None or cyc < best:
            best = cyc
    return best


def _cycles_of_length(g: Graph, length: int):
    # canonical orientation: least vertex first, second < last
    for s in range(g.n):
        path = [s]
        on_path = 1 << s

        def extend():
            nonlocal on_path
            v = path[-1]
            if len(path) == length:
                if g.has_edge(v, s) and path[1] < path[-1]:
                    yield tuple(path)
                return
            for w in g.adj[v]:
                if w > s and not on_path >> w & 1:
                    path.append(w)
                    on_path |= 1 << w
                    yield from extend()
                    on_path &= ~(1 << w)
                    path.pop()

        yield from extend()


def girth(g: Graph) -> int:
    """Length of a shortest cycle, 0 when the graph is acyclic."""
    best = 0
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if dist[w] == -1:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    cyc = dist[v] + dist[w] + 1
                    if best == 0 or cyc < best:
                        best = cyc
    return best


def _max_disjoint_paths(g: Graph, x: int, y: int, skip_edge: tuple[int, int] | None = None) -> int:
    """Max number of internally vertex-disjoint x-y paths, x and y nonadjacent
    (after ``skip_edge`` is removed). Unit-capacity vertex splitting."""
    n = g.n
    # node v_in = 2v, v_out = 2v+1; residual capacities in a dict
    cap: dict[tuple[int, int], int] = {}
    graph: list[list[int]] = [[] for _ in range(2 * n)]

    def add(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            graph[a].append(b)
            graph[b].append(a)
            cap[(a, b)] = 0
            cap.setdefault((b, a), 0)
        cap[(a, b)] += c

    big = n
    for v in range(n):
        add(2 * v, 2 * v + 1, big if v in (x, y) else 1)
    for u, v in g.edges():
        if skip_edge is not None and {u, v} == set(skip_edge):
            continue
        add(2 * u + 1, 2 * v, 1)
        add(2 * v + 1, 2 * u, 1)
    source, sink = 2 * x + 1, 2 * y
    flow = 0
    while True:
        prev = {source: source}
        queue = deque([source])
        while queue and sink not in prev:
            a = queue.popleft()
            for b in graph[a]:
                if b not in prev and cap[(a, b)] > 0:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            return flow
        b = sink
        while b != source:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1


def local_connectivity(g: Graph, x: int, y: int) -> LocalConnectivityValue:
    _check_vertex(g, x)
    _check_vertex(g, y)
    if x == y:
        raise GraphError("local connectivity needs two distinct vertices")
    key = ("kappa", min(x, y), max(x, y))
    if key not in g._cache:
        if g.has_edge(x, y):
            value = _max_disjoint_paths(g, x, y, skip_edge=(x, y)) + 1
        else:
            value = _max_disjoint_paths(g, x, y)
        g._cache[key] = value
    return LocalConnectivityValue(x, y, g._cache[key])


def connectivity(g: Graph) -> int:
    """Vertex connectivity; n-1 for complete graphs."""
    if g.n < 2:
        raise GraphError("connectivity needs at least two vertices")
    if not connected(g):
        return 0
    best = g.n - 1
    for x, y in itertools.combinations(range(g.n), 2):
        if not g.has_edge(x, y):
            best = min(best, local_connectivity(g, x, y).value)
    return best


def upper_connectivity(g: Graph) -> int:
    if g.n < 2:
        raise GraphError("upper connectivity needs at least two vertices")
    return max(local_connectivity(g, x, y).value for x, y in itertools.combinations(range(g.n), 2))


# ---------------------------------------------------------------------------
# named graphs used across the package and tests


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least three vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def wheel_graph(rim: int) -> Graph:
    """Rim vertices 0..rim-1 in cyclic order, hub last."""
    edges = [(i, (i + 1) % rim) for i in range(rim)] + [(i, rim) for i in range(rim)]
    return Graph.from_edges(rim + 1, edges)


def complete_multipartite(parts: Sequence[int]) -> Graph:
    labels = [p for p, size in enumerate(parts) for _ in range(size)]
    n = len(labels)
    return Graph.from_edges(
        n, ((u, v) for u, v in itertools.combinations(range(n), 2) if labels[u] != labels[v])
    )


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)
