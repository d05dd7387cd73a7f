"""Exact rainbow vertex-disconnection numbers and constructive colorings.

The exact search enumerates restricted-growth strings (set partitions, so
each coloring is visited once up to renaming colors) block by block. Inside
the search a coloring is tested against a precomputed table of minimal
separators: a rainbow cut exists for a pair exactly when some minimal
separator of that pair is rainbow, because subsets of rainbow sets are
rainbow. Accepted colorings are then re-verified through
:func:`rvdkit.rainbow.verify_coloring`, which shares none of that table.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .graph import (
    Graph,
    GraphError,
    block_decomposition,
    connected,
    girth,
    induced_subgraph,
    is_tree,
    reach_mask,
    upper_connectivity,
    _cycles_of_length,
)
from .rainbow import CutCertificate, VertexColoring, verify_coloring

DEFAULT_CAP = 9


class SolverCapExceeded(ValueError):
    pass


@dataclass
class RvdResult:
    value: int
    witness: VertexColoring
    certificates: dict[tuple[int, int], CutCertificate]
    lower_bound_reason: str
    lower_bound: int = 1
    block_values: list[int] = field(default_factory=list)


# ---------------------------------------------------------------------------
# bounds


def conflict_graph(g: Graph) -> Graph:
    """Pairs with at least two common neighbors; they must get distinct colors."""
    edges = [
        (x, y)
        for x, y in itertools.combinations(range(g.n), 2)
        if bin(g.masks[x] & g.masks[y]).count("1") >= 2
    ]
    return Graph.from_edges(g.n, edges)


def greedy_clique(g: Graph) -> tuple[int, ...]:
    """Best of the greedy maximal cliques grown from every vertex."""
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    best: tuple[int, ...] = (0,) if g.n else ()
    for s in order:
        clique = [s]
        common = g.masks[s]
        for v in order:
            if common >> v & 1:
                clique.append(v)
                common &= g.masks[v]
        if len(clique) > len(best):
            best = tuple(sorted(clique))
    return best


def lower_bound(g: Graph) -> tuple[int, str]:
    if g.n < 2:
        return 1, "trivial"
    kappa_plus = upper_connectivity(g)
    clique = len(greedy_clique(conflict_graph(g)))
    best = max(kappa_plus, clique, 1)
    if best == 1:
        return 1, "trivial"
    if kappa_plus == best:
        return best, "upper-connectivity"
    return best, "conflict-clique"


def upper_bound(g: Graph) -> int:
    if is_tree(g):
        return 1
    best = min(g.n, g.m - g.n + 2)
    gi = girth(g)
    if gi >= 4:
        best = min(best, g.n - gi + 2)
    return best


# ---------------------------------------------------------------------------
# exact search


def _minimal_separators(g: Graph, x: int, y: int) -> list[tuple[int, ...]]:
    adjacent = g.has_edge(x, y)
    skip = (x, y) if adjacent else None
    others = [v for v in range(g.n) if v != x and v != y]
    seps = []
    for r in range(len(others) + 1):
        for s in itertools.combinations(others, r):
            blocked = 0
            for v in s:
                blocked |= 1 << v
            side_x = reach_mask(g, x, blocked, skip)
            if side_x >> y & 1:
                continue
            side_y = reach_mask(g, y, blocked, skip)
            if all(g.masks[v] & side_x and g.masks[v] & side_y for v in s):
                seps.append(s)
    return seps


class _SeparatorTable:
    def __init__(self, g: Graph):
        self.pairs = []
        for x, y in itertools.combinations(range(g.n), 2):
            seps = _minimal_separators(g, x, y)
            ready = max([y, *itertools.chain.from_iterable(seps)])
            self.pairs.append((ready, x, y, g.has_edge(x, y), seps))
        self.by_ready: list[list[tuple]] = [[] for _ in range(g.n)]
        for entry in self.pairs:
            self.by_ready[entry[0]].append(entry[1:])

    @staticmethod
    def pair_ok(col, x, y, adjacent, seps) -> bool:
        for s in seps:
            cs = {col[v] for v in s}
            if len(cs) != len(s):
                continue
            if not adjacent or col[x] not in cs or col[y] not in cs:
                return True
        return False


def _search(g: Graph, k: int, exact: bool, table: _SeparatorTable, conflicts: Graph):
    """First restricted-growth string (lexicographic) with <= k classes, or
    exactly k when ``exact``, that passes every pair. None if there is none."""
    n = g.n
    col = [0] * n
    by_ready = table.by_ready
    pair_ok = table.pair_ok
    earlier_conflicts = [[u for u in conflicts.adj[v] if u < v] for v in range(n)]

    def rec(i: int, used: int):
        if i == n:
            return not exact or used == k
        if exact and used + (n - i) < k:
            return False
        banned = {col[u] for u in earlier_conflicts[i]}
        for c in range(min(used + 1, k)):
            if c in banned:
                continue
            col[i] = c
            if all(pair_ok(col, *entry) for entry in by_ready[i]):
                if rec(i + 1, max(used, c + 1)):
                    return True
        return False

    if rec(0, 0):
        return [c + 1 for c in col]
    return None


def _solve_connected(g: Graph) -> tuple[list[int], int, str]:
    """rvd of one connected graph by flat search: (coloring, lower bound, reason)."""
    if g.n == 1:
        return [1], 1, "trivial"
    lb, reason = lower_bound(g)
    table = _SeparatorTable(g)
    conflicts = conflict_graph(g)
    for k in range(lb, g.n + 1):
        col = _search(g, k, exact=k > lb, table=table, conflicts=conflicts)
        if col is not None:
            return col, lb, reason
    raise AssertionError("the all-distinct coloring is always accepted")


def _check_cap(size: int, cap: int | None) -> None:
    if cap is not None and size > cap:
        raise SolverCapExceeded(
            f"exact search on {size} vertices exceeds the solver cap of {cap}; raise it with --cap"
        )


def rvd_exact(g: Graph, cap: int | None = DEFAULT_CAP, decompose: bool = True, certify: bool = True) -> RvdResult:
    """Exact rvd with a witness coloring and per-pair certificates.

    With ``decompose`` each block is solved separately and the block colorings
    are glued by :func:`compose_block_colorings`; otherwise the whole graph is
    searched at once. ``cap`` bounds the size of each searched piece.
    """
    if not connected(g):
        raise GraphError("rvd is defined for connected graphs only")
    if g.n == 1:
        return RvdResult(1, VertexColoring((1,)), {}, "trivial", 1, [1])
    if decompose:
        bd = block_decomposition(g)
        for b in bd.blocks:
            _check_cap(len(b), cap)
        per_block = []
        values = []
        bounds = []
        for b in bd.blocks:
            sub, _ = induced_subgraph(g, b)
            col, lb, reason = _solve_connected(sub)
            per_block.append(VertexColoring(tuple(col)))
            values.append(len(set(col)))
            bounds.append((lb, reason))
        witness = compose_block_colorings(g, per_block, bd)
        value = max(values)
        if len(bd.blocks) == 1:
            lb, reason = bounds[0]
        else:
            lb = max(b[0] for b in bounds)
            reason = "block" if lb > 1 else "trivial"
    else:
        _check_cap(g.n, cap)
        col, lb, reason = _solve_connected(g)
        witness = VertexColoring(tuple(col))
        value = witness.palette_size
        values = [value]
    certificates: dict = {}
    if certify:
        check = verify_coloring(g, witness)
        if not check.valid:
            raise AssertionError(f"internal error: witness rejected at pair {check.violation}")
        certificates = check.certificates
    if witness.palette_size != value:
        raise AssertionError("internal error: witness palette differs from the computed value")
    return RvdResult(value, witness, certificates, reason, lb, values)


def rvd(g: Graph, cap: int | None = DEFAULT_CAP) -> int:
    return rvd_exact(g, cap=cap, certify=False).value


# ---------------------------------------------------------------------------
# block composition


def compose_block_colorings(g: Graph, per_block, decomposition=None) -> VertexColoring:
    """Glue per-block colorings at cut vertices with color transpositions.

    ``per_block[i]`` colors the vertices of block ``i`` (in ascending vertex
    order) of ``block_decomposition(g)``. Blocks are attached in block order,
    each time taking the first block that meets the part already colored.
    """
    bd = decomposition or block_decomposition(g)
    if len(per_block) != len(bd.blocks):
        raise ValueError(f"expected {len(bd.blocks)} block colorings, got {len(per_block)}")
    local = []
    for block, coloring in zip(bd.blocks, per_block):
        if len(coloring) != len(block):
            raise ValueError(f"block {block} needs {len(block)} colors, got {len(coloring)}")
        norm = coloring.normalized()
        local.append(dict(zip(block, norm.colors)))
    result: dict[int, int] = dict(local[0])
    pending = list(range(1, len(bd.blocks)))
    while pending:
        for idx in pending:
            shared = [v for v in bd.blocks[idx] if v in result]
            if shared:
                break
        else:
            raise GraphError("blocks do not form a connected graph")
        pending.remove(idx)
        v = shared[0]
        a, b = result[v], local[idx][v]
        swap = {a: b, b: a}
        for u, c in local[idx].items():
            result.setdefault(u, swap.get(c, c))
    return VertexColoring.from_mapping(g.n, result)


# ---------------------------------------------------------------------------
# sparse graphs: at most m - n + 2 colors


def _is_chordless(g: Graph, cyc: tuple[int, ...]) -> bool:
    ell = len(cyc)
    for i in range(ell):
        for j in range(i + 2, ell):
            if i == 0 and j == ell - 1:
                continue
            if g.has_edge(cyc[i], cyc[j]):
                return False
    return True


def find_removable_cycle(g: Graph) -> tuple[int, ...]:
    """Shortest chordless cycle whose vertex deletion leaves the graph connected.

    Ties go to the lexicographically least vertex sequence. Requires minimum
    degree at least 3, where such a cycle always exists.
    """
    if g.n < 4 or not connected(g) or g.min_degree() < 3:
        raise GraphError("find_removable_cycle needs a connected graph of minimum degree >= 3")
    for ell in range(3, g.n + 1):
        for cyc in _cycles_of_length(g, ell):
            if not _is_chordless(g, cyc):
                continue
            blocked = 0
            for v in cyc:
                blocked |= 1 << v
            rest = g.all_mask & ~blocked
            start = (rest & -rest).bit_length() - 1
            if reach_mask(g, start, blocked) == rest:
                return cyc
    raise AssertionError("no removable cycle in a graph of minimum degree >= 3")


def _cut_vertices(g: Graph) -> set[int]:
    return set(block_decomposition(g).cut_vertices)


def _sparse(g: Graph) -> list[int]:
    budget = g.m - g.n + 2
    if is_tree(g):
        return [1] * g.n
    degrees = [g.degree(v) for v in range(g.n)]

    if min(degrees) == 1:
        alive = set(range(g.n))
        deg = degrees[:]
        leaves = [v for v in range(g.n) if deg[v] == 1]
        while leaves:
            v = leaves.pop()
            if v not in alive:
                continue
            alive.discard(v)
            for w in g.adj[v]:
                if w in alive:
                    deg[w] -= 1
                    if deg[w] == 1:
                        leaves.append(w)
        core, index = induced_subgraph(g, alive)
        inner = _sparse(core)
        return [inner[index[v]] if v in index else 1 for v in range(g.n)]

    if 2 in degrees:
        cuts = _cut_vertices(g)
        free = [v for v in range(g.n) if degrees[v] == 2 and v not in cuts]
        if free:
            u = free[0]
            w, w2 = g.adj[u]
            smaller = Graph.from_edges(g.n, (e for e in g.edges() if e != (min(u, w), max(u, w))))
            col = _sparse(smaller)
            if col[w] != col[w2]:
                col[u] = budget
            else:
                col[u] = col[w] = budget
            return col
        # every degree-2 vertex is a cut vertex: suppress them all
        adj = {v: set(g.adj[v]) for v in range(g.n)}
        contracted = []
        for u in range(g.n):
            if len(adj[u]) == 2:
                a, b = adj.pop(u)
                adj[a].discard(u)
                adj[b].discard(u)
                adj[a].add(b)
                adj[b].add(a)
                contracted.append(u)
        keep = sorted(adj)
        index = {v: i for i, v in enumerate(keep)}
        reduced = Graph(len(keep), [[index[w] for w in adj[v]] for v in keep])
        inner = _sparse(reduced)
        return [inner[index[v]] if v in index else 1 for v in range(g.n)]

    cyc = find_removable_cycle(g)
    ring = {(min(a, b), max(a, b)) for a, b in zip(cyc, cyc[1:] + cyc[:1])}
    rest = Graph.from_edges(g.n, (e for e in g.edges() if e not in ring))
    col = _sparse(rest)
    fresh = budget - len(cyc) + 1
    for i, v in enumerate(cyc):
        col[v] = fresh + i
    return col


def sparse_coloring(g: Graph, verify: bool = True) -> VertexColoring:
    """Coloring with at most m - n + 2 colors built by induction on the
    cyclomatic number: peel a removable cycle, open a degree-2 vertex,
    suppress degree-2 cut vertices or strip pendant trees, then color back."""
    if not connected(g):
        raise GraphError("sparse_coloring needs a connected graph")
    coloring = VertexColoring(tuple(_sparse(g)))
    if verify and g.n > 1:
        check = verify_coloring(g, coloring)
        if not check.valid:
            raise AssertionError(f"sparse coloring rejected at pair {check.violation}")
    return coloring
