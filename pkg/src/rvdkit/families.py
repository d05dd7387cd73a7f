"""Closed-form rvd values and explicit colorings for named graph families."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import (
    Graph,
    block_decomposition,
    complete_graph,
    complete_multipartite,
    connected,
    cycle_graph,
    girth,
    induced_subgraph,
    is_tree,
    shortest_cycle,
    wheel_graph,
)
from .rainbow import VertexColoring
from .solver import compose_block_colorings

KINDS = ("tree", "cycle", "complete", "wheel", "complete-multipartite", "cactus", "triangle-free-girth")


class FamilySpecError(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int | None = None
    parts: tuple[int, ...] = ()
    graph: Graph | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise FamilySpecError(f"unknown family {self.kind!r}; choose from {', '.join(KINDS)}")
        validate(self)


def validate(spec: FamilySpec) -> None:
    kind = spec.kind
    if kind == "cycle" and (spec.n is None or spec.n < 3):
        raise FamilySpecError("a cycle needs n >= 3")
    if kind == "complete" and (spec.n is None or spec.n < 2):
        raise FamilySpecError("complete graphs are covered for n >= 2")
    if kind == "wheel":
        if spec.n is None or spec.n < 4:
            raise FamilySpecError(
                "the wheel formula needs a rim of n >= 4 (order >= 5); W_3 is K_4, use complete:n=4"
            )
    if kind == "complete-multipartite":
        parts = spec.parts
        if len(parts) < 2:
            raise FamilySpecError("a complete multipartite graph needs at least 2 parts")
        if any(p < 1 for p in parts):
            raise FamilySpecError("part sizes must be positive")
        if list(parts) != sorted(parts):
            raise FamilySpecError("part sizes must be listed in ascending order")
        if parts[-1] < 2:
            raise FamilySpecError("the largest part must have at least 2 vertices (otherwise use complete:n=...)")
    if kind in ("tree", "cactus", "triangle-free-girth"):
        g = spec.graph
        if g is None or not connected(g):
            raise FamilySpecError(f"{kind} needs a connected underlying graph")
        if kind == "tree" and not is_tree(g):
            raise FamilySpecError("underlying graph is not a tree")
        if kind == "cactus":
            _cactus_blocks(g)
        if kind == "triangle-free-girth" and girth(g) < 4:
            raise FamilySpecError("needs a graph containing a cycle and of girth >= 4")


def parse_descriptor(text: str) -> FamilySpec:
    """Parse ``cycle:n=6``, ``wheel:n=8``, ``kpartite:1,2,3``, ``complete:n=5``,
    ``path:n=5`` or ``star:n=6`` (n counts all vertices)."""
    name, _, arg = text.partition(":")
    name = name.strip().lower()
    arg = arg.strip()

    def order() -> int:
        key, _, val = arg.partition("=")
        if key.strip() != "n" or not val.strip().isdigit():
            raise FamilySpecError(f"expected '{name}:n=<int>', got {text!r}")
        return int(val)

    if name in ("cycle", "complete", "wheel"):
        return FamilySpec(name, n=order())
    if name in ("kpartite", "multipartite", "complete-multipartite"):
        try:
            parts = tuple(int(p) for p in arg.split(","))
        except ValueError:
            raise FamilySpecError(f"expected 'kpartite:n1,n2,...', got {text!r}") from None
        return FamilySpec("complete-multipartite", parts=parts)
    if name == "path":
        n = order()
        return FamilySpec("tree", n=n, graph=Graph.from_edges(n, ((i, i + 1) for i in range(n - 1))))
    if name == "star":
        n = order()
        return FamilySpec("tree", n=n, graph=Graph.from_edges(n, ((0, i) for i in range(1, n))))
    raise FamilySpecError(f"unknown family descriptor {text!r}")


def family_graph(spec: FamilySpec) -> Graph:
    if spec.kind == "cycle":
        return cycle_graph(spec.n)
    if spec.kind == "complete":
        return complete_graph(spec.n)
    if spec.kind == "wheel":
        return wheel_graph(spec.n)
    if spec.kind == "complete-multipartite":
        return complete_multipartite(spec.parts)
    return spec.graph


def multipartite_value(parts) -> int:
    k, n = len(parts), sum(parts)
    if k >= 4 or (k == 3 and parts[0] >= 2):
        return n
    if (k == 3 and parts[0] == 1) or (k == 2 and parts[0] >= 2):
        return n - parts[-2]
    return 1


def family_value(spec: FamilySpec) -> int:
    kind = spec.kind
    if kind == "tree":
        return 1
    if kind == "cycle":
        return 2
    if kind == "complete":
        return spec.n - 1 if spec.n in (2, 3) else spec.n
    if kind == "wheel":
        return 3 if spec.n % 4 == 0 else 4
    if kind == "complete-multipartite":
        return multipartite_value(spec.parts)
    if kind == "cactus":
        return 2 if any(len(b) > 2 for b in block_decomposition(spec.graph).blocks) else 1
    raise FamilySpecError("triangle-free graphs only have the girth upper bound n - g + 2, no closed form")


def cycle_pattern(length: int) -> list[int]:
    """Colors along a cycle v_1..v_n: two 1s, then 2s."""
    return [1, 1] + [2] * (length - 2)


def wheel_coloring(rim: int) -> list[int]:
    def rim_color(i: int) -> int:  # 1-based rim index
        return 1 if i % 4 in (1, 2) else 2

    if rim % 4 == 0:
        return [rim_color(i) for i in range(1, rim + 1)] + [3]
    return [rim_color(i) for i in range(1, rim - 1)] + [3, 3, 4]


def multipartite_coloring(parts) -> list[int]:
    k, n = len(parts), sum(parts)
    value = multipartite_value(parts)
    if value == n:
        return list(range(1, n + 1))
    if value == 1:
        return [1] * n
    if k == 3:
        # singleton part takes the one color beyond the largest part's palette
        return [parts[2] + 1] + list(range(1, parts[1] + 1)) + list(range(1, parts[2] + 1))
    return list(range(1, parts[0] + 1)) + list(range(1, parts[1] + 1))


def family_coloring(spec: FamilySpec) -> tuple[Graph, VertexColoring]:
    g = family_graph(spec)
    kind = spec.kind
    if kind == "tree":
        colors = [1] * g.n
    elif kind == "cycle":
        colors = cycle_pattern(g.n)
    elif kind == "complete":
        colors = [1, 1] + list(range(2, g.n)) if g.n <= 3 else list(range(1, g.n + 1))
        colors = colors[: g.n]
    elif kind == "wheel":
        colors = wheel_coloring(spec.n)
    elif kind == "complete-multipartite":
        colors = multipartite_coloring(spec.parts)
    elif kind == "cactus":
        return g, cactus_coloring(g)
    else:
        return g, girth_based_coloring(g)
    return g, VertexColoring(tuple(colors))


def girth_based_coloring(g: Graph) -> VertexColoring:
    """Shortest cycle colored 1,1,2,...,2; every other vertex its own color."""
    cyc = shortest_cycle(g) if connected(g) else None
    if cyc is None or len(cyc) < 4:
        raise FamilySpecError("girth-based coloring needs a connected graph of girth >= 4")
    colors = [0] * g.n
    for v, c in zip(cyc, cycle_pattern(len(cyc))):
        colors[v] = c
    fresh = 3
    for v in range(g.n):
        if not colors[v]:
            colors[v] = fresh
            fresh += 1
    return VertexColoring(tuple(colors))


def _cycle_order(g: Graph) -> list[int]:
    order = [0]
    prev, cur = 0, min(g.adj[0])
    while cur != 0:
        order.append(cur)
        prev, cur = cur, next(w for w in g.adj[cur] if w != prev)
    return order


def _cactus_blocks(g: Graph):
    if g.n == 1:
        return []
    bd = block_decomposition(g)
    for b in bd.blocks:
        sub, _ = induced_subgraph(g, b)
        if len(b) > 2 and sub.m != len(b):
            raise FamilySpecError(f"block {list(b)} is neither an edge nor a cycle")
    return bd


def cactus_coloring(g: Graph) -> VertexColoring:
    """At most two colors when every block is an edge or a cycle."""
    bd = _cactus_blocks(g)
    if g.n == 1:
        return VertexColoring((1,))
    per_block = []
    for b in bd.blocks:
        if len(b) == 2:
            per_block.append(VertexColoring((1, 1)))
            continue
        sub, _ = induced_subgraph(g, b)
        colors = [0] * sub.n
        for v, c in zip(_cycle_order(sub), cycle_pattern(sub.n)):
            colors[v] = c
        per_block.append(VertexColoring(tuple(colors)))
    return compose_block_colorings(g, per_block, bd)
