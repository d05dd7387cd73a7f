"""Exhaustive small-graph audit of every structural claim the package relies on."""

from __future__ import annotations

import itertools
import json
import os
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable

from .enumeration import canonical_form, enumerate_connected
from .extremal import max_size_bounds, min_size
from .graph import (
    Graph,
    block_decomposition,
    common_neighbors,
    components,
    connected,
    connectivity,
    delete_edge,
    delete_vertices,
    girth,
    induced_subgraph,
    is_tree,
    local_connectivity,
    upper_connectivity,
)
from .graphio import parse_graph6, to_graph6
from .oracles import naive_local_connectivity, naive_rainbow_cut_exists
from .rainbow import VertexColoring, check_certificate, find_rainbow_cut, verify_coloring
from .solver import (
    compose_block_colorings,
    conflict_graph,
    find_removable_cycle,
    lower_bound,
    rvd_exact,
    sparse_coloring,
    upper_bound,
)

KNOWN_CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
SEED_ENV = "RVDKIT_SEED"


@dataclass
class TheoremStatus:
    name: str
    description: str
    status: str  # pass | fail | skipped
    checked: int = 0
    counterexample: str | None = None  # graph6
    detail: str = ""
    seconds: float = 0.0


@dataclass
class AuditReport:
    n_max: int
    entries: list[TheoremStatus] = field(default_factory=list)
    cells: dict[tuple[int, int], int] = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(e.status == "pass" for e in self.entries)

    def status(self, name: str) -> TheoremStatus:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def to_text(self) -> str:
        lines = [f"audit n <= {self.n_max}"]
        for e in sorted(self.entries, key=lambda e: e.name):
            line = f"{e.status.upper():7} {e.name:16} checked={e.checked:<6} {e.seconds:7.2f}s  {e.description}"
            if e.counterexample:
                line += f"  counterexample={e.counterexample}"
            if e.detail:
                line += f"  [{e.detail}]"
            lines.append(line)
        lines.append("graphs per (n, rvd):")
        for (n, k), count in sorted(self.cells.items()):
            lines.append(f"  n={n} rvd={k}: {count}")
        lines.append(f"total {self.seconds:.2f}s, {'all pass' if self.passed else 'NOT all pass'}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        data = {
            "n_max": self.n_max,
            "passed": self.passed,
            "seconds": round(self.seconds, 3),
            "entries": [asdict(e) for e in sorted(self.entries, key=lambda e: e.name)],
            "cells": [{"n": n, "rvd": k, "count": c} for (n, k), c in sorted(self.cells.items())],
        }
        return json.dumps(data, indent=2)


@dataclass
class Record:
    g: Graph
    value: int
    witness: VertexColoring
    key: tuple[int, int]

    @property
    def g6(self) -> str:
        return to_graph6(self.g)


class Counterexample(Exception):
    def __init__(self, g: Graph, detail: str):
        super().__init__(detail)
        self.g6 = to_graph6(g)
        self.detail = detail


def _solve_g6(g6: str) -> tuple[int, tuple[int, ...]]:
    r = rvd_exact(parse_graph6(g6), cap=None, certify=False)
    return r.value, r.witness.colors


def build_catalog(n_max: int, jobs: int = 1, n_min: int = 2) -> list[Record]:
    graphs = [g for n in range(n_min, n_max + 1) for g in enumerate_connected(n)]
    codes = [to_graph6(g) for g in graphs]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            solved = list(pool.map(_solve_g6, codes, chunksize=8))
    else:
        solved = [_solve_g6(c) for c in codes]
    return [
        Record(g, value, VertexColoring(colors), canonical_form(g))
        for g, (value, colors) in zip(graphs, solved)
    ]


# ---------------------------------------------------------------------------
# individual checks; each yields once per unit of work and raises
# Counterexample on a violation


def _deficient_pairs(g: Graph) -> int:
    return sum(
        1 for x, y in itertools.combinations(range(g.n), 2) if len(common_neighbors(g, x, y)) < 2
    )


def _cactus_like(g: Graph) -> tuple[bool, bool]:
    """(every block is K_2 or a cycle, some block is a cycle)"""
    ok, has_cycle = True, False
    for b in block_decomposition(g).blocks:
        if len(b) > 2:
            sub, _ = induced_subgraph(g, b)
            if sub.m == len(b):
                has_cycle = True
            else:
                ok = False
    return ok, has_cycle


def check_bounds(cat, ctx):
    for r in cat:
        g = r.g
        k, kp = connectivity(g), upper_connectivity(g)
        if not k <= kp <= r.value <= g.n:
            raise Counterexample(g, f"kappa={k} kappa+={kp} rvd={r.value} n={g.n}")
        yield


def check_rvd1(cat, ctx):
    for r in cat:
        if (r.value == 1) != is_tree(r.g):
            raise Counterexample(r.g, f"rvd={r.value}, tree={is_tree(r.g)}")
        yield


def check_rvd2(cat, ctx):
    for r in cat:
        ok, cyc = _cactus_like(r.g)
        if (r.value == 2) != (ok and cyc):
            raise Counterexample(r.g, f"rvd={r.value}, blocks edges/cycles={ok}, has cycle={cyc}")
        yield


def check_rvdn(cat, ctx):
    for r in cat:
        if (r.value == r.g.n) != (_deficient_pairs(r.g) == 0):
            raise Counterexample(r.g, f"rvd={r.value}, n={r.g.n}")
        yield


def check_deficient_pair(cat, ctx):
    for r in cat:
        if _deficient_pairs(r.g) == 1 and r.value != r.g.n - 1:
            raise Counterexample(r.g, f"one deficient pair but rvd={r.value}")
        yield


def check_girth(cat, ctx):
    for r in cat:
        gi = girth(r.g)
        if gi >= 4 and r.value > r.g.n - gi + 2:
            raise Counterexample(r.g, f"girth={gi} rvd={r.value} > n-g+2")
        yield


def check_triangle_free(cat, ctx):
    for r in cat:
        gi = girth(r.g)
        if r.g.n >= 3 and gi != 3 and r.value > r.g.n - 2:
            raise Counterexample(r.g, f"triangle-free with rvd={r.value} > n-2")
        yield


def check_conflict(cat, ctx):
    for r in cat:
        cg = conflict_graph(r.g)
        for x, y in cg.edges():
            if r.witness[x] == r.witness[y]:
                raise Counterexample(r.g, f"vertices {x},{y} share a color despite 2 common neighbors")
        yield


def check_solver_bounds(cat, ctx):
    for r in cat:
        lb, _ = lower_bound(r.g)
        ub = upper_bound(r.g)
        if not lb <= r.value <= ub:
            raise Counterexample(r.g, f"lower={lb} rvd={r.value} upper={ub}")
        yield


def check_witness(cat, ctx):
    for r in cat:
        res = verify_coloring(r.g, r.witness)
        if not res.valid or r.witness.palette_size != r.value:
            raise Counterexample(r.g, f"witness fails at {res.violation}")
        for cert in res.certificates.values():
            if not check_certificate(r.g, r.witness, cert):
                raise Counterexample(r.g, f"unsound certificate {cert}")
        yield


def check_menger(cat, ctx):
    for r in cat:
        g = r.g
        for x, y in itertools.combinations(range(g.n), 2):
            a = local_connectivity(g, x, y).value
            b = naive_local_connectivity(g, x, y)
            if a != b:
                raise Counterexample(g, f"pair {x},{y}: flow {a} vs brute force {b}")
        yield


def check_structure(cat, ctx):
    for r in cat:
        g = r.g
        bd = block_decomposition(g)
        seen = Counter()
        for b in bd.blocks:
            sub, _ = induced_subgraph(g, b)
            for u, v in sub.edges():
                seen[(b[u], b[v])] += 1
            for v in b:
                if v in bd.cut_vertices or len(b) <= 2:
                    continue
                rest, _ = delete_vertices(sub, [b.index(v)])
                if not connected(rest):
                    raise Counterexample(g, f"block {b} falls apart without {v}")
        if sorted(seen) != g.edges() or any(c != 1 for c in seen.values()):
            raise Counterexample(g, "blocks do not partition the edges")
        for b1, b2 in itertools.combinations(bd.blocks, 2):
            shared = set(b1) & set(b2)
            if len(shared) > 1 or any(v not in bd.cut_vertices for v in shared):
                raise Counterexample(g, f"blocks {b1} and {b2} share {shared}")
        if (girth(g) == 0) != (g.m == g.n - len(components(g))):
            raise Counterexample(g, "girth 0 does not match acyclicity")
        yield


def check_block_law(cat, ctx):
    for r in cat:
        if r.g.n > ctx["flat_max"]:
            continue
        flat = rvd_exact(r.g, cap=None, decompose=False, certify=False).value
        if flat != r.value:
            raise Counterexample(r.g, f"block-decomposed {r.value} vs flat {flat}")
        yield


def check_monotone(cat, ctx):
    table = ctx["table"]
    for r in cat:
        g = r.g
        if g.n > ctx["flat_max"]:
            continue
        children = []
        for u, v in g.edges():
            h = delete_edge(g, u, v)
            if connected(h):
                children.append(h)
        if g.n > 2:
            for v in range(g.n):
                h, _ = delete_vertices(g, [v])
                if connected(h):
                    children.append(h)
        for h in children:
            sub = table.get(canonical_form(h))
            if sub is None:
                sub = rvd_exact(h, cap=None, certify=False).value
            if sub > r.value:
                raise Counterexample(g, f"connected subgraph {to_graph6(h)} has rvd {sub} > {r.value}")
        yield


def check_sparse(cat, ctx):
    for r in cat:
        c = sparse_coloring(r.g, verify=False)
        if c.palette_size > r.g.m - r.g.n + 2:
            raise Counterexample(r.g, f"{c.palette_size} colors > m-n+2")
        res = verify_coloring(r.g, c)
        if not res.valid:
            raise Counterexample(r.g, f"sparse coloring {c.colors} fails at {res.violation}")
        yield


def check_removable_cycle(cat, ctx):
    for r in cat:
        g = r.g
        if g.min_degree() < 3:
            continue
        try:
            cyc = find_removable_cycle(g)
        except AssertionError as exc:
            raise Counterexample(g, str(exc)) from None
        rest, _ = delete_vertices(g, cyc)
        if not connected(rest):
            raise Counterexample(g, f"cycle {cyc} disconnects the graph")
        yield


def check_compose(cat, ctx):
    for r in cat:
        g = r.g
        bd = block_decomposition(g)
        if len(bd.blocks) < 2:
            continue
        per_block = []
        for b in bd.blocks:
            sub, _ = induced_subgraph(g, b)
            per_block.append(rvd_exact(sub, cap=None, certify=False).witness)
        c = compose_block_colorings(g, per_block, bd)
        if c.palette_size != r.value or not verify_coloring(g, c).valid:
            raise Counterexample(g, f"composed coloring {c.colors} rejected")
        yield


def check_cut_oracle(cat, ctx):
    rng = random.Random(ctx["seed"])
    for r in cat:
        g = r.g
        if g.n > ctx["flat_max"]:
            continue
        for _ in range(ctx["samples"]):
            c = VertexColoring(tuple(rng.randint(1, 3) for _ in range(g.n)))
            for x, y in itertools.combinations(range(g.n), 2):
                cert = find_rainbow_cut(g, c, x, y)
                if (cert is not None) != naive_rainbow_cut_exists(g, c, x, y):
                    raise Counterexample(g, f"coloring {c.colors}, pair {x},{y}: searcher disagrees with oracle")
                if cert is not None and not check_certificate(g, c, cert):
                    raise Counterexample(g, f"unsound certificate {cert}")
        yield


def check_renaming(cat, ctx):
    for r in cat:
        top = max(r.witness.colors)
        flipped = r.witness.renamed({c: top + 1 - c for c in range(1, top + 1)})
        if not verify_coloring(r.g, flipped).valid:
            raise Counterexample(r.g, "renamed witness rejected")
        yield


def _extreme_sizes(cat):
    sizes: dict[tuple[int, int], list[Record]] = {}
    for r in cat:
        sizes.setdefault((r.g.n, r.value), []).append(r)
    return sizes


def check_min_size(cat, ctx):
    for (n, k), recs in sorted(_extreme_sizes(cat).items()):
        if n < 4:
            continue
        low = min(recs, key=lambda r: r.g.m)
        if low.g.m != min_size(n, k):
            raise Counterexample(low.g, f"n={n} k={k}: smallest size {low.g.m}, formula {min_size(n, k)}")
        yield


def check_max_size(cat, ctx):
    failures = []
    first = None
    for (n, k), recs in sorted(_extreme_sizes(cat).items()):
        if n < 4:
            continue
        top = max(recs, key=lambda r: r.g.m)
        lo, hi = max_size_bounds(n, k)
        if k <= 3:
            ok = top.g.m == hi
        else:
            ok = lo <= top.g.m <= hi
        if not ok:
            failures.append(f"n={n} k={k}: max {top.g.m} vs [{lo},{hi}]")
            first = first or top.g
        yield
    if failures:
        raise Counterexample(first, "; ".join(failures))


def check_enumeration(cat, ctx):
    counts = Counter(r.g.n for r in cat)
    for n, c in sorted(counts.items()):
        if KNOWN_CONNECTED_COUNTS.get(n) != c:
            g = next(r.g for r in cat if r.g.n == n)
            raise Counterexample(g, f"n={n}: {c} graphs, expected {KNOWN_CONNECTED_COUNTS.get(n)}")
        yield


THEOREMS: dict[str, tuple[str, Callable]] = {
    "enumeration": ("connected graph counts 1,1,2,6,21,112,853", check_enumeration),
    "bounds": ("kappa <= kappa+ <= rvd <= n", check_bounds),
    "rvd1": ("rvd = 1 iff tree", check_rvd1),
    "rvd2": ("rvd = 2 iff blocks are edges/cycles with a cycle", check_rvd2),
    "rvdn": ("rvd = n iff all pairs have 2 common neighbors", check_rvdn),
    "deficient-pair": ("one deficient pair implies rvd = n-1", check_deficient_pair),
    "girth": ("girth >= 4 implies rvd <= n-g+2", check_girth),
    "triangle-free": ("triangle-free implies rvd <= n-2", check_triangle_free),
    "conflict": ("2 common neighbors force distinct colors", check_conflict),
    "solver-bounds": ("lower_bound <= rvd <= upper_bound", check_solver_bounds),
    "witness": ("witness colorings re-verify with sound certificates", check_witness),
    "menger": ("max disjoint paths equals brute-force min cut", check_menger),
    "structure": ("block decomposition and girth invariants", check_structure),
    "block-law": ("rvd is the maximum over blocks (flat search agrees)", check_block_law),
    "monotone": ("connected subgraphs never need more colors", check_monotone),
    "sparse": ("sparse coloring verifies with <= m-n+2 colors", check_sparse),
    "removable-cycle": ("min degree >= 3 has a removable chordless cycle", check_removable_cycle),
    "compose": ("glued block colorings verify", check_compose),
    "cut-oracle": ("cut search agrees with the all-subsets oracle", check_cut_oracle),
    "renaming": ("verification ignores color names", check_renaming),
    "min-size": ("minimum size n+k-2 / 2n-4+ceil(n/2)", check_min_size),
    "max-size": ("maximum size formulas and intervals", check_max_size),
}


def audit(
    n_max: int,
    theorems=None,
    jobs: int = 1,
    budget: float | None = None,
    samples: int = 100,
    flat_max: int = 6,
    seed: int | None = None,
) -> AuditReport:
    """Run the selected checks over every connected graph with 2..n_max vertices.

    A check that runs past ``budget`` seconds is reported as skipped, never pass.
    """
    if n_max > 7:
        raise ValueError("built-in audits stop at n = 7")
    names = list(THEOREMS) if theorems in (None, "all", ["all"]) else list(theorems)
    unknown = [t for t in names if t not in THEOREMS]
    if unknown:
        raise ValueError(f"unknown theorem checks {unknown}; available: {', '.join(THEOREMS)}")
    if seed is None:
        seed = int(os.environ.get(SEED_ENV, "0"))
    start = time.perf_counter()
    cat = build_catalog(n_max, jobs=jobs, n_min=1 if "enumeration" in names else 2)
    report = AuditReport(n_max)
    report.cells = dict(Counter((r.g.n, r.value) for r in cat if r.g.n >= 2))
    ctx = {
        "table": {r.key: r.value for r in cat},
        "samples": samples,
        "flat_max": flat_max,
        "seed": seed,
    }
    nontrivial = [r for r in cat if r.g.n >= 2]
    for name in names:
        desc, fn = THEOREMS[name]
        entry = TheoremStatus(name, desc, "pass")
        t0 = time.perf_counter()
        try:
            for _ in fn(cat if name == "enumeration" else nontrivial, ctx):
                entry.checked += 1
                if budget is not None and time.perf_counter() - t0 > budget:
                    entry.status = "skipped"
                    entry.detail = f"time budget {budget}s exhausted"
                    break
        except Counterexample as exc:
            entry.status = "fail"
            entry.counterexample = exc.g6
            entry.detail = exc.detail
        entry.seconds = time.perf_counter() - t0
        report.entries.append(entry)
    report.seconds = time.perf_counter() - start
    return report
