from collections import Counter

import pytest

from rvdkit.enumeration import enumerate_connected
from rvdkit.graph import (
    Graph,
    GraphError,
    block_decomposition,
    complete_graph,
    complete_multipartite,
    connected,
    cycle_graph,
    delete_vertices,
    induced_subgraph,
    path_graph,
    petersen_graph,
    star_graph,
    wheel_graph,
)
from rvdkit.oracles import naive_rvd
from rvdkit.rainbow import VertexColoring, check_certificate, verify_coloring
from rvdkit.solver import (
    SolverCapExceeded,
    compose_block_colorings,
    conflict_graph,
    find_removable_cycle,
    lower_bound,
    rvd,
    rvd_exact,
    sparse_coloring,
    upper_bound,
)

BOWTIE = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
PRISM = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])

# (n, rvd) -> number of connected graphs, from the naive all-partitions oracle
ORACLE_DISTRIBUTION = {
    2: {1: 1},
    3: {1: 1, 2: 1},
    4: {1: 2, 2: 2, 3: 1, 4: 1},
    5: {1: 3, 2: 6, 3: 7, 4: 3, 5: 2},
    6: {1: 6, 2: 17, 3: 40, 4: 30, 5: 11, 6: 8},
}
PETERSEN_RVD = 4  # naive oracle, k = 3 rejected exhaustively


def test_conflict_graph_of_k5_is_complete():
    assert conflict_graph(complete_graph(5)) == complete_graph(5)


@pytest.mark.parametrize(
    "g, value, reason",
    [
        (complete_graph(5), 5, "conflict-clique"),
        (cycle_graph(6), 2, "upper-connectivity"),
        (path_graph(5), 1, "trivial"),
        (star_graph(3), 1, "trivial"),
    ],
)
def test_lower_bound(g, value, reason):
    assert lower_bound(g) == (value, reason)


def test_lower_bound_conflict_clique_can_win():
    # K_4: adjacent pairs give kappa+ = 3, the conflict graph is K_4
    assert lower_bound(complete_graph(4)) == (4, "conflict-clique")
    assert lower_bound(complete_multipartite([2, 4])) == (4, "upper-connectivity")


def test_upper_bound():
    assert upper_bound(path_graph(4)) == 1
    assert upper_bound(cycle_graph(7)) == 2
    tf = complete_multipartite([3, 3])  # triangle-free, n=6, g=4
    assert upper_bound(tf) <= 4
    assert upper_bound(complete_graph(5)) == 5


@pytest.mark.parametrize(
    "g, value",
    [
        (cycle_graph(5), 2),
        (complete_graph(5), 5),
        (complete_graph(3), 2),
        (complete_graph(2), 1),
        (path_graph(6), 1),
        (wheel_graph(4), 3),
        (wheel_graph(5), 4),
        (BOWTIE, 2),
        (PRISM, 3),  # naive oracle
    ],
)
def test_rvd_examples(g, value):
    res = rvd_exact(g)
    assert res.value == value
    assert res.witness.palette_size == value
    assert verify_coloring(g, res.witness).valid
    assert all(check_certificate(g, res.witness, c) for c in res.certificates.values())


def test_rvd_single_vertex():
    assert rvd(Graph(1, [[]])) == 1


def test_rvd_rejects_disconnected():
    with pytest.raises(GraphError):
        rvd_exact(Graph.from_edges(3, [(0, 1)]))


def test_petersen():
    res = rvd_exact(petersen_graph(), cap=10)
    assert res.value == PETERSEN_RVD
    assert verify_coloring(petersen_graph(), res.witness).valid


@pytest.mark.slow
def test_petersen_against_naive_oracle():
    assert naive_rvd(petersen_graph(), start=3) == PETERSEN_RVD


def test_cap_refuses_large_blocks():
    with pytest.raises(SolverCapExceeded):
        rvd_exact(petersen_graph(), cap=9)
    # a long path is only 2-vertex blocks, so any cap is fine
    assert rvd_exact(path_graph(30), cap=3).value == 1


def test_block_values_reported():
    res = rvd_exact(BOWTIE)
    assert res.block_values == [2, 2]
    assert res.lower_bound_reason == "block"


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_distribution_matches_oracle(n):
    got = Counter(rvd(g) for g in enumerate_connected(n))
    assert dict(got) == ORACLE_DISTRIBUTION[n]


@pytest.mark.parametrize("n", [4, 5, 6])
def test_block_decomposition_is_transparent(n):
    for g in enumerate_connected(n):
        assert rvd_exact(g, decompose=True).value == rvd_exact(g, decompose=False).value


def test_search_returns_least_partition():
    # restricted-growth order: the first accepted string starts 1,1,...
    assert rvd_exact(cycle_graph(4)).witness.colors == (1, 1, 2, 2)


# -- composition -----------------------------------------------------------

def test_compose_bowtie():
    per = [VertexColoring((1, 1, 2)), VertexColoring((1, 1, 2))]
    c = compose_block_colorings(BOWTIE, per)
    assert c.palette_size == 2
    assert verify_coloring(BOWTIE, c).valid


def test_compose_path_of_two_edges():
    c = compose_block_colorings(path_graph(3), [VertexColoring((1, 1)), VertexColoring((1, 1))])
    assert c.colors == (1, 1, 1)
    assert verify_coloring(path_graph(3), c).valid


def test_compose_exchange_at_cut_vertex():
    # second triangle arrives with the cut vertex colored 1; swap must fix it
    c = compose_block_colorings(BOWTIE, [VertexColoring((1, 1, 2)), VertexColoring((1, 2, 2))])
    assert c[2] == 2 and verify_coloring(BOWTIE, c).valid


def test_compose_length_checks():
    with pytest.raises(ValueError):
        compose_block_colorings(BOWTIE, [VertexColoring((1, 1, 2))])
    with pytest.raises(ValueError):
        compose_block_colorings(BOWTIE, [VertexColoring((1, 1)), VertexColoring((1, 1, 2))])


@pytest.mark.parametrize("n", [4, 5, 6])
def test_compose_optimal_blocks(n):
    for g in enumerate_connected(n):
        bd = block_decomposition(g)
        if len(bd.blocks) < 2:
            continue
        per = [rvd_exact(induced_subgraph(g, b)[0]).witness for b in bd.blocks]
        c = compose_block_colorings(g, per, bd)
        assert verify_coloring(g, c).valid
        assert c.palette_size == rvd(g)


# -- removable cycles and the sparse coloring ------------------------------

def _check_removable(g, cyc):
    assert all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))
    rest, _ = delete_vertices(g, cyc)
    assert connected(rest)


def test_removable_cycle_k4():
    cyc = find_removable_cycle(complete_graph(4))
    assert cyc == (0, 1, 2)
    _check_removable(complete_graph(4), cyc)


def test_removable_cycle_k33():
    g = complete_multipartite([3, 3])
    cyc = find_removable_cycle(g)
    assert len(cyc) == 4
    _check_removable(g, cyc)


def test_removable_cycle_prism():
    cyc = find_removable_cycle(PRISM)
    assert cyc == (0, 1, 2)
    _check_removable(PRISM, cyc)


def test_removable_cycle_needs_min_degree_three():
    with pytest.raises(GraphError):
        find_removable_cycle(cycle_graph(5))


def test_removable_cycle_every_small_graph():
    for n in range(4, 8):
        for g in enumerate_connected(n):
            if g.min_degree() >= 3:
                _check_removable(g, find_removable_cycle(g))


def test_sparse_examples():
    assert sparse_coloring(path_graph(5)).colors == (1,) * 5
    unicyclic = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)])
    c = sparse_coloring(unicyclic)
    assert c.palette_size <= 2 and verify_coloring(unicyclic, c).valid
    k5 = complete_graph(5)
    assert sparse_coloring(k5).palette_size <= k5.m - k5.n + 2


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
def test_sparse_every_small_graph(n):
    for g in enumerate_connected(n):
        c = sparse_coloring(g, verify=False)
        assert c.palette_size <= g.m - g.n + 2
        assert verify_coloring(g, c).valid
