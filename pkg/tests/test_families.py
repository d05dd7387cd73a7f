import pytest

from rvdkit.graph import (
    Graph,
    complete_multipartite,
    cycle_graph,
    petersen_graph,
    star_graph,
    wheel_graph,
)
from rvdkit.families import (
    FamilySpec,
    FamilySpecError,
    cactus_coloring,
    family_coloring,
    family_graph,
    family_value,
    girth_based_coloring,
    parse_descriptor,
)
from rvdkit.rainbow import verify_coloring
from rvdkit.solver import rvd

BOWTIE = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
PAW = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


def kpartite(*parts):
    return FamilySpec("complete-multipartite", parts=parts)


@pytest.mark.parametrize(
    "spec, value",
    [
        (FamilySpec("wheel", n=8), 3),
        (FamilySpec("wheel", n=5), 4),
        (kpartite(2, 3), 3),
        (kpartite(1, 7), 1),
        (kpartite(1, 2, 3), 4),
        (kpartite(2, 2, 2), 6),
        (kpartite(1, 1, 1, 2), 5),
        (FamilySpec("complete", n=2), 1),
        (FamilySpec("complete", n=3), 2),
        (FamilySpec("complete", n=6), 6),
        (FamilySpec("cycle", n=9), 2),
        (FamilySpec("tree", graph=star_graph(4)), 1),
        (FamilySpec("cactus", graph=BOWTIE), 2),
    ],
)
def test_values(spec, value):
    assert family_value(spec) == value


def test_cycle_coloring():
    g, c = family_coloring(FamilySpec("cycle", n=6))
    assert g == cycle_graph(6)
    assert c.colors == (1, 1, 2, 2, 2, 2)


def test_wheel_coloring_w5():
    g, c = family_coloring(FamilySpec("wheel", n=5))
    assert g == wheel_graph(5)
    assert c.colors[:5] == (1, 1, 2, 3, 3)
    assert c.colors[5] == 4


def test_wheel_coloring_w8():
    _, c = family_coloring(FamilySpec("wheel", n=8))
    assert c.colors == (1, 1, 2, 2, 1, 1, 2, 2, 3)


def test_multipartite_coloring_k123():
    g, c = family_coloring(kpartite(1, 2, 3))
    assert g == complete_multipartite([1, 2, 3])
    # u, then V_2, then V_3
    assert c.colors == (4, 1, 2, 1, 2, 3)
    assert c.palette_size == 4 == 6 - 2


@pytest.mark.parametrize("rim", range(4, 13))
def test_wheel_construction_verifies(rim):
    spec = FamilySpec("wheel", n=rim)
    g, c = family_coloring(spec)
    assert c.palette_size == family_value(spec)
    assert verify_coloring(g, c).valid


@pytest.mark.parametrize("rim", range(4, 9))
def test_wheel_formula_matches_solver(rim):
    assert rvd(wheel_graph(rim)) == (3 if rim % 4 == 0 else 4)


@pytest.mark.parametrize(
    "parts",
    [(1, 2), (1, 5), (2, 2), (2, 3), (3, 4), (1, 1, 2), (1, 2, 3), (1, 3, 3), (2, 2, 3), (1, 1, 1, 2), (1, 2, 2, 2)],
)
def test_multipartite_construction_and_solver(parts):
    spec = kpartite(*parts)
    g, c = family_coloring(spec)
    assert c.palette_size == family_value(spec)
    assert verify_coloring(g, c).valid
    assert rvd(g) == family_value(spec)


@pytest.mark.parametrize("n", range(2, 8))
def test_complete_and_cycle_constructions(n):
    for spec in (FamilySpec("complete", n=n), *([FamilySpec("cycle", n=n)] if n >= 3 else [])):
        g, c = family_coloring(spec)
        assert c.palette_size == family_value(spec)
        assert verify_coloring(g, c).valid


def test_girth_based_coloring():
    c6 = girth_based_coloring(cycle_graph(6))
    assert c6.palette_size == 2
    k23 = complete_multipartite([2, 3])
    c = girth_based_coloring(k23)
    assert c.palette_size <= 3 and verify_coloring(k23, c).valid
    p = petersen_graph()
    c = girth_based_coloring(p)
    assert c.palette_size <= 7 and verify_coloring(p, c).valid


def test_girth_based_coloring_needs_girth_four():
    with pytest.raises(FamilySpecError):
        girth_based_coloring(wheel_graph(4))
    with pytest.raises(FamilySpecError):
        FamilySpec("triangle-free-girth", graph=star_graph(3))
    spec = FamilySpec("triangle-free-girth", graph=petersen_graph())
    with pytest.raises(FamilySpecError):
        family_value(spec)


def test_cactus_colorings():
    assert cactus_coloring(star_graph(4)).palette_size == 1
    for g in (BOWTIE, PAW, cycle_graph(5)):
        c = cactus_coloring(g)
        assert c.palette_size == 2 and verify_coloring(g, c).valid
    with pytest.raises(FamilySpecError, match="neither"):
        cactus_coloring(wheel_graph(4))


@pytest.mark.parametrize(
    "kwargs, msg",
    [
        (dict(kind="wheel", n=3), "n >= 4"),
        (dict(kind="complete-multipartite", parts=(3, 2)), "ascending"),
        (dict(kind="complete-multipartite", parts=(1, 1)), "largest part"),
        (dict(kind="complete-multipartite", parts=(4,)), "at least 2 parts"),
        (dict(kind="cycle", n=2), "n >= 3"),
        (dict(kind="tree", graph=cycle_graph(4)), "not a tree"),
        (dict(kind="hypercube", n=3), "unknown family"),
    ],
)
def test_spec_errors(kwargs, msg):
    with pytest.raises(FamilySpecError, match=msg):
        FamilySpec(**kwargs)


def test_descriptors():
    assert family_graph(parse_descriptor("wheel:n=8")) == wheel_graph(8)
    assert parse_descriptor("kpartite:1,2,3").parts == (1, 2, 3)
    assert family_value(parse_descriptor("path:n=5")) == 1
    assert family_graph(parse_descriptor("star:n=6")).m == 5
    for bad in ("wheel:8", "kpartite:a,b", "blob:n=3", "wheel:n=3"):
        with pytest.raises(FamilySpecError):
            parse_descriptor(bad)
