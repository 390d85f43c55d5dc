import pytest
from hypothesis import given, settings, strategies as st

from unbent.approx import (
    StarForestPartition,
    _arc_into_left,
    approx3_collection,
    is_star_forest,
    reroute_around_vertex,
    star_forest_partition,
    verify_star_forests,
)
from unbent.flow import solve_min_cost
from unbent.graphcore import DegreeExceeded, fixtures, random_plane_4graph
from unbent.oracle import exact_tbn
from unbent.ortho import build_network

from reference import check_reroute, random_max_degree4

FX = fixtures()
seeds = st.integers(min_value=0, max_value=100_000)


@given(seeds)
@settings(max_examples=200)
def test_star_forest_partition(seed):
    n, edges = random_max_degree4(seed)
    part = star_forest_partition(n, edges)
    verify_star_forests(edges, part)
    assert part.num_classes <= 4


def test_star_forest_examples():
    star = [(0, 1), (0, 2), (0, 3), (0, 4)]
    assert star_forest_partition(5, star).num_classes == 1
    c5 = [(i, (i + 1) % 5) for i in range(5)]
    assert star_forest_partition(5, c5).num_classes == 2
    with pytest.raises(DegreeExceeded):
        star_forest_partition(6, [(0, i) for i in range(1, 6)])


def test_is_star_forest():
    assert is_star_forest([(0, 1), (1, 2)], [0, 1])
    assert not is_star_forest([(0, 1), (1, 2), (2, 3)], [0, 1, 2])
    assert not is_star_forest([(0, 1), (1, 2), (2, 0)], [0, 1, 2])
    with pytest.raises(AssertionError):
        verify_star_forests([(0, 1), (1, 2), (2, 3)], StarForestPartition((1, 1, 1), (0, 1, 2)))


@given(seeds, st.integers(min_value=3, max_value=25), st.data())
@settings(max_examples=120)
def test_reroute_postconditions(seed, n, data):
    g = random_plane_4graph(seed, n)
    e1 = data.draw(st.sampled_from(range(g.m)))
    v = data.draw(st.sampled_from(g.edges[e1]))
    check_reroute(g, v, e1)


def test_reroute_k4():
    g = FX["K4"]
    hits = sum(check_reroute(g, v, e) for e in range(g.m) for v in g.edges[e])
    assert hits >= 4


def test_reroute_rejects_non_incident():
    g = FX["K4"]
    bn = build_network(g)
    flow = solve_min_cost(bn.net)
    e = 0
    v = next(x for x in range(g.n) if x not in g.edges[e])
    with pytest.raises(ValueError):
        reroute_around_vertex(bn, flow, v, e)


def test_arc_into_left():
    g = FX["K4"]
    bn = build_network(g)
    for d in range(2 * g.m):
        arc = bn.net.arcs[_arc_into_left(bn, d)]
        assert bn.net.labels[arc.head] in (("face", g.left_face(d)), g.left_face(d)) or arc.head == bn.face_node(g.left_face(d))


@given(seeds, st.integers(min_value=3, max_value=30))
@settings(max_examples=40)
def test_approx3_bound(seed, n):
    g = random_plane_4graph(seed, n)
    c = approx3_collection(g, draw=False)
    c.verify(drawings=False)
    b = solve_min_cost(build_network(g).net).cost
    assert c.size <= 4
    assert c.total_bends <= 6 * b


@pytest.mark.parametrize("name", ["K3", "K4", "prism", "cube", "K5-e"])
def test_approx3_within_three_of_optimum(name):
    g = FX[name]
    c = approx3_collection(g)
    c.verify()
    assert c.total_bends <= 3 * exact_tbn(g, draw=False).value
