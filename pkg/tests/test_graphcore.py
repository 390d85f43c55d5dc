import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from unbent.graphcore import (
    DegreeExceeded,
    Disconnected,
    InconsistentRotation,
    ParseError,
    PlaneGraph,
    PlaneGraphError,
    corpus,
    dual_graph,
    fixtures,
    flower,
    from_neighbor_lists,
    parse,
    random_cubic_triconnected,
    random_plane_4graph,
    random_triangulation,
    serialize,
)

seeds = st.integers(min_value=0, max_value=10_000)
sizes = st.integers(min_value=3, max_value=30)


def _euler_ok(g: PlaneGraph) -> bool:
    return g.n - g.m + g.num_faces == 2


@pytest.mark.parametrize("name, n, m, f", [
    ("P3", 3, 2, 1),
    ("K3", 3, 3, 2),
    ("C4", 4, 4, 2),
    ("K4", 4, 6, 4),
    ("K5-e", 5, 9, 6),
    ("octahedron-e", 6, 11, 7),
    ("prism", 6, 9, 5),
    ("cube", 8, 12, 6),
])
def test_fixture_sizes(name, n, m, f):
    g = fixtures()[name]
    assert (g.n, g.m, g.num_faces) == (n, m, f)


@pytest.mark.parametrize("k", range(3, 9))
def test_flower_shape(k):
    g = flower(k)
    assert (g.n, g.m) == (2 * k, 4 * k)
    assert all(g.degree(v) == 4 for v in range(g.n))
    degrees = sorted(f.degree for f in g.faces)
    assert degrees == [3] * (2 * k) + [k, k]
    assert g.faces[g.external_face].degree == k


def test_every_dart_in_one_face():
    for g in fixtures().values():
        seen = sorted(d for f in g.faces for d in f.darts)
        assert seen == list(range(2 * g.m))
        assert _euler_ok(g)


def test_left_face_consistent():
    g = fixtures()["cube"]
    for f in g.faces:
        for d in f.darts:
            assert g.left_face(d) == f.id
            assert g.head(d) == g.tail(g.next_dart(d))


@given(seeds, sizes)
@settings(max_examples=60)
def test_random_graphs_are_plane(seed, n):
    g = random_plane_4graph(seed, n)
    assert g.n == n
    assert g.max_degree() <= 4
    assert _euler_ok(g)
    assert nx.is_connected(nx.Graph(list(g.edges)))
    # a combinatorial embedding is planar iff Euler's formula holds for it
    assert nx.check_planarity(nx.Graph(list(g.edges)))[0]


@given(seeds, sizes)
@settings(max_examples=60)
def test_serialize_round_trip(seed, n):
    g = random_plane_4graph(seed, n)
    h = parse(serialize(g))
    assert h == g
    assert h.external_face == g.external_face
    assert serialize(h) == serialize(g)


def test_random_is_deterministic():
    assert serialize(random_plane_4graph(7, 20)) == serialize(random_plane_4graph(7, 20))


@given(seeds, st.integers(min_value=4, max_value=25))
@settings(max_examples=30)
def test_random_triangulation(seed, n):
    g = random_triangulation(seed, n)
    assert g.m == 3 * n - 6
    assert all(f.degree == 3 for f in g.faces)


@given(seeds, st.integers(min_value=4, max_value=14))
@settings(max_examples=30)
def test_random_cubic(seed, faces):
    g = random_cubic_triconnected(seed, faces)
    assert g.n == 2 * faces - 4
    assert all(g.degree(v) == 3 for v in range(g.n))
    assert nx.edge_connectivity(nx.Graph(list(g.edges))) == 3


def test_dual_of_dual_has_same_size():
    g = fixtures()["cube"]
    d = dual_graph(g)
    assert (d.n, d.m, d.num_faces) == (g.num_faces, g.m, g.n)


def test_with_external_face():
    g = fixtures()["prism"]
    for f in g.faces:
        h = g.with_external_face(f.id)
        assert h.faces[h.external_face].edges == f.edges or set(h.faces[h.external_face].edges) == set(f.edges)


def test_subdivide_chains():
    g = fixtures()["K4"]
    sub, chains = g.subdivide({0: 2, 3: 1})
    assert (sub.n, sub.m) == (g.n + 3, g.m + 3)
    assert len(chains[0]) == 3 and len(chains[3]) == 2 and len(chains[1]) == 1
    assert sub.num_faces == g.num_faces
    u, v = g.edges[0]
    assert u in sub.edges[chains[0][0]] and v in sub.edges[chains[0][-1]]


def test_from_neighbor_lists_keeps_ids():
    nbr = [[1, 2], [2, 0], [0, 1]]
    g = from_neighbor_lists(nbr, edges=[(1, 2)])
    assert g.edges[0] == (1, 2)
    assert g.m == 3 and g.num_faces == 2


# --- errors ---------------------------------------------------------------------


def test_degree_five_rejected():
    text = "plane4 v1\nvertices 6\n" + "".join(f"edge {i} 0 {i + 1}\n" for i in range(5))
    text += "rot 0 0 1 2 3 4\n" + "".join(f"rot {i + 1} {i}\n" for i in range(5)) + "external 0 left\n"
    with pytest.raises(DegreeExceeded):
        parse(text)


def test_broken_rotation_has_line_number():
    text = "plane4 v1\nvertices 3\nedge 0 0 1\nedge 1 1 2\nrot 0 0\nrot 1 0\nrot 2 1\nexternal 0 left\n"
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.lineno == 6


@pytest.mark.parametrize("text", [
    "",
    "plane4 v2\n",
    "plane4 v1\nvertices x\n",
    "plane4 v1\nvertices 2\nedge 0 0 1\nrot 0 0\nrot 1 0\n",
    "plane4 v1\nvertices 2\nedge 0 0 1\nrot 0 0\nrot 1 0\nexternal 0 up\n",
    "plane4 v1\nvertices 2\nedge 0 0 1\nbogus 1\n",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse(text)


def test_disconnected_rejected():
    with pytest.raises(Disconnected):
        PlaneGraph(4, [(0, 1), (2, 3)], [[0], [0], [1], [1]], (0, "left"))


def test_rotation_must_match_edges():
    with pytest.raises(InconsistentRotation):
        PlaneGraph(3, [(0, 1), (1, 2)], [[0], [0], [1]], (0, "left"))


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 1), (1, 0)]])
def test_loops_and_multi_edges_rejected(edges):
    rot = [[], []]
    for e, (u, v) in enumerate(edges):
        rot[u].append(e)
        if v != u:
            rot[v].append(e)
    with pytest.raises(PlaneGraphError):
        PlaneGraph(2, edges, rot, (0, "left"))


def test_corpus_is_deterministic_and_valid():
    a, b = corpus(), corpus()
    assert list(a) == list(b)
    for name, g in a.items():
        assert serialize(g) == serialize(b[name])
        assert g.max_degree() <= 4
