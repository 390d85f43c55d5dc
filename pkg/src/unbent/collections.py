"""Unbent collections: forests, Schnyder woods, density and balanced colourings.

An unbent collection is a list of orthogonal drawings of one plane graph,
all with the same embedding, such that every edge is straight in at least
one of them.  The module builds collections from forest partitions, bounds
their size by three via Schnyder woods, and decides size two through
balanced 2-edge-colourings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .drawing import Drawing, compact, validate_drawing
from .flow import FlowNetwork, solve_min_cost
from .graphcore import PlaneGraph, from_neighbor_lists
from .ortho import OrthogonalRepresentation, build_network, representation_with_straight, straight_feasible

ENUMERATION_GUARD = 26


class NotAForest(ValueError):
    pass


class NotAPartition(ValueError):
    pass


class DensityTooHigh(ValueError):
    pass


class TooLarge(ValueError):
    pass


class CoverageError(AssertionError):
    pass


# --- collections ---------------------------------------------------------------


@dataclass
class UnbentCollection:
    graph: PlaneGraph
    representations: list[OrthogonalRepresentation]
    drawings: list[Drawing] = field(default_factory=list)
    coverage: dict[int, int] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.representations)

    @property
    def total_bends(self) -> int:
        return sum(r.total_bends for r in self.representations)

    def bends_per_drawing(self) -> list[int]:
        return [r.total_bends for r in self.representations]

    def straight_sets(self) -> list[set[int]]:
        return [r.straight_edges() for r in self.representations]

    def verify(self, drawings: bool = True) -> None:
        """Check representations, coverage witnesses and (optionally) drawings."""
        g = self.graph
        for r in self.representations:
            if r.graph is not g and r.graph != g:
                raise CoverageError("representation over a different plane graph")
            r.validate()
        if set(self.coverage) != set(range(g.m)):
            raise CoverageError("coverage is not total")
        for e, i in self.coverage.items():
            if self.representations[i].bends[e]:
                raise CoverageError(f"edge {e} is bent in its witness drawing {i}")
        if drawings:
            if len(self.drawings) != self.size:
                raise CoverageError("missing drawings")
            for d, r in zip(self.drawings, self.representations):
                validate_drawing(d, r)


def make_collection(g: PlaneGraph, reps: Sequence[OrthogonalRepresentation], coverage: dict[int, int] | None = None, draw: bool = True) -> UnbentCollection:
    """Wrap representations; coverage defaults to the first straight drawing per edge."""
    reps = list(reps)
    if coverage is None:
        coverage = {}
        for e in range(g.m):
            for i, r in enumerate(reps):
                if not r.bends[e]:
                    coverage[e] = i
                    break
            else:
                raise CoverageError(f"edge {e} is bent in every drawing")
    drawings = [compact(r) for r in reps] if draw else []
    return UnbentCollection(g, reps, drawings, dict(coverage))


# --- forests ---------------------------------------------------------------


class _DSU:
    def __init__(self, n: int):
        self.p = list(range(n))

    def find(self, x: int) -> int:
        while self.p[x] != x:
            self.p[x] = self.p[self.p[x]]
            x = self.p[x]
        return x

    def union(self, a: int, b: int) -> bool:
        a, b = self.find(a), self.find(b)
        if a == b:
            return False
        self.p[a] = b
        return True


def is_forest(n: int, edges: Iterable[tuple[int, int]]) -> bool:
    dsu = _DSU(n)
    return all(dsu.union(u, v) for u, v in edges)


def collection_from_forests(g: PlaneGraph, forests: Sequence[Iterable[int]], draw: bool = True) -> UnbentCollection:
    """One drawing per forest, with that forest's edges kept straight."""
    forests = [sorted(set(F)) for F in forests]
    seen: dict[int, int] = {}
    for i, F in enumerate(forests):
        for e in F:
            if not 0 <= e < g.m:
                raise NotAPartition(f"edge {e} does not exist")
            if e in seen:
                raise NotAPartition(f"edge {e} lies in classes {seen[e]} and {i}")
            seen[e] = i
        if not is_forest(g.n, (g.edges[e] for e in F)):
            raise NotAForest(f"class {i} contains a cycle")
    if len(seen) != g.m:
        missing = sorted(set(range(g.m)) - set(seen))
        raise NotAPartition(f"edges {missing} are not covered")
    bn = build_network(g)
    reps = []
    for F in forests:
        rep = representation_with_straight(g, F, bn)
        assert rep is not None, "a forest can always be drawn straight"
        reps.append(rep)
    return make_collection(g, reps, dict(seen), draw)


def forest_partition(n: int, edges: Sequence[tuple[int, int]], k: int) -> list[list[int]] | None:
    """Partition edge indices into ``k`` forests, or ``None`` if impossible.

    Matroid partition by shortest augmenting paths: an edge that closes a
    cycle in forest ``i`` may evict any edge of that cycle, which then looks
    for a new home.
    """
    assign: dict[int, int] = {}

    def tree_path(i: int, s: int, t: int) -> list[int] | None:
        adj: dict[int, list[tuple[int, int]]] = {}
        for e, c in assign.items():
            if c == i:
                u, v = edges[e]
                adj.setdefault(u, []).append((v, e))
                adj.setdefault(v, []).append((u, e))
        prev = {s: None}
        stack = [s]
        while stack:
            x = stack.pop()
            if x == t:
                break
            for y, e in adj.get(x, ()):
                if y not in prev:
                    prev[y] = (x, e)
                    stack.append(y)
        if t not in prev:
            return None
        path = []
        while prev[t] is not None:
            t, e = prev[t]
            path.append(e)
        return path

    for e0 in range(len(edges)):
        if edges[e0][0] == edges[e0][1]:
            return None
        parent: dict[int, tuple[int, int] | None] = {e0: None}
        queue = [e0]
        found = None
        qi = 0
        while qi < len(queue) and found is None:
            x = queue[qi]
            qi += 1
            for i in range(k):
                if assign.get(x) == i:
                    continue
                path = tree_path(i, *edges[x])
                if path is None:
                    found = (x, i)
                    break
                for y in path:
                    if y not in parent:
                        parent[y] = (x, i)
                        queue.append(y)
        if found is None:
            return None
        x, i = found
        while True:
            assign[x] = i
            back = parent[x]
            if back is None:
                break
            x, i = back
    out = [[] for _ in range(k)]
    for e, i in sorted(assign.items()):
        out[i].append(e)
    for F in out:
        assert is_forest(n, (edges[e] for e in F))
    return out


def two_forest_partition(g: PlaneGraph) -> list[list[int]] | None:
    return forest_partition(g.n, g.edges, 2)


# --- Schnyder woods --------------------------------------------------------------


def triangulate(g: PlaneGraph) -> tuple[list[list[int]], tuple[int, int, int]]:
    """Simple plane triangulation containing ``g``.

    Returns counter-clockwise neighbour lists (vertices ``0..n-1`` are those
    of ``g``) and a face of the result to use as the outer triangle.  Every
    face of degree at least four receives a ring of new vertices around a new
    centre, which keeps the result simple even when a face boundary repeats
    vertices.
    """
    nbr = [[g.other(e, v) for e in g.rotation[v]] for v in range(g.n)]
    outer = None
    for f in g.faces:
        walk = [g.tail(d) for d in f.darts]
        k = len(walk)
        if k == 3:
            if f.is_external:
                outer = tuple(walk)
            continue
        if k < 3:
            raise ValueError("faces of degree < 3 only occur in trees")
        base = len(nbr)
        ys = list(range(base, base + k))
        z = base + k
        for i in range(k):
            w, w_next = walk[i], walk[(i + 1) % k]
            at = nbr[w].index(w_next)
            nbr[w][at + 1:at + 1] = [ys[i], ys[i - 1]]
        for i in range(k):
            nbr.append([ys[(i + 1) % k], z, ys[i - 1], walk[i], walk[(i + 1) % k]])
        nbr.append(list(ys))
        if f.is_external:
            outer = (z, ys[0], ys[1])
    assert outer is not None
    return nbr, outer


def schnyder_wood(nbr: list[list[int]], outer: tuple[int, int, int]) -> dict[tuple[int, int], int]:
    """Colour the inner edges of a triangulation with three trees.

    Uses a canonical ordering peeled from the outer vertex ``outer[2]``
    inwards.  Keys are sorted vertex pairs; outer-triangle edges are omitted.
    """
    v1, v2, vn = outer
    alive = set(range(len(nbr)))
    path = [v1, vn, v2]
    color: dict[tuple[int, int], int] = {}
    while len(path) > 2:
        on = set(path)
        for i in range(1, len(path) - 1):
            v = path[i]
            if not any(w in on and w != path[i - 1] and w != path[i + 1] for w in nbr[v] if w in alive):
                break
        else:  # pragma: no cover - canonical orderings always exist
            raise AssertionError("no removable contour vertex")
        a, b = path[i - 1], path[i + 1]
        ring = nbr[v]
        L = len(ring)
        ia, ib = ring.index(a), ring.index(b)
        arc1 = [ring[(ia + j) % L] for j in range(1, (ib - ia) % L)]
        arc2 = [ring[(ib + j) % L] for j in range(1, (ia - ib) % L)][::-1]
        cands = [arc for arc in (arc1, arc2) if all(w in alive for w in arc)]
        middle = max(cands, key=len)
        color[tuple(sorted((v, a)))] = 1
        color[tuple(sorted((v, b)))] = 2
        for w in middle:
            color[tuple(sorted((v, w)))] = 3
        path = path[:i] + middle + path[i + 1:]
        alive.discard(v)
    for a, b in ((v1, v2), (v1, vn), (v2, vn)):
        color.pop(tuple(sorted((a, b))), None)
    return color


def schnyder_forests(g: PlaneGraph) -> list[list[int]]:
    """Three edge-disjoint forests covering ``E(g)`` (empty classes dropped)."""
    if g.m == g.n - 1:
        return [list(range(g.m))]
    nbr, outer = triangulate(g)
    color = schnyder_wood(nbr, outer)
    classes: list[list[int]] = [[], [], []]
    pending = []
    for e, (u, v) in enumerate(g.edges):
        c = color.get((min(u, v), max(u, v)))
        if c is None:
            pending.append(e)
        else:
            classes[c - 1].append(e)
    for e in pending:
        for F in classes:
            if is_forest(g.n, (g.edges[x] for x in F + [e])):
                F.append(e)
                break
        else:  # pragma: no cover - outer edges never close a cycle in all three
            raise AssertionError("outer-triangle edge fits in no forest")
    return [sorted(F) for F in classes if F]


def schnyder_collection(g: PlaneGraph, draw: bool = True) -> UnbentCollection:
    return collection_from_forests(g, schnyder_forests(g), draw)


# --- dense parts ---------------------------------------------------------------


def gadget() -> PlaneGraph:
    """Attachment gadget: octahedron minus an edge at the attachment vertex.

    Vertex 0 (degree 3) lies on the external face, a triangle; 6 vertices,
    11 = 2n - 1 edges, un = 2.  (With the quadrilateral left by the removed
    edge outside, un would be 3.)
    """
    from .graphcore import octahedron

    oct_ = octahedron()
    # drop an edge between 0 and one of its neighbours, keep a triangle outside
    drop = oct_.rotation[0][0]
    keep = [e for e in range(oct_.m) if e != drop]
    remap = {e: i for i, e in enumerate(keep)}
    rot = [[remap[e] for e in oct_.rotation[v] if e != drop] for v in range(oct_.n)]
    h = PlaneGraph(oct_.n, [oct_.edges[e] for e in keep], rot, (0, "left"), "H")
    tri = next(f for f in h.faces if f.degree == 3 and 0 in h.face_vertices(f.id))
    return h.with_external_face(tri.id)


def cut_edges(g: PlaneGraph) -> set[int]:
    """Edges lying in some cut of size one or two."""
    import networkx as nx

    def bridges(skip: int | None) -> set[int]:
        G = nx.MultiGraph()
        G.add_nodes_from(range(g.n))
        for e, (u, v) in enumerate(g.edges):
            if e != skip:
                G.add_edge(u, v, key=e)
        out = set()
        for u, v in nx.bridges(G):
            out.update(k for k in G[u][v])
        return out

    X0 = bridges(None)
    X = set(X0)
    for e in range(g.m):
        if e in X0:
            continue
        b = bridges(e) - X0
        if b:
            X.add(e)
            X.update(b)
    return X


def decompose_dense(g: PlaneGraph) -> list[PlaneGraph]:
    """Dense pieces of a graph with ``m <= 2n - 2`` edges.

    The graph is split along all edges of 1- and 2-edge cuts.  Each piece
    with at least ``2|V| - 1`` edges is returned with every cut edge kept as
    a pendant edge ending at a copy of :func:`gadget`, which preserves that
    edge-count property and the embedding of the piece.
    """
    if g.m > 2 * g.n - 2:
        raise DensityTooHigh(f"m = {g.m} > 2n - 2 = {2 * g.n - 2}")
    X = cut_edges(g)
    dsu = _DSU(g.n)
    for e, (u, v) in enumerate(g.edges):
        if e not in X:
            dsu.union(u, v)
    comps: dict[int, list[int]] = {}
    for v in range(g.n):
        comps.setdefault(dsu.find(v), []).append(v)
    H = gadget()
    hv = H.n
    anchor_corner = next(d for d in range(2 * H.m) if H.tail(d) == 0 and H.faces[H.left_face(d)].is_external)
    out = []
    for verts in sorted(comps.values()):
        vs = set(verts)
        inner = [e for e, (u, v) in enumerate(g.edges) if u in vs and v in vs]
        if len(inner) < 2 * len(verts) - 1:
            continue
        idx = {v: i for i, v in enumerate(verts)}
        nbr: list[list[int]] = []
        for v in verts:
            row = []
            for e in g.rotation[v]:
                w = g.other(e, v)
                if w in vs:
                    row.append(idx[w])
                else:
                    row.append(("pendant", e))
            nbr.append(row)
        # attach a gadget copy per pendant
        for i, row in enumerate(nbr):
            for j, w in enumerate(row):
                if isinstance(w, tuple):
                    base = len(nbr)
                    hrows = [[base + H.other(e, x) for e in H.rotation[x]] for x in range(hv)]
                    at = H.rotation[0].index(anchor_corner >> 1)
                    hrows[0].insert(at + 1, i)
                    nbr.extend(hrows)
                    row[j] = base
        ext = _external_hint(g, verts, nbr)
        piece = from_neighbor_lists(nbr, name=f"{g.name}[{min(verts)}]" if g.name else "")
        if ext is not None:
            piece = piece.with_external_face(_face_of(piece, *ext))
        out.append(piece)
    return out


def _external_hint(g: PlaneGraph, verts: list[int], nbr) -> tuple[int, int] | None:
    """A dart (as a vertex pair in piece numbering) on g's external face."""
    idx = {v: i for i, v in enumerate(verts)}
    for d in g.faces[g.external_face].darts:
        u, v = g.tail(d), g.head(d)
        if u in idx and v in idx:
            return idx[u], idx[v]
    return None


def _face_of(g: PlaneGraph, u: int, v: int) -> int:
    e = g.edge_id(u, v)
    return g.left_face(g.out_dart(e, u))


# --- angle assignments and balanced colourings --------------------------------------------------


@dataclass(frozen=True)
class AngleAssignment:
    """``angles[v]`` lists the faces receiving the free angles of ``v``."""

    angles: tuple[tuple[int, ...], ...]

    def validate(self, g: PlaneGraph) -> None:
        if len(self.angles) != g.n:
            raise ValueError("one entry per vertex expected")
        for v, fs in enumerate(self.angles):
            if len(fs) != 4 - g.degree(v):
                raise ValueError(f"vertex {v} must assign {4 - g.degree(v)} angles")
            incident = {g.left_face(g.out_dart(e, v)) for e in g.rotation[v]}
            if not set(fs) <= incident:
                raise ValueError(f"vertex {v} assigns an angle to a non-incident face")


def empty_assignment(g: PlaneGraph) -> AngleAssignment:
    return AngleAssignment(tuple(() for _ in range(g.n)))


def base_demand(g: PlaneGraph, f: int) -> int:
    face = g.faces[f]
    return -4 - face.degree if face.is_external else 4 - face.degree


def face_demands(g: PlaneGraph, assignment: AngleAssignment) -> dict[int, int]:
    assignment.validate(g)
    dem = {f.id: base_demand(g, f.id) for f in g.faces}
    for fs in assignment.angles:
        for f in fs:
            dem[f] += 1
    return dem


def regions(g: PlaneGraph, walls: Iterable[int]) -> list[int]:
    """Region id per face of the plane cut along the edges in ``walls``."""
    walls = set(walls)
    dsu = _DSU(g.num_faces)
    for e in range(g.m):
        if e not in walls:
            dsu.union(*g.edge_faces(e))
    return [dsu.find(f) for f in range(g.num_faces)]


def enclosed_faces(g: PlaneGraph, cycle: Iterable[int]) -> set[int]:
    """Faces inside a cycle (given by edge ids); the external face is never inside."""
    reg = regions(g, cycle)
    out = reg[g.external_face]
    return {f for f in range(g.num_faces) if reg[f] != out}


def _class_witness(g: PlaneGraph, S: set[int]) -> AngleAssignment | None:
    """Angle assignment making every region cut out by ``S`` sum to zero."""
    reg = regions(g, S)
    rid = {r: i for i, r in enumerate(sorted(set(reg)))}
    need = [0] * len(rid)
    for f in range(g.num_faces):
        need[rid[reg[f]]] -= base_demand(g, f)
    if any(x < 0 for x in need):
        return None
    net = FlowNetwork([], [], [])
    for v in range(g.n):
        net.add_node(-(4 - g.degree(v)), v)
    for i in range(len(need)):
        net.add_node(need[i], ("region", i))
    arc_face = {}
    for v in range(g.n):
        if g.degree(v) == 4:
            continue
        seen = {}
        for e in g.rotation[v]:
            f = g.left_face(g.out_dart(e, v))
            seen.setdefault(rid[reg[f]], f)
        for r, f in sorted(seen.items()):
            a = net.add_arc(v, g.n + r, 0, 4 - g.degree(v), 0)
            arc_face[a] = (v, f)
    flow = solve_min_cost(net)
    if flow is None:
        return None
    angles: list[list[int]] = [[] for _ in range(g.n)]
    for a, (v, f) in arc_face.items():
        angles[v].extend([f] * flow[a])
    return AngleAssignment(tuple(tuple(sorted(x)) for x in angles))


def balance_witness(g: PlaneGraph, coloring: Sequence[int]) -> dict[int, AngleAssignment] | None:
    """Per-colour angle assignments certifying that ``coloring`` is balanced.

    ``coloring[e]`` is 1 or 2.  A colour is balanced when some assignment
    makes the faces enclosed by every monochromatic cycle sum to zero; this
    is checked region by region (the regions cut out by the colour class),
    and an assignment is found by a transportation flow.
    """
    out = {}
    for c in (1, 2):
        w = _class_witness(g, {e for e in range(g.m) if coloring[e] == c})
        if w is None:
            return None
        out[c] = w
    return out


def is_balanced(g: PlaneGraph, coloring: Sequence[int]) -> bool:
    return balance_witness(g, coloring) is not None


def monochromatic_cycles_balanced(g: PlaneGraph, edges: Iterable[int], assignment: AngleAssignment) -> bool:
    """Literal check: every simple cycle in ``edges`` encloses demand 0."""
    import networkx as nx

    dem = face_demands(g, assignment)
    G = nx.Graph()
    eid = {}
    for e in edges:
        u, v = g.edges[e]
        G.add_edge(u, v)
        eid[frozenset((u, v))] = e
    for cyc in nx.simple_cycles(G):
        ce = [eid[frozenset((cyc[i], cyc[(i + 1) % len(cyc)]))] for i in range(len(cyc))]
        if sum(dem[f] for f in enclosed_faces(g, ce)) != 0:
            return False
    return True


def find_balanced_coloring(g: PlaneGraph) -> list[int] | None:
    """First balanced 2-edge-colouring in lexicographic order (edge 0 gets colour 1).

    Backtracking; a partial colour class that is already unbalanced cannot
    become balanced by adding edges, which prunes the search.
    """
    coloring = [0] * g.m
    classes: dict[int, set[int]] = {1: set(), 2: set()}

    def ok(c: int) -> bool:
        return _class_witness(g, classes[c]) is not None

    def go(e: int) -> bool:
        if e == g.m:
            return True
        for c in ((1,) if e == 0 else (1, 2)):
            classes[c].add(e)
            coloring[e] = c
            if ok(c) and go(e + 1):
                return True
            classes[c].discard(e)
        coloring[e] = 0
        return False

    return list(coloring) if go(0) else None


def counterexample_condition(g: PlaneGraph) -> str | None:
    """Which density condition forcing three drawings holds: ``"i"``, ``"ii"`` or ``None``.

    (i): m = 2n - 1 and every inner face is a triangle.  (ii): m = 2n and
    all inner faces but one, f, are triangles, where f touches the external
    face or has degree at most 7.
    """
    n, m = g.n, g.m
    inner = [f for f in g.faces if not f.is_external]
    if m == 2 * n - 1 and all(f.degree == 3 for f in inner):
        return "i"
    if m == 2 * n:
        ext = set(g.faces[g.external_face].edges)
        for f in inner:
            others = [h for h in inner if h.id != f.id]
            if all(h.degree == 3 for h in others) and (ext & set(f.edges) or f.degree <= 7):
                return "ii"
    return None


def counterexample_conditions(g: PlaneGraph) -> bool:
    """Density conditions under which three drawings are necessary."""
    return counterexample_condition(g) is not None


def unbent_number_small(g: PlaneGraph, shortcuts: bool = True) -> int:
    """un(g) for small graphs: 1, 2 or 3.

    With ``shortcuts`` the density conditions and the two-forest partition
    are consulted before the colouring search.
    """
    bn = build_network(g)
    if straight_feasible(g, range(g.m), bn):
        return 1
    if shortcuts:
        if counterexample_conditions(g):
            return 3
        if two_forest_partition(g) is not None:
            return 2
    if g.m > ENUMERATION_GUARD:
        raise TooLarge(f"m = {g.m} exceeds the enumeration guard {ENUMERATION_GUARD}")
    return 2 if find_balanced_coloring(g) is not None else 3


def coloring_collection(g: PlaneGraph, coloring: Sequence[int], draw: bool = True) -> UnbentCollection:
    """Size-2 collection from a balanced colouring (colour class straight per drawing)."""
    bn = build_network(g)
    reps = []
    cov = {}
    for i, c in enumerate((1, 2)):
        S = [e for e in range(g.m) if coloring[e] == c]
        rep = representation_with_straight(g, S, bn)
        if rep is None:
            raise ValueError(f"colour {c} cannot be drawn straight")
        reps.append(rep)
        cov.update({e: i for e in S})
    return make_collection(g, reps, cov, draw)
