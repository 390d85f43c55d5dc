"""Plane graphs of maximum degree 4: rotation systems, faces, text I/O, generators.

Edges are numbered ``0..m-1``.  Every edge ``e = (u, v)`` has two darts:
``2*e`` runs ``u -> v`` and ``2*e + 1`` runs ``v -> u``.  Rotations list the
incident edge ids of each vertex in counter-clockwise order.  Faces are traced
with the face on the *left* of every dart, so inner faces come out
counter-clockwise and the external face clockwise.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Sequence

MAX_DEGREE = 4


class PlaneGraphError(ValueError):
    """Base class for invalid plane graph input."""


class DegreeExceeded(PlaneGraphError):
    pass


class InconsistentRotation(PlaneGraphError):
    pass


class Disconnected(PlaneGraphError):
    pass


class ParseError(PlaneGraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class Face:
    id: int
    darts: tuple[int, ...]
    is_external: bool

    @property
    def degree(self) -> int:
        return len(self.darts)

    @property
    def edges(self) -> tuple[int, ...]:
        return tuple(d >> 1 for d in self.darts)


class PlaneGraph:
    """A connected simple plane graph with max degree 4.

    Instances are treated as immutable; all derived data is computed once in
    the constructor.
    """

    def __init__(
        self,
        n: int,
        edges: Sequence[tuple[int, int]],
        rotation: Sequence[Sequence[int]],
        external: tuple[int, str] = (0, "right"),
        name: str = "",
        max_degree: int | None = MAX_DEGREE,
    ):
        self.n = int(n)
        self.degree_cap = max_degree
        self.edges: tuple[tuple[int, int], ...] = tuple((int(u), int(v)) for u, v in edges)
        self.rotation: tuple[tuple[int, ...], ...] = tuple(tuple(int(e) for e in r) for r in rotation)
        self.external = (int(external[0]), str(external[1]))
        self.name = name
        self._validate_structure()
        self._trace_faces()

    # -- construction ------------------------------------------------------

    def _validate_structure(self) -> None:
        n, m = self.n, len(self.edges)
        if n < 2 or m < 1:
            raise PlaneGraphError("need at least one edge")
        if len(self.rotation) != n:
            raise InconsistentRotation(f"expected {n} rotations, got {len(self.rotation)}")
        seen = set()
        for e, (u, v) in enumerate(self.edges):
            if not (0 <= u < n and 0 <= v < n):
                raise PlaneGraphError(f"edge {e} has endpoint out of range")
            if u == v:
                raise PlaneGraphError(f"edge {e} is a self-loop")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise PlaneGraphError(f"edge {e} duplicates an existing edge")
            seen.add(key)
        incident: list[list[int]] = [[] for _ in range(n)]
        for e, (u, v) in enumerate(self.edges):
            incident[u].append(e)
            incident[v].append(e)
        for v in range(n):
            if self.degree_cap is not None and len(incident[v]) > self.degree_cap:
                raise DegreeExceeded(f"vertex {v} has degree {len(incident[v])}")
            if sorted(self.rotation[v]) != sorted(incident[v]):
                raise InconsistentRotation(f"rotation of vertex {v} does not list its incident edges exactly once")
        # connectivity
        adj = [[self.other(e, v) for e in incident[v]] for v in range(n)]
        mark = [False] * n
        stack = [0]
        mark[0] = True
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not mark[y]:
                    mark[y] = True
                    stack.append(y)
        if not all(mark):
            raise Disconnected("graph is not connected")
        side = self.external[1]
        if side not in ("left", "right") or not 0 <= self.external[0] < m:
            raise PlaneGraphError(f"bad external face designation {self.external}")

    def _trace_faces(self) -> None:
        m = len(self.edges)
        pos = [{e: i for i, e in enumerate(r)} for r in self.rotation]
        nxt = [0] * (2 * m)
        for d in range(2 * m):
            e = d >> 1
            v = self.head(d)
            rot = self.rotation[v]
            e2 = rot[(pos[v][e] - 1) % len(rot)]
            nxt[d] = self.out_dart(e2, v)
        face_of = [-1] * (2 * m)
        walks: list[tuple[int, ...]] = []
        for start in range(2 * m):
            if face_of[start] >= 0:
                continue
            walk = []
            d = start
            while face_of[d] < 0:
                face_of[d] = len(walks)
                walk.append(d)
                d = nxt[d]
            if d != start:
                raise InconsistentRotation("face traversal does not close")
            walks.append(tuple(walk))
        if self.n - m + len(walks) != 2:
            raise InconsistentRotation(
                f"Euler check failed: n - m + f = {self.n} - {m} + {len(walks)} != 2"
            )
        e0, side = self.external
        ext = face_of[2 * e0 + (0 if side == "left" else 1)]
        self._next = tuple(nxt)
        self._pos = pos
        self.face_of_dart: tuple[int, ...] = tuple(face_of)
        self.external_face = ext
        self.faces: tuple[Face, ...] = tuple(Face(i, w, i == ext) for i, w in enumerate(walks))

    # -- basic queries -----------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def max_degree(self) -> int:
        return max(len(r) for r in self.rotation)

    def tail(self, d: int) -> int:
        u, v = self.edges[d >> 1]
        return v if d & 1 else u

    def head(self, d: int) -> int:
        u, v = self.edges[d >> 1]
        return u if d & 1 else v

    def other(self, e: int, v: int) -> int:
        u, w = self.edges[e]
        return w if v == u else u

    def out_dart(self, e: int, v: int) -> int:
        return 2 * e if self.edges[e][0] == v else 2 * e + 1

    def next_dart(self, d: int) -> int:
        """Successor of ``d`` along its (left) face."""
        return self._next[d]

    def rotation_index(self, v: int, e: int) -> int:
        return self._pos[v][e]

    def next_ccw(self, v: int, e: int) -> int:
        rot = self.rotation[v]
        return rot[(self._pos[v][e] + 1) % len(rot)]

    def left_face(self, d: int) -> int:
        return self.face_of_dart[d]

    def edge_faces(self, e: int) -> tuple[int, int]:
        """Faces left of dart ``2e`` and left of dart ``2e+1``."""
        return self.face_of_dart[2 * e], self.face_of_dart[2 * e + 1]

    def neighbors(self, v: int) -> list[int]:
        return [self.other(e, v) for e in self.rotation[v]]

    def edge_id(self, u: int, v: int) -> int | None:
        for e in self.rotation[u]:
            if self.other(e, u) == v:
                return e
        return None

    def corners(self) -> list[int]:
        """Out-darts, each naming the corner CCW from its edge to the next edge."""
        return list(range(2 * self.m))

    def face_vertices(self, f: int) -> list[int]:
        return [self.tail(d) for d in self.faces[f].darts]

    def structure(self) -> tuple:
        return (self.n, self.edges, self.rotation, self.external_face, self.faces)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlaneGraph):
            return NotImplemented
        return self.structure() == other.structure()

    def __hash__(self) -> int:
        return hash((self.n, self.edges, self.rotation, self.external_face))

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<PlaneGraph{label} n={self.n} m={self.m} f={self.num_faces}>"

    # -- derived graphs ----------------------------------------------------

    def with_external_face(self, f: int) -> PlaneGraph:
        d = self.faces[f].darts[0]
        return PlaneGraph(self.n, self.edges, self.rotation, external_dart(d), self.name, self.degree_cap)

    def subdivide(self, counts: dict[int, int]) -> tuple[PlaneGraph, dict[int, list[int]]]:
        """Subdivide edge ``e`` with ``counts[e]`` new vertices.

        Returns the new graph and, per original edge, the chain of new edge
        ids from ``edges[e][0]`` to ``edges[e][1]``.
        """
        n = self.n
        new_edges: list[tuple[int, int]] = []
        chains: dict[int, list[int]] = {}
        first: dict[int, int] = {}  # original edge -> new edge at its u end
        last: dict[int, int] = {}
        extra_rot: list[list[int]] = []
        for e, (u, v) in enumerate(self.edges):
            k = counts.get(e, 0)
            path = [u] + list(range(n, n + k)) + [v]
            n += k
            chain = []
            for a, b in zip(path, path[1:]):
                chain.append(len(new_edges))
                new_edges.append((a, b))
            chains[e] = chain
            first[e], last[e] = chain[0], chain[-1]
            for i in range(k):
                extra_rot.append([chain[i], chain[i + 1]])
        rot = []
        for v in range(self.n):
            rot.append([first[e] if self.edges[e][0] == v else last[e] for e in self.rotation[v]])
        rot.extend(extra_rot)
        e0, side = self.external
        chain0 = chains[e0]
        sub = PlaneGraph(n, new_edges, rot, (chain0[0], side), self.name + "*" if self.name else "")
        return sub, chains


def external_dart(d: int) -> tuple[int, str]:
    return (d >> 1, "right" if d & 1 else "left")


def build_plane_graph(
    vertex_count: int,
    edges: Sequence[tuple[int, int]],
    rotation: Sequence[Sequence[int]],
    external_face_hint: tuple[int, str] = (0, "right"),
    name: str = "",
) -> PlaneGraph:
    return PlaneGraph(vertex_count, edges, rotation, external_face_hint, name)


def from_coordinates(
    points: Sequence[tuple[float, float]],
    edges: Sequence[tuple[int, int]],
    name: str = "",
) -> PlaneGraph:
    """Plane graph from a straight-line planar drawing.

    The rotation is read off the drawing and the unbounded face becomes the
    external face.
    """
    n = len(points)
    inc: list[list[int]] = [[] for _ in range(n)]
    for e, (u, v) in enumerate(edges):
        inc[u].append(e)
        inc[v].append(e)

    def ang(v: int, e: int) -> float:
        u, w = edges[e]
        o = w if u == v else u
        return math.atan2(points[o][1] - points[v][1], points[o][0] - points[v][0])

    rotation = [sorted(inc[v], key=lambda e: ang(v, e)) for v in range(n)]
    g = PlaneGraph(n, edges, rotation, (0, "left"), name)
    if g.num_faces == 1:
        return g

    def area(f: Face) -> float:
        s = 0.0
        for d in f.darts:
            x0, y0 = points[g.tail(d)]
            x1, y1 = points[g.head(d)]
            s += x0 * y1 - x1 * y0
        return s / 2

    ext = min(g.faces, key=area)
    return g.with_external_face(ext.id)


# -- serialization -------------------------------------------------------------


def serialize(g: PlaneGraph) -> str:
    lines = ["plane4 v1"]
    if g.name:
        lines.append(f"# {g.name}")
    lines.append(f"vertices {g.n}")
    for e, (u, v) in enumerate(g.edges):
        lines.append(f"edge {e} {u} {v}")
    for v, rot in enumerate(g.rotation):
        lines.append(f"rot {v} " + " ".join(map(str, rot)))
    lines.append(f"external {g.external[0]} {g.external[1]}")
    return "\n".join(lines) + "\n"


def parse(text: str, name: str = "") -> PlaneGraph:
    """Parse a ``plane4 v1`` document.  Malformed lines raise :class:`ParseError`."""
    header = False
    n = None
    edges: dict[int, tuple[int, int]] = {}
    rot: dict[int, list[int]] = {}
    rot_line: dict[int, int] = {}
    external = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            if not name and raw.strip().startswith("#") and header:
                name = raw.strip()[1:].strip()
            continue
        fields = line.split()
        if not header:
            if fields != ["plane4", "v1"]:
                raise ParseError(lineno, "expected header 'plane4 v1'")
            header = True
            continue
        key, args = fields[0], fields[1:]
        try:
            nums = [int(a) for a in args] if key != "external" else None
        except ValueError:
            raise ParseError(lineno, f"non-integer field in {key!r} line") from None
        if key == "vertices":
            if len(nums) != 1 or nums[0] < 1:
                raise ParseError(lineno, "vertices takes one positive count")
            n = nums[0]
        elif key == "edge":
            if len(nums) != 3:
                raise ParseError(lineno, "edge takes <id> <u> <v>")
            if nums[0] in edges:
                raise ParseError(lineno, f"duplicate edge id {nums[0]}")
            edges[nums[0]] = (nums[1], nums[2])
        elif key == "rot":
            if len(nums) < 2:
                raise ParseError(lineno, "rot takes <v> and at least one edge id")
            if nums[0] in rot:
                raise ParseError(lineno, f"duplicate rotation for vertex {nums[0]}")
            rot[nums[0]] = nums[1:]
            rot_line[nums[0]] = lineno
        elif key == "external":
            if len(args) != 2 or args[1] not in ("left", "right"):
                raise ParseError(lineno, "external takes <edge-id> <left|right>")
            try:
                external = (int(args[0]), args[1])
            except ValueError:
                raise ParseError(lineno, "external edge id must be an integer") from None
        else:
            raise ParseError(lineno, f"unknown record {key!r}")
    if not header:
        raise ParseError(1, "empty document")
    if n is None:
        raise ParseError(lineno, "missing 'vertices' line")
    if sorted(edges) != list(range(len(edges))):
        raise ParseError(lineno, "edge ids must be 0..m-1")
    if external is None:
        raise ParseError(lineno, "missing 'external' line")
    deg = [0] * n
    for u, v in edges.values():
        for x in (u, v):
            if 0 <= x < n:
                deg[x] += 1
    for v in range(n):
        if deg[v] > MAX_DEGREE:
            raise DegreeExceeded(f"vertex {v} has degree {deg[v]}")
    incident: dict[int, list[int]] = {}
    for e, (u, v) in edges.items():
        incident.setdefault(u, []).append(e)
        incident.setdefault(v, []).append(e)
    for v in range(n):
        if sorted(rot.get(v, [])) != sorted(incident.get(v, [])):
            raise ParseError(rot_line.get(v, lineno), f"rotation of vertex {v} must list its incident edges exactly once")
    rotation = [rot.get(v, []) for v in range(n)]
    return PlaneGraph(n, [edges[i] for i in range(len(edges))], rotation, external, name)


# -- fixtures ----------------------------------------------------------------


def path_graph(k: int) -> PlaneGraph:
    pts = [(float(i), 0.0) for i in range(k)]
    return from_coordinates(pts, [(i, i + 1) for i in range(k - 1)], f"P{k}")


def cycle_graph(k: int) -> PlaneGraph:
    pts = [(math.cos(2 * math.pi * i / k), math.sin(2 * math.pi * i / k)) for i in range(k)]
    return from_coordinates(pts, [(i, (i + 1) % k) for i in range(k)], f"C{k}")


def k4() -> PlaneGraph:
    """K4 drawn as a triangle with a central vertex."""
    pts = [(0.0, 0.0), (10.0, 0.0), (5.0, 9.0), (5.0, 3.0)]
    edges = [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)]
    return from_coordinates(pts, edges, "K4")


def flower(k: int) -> PlaneGraph:
    """Flower graph with ``k`` petals.

    Inner cycle ``v_i`` (ids ``0..k-1``) and outer cycle ``v'_i`` (ids
    ``k..2k-1``), plus edges ``v_i v'_i`` and ``v_i v'_{i+1}``.  The outer
    cycle bounds the external face and the inner cycle bounds the only other
    non-triangular face; the ``2k`` triangles sit in between.
    """
    if k < 3:
        raise ValueError("flower needs k >= 3")
    pts = []
    for i in range(k):
        t = 2 * math.pi * i / k
        pts.append((math.cos(t), math.sin(t)))
    for i in range(k):
        t = 2 * math.pi * i / k - math.pi / k
        pts.append((3 * math.cos(t), 3 * math.sin(t)))
    edges = []
    for i in range(k):
        edges.append((i, (i + 1) % k))
    for i in range(k):
        edges.append((k + i, k + (i + 1) % k))
    for i in range(k):
        edges.append((i, k + i))
        edges.append((i, k + (i + 1) % k))
    return from_coordinates(pts, edges, f"F{k}")


def octahedron() -> PlaneGraph:
    g = flower(3)
    return PlaneGraph(g.n, g.edges, g.rotation, g.external, "octahedron")


def k5_minus_edge() -> PlaneGraph:
    pts = [(0.0, 0.0), (10.0, 0.0), (5.0, 4.0), (5.0, 1.5), (5.0, 10.0)]
    edges = [(0, 1), (0, 4), (1, 4), (2, 0), (2, 1), (2, 4), (3, 0), (3, 1), (3, 2)]
    return from_coordinates(pts, edges, "K5-e")


def octahedron_minus_edge() -> PlaneGraph:
    """Octahedron minus an outer edge; the resulting quadrilateral is external."""
    g = flower(3)
    # drop the outer-cycle edge v'_0 v'_1 (ids 3, 4): its removal merges the
    # external triangle with a petal triangle into the external quadrilateral
    drop = g.edge_id(3, 4)
    pts = []
    for i in range(3):
        t = 2 * math.pi * i / 3
        pts.append((math.cos(t), math.sin(t)))
    for i in range(3):
        t = 2 * math.pi * i / 3 - math.pi / 3
        pts.append((3 * math.cos(t), 3 * math.sin(t)))
    edges = [uv for e, uv in enumerate(g.edges) if e != drop]
    return from_coordinates(pts, edges, "octahedron-e")


def triangular_prism() -> PlaneGraph:
    """Prism drawn with a quadrilateral as the external face."""
    pts = [(0.0, 0.0), (10.0, 0.0), (5.0, 3.0), (0.0, 10.0), (10.0, 10.0), (5.0, 7.0)]
    edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]
    return from_coordinates(pts, edges, "prism")


def cube() -> PlaneGraph:
    outer = [(0.0, 0.0), (10.0, 0.0), (10.0, 10.0), (0.0, 10.0)]
    inner = [(3.0, 3.0), (7.0, 3.0), (7.0, 7.0), (3.0, 7.0)]
    edges = [(i, (i + 1) % 4) for i in range(4)]
    edges += [(4 + i, 4 + (i + 1) % 4) for i in range(4)]
    edges += [(i, 4 + i) for i in range(4)]
    return from_coordinates(outer + inner, edges, "cube")


def fixtures() -> dict[str, PlaneGraph]:
    out = {
        "P3": path_graph(3),
        "K2": path_graph(2),
        "K3": cycle_graph(3),
        "C4": cycle_graph(4),
        "C5": cycle_graph(5),
        "K4": k4(),
        "K5-e": k5_minus_edge(),
        "octahedron-e": octahedron_minus_edge(),
        "prism": triangular_prism(),
        "cube": cube(),
    }
    for k in range(3, 9):
        out[f"F{k}"] = flower(k)
    return out


# -- random generators ---------------------------------------------------------


class _RotationBuilder:
    """Mutable rotation system used by the generators."""

    def __init__(self):
        self.n = 2
        self.edges: list[tuple[int, int]] = [(0, 1)]
        self.rot: list[list[int]] = [[0], [0]]

    def graph(self) -> PlaneGraph:
        return PlaneGraph(self.n, self.edges, self.rot, (0, "left"))

    def add_pendant(self, v: int, after: int) -> None:
        w = self.n
        self.n += 1
        e = len(self.edges)
        self.edges.append((v, w))
        i = self.rot[v].index(after)
        self.rot[v].insert(i + 1, e)
        self.rot.append([e])

    def add_chord(self, v: int, after_v: int, w: int, after_w: int) -> None:
        e = len(self.edges)
        self.edges.append((v, w))
        self.rot[v].insert(self.rot[v].index(after_v) + 1, e)
        self.rot[w].insert(self.rot[w].index(after_w) + 1, e)


def random_plane_4graph(seed: int, n: int, density: float | None = None) -> PlaneGraph:
    """Random connected plane graph with ``n`` vertices and max degree 4.

    Grows a random plane tree by pendant insertion, then adds chords inside
    faces between vertices of degree < 4.  Deterministic in ``seed``.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    rng = random.Random(seed)
    b = _RotationBuilder()
    while b.n < n:
        cands = [v for v in range(b.n) if len(b.rot[v]) < MAX_DEGREE]
        v = rng.choice(cands)
        b.add_pendant(v, rng.choice(b.rot[v]))
    if density is None:
        density = rng.random()
    target = (n - 1) + int(round(density * (n + 1)))
    attempts = 0
    g = b.graph()
    while len(b.edges) < target and attempts < 20 * n:
        attempts += 1
        f = rng.choice(g.faces)
        darts = [d for d in f.darts if g.degree(g.tail(d)) < MAX_DEGREE]
        if len(darts) < 2:
            continue
        d1, d2 = rng.sample(darts, 2)
        v, w = g.tail(d1), g.tail(d2)
        if v == w or g.edge_id(v, w) is not None:
            continue
        b.add_chord(v, d1 >> 1, w, d2 >> 1)
        g = b.graph()
    f = rng.randrange(g.num_faces)
    out = g.with_external_face(f)
    return PlaneGraph(out.n, out.edges, out.rotation, out.external, f"rand4(seed={seed},n={n})")


def random_triangulation(seed: int, n: int, flips: int | None = None) -> PlaneGraph:
    """Random simple plane triangulation: stacked insertions followed by random flips."""
    if n < 4:
        raise ValueError("n must be >= 4")
    rng = random.Random(seed)
    base = k4()
    nbr = [base.neighbors(v) for v in range(4)]

    def left(u, v):
        # third vertex of the triangle left of u -> v
        ring = nbr[v]
        return ring[(ring.index(u) - 1) % len(ring)]

    def darts():
        return [(u, v) for u in range(len(nbr)) for v in nbr[u]]

    while len(nbr) < n:
        a, b = rng.choice(darts())
        c = left(a, b)
        x = len(nbr)
        nbr[a].insert(nbr[a].index(b) + 1, x)
        nbr[b].insert(nbr[b].index(c) + 1, x)
        nbr[c].insert(nbr[c].index(a) + 1, x)
        nbr.append([a, b, c])
    if flips is None:
        flips = 3 * n
    for _ in range(flips):
        a, b = rng.choice(darts())
        c, d = left(a, b), left(b, a)
        if c == d or d in nbr[c] or len(nbr[a]) <= 3 or len(nbr[b]) <= 3:
            continue
        nbr[a].remove(b)
        nbr[b].remove(a)
        nbr[c].insert(nbr[c].index(a) + 1, d)
        nbr[d].insert(nbr[d].index(b) + 1, c)
    return from_neighbor_lists(nbr, name=f"tri(seed={seed},n={n})", max_degree=None)


def from_neighbor_lists(
    nbr: Sequence[Sequence[int]],
    edges: Sequence[tuple[int, int]] = (),
    external: tuple[int, str] = (0, "left"),
    name: str = "",
    max_degree: int | None = MAX_DEGREE,
) -> PlaneGraph:
    """Plane graph from counter-clockwise neighbour lists.

    Edges listed in ``edges`` keep their positions as ids; the remaining
    edges are numbered after them in sorted order.
    """
    edges = [(int(u), int(v)) for u, v in edges]
    eid = {(min(u, v), max(u, v)): i for i, (u, v) in enumerate(edges)}
    for uv in sorted({(min(u, v), max(u, v)) for u in range(len(nbr)) for v in nbr[u]}):
        if uv not in eid:
            eid[uv] = len(edges)
            edges.append(uv)
    rotation = [[eid[(min(u, v), max(u, v))] for v in nbr[u]] for u in range(len(nbr))]
    return PlaneGraph(len(nbr), edges, rotation, external, name, max_degree=max_degree)


def dual_graph(g: PlaneGraph, name: str = "") -> PlaneGraph:
    """Plane dual of ``g``: one vertex per face, edge ``e`` keeps its id."""
    fa = [g.edge_faces(e) for e in range(g.m)]
    rotation = [[d >> 1 for d in f.darts] for f in g.faces]
    return PlaneGraph(g.num_faces, fa, rotation, (0, "left"), name)


def random_cubic_triconnected(seed: int, faces: int) -> PlaneGraph:
    """Random plane triconnected cubic graph with ``2*faces - 4`` vertices.

    Dual of a random simple triangulation on ``faces`` vertices; the external
    face is a uniformly random face.
    """
    tri = random_triangulation(seed, faces)
    dual = dual_graph(tri)
    rng = random.Random(seed * 7919 + 1)
    f = rng.randrange(dual.num_faces)
    out = dual.with_external_face(f)
    return PlaneGraph(out.n, out.edges, out.rotation, out.external, f"cubic(seed={seed},f={faces})")


def corpus() -> dict[str, PlaneGraph]:
    """The fixed test corpus: fixtures, small random plane 4-graphs, small cubic graphs."""
    out = dict(fixtures())
    for seed in range(20):
        for n in (5, 7, 9, 11):
            g = random_plane_4graph(seed, n)
            out[g.name] = g
    for seed in range(10):
        for f in (5, 6, 7):
            g = random_cubic_triconnected(seed, f)
            out[g.name] = g
    return out
