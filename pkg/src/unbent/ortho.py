"""Bend-minimisation flow network and orthogonal representations.

Network convention (demand = inflow - outflow):

* vertex ``v``: demand ``4 - deg(v)`` (its free angles);
* inner face ``f``: demand ``4 - deg(f)``; external face: ``-4 - deg(f)``;
* one corner arc face -> vertex per corner, cost 0, capacity 3, carrying
  ``angle - 1`` (every corner already owns one right angle);
* two cost-1 arcs per edge between its two faces.  A unit on the arc
  ``f -> g`` is a bend that is reflex (270 degrees) in ``f``.

With this normalisation node balance at a face is exactly the face-turning
identity, so feasible flows and orthogonal representations correspond.
"""

from __future__ import annotations

from dataclasses import dataclass

from .flow import Flow, FlowNetwork, check_feasible, solve_min_cost
from .graphcore import PlaneGraph


class RepresentationError(ValueError):
    pass


def infinite_capacity(g: PlaneGraph) -> int:
    return 4 * g.m + 16


@dataclass
class BendNetwork:
    """The flow network of a plane graph plus the maps back to the graph."""

    graph: PlaneGraph
    net: FlowNetwork
    corner_arc: list[int]  # per out-dart
    edge_arcs: list[tuple[int, int]]  # per edge: (left(2e)->left(2e+1), reverse)

    def face_node(self, f: int) -> int:
        return self.graph.n + f

    def straightened(self, straight) -> FlowNetwork:
        drop = set()
        for e in straight:
            drop.update(self.edge_arcs[e])
        return self.net.without_arcs(drop)

    def with_bend_caps(self, caps: dict[int, int]) -> FlowNetwork:
        """Network where edge ``e`` may carry at most ``caps[e]`` bends per side."""
        c = {}
        for e, k in caps.items():
            a, b = self.edge_arcs[e]
            c[a] = k
            c[b] = k
        return self.net.with_caps(c)

    def edge_flow(self, flow: Flow, e: int) -> tuple[int, int]:
        a, b = self.edge_arcs[e]
        return flow[a], flow[b]


def build_network(g: PlaneGraph) -> BendNetwork:
    inf = infinite_capacity(g)
    net = FlowNetwork([], [], [])
    for v in range(g.n):
        net.add_node(4 - g.degree(v), f"v{v}")
    for f in g.faces:
        d = -4 - f.degree if f.is_external else 4 - f.degree
        net.add_node(d, f"f{f.id}" + ("*" if f.is_external else ""))
    corner_arc = []
    for d in range(2 * g.m):
        corner_arc.append(net.add_arc(g.n + g.left_face(d), g.tail(d), 0, 3, 0, ("corner", d)))
    edge_arcs = []
    for e in range(g.m):
        f, h = g.edge_faces(e)
        a = net.add_arc(g.n + f, g.n + h, 0, inf, 1, ("bend", e, 0))
        b = net.add_arc(g.n + h, g.n + f, 0, inf, 1, ("bend", e, 1))
        edge_arcs.append((a, b))
    return BendNetwork(g, net, corner_arc, edge_arcs)


_SWAP = str.maketrans("LR", "RL")


def reverse_bends(s: str) -> str:
    return s[::-1].translate(_SWAP)


@dataclass(frozen=True)
class OrthogonalRepresentation:
    """Angles per corner and bend strings per edge.

    ``angles[d]`` is the angle (in right angles) of the corner spanning
    counter-clockwise from the edge of out-dart ``d`` to the next edge around
    ``tail(d)``.  ``bends[e]`` lists the turns met when walking dart ``2e``.
    """

    graph: PlaneGraph
    angles: tuple[int, ...]
    bends: tuple[str, ...]

    def bend_string(self, d: int) -> str:
        s = self.bends[d >> 1]
        return reverse_bends(s) if d & 1 else s

    @property
    def total_bends(self) -> int:
        return sum(len(s) for s in self.bends)

    def straight_edges(self) -> set[int]:
        return {e for e, s in enumerate(self.bends) if not s}

    def angle(self, v: int, e: int) -> int:
        return self.angles[self.graph.out_dart(e, v)]

    def face_turning(self, f: int) -> int:
        g = self.graph
        total = 0
        for d in g.faces[f].darts:
            s = self.bend_string(d)
            total += s.count("L") - s.count("R")
            total += 2 - self.angles[g.next_dart(d)]
        return total

    def validate(self) -> None:
        g = self.graph
        if len(self.angles) != 2 * g.m or len(self.bends) != g.m:
            raise RepresentationError("size mismatch")
        for a in self.angles:
            if a not in (1, 2, 3, 4):
                raise RepresentationError(f"angle {a} out of range")
        for s in self.bends:
            if set(s) - {"L", "R"}:
                raise RepresentationError(f"bad bend string {s!r}")
        for v in range(g.n):
            tot = sum(self.angles[g.out_dart(e, v)] for e in g.rotation[v])
            if tot != 4:
                raise RepresentationError(f"angles at vertex {v} sum to {tot}")
        for f in g.faces:
            want = -4 if f.is_external else 4
            got = self.face_turning(f.id)
            if got != want:
                raise RepresentationError(f"face {f.id} turns {got}, expected {want}")

    def dump(self) -> str:
        """Per-face corner list with angles and bend strings."""
        g = self.graph
        lines = [f"representation bends {self.total_bends}"]
        for f in g.faces:
            parts = []
            for d in f.darts:
                parts.append(f"{g.tail(d)}>{g.head(d)}[{self.bend_string(d)}]a{self.angles[g.next_dart(d)]}")
            tag = " external" if f.is_external else ""
            lines.append(f"face {f.id}{tag}: " + " ".join(parts))
        return "\n".join(lines) + "\n"


def flow_to_representation(bn: BendNetwork, flow: Flow) -> OrthogonalRepresentation:
    g = bn.graph
    angles = tuple(1 + flow[bn.corner_arc[d]] for d in range(2 * g.m))
    bends = []
    for e in range(g.m):
        x, y = bn.edge_flow(flow, e)
        k = min(x, y)
        bends.append("R" * (x - k) + "L" * (y - k))
    return OrthogonalRepresentation(g, angles, tuple(bends))


def representation_to_flow(bn: BendNetwork, rep: OrthogonalRepresentation) -> Flow:
    """Inverse of :func:`flow_to_representation` (bends counted per side)."""
    values = [0] * len(bn.net.arcs)
    for d, a in enumerate(bn.corner_arc):
        values[a] = rep.angles[d] - 1
    for e, (a, b) in enumerate(bn.edge_arcs):
        s = rep.bends[e]
        values[a] = s.count("R")
        values[b] = s.count("L")
    values = tuple(values)
    return Flow(values, sum(x * arc.cost for x, arc in zip(values, bn.net.arcs)))


def min_bend_representation(g: PlaneGraph) -> OrthogonalRepresentation:
    bn = build_network(g)
    flow = solve_min_cost(bn.net)
    assert flow is not None, "bend network of a plane 4-graph is always feasible"
    return flow_to_representation(bn, flow)


def representation_with_straight(g: PlaneGraph, straight, bn: BendNetwork | None = None) -> OrthogonalRepresentation | None:
    """Minimum-bend representation keeping every edge of ``straight`` bend-free.

    Returns ``None`` when no such representation exists.
    """
    bn = bn or build_network(g)
    flow = solve_min_cost(bn.straightened(straight))
    if flow is None:
        return None
    return flow_to_representation(bn, flow)


def straight_feasible(g: PlaneGraph, straight, bn: BendNetwork | None = None) -> bool:
    bn = bn or build_network(g)
    return check_feasible(bn.straightened(straight))


def min_bends_with_straight(g: PlaneGraph, straight, bn: BendNetwork | None = None) -> int | None:
    bn = bn or build_network(g)
    flow = solve_min_cost(bn.straightened(straight))
    return None if flow is None else flow.cost


def merge_subdivision(sub_rep: OrthogonalRepresentation, g: PlaneGraph, chains: dict[int, list[int]]) -> OrthogonalRepresentation:
    """Fold a representation of a subdivision of ``g`` back onto ``g``.

    Subdivision vertices with a right or reflex angle become bends; the
    ones drawn straight through disappear.
    """
    sub = sub_rep.graph
    angles = [0] * (2 * g.m)
    for v in range(g.n):
        for e in g.rotation[v]:
            chain = chains[e]
            se = chain[0] if g.edges[e][0] == v else chain[-1]
            angles[g.out_dart(e, v)] = sub_rep.angles[sub.out_dart(se, v)]
    bends = []
    for e, (u, v) in enumerate(g.edges):
        chain = chains[e]
        s = []
        x = u
        for i, se in enumerate(chain):
            d = sub.out_dart(se, x)
            if i:
                t = 2 - sub_rep.angles[d]
                s.append({1: "L", -1: "R", 0: ""}[t])
            s.append(sub_rep.bend_string(d))
            x = sub.head(d)
        assert x == v
        bends.append("".join(s))
    return OrthogonalRepresentation(g, tuple(angles), tuple(bends))
