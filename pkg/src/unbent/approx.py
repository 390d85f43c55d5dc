"""Star forests, flow rerouting around a vertex, and a 3-approximation of tbn.

The approximation starts from one minimum-bend flow.  For each colour of a
star-forest partition it straightens every bent edge of that colour by
sending the edge's flow around its non-centre endpoint instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .collections import UnbentCollection, make_collection
from .flow import Flow, check_flow, solve_min_cost
from .graphcore import DegreeExceeded, PlaneGraph
from .ortho import BendNetwork, build_network, flow_to_representation


@dataclass(frozen=True)
class StarForestPartition:
    color: tuple[int, ...]  # per edge, 1..4
    center: tuple[int, ...]  # per edge, one of its endpoints

    @property
    def num_classes(self) -> int:
        return len(set(self.color))

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for e, c in enumerate(self.color):
            out.setdefault(c, []).append(e)
        return out


def is_star_forest(edges: Sequence[tuple[int, int]], ids: Sequence[int], center: Sequence[int] | None = None) -> bool:
    """True if the edges ``ids`` form a star forest (with consistent centres)."""
    deg: dict[int, int] = {}
    for e in ids:
        for x in edges[e]:
            deg[x] = deg.get(x, 0) + 1
    for e in ids:
        u, v = edges[e]
        if deg[u] >= 2 and deg[v] >= 2:
            return False  # an edge between two non-leaves: a path of length 3 or a cycle
        if center is not None:
            c = center[e]
            if c not in (u, v):
                return False
            hub = u if deg[u] >= 2 else v if deg[v] >= 2 else None
            if hub is not None and c != hub:
                return False
    return True


def verify_star_forests(edges: Sequence[tuple[int, int]], part: StarForestPartition) -> None:
    if len(part.color) != len(edges):
        raise AssertionError("every edge needs a colour")
    if part.num_classes > 4 or not set(part.color) <= {1, 2, 3, 4}:
        raise AssertionError("more than four classes")
    for c, ids in part.classes().items():
        if not is_star_forest(edges, ids, part.center):
            raise AssertionError(f"class {c} is not a star forest")


def _euler_orient(n: int, edges: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    """Orient edges so that in- and out-degree differ by at most one everywhere."""
    import networkx as nx

    G = nx.MultiGraph()
    G.add_nodes_from(range(n))
    for e, (u, v) in enumerate(edges):
        G.add_edge(u, v, key=e)
    odd = [v for v in range(n) if G.degree(v) % 2]
    X = n
    for i, v in enumerate(odd):
        G.add_edge(X, v, key=("dummy", i))
    oriented: dict[int, tuple[int, int]] = {}
    for comp in nx.connected_components(G):
        if len(comp) < 2:
            continue
        H = G.subgraph(comp)
        for u, v, k in nx.eulerian_circuit(H, source=min(comp), keys=True):
            if not isinstance(k, tuple):
                oriented[k] = (u, v)
    return [oriented[e] for e in range(len(edges))]


def star_forest_partition(n: int, edges: Sequence[tuple[int, int]]) -> StarForestPartition:
    """Partition the edges of a graph of maximum degree 4 into at most 4 star forests."""
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    if deg and max(deg) > 4:
        raise DegreeExceeded(f"maximum degree {max(deg)} exceeds 4")
    arcs = _euler_orient(n, edges)
    # bipartite out/in split: each side node has degree <= 2, so the
    # components are paths and even cycles and alternate colouring works
    ends = [(("o", u), ("i", v)) for u, v in arcs]
    half = _alternate(ends)
    color = [0] * len(edges)
    center = [0] * len(edges)
    for h in (0, 1):
        ids = [e for e in range(len(edges)) if half[e] == h]
        sub = _alternate([edges[e] for e in ids])
        for e, k in zip(ids, sub):
            color[e] = 2 * h + 1 + k
    _merge_classes(edges, color, center)
    return StarForestPartition(tuple(color), tuple(center))


def _alternate(ends: Sequence[tuple]) -> list[int]:
    """0/1 labels alternating along the trails of a graph of maximum degree 2.

    Paths are walked from an end; in an odd cycle the first and last edge
    share a label (together they form a two-edge star).
    """
    adj: dict = {}
    for e, (a, b) in enumerate(ends):
        adj.setdefault(a, []).append(e)
        adj.setdefault(b, []).append(e)
    label = [-1] * len(ends)

    def walk(node, e):
        side = 0
        while e is not None:
            label[e] = side
            a, b = ends[e]
            node = b if a == node else a
            e = next((f for f in adj[node] if label[f] < 0), None)
            side ^= 1

    for node in sorted(adj, key=repr):
        if len(adj[node]) == 1 and label[adj[node][0]] < 0:
            walk(node, adj[node][0])
    for e in range(len(ends)):
        if label[e] < 0:
            walk(ends[e][0], e)
    return label


def _fix_centers(edges, color, center, ids) -> None:
    by: dict[int, list[int]] = {}
    for e in ids:
        by.setdefault(color[e], []).append(e)
    for es in by.values():
        deg: dict[int, int] = {}
        for e in es:
            for x in edges[e]:
                deg[x] = deg.get(x, 0) + 1
        for e in es:
            u, v = edges[e]
            if deg[u] >= 2:
                center[e] = u
            elif deg[v] >= 2:
                center[e] = v
            else:
                center[e] = min(u, v)


def _merge_classes(edges, color: list[int], center: list[int]) -> None:
    """Merge whole classes while the union stays a star forest; renumber 1..k."""
    changed = True
    while changed:
        changed = False
        cls = sorted(set(color))
        for i in cls:
            for j in cls:
                if i >= j:
                    continue
                ids = [e for e, c in enumerate(color) if c in (i, j)]
                if is_star_forest(edges, ids):
                    for e in ids:
                        color[e] = i
                    changed = True
                    break
            if changed:
                break
    remap = {c: k + 1 for k, c in enumerate(sorted(set(color)))}
    for e in range(len(color)):
        color[e] = remap[color[e]]
    _fix_centers(edges, color, center, range(len(edges)))


# --- rerouting -------------------------------------------------------------------


def _arc_into_left(bn: BendNetwork, d: int) -> int:
    """Face arc crossing edge ``d >> 1`` from the right of dart ``d`` to its left."""
    a, b = bn.edge_arcs[d >> 1]
    return a if d & 1 else b


def positive_arc(bn: BendNetwork, flow: Flow, e: int) -> int | None:
    a, b = bn.edge_arcs[e]
    if flow[a] and flow[b]:
        raise ValueError(f"edge {e} carries flow in both directions")
    return a if flow[a] else b if flow[b] else None


def reroute_around_vertex(bn: BendNetwork, flow: Flow, v: int, e1: int) -> Flow:
    """Send the flow crossing ``e1`` around ``v`` the other way.

    Afterwards ``e1`` carries no face flow; each other edge at ``v`` gains at
    most the moved amount, cancelling against opposite flow where possible.
    """
    g = bn.graph
    if v not in g.edges[e1]:
        raise ValueError(f"edge {e1} is not incident to vertex {v}")
    rot = g.rotation[v]
    d = len(rot)
    if d < 2:
        raise ValueError(f"vertex {v} has degree {d} < 2")
    arc = positive_arc(bn, flow, e1)
    if arc is None:
        return flow
    x = flow[arc]
    vals = list(flow.values)
    vals[arc] = 0
    i0 = rot.index(e1)
    d0 = g.out_dart(e1, v)
    ccw = arc == _arc_into_left(bn, d0)  # flow crosses e1 counter-clockwise around v
    # corridor through the other edges, in the opposite rotational sense
    others = [rot[(i0 - k) % d] for k in range(1, d)] if ccw else [rot[(i0 + k) % d] for k in range(1, d)]
    for e in others:
        dd = g.out_dart(e, v)
        fwd = _arc_into_left(bn, dd)
        a, b = bn.edge_arcs[e]
        if ccw:
            fwd = b if fwd == a else a  # clockwise crossing
        back = b if fwd == a else a
        c = min(x, vals[back])
        vals[back] -= c
        vals[fwd] += x - c
    cost = sum(val * arc_.cost for val, arc_ in zip(vals, bn.net.arcs))
    return Flow(tuple(vals), cost)


def approx3_collection(g: PlaneGraph, draw: bool = True) -> UnbentCollection:
    """At most four drawings with at most six times the minimum bend count.

    Since every collection with a bent edge needs two drawings, each with at
    least the minimum bend count, the total is within a factor 3 of optimal.
    """
    bn = build_network(g)
    base = solve_min_cost(bn.net)
    assert base is not None
    b = base.cost
    rep0 = flow_to_representation(bn, base)
    if b == 0:
        return make_collection(g, [rep0], {e: 0 for e in range(g.m)}, draw)
    part = star_forest_partition(g.n, g.edges)
    reps = []
    cov = {}
    for c, ids in sorted(part.classes().items()):
        flow = base
        for e in sorted(ids):
            if positive_arc(bn, flow, e) is None:
                continue
            u, w = g.edges[e]
            leaf = w if part.center[e] == u else u
            flow = reroute_around_vertex(bn, flow, leaf, e)
        check_flow(bn.net, flow)
        rep = flow_to_representation(bn, flow)
        for e in ids:
            assert not rep.bends[e], f"edge {e} still bent in its colour drawing"
            cov[e] = len(reps)
        reps.append(rep)
    coll = make_collection(g, reps, cov, draw)
    assert coll.total_bends <= 6 * b, "bend accounting violated"
    return coll
