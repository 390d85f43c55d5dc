"""Slow, definition-level reference computations used only by the tests.

Nothing here shares code with the flow or colouring machinery of the package.
"""

import itertools
import random

from unbent.approx import positive_arc, reroute_around_vertex
from unbent.flow import check_flow, solve_min_cost
from unbent.graphcore import PlaneGraph
from unbent.ortho import build_network


def _vertex_angle_choices(g: PlaneGraph, v: int):
    d = g.degree(v)
    for combo in itertools.product(range(1, 5), repeat=d):
        if sum(combo) == 4:
            yield combo


def _signed_vectors(m: int, total: int):
    """Integer vectors of length m with sum of absolute values == total."""
    for parts in itertools.combinations_with_replacement(range(m), total):
        counts = [0] * m
        for p in parts:
            counts[p] += 1
        nz = [i for i in range(m) if counts[i]]
        for signs in itertools.product((1, -1), repeat=len(nz)):
            x = list(counts)
            for i, s in zip(nz, signs):
                x[i] *= s
            yield x


def brute_min_bends(g: PlaneGraph, limit: int = 8, straight=()) -> int | None:
    """Fewest bends of an orthogonal representation, by enumeration.

    Angles (in quarter turns, summing to 4 around each vertex) and a signed
    net bend count per edge are enumerated; a face traversed with the face on
    its left must turn by +4 (inner) or -4 (external).
    """
    straight = set(straight)
    per_vertex = [list(_vertex_angle_choices(g, v)) for v in range(g.n)]
    free = [e for e in range(g.m) if e not in straight]
    for total in range(limit + 1):
        vectors = list(_signed_vectors(len(free), total)) if free else ([[]] if total == 0 else [])
        for choice in itertools.product(*per_vertex):
            angle = {}
            for v, combo in enumerate(choice):
                for e, a in zip(g.rotation[v], combo):
                    angle[g.out_dart(e, v)] = a
            base = []
            for f in g.faces:
                # corner after dart d sits at head(d), between d's reverse and next_dart(d)
                turn = sum(2 - angle[g.next_dart(d)] for d in f.darts)
                base.append(turn)
            for x in vectors:
                xe = dict(zip(free, x))
                ok = True
                for f, b in zip(g.faces, base):
                    t = b
                    for d in f.darts:
                        v = xe.get(d >> 1, 0)
                        t += v if d % 2 == 0 else -v
                    if t != (-4 if f.is_external else 4):
                        ok = False
                        break
                if ok:
                    return total
    return None


def all_assignments(g: PlaneGraph):
    """Every angle assignment: each vertex hands its 4 - deg free angles to incident faces."""
    from unbent.collections import AngleAssignment

    per = []
    for v in range(g.n):
        faces = sorted({g.left_face(g.out_dart(e, v)) for e in g.rotation[v]})
        per.append(list(itertools.combinations_with_replacement(faces, 4 - g.degree(v))))
    for choice in itertools.product(*per):
        yield AngleAssignment(tuple(choice))


def balanced_literal(g: PlaneGraph, coloring) -> bool:
    """The definition read literally: per colour, some assignment balances every cycle."""
    from unbent.collections import monochromatic_cycles_balanced

    for c in (1, 2):
        edges = [e for e in range(g.m) if coloring[e] == c]
        if not any(monochromatic_cycles_balanced(g, edges, a) for a in all_assignments(g)):
            return False
    return True


def random_max_degree4(seed):
    """Random simple graph (not necessarily planar) with maximum degree 4."""
    rng = random.Random(seed)
    n = rng.randint(2, 25)
    deg = [0] * n
    edges = set()
    for _ in range(rng.randint(1, 3 * n)):
        u, v = rng.sample(range(n), 2)
        if deg[u] < 4 and deg[v] < 4 and (min(u, v), max(u, v)) not in edges:
            edges.add((min(u, v), max(u, v)))
            deg[u] += 1
            deg[v] += 1
    return n, sorted(edges)


def check_reroute(g, v, e1):
    """Check the rerouting post-conditions; returns False if the case does not apply."""
    bn = build_network(g)
    flow = solve_min_cost(bn.net)
    if positive_arc(bn, flow, e1) is None:
        return False
    x = flow[positive_arc(bn, flow, e1)]
    new = reroute_around_vertex(bn, flow, v, e1)
    check_flow(bn.net, new)
    a, b = bn.edge_arcs[e1]
    assert new[a] == 0 and new[b] == 0
    local = {arc for e in g.rotation[v] for arc in bn.edge_arcs[e]}
    for e in g.rotation[v]:
        if e == e1:
            continue
        for arc in bn.edge_arcs[e]:
            assert new[arc] <= flow[arc] + x
    for arc in range(len(bn.net.arcs)):
        if arc not in local:
            assert new[arc] == flow[arc]
    assert new.cost <= flow.cost + x * (g.degree(v) - 2)
    return True
