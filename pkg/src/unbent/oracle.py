"""Exhaustive ground truth for un(G) and tbn(G) on small plane graphs.

Both searches assign every edge to the drawing that must keep it straight
and query the bend network directly, independently of the colouring and
region machinery in :mod:`unbent.collections`.  Two facts prune the search:
a straight set that is infeasible stays infeasible when it grows, and the
minimum bend count of a straight set never drops when it grows.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Any

import networkx as nx

from .collections import TooLarge, UnbentCollection, enclosed_faces, make_collection
from .graphcore import PlaneGraph
from .ortho import build_network, representation_with_straight, solve_min_cost

UN_GUARD = 26
TBN_GUARD = {1: 64, 2: 20, 3: 14}


@dataclass
class OracleResult:
    value: int | None
    witness: Any = None
    search_space: int = 0
    elapsed: float = 0.0
    notes: list[str] = field(default_factory=list)


class _Costs:
    """Memoised minimum bends with a given straight set (``None`` = infeasible)."""

    def __init__(self, g: PlaneGraph):
        self.g = g
        self.bn = build_network(g)
        self.memo: dict[frozenset, int | None] = {}
        self.calls = 0

    def __call__(self, S) -> int | None:
        key = frozenset(S)
        if key not in self.memo:
            self.calls += 1
            flow = solve_min_cost(self.bn.straightened(key))
            self.memo[key] = None if flow is None else flow.cost
        return self.memo[key]


def _search(g: PlaneGraph, k: int, costs: _Costs, bound: bool):
    """Assignments of edges to ``k`` straight classes.

    With ``bound`` it returns the cheapest (cost, classes); otherwise the
    first feasible classes.  Drawings are interchangeable, so a new class
    is opened only after all earlier ones.
    """
    classes: list[set[int]] = [set() for _ in range(k)]
    cur = [costs(())] * k
    best: list[Any] = [None, None]
    nodes = [0]

    def go(e: int, opened: int) -> bool:
        nodes[0] += 1
        if e == g.m:
            total = sum(cur[:opened])
            if best[0] is None or total < best[0]:
                best[0], best[1] = total, [sorted(c) for c in classes[:opened]]
            return not bound
        options = []
        for i in range(min(opened + 1, k)):
            classes[i].add(e)
            c = costs(classes[i])
            classes[i].discard(e)
            if c is not None:
                options.append((c - cur[i], i, c))
        options.sort()
        for _, i, c in options:
            new_open = max(opened, i + 1)
            old = cur[i]
            cur[i] = c
            lower = sum(cur[:new_open])
            if not bound or best[0] is None or lower < best[0]:
                classes[i].add(e)
                stop = go(e + 1, new_open)
                classes[i].discard(e)
                if stop:
                    cur[i] = old
                    return True
            cur[i] = old
        return False

    go(0, 0)
    return best, nodes[0]


def exact_un(g: PlaneGraph, k_max: int = 3) -> OracleResult:
    """Smallest collection size (``value`` is ``None`` if above ``k_max``)."""
    if g.m > UN_GUARD:
        raise TooLarge(f"m = {g.m} exceeds {UN_GUARD}")
    t0 = time.perf_counter()
    costs = _Costs(g)
    space = 0
    for k in range(1, k_max + 1):
        (val, classes), nodes = _search(g, k, costs, bound=False)
        space += nodes
        if classes is not None:
            return OracleResult(k, classes, space, time.perf_counter() - t0)
    return OracleResult(None, None, space, time.perf_counter() - t0, ["no collection within k_max"])


def exact_tbn(g: PlaneGraph, k_max: int = 3, draw: bool = True) -> OracleResult:
    """Minimum total bends over collections of at most ``k_max`` drawings.

    The witness is the realised :class:`UnbentCollection`.
    """
    if g.m > TBN_GUARD.get(k_max, 0):
        raise TooLarge(f"m = {g.m} exceeds the guard for k_max = {k_max}")
    t0 = time.perf_counter()
    costs = _Costs(g)
    best = None
    space = 0
    for k in range(1, k_max + 1):
        (val, classes), nodes = _search(g, k, costs, bound=True)
        space += nodes
        if val is not None and (best is None or val < best[0]):
            best = (val, classes)
    res = OracleResult(None, None, space, 0.0, [f"collections of size <= {k_max}"])
    if best is not None:
        coll = collection_for_classes(g, best[1], draw)
        assert coll.total_bends == best[0]
        res.value, res.witness = best[0], coll
    res.elapsed = time.perf_counter() - t0
    return res


def collection_for_classes(g: PlaneGraph, classes, draw: bool = True) -> UnbentCollection:
    bn = build_network(g)
    reps = [representation_with_straight(g, S, bn) for S in classes]
    cov = {e: i for i, S in enumerate(classes) for e in S}
    return make_collection(g, reps, cov, draw)


# --- cubic helpers ---------------------------------------------------------------


def brute_three_legged_cycles(g: PlaneGraph) -> list[frozenset[int]]:
    """Edge sets of all cycles with exactly three pairwise vertex-disjoint legs.

    A leg is an edge off the cycle, not drawn inside it, with exactly one
    end on the cycle.  (An outside chord imposes no drawing constraint and
    has no contour path, so it is not counted as a leg.)
    """
    G = nx.Graph()
    eid = {}
    for e, (u, v) in enumerate(g.edges):
        G.add_edge(u, v)
        eid[frozenset((u, v))] = e
    out = []
    for cyc in nx.simple_cycles(G):
        vs = set(cyc)
        ce = {eid[frozenset((cyc[i], cyc[(i + 1) % len(cyc)]))] for i in range(len(cyc))}
        inside = enclosed_faces(g, ce)
        legs = [
            e
            for e, (u, v) in enumerate(g.edges)
            if e not in ce and (u in vs or v in vs) and not set(g.edge_faces(e)) <= inside
        ]
        ends = [x for e in legs for x in g.edges[e]]
        if len(legs) == 3 and len(set(ends)) == 6 and len(set(ends) & vs) == 3:
            out.append(frozenset(ce))
    return sorted(out, key=sorted)


def brute_obstructions(g: PlaneGraph) -> dict[frozenset[int], int]:
    """Every cycle with fewer than four vertices carrying an outside edge.

    Maps the edge set to the dummies it needs: four minus that vertex count.
    """
    G = nx.Graph()
    eid = {}
    for e, (u, v) in enumerate(g.edges):
        G.add_edge(u, v)
        eid[frozenset((u, v))] = e
    out = {}
    for cyc in nx.simple_cycles(G):
        vs = set(cyc)
        ce = {eid[frozenset((cyc[i], cyc[(i + 1) % len(cyc)]))] for i in range(len(cyc))}
        inside = enclosed_faces(g, ce)
        t = {
            x
            for e, (u, v) in enumerate(g.edges)
            if e not in ce and not set(g.edge_faces(e)) <= inside
            for x in (u, v)
            if x in vs
        }
        if len(t) < 4:
            out[frozenset(ce)] = 4 - len(t)
    return out


def min_dummy_hitting(g: PlaneGraph, limit: int = 30) -> OracleResult:
    """Fewest edges (one dummy each) meeting every 3-legged cycle."""
    if g.m > limit:
        raise TooLarge(f"m = {g.m} exceeds {limit}")
    t0 = time.perf_counter()
    cycles = brute_three_legged_cycles(g)
    space = 0
    for r in range(g.m + 1):
        for pick in itertools.combinations(range(g.m), r):
            space += 1
            s = set(pick)
            if all(c & s for c in cycles):
                return OracleResult(r, sorted(s), space, time.perf_counter() - t0)
    raise AssertionError("unreachable")
