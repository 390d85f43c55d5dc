"""Minimum-bend unbent collections of plane triconnected cubic graphs.

A bend on a cubic graph is a subdivision vertex (a *dummy*).  A plane cubic
graph draws without bends exactly when it has no bad cycle: a 3-legged cycle
without a dummy, or an external cycle with fewer than four.  Two copies of
the graph receive dummies on disjoint edge sets; each edge is straight in the
copy where it carries none.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field

from .collections import UnbentCollection, enclosed_faces, make_collection
from .graphcore import PlaneGraph
from .ortho import OrthogonalRepresentation, merge_subdivision, representation_with_straight, straight_feasible

log = logging.getLogger(__name__)


class NotCubic(ValueError):
    pass


class NotTriconnected(ValueError):
    pass


class PlacementFailed(RuntimeError):
    pass


@dataclass
class CycleInfo:
    id: int
    edges: tuple[int, ...]  # cyclic order; edges[i] joins vertices[i] and vertices[i+1]
    vertices: tuple[int, ...]
    legs: tuple[int, ...]
    contour_paths: tuple[tuple[int, ...], ...]
    leg_faces: tuple[int, ...]
    inside_edges: frozenset[int]
    inside_vertices: frozenset[int]
    attachments: frozenset[int] = frozenset()
    leg_ends: frozenset[int] = frozenset()
    demanding: bool = False
    interesting: tuple[int, ...] = ()  # indices into contour_paths
    expensive: bool = False
    short: bool = False

    @property
    def leg_count(self) -> int:
        return len(self.legs)

    @property
    def requirement(self) -> int:
        """Dummies needed on the cycle: four minus its vertices with an outside edge."""
        return max(0, 4 - len(self.attachments))

    @property
    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edges)

    def contains(self, other: "CycleInfo") -> bool:
        return other.edge_set <= self.inside_edges

    def interesting_paths(self) -> list[tuple[int, ...]]:
        return [self.contour_paths[i] for i in self.interesting]


# --- structure ----------------------------------------------------------------


def check_cubic_triconnected(g: PlaneGraph) -> None:
    import networkx as nx

    if any(g.degree(v) != 3 for v in range(g.n)):
        raise NotCubic("every vertex must have degree 3")
    G = nx.Graph(list(g.edges))
    if g.n < 4 or nx.edge_connectivity(G) < 3:
        raise NotTriconnected("graph has a cut of at most two edges")


def _cycle_order(g: PlaneGraph, edge_set: set[int]) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Order a set of edges as a simple cycle, or ``None`` if it is not one."""
    adj: dict[int, list[int]] = {}
    for e in edge_set:
        for x in g.edges[e]:
            adj.setdefault(x, []).append(e)
    if not adj or any(len(es) != 2 for es in adj.values()):
        return None
    start = min(adj)
    verts, edges = [start], []
    e = min(adj[start])
    x = start
    while True:
        edges.append(e)
        x = g.other(e, x)
        if x == start:
            break
        verts.append(x)
        e = adj[x][0] if adj[x][0] != e else adj[x][1]
    if len(edges) != len(edge_set):
        return None
    return tuple(edges), tuple(verts)


def cycle_info(g: PlaneGraph, edge_set, cid: int = -1) -> CycleInfo | None:
    """Legs, contour paths and interior of a cycle (``None`` if not a cycle)."""
    order = _cycle_order(g, set(edge_set))
    if order is None:
        return None
    edges, verts = order
    inside_f = enclosed_faces(g, edges)
    es = set(edges)
    vs = set(verts)
    inside_e = set(es)
    legs = []
    for e in range(g.m):
        if e in es:
            continue
        f1, f2 = g.edge_faces(e)
        if f1 in inside_f and f2 in inside_f:
            inside_e.add(e)
        elif set(g.edges[e]) & vs:
            legs.append(e)
    inside_v = {x for e in inside_e for x in g.edges[e]}
    attach = {x for e in legs for x in g.edges[e] if x in vs}
    paths = []
    if attach and len(attach) == len(legs):
        k = len(verts)
        s = next(i for i in range(k) if verts[i] in attach)
        cur: list[int] = []
        for j in range(k):
            i = (s + j) % k
            cur.append(edges[i])
            if verts[(i + 1) % k] in attach:
                paths.append(tuple(cur))
                cur = []
    leg_faces = sorted(
        f.id for f in g.faces if sum(1 for e in legs if e in f.edges) >= 2
    )
    return CycleInfo(
        cid, edges, verts, tuple(sorted(legs)), tuple(paths), tuple(leg_faces), frozenset(inside_e), frozenset(inside_v), frozenset(attach),
        frozenset(x for e in legs for x in g.edges[e]),
    )


def is_k_legged(info: CycleInfo, k: int) -> bool:
    """Exactly ``k`` legs and no two legs sharing a vertex."""
    if info.leg_count != k:
        return False
    return len(info.contour_paths) == k and len(info.leg_ends) == 2 * k


def three_legged_cycles(g: PlaneGraph) -> list[CycleInfo]:
    """All 3-legged cycles, via the 3-edge bonds (triangles of the dual)."""
    check_cubic_triconnected(g)
    seen = set()
    out: list[CycleInfo] = []
    for cut, faces in _dual_triangles(g):
        for info in _bond_rims(g, cut, faces):
            if info.edge_set not in seen and is_k_legged(info, 3) and set(info.legs) == cut:
                seen.add(info.edge_set)
                out.append(info)
    out.sort(key=lambda c: (len(c.inside_edges), sorted(c.edges)))
    for i, c in enumerate(out):
        c.id = i
    return out


def _dual_triangles(g: PlaneGraph):
    face_adj: dict[tuple[int, int], int] = {}
    for e in range(g.m):
        f, h = sorted(g.edge_faces(e))
        face_adj[(f, h)] = e
    nbr: dict[int, set[int]] = {}
    for f, h in face_adj:
        nbr.setdefault(f, set()).add(h)
        nbr.setdefault(h, set()).add(f)
    for a in sorted(nbr):
        for b in sorted(x for x in nbr[a] if x > a):
            for c in sorted(x for x in nbr[a] & nbr[b] if x > b):
                yield {face_adj[(a, b)], face_adj[(a, c)], face_adj[(b, c)]}, (a, b, c)


def _bond_rims(g: PlaneGraph, cut: set[int], faces) -> list[CycleInfo]:
    """Boundary cycles, along the three cut faces, of each side of a 3-edge bond."""
    out = []
    for side in _sides(g, cut):
        rim = {e for e in range(g.m) if e not in cut and set(g.edges[e]) <= side and set(g.edge_faces(e)) & set(faces)}
        info = cycle_info(g, rim)
        if info is not None:
            out.append(info)
    return out


def obstruction_cycles(g: PlaneGraph) -> list[CycleInfo]:
    """Every cycle needing dummies for a bend-free drawing, in any placement.

    A cycle whose vertices carry outside edges at only ``t < 4`` places
    needs ``4 - t`` dummies.  In a triconnected cubic graph these are the
    external cycle (``t = 0``), the cycles around the external face and one
    adjacent inner face (``t = 2``, one outside chord), and the rims of
    3-edge bonds (``t = 3``) -- the 3-legged cycles plus rims whose legs
    meet at one outside vertex.
    """
    check_cubic_triconnected(g)
    found: dict[frozenset[int], CycleInfo] = {}

    def add(info):
        if info is not None and info.requirement and info.edge_set not in found:
            found[info.edge_set] = info

    ext = set(external_cycle(g))
    add(cycle_info(g, ext))
    for f in g.faces:
        if f.id != g.external_face:
            add(cycle_info(g, ext ^ set(f.edges)))
    for cut, faces in _dual_triangles(g):
        for info in _bond_rims(g, cut, faces):
            add(info)
    out = sorted(found.values(), key=lambda c: (len(c.inside_edges), sorted(c.edges)))
    for i, c in enumerate(out):
        c.id = i
    return out


def _sides(g: PlaneGraph, cut: set[int]) -> list[set[int]]:
    adj: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for e, (u, v) in enumerate(g.edges):
        if e not in cut:
            adj[u].append(v)
            adj[v].append(u)
    comps = []
    left = set(range(g.n))
    while left:
        s = min(left)
        comp = {s}
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        comps.append(comp)
        left -= comp
    return [c for c in comps if len(c) >= 3]


def external_cycle(g: PlaneGraph) -> tuple[int, ...]:
    return g.faces[g.external_face].edges


# --- demanding cycles and q(G) ---------------------------------------------------


def mark_demanding(cycles: list[CycleInfo]) -> list[CycleInfo]:
    """Innermost first: a cycle is demanding unless a demanding cycle it contains shares an edge with it."""
    marked: list[CycleInfo] = []
    for c in sorted(cycles, key=lambda c: len(c.inside_edges)):
        c.demanding = not any(c.contains(d) and c.edge_set & d.edge_set for d in marked if d is not c)
        if c.demanding:
            marked.append(c)
    return marked


def demanding_cycles(g: PlaneGraph, cycles: list[CycleInfo] | None = None) -> list[CycleInfo]:
    cycles = three_legged_cycles(g) if cycles is None else cycles
    return mark_demanding(cycles)


def _containing_sharing(c: CycleInfo, cycles: list[CycleInfo]) -> list[CycleInfo]:
    return [x for x in cycles if x is not c and not x.demanding and x.contains(c) and x.edge_set & c.edge_set]


def classify(g: PlaneGraph, c: CycleInfo, cycles: list[CycleInfo]) -> CycleInfo:
    """Set the interesting paths and the expensive/short flags of a demanding cycle."""
    outer = _containing_sharing(c, cycles)
    c.interesting = tuple(i for i, P in enumerate(c.contour_paths) if all(set(P) <= x.edge_set for x in outer))
    c.expensive = False
    if len(c.interesting) == 1:
        P = c.contour_paths[c.interesting[0]]
        if len(P) == 1:
            others = [d for d in cycles if d.demanding and d is not c]
            for x in outer:
                if set(P) & x.edge_set and not any(x.contains(d) and x.edge_set & d.edge_set for d in others):
                    c.expensive = True
                    break
    ext_edges = set(external_cycle(g))
    on_ext = [e for e in c.edges if e in ext_edges]
    c.short = len(on_ext) == 1 and len(c.interesting) >= 2 and any(c.contour_paths[i] == (on_ext[0],) for i in c.interesting)
    return c


@dataclass
class QAccount:
    D: list[CycleInfo]
    D_exp: list[CycleInfo]
    D_ext: list[CycleInfo]
    D_short: list[CycleInfo]
    demanding: list[CycleInfo]
    cycles: list[CycleInfo]

    @property
    def q(self) -> int:
        return q_formula(len(self.D), len(self.D_exp), len(self.D_ext), len(self.D_short))

    def table(self) -> list[tuple[str, int]]:
        return [("|D|", len(self.D)), ("|D_exp|", len(self.D_exp)), ("|D_ext|", len(self.D_ext)), ("|D_short|", len(self.D_short)), ("q", self.q)]


def q_formula(d: int, d_exp: int, d_ext: int, d_short: int) -> int:
    return 2 * d + d_exp + 8 - min(8, 2 * d_ext - d_short)


def _vertex_disjoint_sets(dem: list[CycleInfo]):
    """All maximum families of pairwise vertex-disjoint cycles."""
    n = len(dem)
    verts = [set(c.vertices) for c in dem]
    best: list[list[int]] = []
    size = [0]

    def go(i, chosen):
        if len(chosen) + (n - i) < size[0]:
            return
        if i == n:
            if len(chosen) > size[0]:
                size[0] = len(chosen)
                best.clear()
            if len(chosen) == size[0]:
                best.append(list(chosen))
            return
        if all(not (verts[i] & verts[j]) for j in chosen):
            chosen.append(i)
            go(i + 1, chosen)
            chosen.pop()
        go(i + 1, chosen)

    go(0, [])
    return best or [[]]


def q_account(g: PlaneGraph) -> QAccount:
    cycles = three_legged_cycles(g)
    dem = mark_demanding(cycles)
    for c in dem:
        classify(g, c, cycles)
    ext = g.external_face
    best = None
    for pick in _vertex_disjoint_sets(dem):
        D = [dem[i] for i in pick]
        acc = QAccount(D, [c for c in D if c.expensive], [c for c in D if ext in c.leg_faces], [c for c in D if c.short], dem, cycles)
        if best is None or acc.q > best.q:
            best = acc
    return best


def q_lower_bound(g: PlaneGraph) -> int:
    return q_account(g).q


# --- placements -----------------------------------------------------------------


@dataclass
class DummyPlacement:
    graph: PlaneGraph
    copies: tuple[dict[int, int], dict[int, int]]
    method: str = "strategy"
    notes: list[str] = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(sum(c.values()) for c in self.copies)

    def count(self, copy: int, edges) -> int:
        c = self.copies[copy]
        return sum(c.get(e, 0) for e in edges)

    def subdivided(self, copy: int):
        return self.graph.subdivide({e: k for e, k in self.copies[copy].items() if k})

    def serialize(self) -> str:
        lines = []
        for i, c in enumerate(self.copies):
            for e in sorted(c):
                if c[e]:
                    lines.append(f"dummy {i + 1} {e} {c[e]}")
        return "\n".join(lines) + ("\n" if lines else "")


def parse_placement(g: PlaneGraph, text: str) -> DummyPlacement:
    copies: tuple[dict[int, int], dict[int, int]] = ({}, {})
    for line in text.splitlines():
        parts = line.split()
        if not parts:
            continue
        if parts[0] != "dummy" or len(parts) != 4:
            raise ValueError(f"bad placement line: {line!r}")
        copies[int(parts[1]) - 1][int(parts[2])] = int(parts[3])
    return DummyPlacement(g, copies, "parsed")


def is_bad(cycle_edges, legs: int, placement: DummyPlacement, copy: int) -> bool:
    """Fewer than ``4 - legs`` dummies on the cycle in this copy."""
    return placement.count(copy, cycle_edges) < 4 - legs


def placement_problems(g: PlaneGraph, placement: DummyPlacement, cycles: list[CycleInfo] | None = None) -> list[str]:
    """Everything that keeps a copy from being drawn without bends.

    Checks the external cycle, every 3-legged cycle, and the remaining
    obstruction cycles (see :func:`obstruction_cycles`), plus disjointness.
    """
    cycles = three_legged_cycles(g) if cycles is None else cycles
    out = []
    for i in (0, 1):
        if is_bad(external_cycle(g), 0, placement, i):
            out.append(f"external cycle is bad in copy {i + 1}")
        for c in cycles:
            if is_bad(c.edges, 3, placement, i):
                out.append(f"3-legged cycle {c.id} is bad in copy {i + 1}")
        for c in obstruction_cycles(g):
            if placement.count(i, c.edges) < c.requirement:
                out.append(f"cycle {list(c.edges)} needs {c.requirement} dummies in copy {i + 1}")
    both = {e for e, k in placement.copies[0].items() if k} & {e for e, k in placement.copies[1].items() if k}
    if both:
        out.append(f"edges {sorted(both)} carry dummies in both copies")
    return sorted(set(out), key=out.index)


def copies_drawable(placement: DummyPlacement) -> tuple[bool, bool]:
    """Flow check: can each subdivided copy be drawn with no bends at all?"""
    res = []
    for i in (0, 1):
        sub, _ = placement.subdivided(i)
        res.append(straight_feasible(sub, range(sub.m)))
    return res[0], res[1]


def exact_placement(g: PlaneGraph, cycles: list[CycleInfo] | None = None) -> DummyPlacement:
    """Minimum placement as a small integer program (HiGHS via scipy).

    Constraints come from :func:`obstruction_cycles`, so an optimal
    solution is the true minimum over all placements.
    """
    import numpy as np
    from scipy.optimize import Bounds, LinearConstraint, milp

    cycles = obstruction_cycles(g) if cycles is None else cycles
    m = g.m
    # variables: a_e (copy 1), b_e (copy 2), z_e (edge may carry copy-1 dummies)
    nv = 3 * m
    cost = np.concatenate([np.ones(2 * m), np.zeros(m)])
    rows, lo, hi = [], [], []

    def row(coef):
        r = np.zeros(nv)
        for j, x in coef:
            r[j] += x
        return r

    for off in (0, m):
        for c in cycles:
            rows.append(row([(off + e, 1) for e in c.edges]))
            lo.append(c.requirement)
            hi.append(np.inf)
    for e in range(m):
        rows.append(row([(e, 1), (2 * m + e, -4)]))
        lo.append(-np.inf)
        hi.append(0)
        rows.append(row([(m + e, 1), (2 * m + e, 4)]))
        lo.append(-np.inf)
        hi.append(4)
    res = milp(
        cost,
        constraints=LinearConstraint(np.array(rows), lo, hi),
        integrality=np.ones(nv),
        bounds=Bounds(np.zeros(nv), np.concatenate([np.full(2 * m, 4), np.ones(m)])),
    )
    if not res.success:  # pragma: no cover - the program is always feasible
        raise PlacementFailed(res.message)
    x = np.rint(res.x).astype(int)
    a = {e: int(x[e]) for e in range(m) if x[e]}
    b = {e: int(x[m + e]) for e in range(m) if x[m + e]}
    return DummyPlacement(g, (a, b), "exact")


# --- the placement strategy ----------------------------------------------------------

STRATEGY_LIMIT = 20000


def _leg_for(c: CycleInfo, outer: list[CycleInfo]) -> int | None:
    """A leg of ``c`` lying on every containing non-demanding sharing cycle."""
    for e in c.legs:
        if all(e in x.edge_set for x in outer):
            return e
    return None


def _options(g: PlaneGraph, c: CycleInfo, cycles: list[CycleInfo]) -> list[tuple[dict[int, int], dict[int, int]]]:
    """Ways to spend the dummies charged to one cycle of D(G), as (copy 1, copy 2)."""
    ext = set(external_cycle(g))
    paths = c.interesting_paths()
    if c.expensive:
        (e1,) = paths[0]
        leg = _leg_for(c, _containing_sharing(c, cycles))
        if leg is None:
            raise PlacementFailed(f"expensive cycle {c.id} has no leg on all containing cycles")
        return [({e1: 1}, {e2: 1, leg: 1}) for e2 in c.edges if e2 != e1]
    long = [P for P in paths if len(P) >= 2]
    if long:
        pairs = [(e1, e2) for P in long for e1 in P for e2 in P if e1 != e2]
    else:
        # single-edge interesting paths (or none at all): the second dummy
        # may have to leave them
        first = sorted({e for P in paths for e in P}) or list(c.edges)
        pairs = [(e1, e2) for e1 in first for e2 in c.edges if e2 != e1]
        pairs.sort(key=lambda p: (p[1] not in first, p))
    pairs = sorted(set(pairs), key=lambda p: (p[0] not in ext, p[1] not in ext)) if long else pairs
    return [({e1: 1}, {e2: 1}) for e1, e2 in pairs]


def _distributions(need: int, edges: list[int]):
    """All ways to put ``need`` dummies on ``edges``, most spread out first."""
    combos = itertools.combinations_with_replacement(edges, need)
    for pick in sorted(combos, key=lambda p: (-len(set(p)), p)):
        out: dict[int, int] = {}
        for e in pick:
            out[e] = out.get(e, 0) + 1
        yield out


def _top_up(g: PlaneGraph, copies, obstructions: list[CycleInfo]):
    """Bring the external cycle to four dummies per copy, keeping copies disjoint.

    Returns the completed copies, or ``None``.
    """
    ext = list(external_cycle(g))

    def valid(i: int) -> list[dict[int, int]]:
        mine, theirs = copies[i], copies[1 - i]
        need = max(0, 4 - sum(mine.get(e, 0) for e in ext))
        free = [e for e in ext if not theirs.get(e)]
        out = []
        for add in _distributions(need, free):
            full = dict(mine)
            for e, k in add.items():
                full[e] = full.get(e, 0) + k
            if all(sum(full.get(e, 0) for e in c.edges) >= c.requirement for c in obstructions):
                out.append(full)
        return out

    first, second = valid(0), valid(1)
    for a in first:
        for b in second:
            if not set(a) & set(b):
                return a, b
    return None


def strategy_placement(g: PlaneGraph, acc: QAccount | None = None) -> DummyPlacement:
    """Dummies placed as in the tightness proof, searching the free choices.

    Each cycle of D(G) gets two dummies (three if expensive) on interesting
    contour paths; the external cycle is then topped up to four per copy.
    Raises :class:`PlacementFailed` if no choice yields ``q(G)`` dummies and
    a bad-cycle-free pair of copies.
    """
    acc = acc or q_account(g)
    obstructions = obstruction_cycles(g)
    per_cycle = [_options(g, c, acc.cycles) for c in acc.D]
    tried = 0
    for combo in itertools.product(*per_cycle):
        tried += 1
        if tried > STRATEGY_LIMIT:
            break
        copies: tuple[dict[int, int], dict[int, int]] = ({}, {})
        for pair in combo:
            for i in (0, 1):
                for e, k in pair[i].items():
                    copies[i][e] = copies[i].get(e, 0) + k
        if set(copies[0]) & set(copies[1]):
            continue
        done = _top_up(g, copies, obstructions)
        if done is None:
            continue
        pl = DummyPlacement(g, done, "strategy")
        if pl.total != acc.q:
            continue
        if all(pl.count(i, c.edges) >= c.requirement for i in (0, 1) for c in obstructions):
            return pl
    raise PlacementFailed(f"no strategy placement with q = {acc.q} dummies ({tried} choices tried)")


def place_dummies(g: PlaneGraph) -> DummyPlacement:
    """Proof-style placement, cross-checked against the exact optimum.

    Falls back (with a warning) to :func:`exact_placement` when the strategy
    fails or disagrees with the optimum; the method and reason are recorded.
    """
    check_cubic_triconnected(g)
    acc = q_account(g)
    best = exact_placement(g)
    try:
        pl = strategy_placement(g, acc)
    except PlacementFailed as exc:
        log.warning("%s: strategy failed (%s); using the exact placement with %d dummies", g.name, exc, best.total)
        best.method = "exact-fallback"
        best.notes.append(str(exc))
        return best
    if pl.total != best.total:
        log.warning("%s: strategy uses %d dummies but %d suffice; using the exact placement", g.name, pl.total, best.total)
        best.method = "exact-fallback"
        best.notes.append(f"q = {acc.q} differs from the optimum {best.total}")
        return best
    return pl


def cubic_collection(g: PlaneGraph, draw: bool = True, placement: DummyPlacement | None = None) -> UnbentCollection:
    """Two drawings; each is a bend-free drawing of one subdivided copy."""
    pl = placement or place_dummies(g)
    problems = placement_problems(g, pl)
    if problems:
        raise PlacementFailed("; ".join(problems))
    reps: list[OrthogonalRepresentation] = []
    for i in (0, 1):
        sub, chains = pl.subdivided(i)
        rep = representation_with_straight(sub, range(sub.m))
        if rep is None:
            raise PlacementFailed(f"copy {i + 1} has no bend-free drawing")
        reps.append(merge_subdivision(rep, g, chains))
    cov = {e: 0 if not pl.copies[0].get(e) else 1 for e in range(g.m)}
    return make_collection(g, reps, cov, draw)
