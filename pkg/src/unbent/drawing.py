"""Compaction of orthogonal representations into grid drawings, and SVG output.

Compaction works on an auxiliary graph whose nodes are vertices and bends and
whose edges carry a compass direction (0=E, 1=N, 2=W, 3=S).  The outer face is
wrapped in a rectangular frame, every face is refined into rectangles by
shooting extensions from reflex corners, and x and y are then assigned by
longest-path layering over maximal vertical and horizontal segments.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from fractions import Fraction
from html import escape

from .graphcore import PlaneGraph
from .ortho import OrthogonalRepresentation

E, N, W, S = 0, 1, 2, 3
_STEP = {E: (1, 0), N: (0, 1), W: (-1, 0), S: (0, -1)}


class DrawingError(ValueError):
    pass


@dataclass(frozen=True)
class Drawing:
    """Integer coordinates for vertices and a polyline per edge.

    ``polylines[e]`` runs from ``edges[e][0]`` to ``edges[e][1]`` and includes
    both endpoints; interior points are bends.
    """

    graph: PlaneGraph
    points: tuple[tuple[int, int], ...]
    polylines: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def width(self) -> int:
        return max(x for pl in self.polylines for x, _ in pl) if self.polylines else 0

    @property
    def height(self) -> int:
        return max(y for pl in self.polylines for _, y in pl) if self.polylines else 0

    def bends(self, e: int) -> int:
        return len(self.polylines[e]) - 2


class _Ortho:
    """Mutable direction-labelled plane graph used during compaction."""

    def __init__(self):
        self.slots: list[dict[int, int]] = []  # node -> {direction: neighbour}

    def node(self) -> int:
        self.slots.append({})
        return len(self.slots) - 1

    def link(self, a: int, b: int, d: int) -> None:
        if d in self.slots[a] or (d + 2) % 4 in self.slots[b]:
            raise DrawingError("two segments leave a node in the same direction")
        self.slots[a][d] = b
        self.slots[b][(d + 2) % 4] = a

    def unlink(self, a: int, d: int) -> int:
        b = self.slots[a].pop(d)
        del self.slots[b][(d + 2) % 4]
        return b

    def next_dir(self, x: int, heading: int) -> int:
        """Leaving direction after arriving at ``x`` moving in ``heading`` (face on the left)."""
        back = (heading + 2) % 4
        for k in range(1, 5):
            d = (back - k) % 4
            if d in self.slots[x]:
                return d
        raise AssertionError("isolated node")

    def faces(self) -> list[list[tuple[int, int]]]:
        """Face walks as lists of (node, outgoing direction)."""
        seen = set()
        out = []
        for a in range(len(self.slots)):
            for d in self.slots[a]:
                if (a, d) in seen:
                    continue
                walk = []
                x, h = a, d
                while (x, h) not in seen:
                    seen.add((x, h))
                    walk.append((x, h))
                    y = self.slots[x][h]
                    x, h = y, self.next_dir(y, h)
                out.append(walk)
        return out


def _turn(h: int, h2: int) -> int:
    t = (h2 - h) % 4
    return {0: 0, 1: 1, 3: -1, 2: -2}[t]


def _walk_turns(walk):
    return [_turn(walk[i][1], walk[(i + 1) % len(walk)][1]) for i in range(len(walk))]


def _directions(rep: OrthogonalRepresentation) -> list[int]:
    """Absolute direction of every out-dart, found by propagation."""
    g = rep.graph
    dirs = [None] * (2 * g.m)
    start = g.out_dart(g.rotation[0][0], 0)
    dirs[start] = E
    queue = deque([0])
    seen = {0}

    def spread(v, d0):
        rot = g.rotation[v]
        i = g.rotation_index(v, d0 >> 1)
        d, cur = d0, dirs[d0]
        for k in range(1, len(rot)):
            cur = (cur + rep.angles[d]) % 4
            d = g.out_dart(rot[(i + k) % len(rot)], v)
            if dirs[d] is None:
                dirs[d] = cur
            elif dirs[d] != cur:
                raise DrawingError(f"inconsistent angles at vertex {v}")

    spread(0, start)
    while queue:
        v = queue.popleft()
        for e in g.rotation[v]:
            d = g.out_dart(e, v)
            h = dirs[d]
            for c in rep.bend_string(d):
                h = (h + (1 if c == "L" else -1)) % 4
            w = g.head(d)
            back = d ^ 1
            want = (h + 2) % 4
            if dirs[back] is None:
                dirs[back] = want
            elif dirs[back] != want:
                raise DrawingError(f"inconsistent bends on edge {e}")
            if w not in seen:
                seen.add(w)
                spread(w, back)
                queue.append(w)
    return dirs


def _build(rep: OrthogonalRepresentation):
    g = rep.graph
    dirs = _directions(rep)
    og = _Ortho()
    for _ in range(g.n):
        og.node()
    chains = []
    for e, (u, v) in enumerate(g.edges):
        h = dirs[2 * e]
        x = u
        chain = [u]
        for c in rep.bends[e]:
            y = og.node()
            og.link(x, y, h)
            chain.append(y)
            x = y
            h = (h + (1 if c == "L" else -1)) % 4
        og.link(x, v, h)
        chain.append(v)
        chains.append(chain)
    return og, chains


def _add_frame(og: _Ortho) -> set[int]:
    walks = og.faces()
    outer = [w for w in walks if sum(_walk_turns(w)) == -4]
    if len(outer) != 1:
        raise DrawingError("representation has no unique outer face")
    walk = outer[0]
    turns = _walk_turns(walk)
    for i, t in enumerate(turns):
        if t <= 0:
            x = og.slots[walk[i][0]][walk[i][1]]
            h = walk[i][1]
            break
    else:
        raise AssertionError("outer face without a non-convex corner")
    beta = (h + 1) % 4
    sw, se, ne, nw = (og.node() for _ in range(4))
    sides = {S: (sw, se, E), E: (se, ne, N), N: (ne, nw, W), W: (nw, sw, S)}
    p = og.node()
    for side, (a, b, d) in sides.items():
        if side == beta:
            og.link(a, p, d)
            og.link(p, b, d)
        else:
            og.link(a, b, d)
    og.link(x, p, beta)
    return {sw, se, ne, nw, p}


def _refine(og: _Ortho) -> None:
    """Split faces until every inner face is a rectangle."""
    while True:
        changed = False
        for walk in og.faces():
            turns = _walk_turns(walk)
            if sum(turns) != 4:
                continue
            L = len(walk)
            for i, t in enumerate(turns):
                if t >= 0:
                    continue
                s = 0
                k = 0
                while s != 1:
                    s += turns[(i + k) % L]
                    k += 1
                a, hd = walk[(i + k) % L]
                v = og.slots[walk[i][0]][walk[i][1]]
                h = walk[i][1]
                b = og.unlink(a, hd)
                p = og.node()
                og.link(a, p, hd)
                og.link(p, b, hd)
                og.link(v, p, h)
                changed = True
                break
            if changed:
                break
        if not changed:
            return


def _layer(og: _Ortho, axis_dirs: tuple[int, int]) -> list[int]:
    """Longest-path coordinate along one axis.

    ``axis_dirs = (pos, neg)``: segments in the perpendicular direction tie
    nodes into classes; segments along ``pos`` force a strict increase.
    """
    pos, _ = axis_dirs
    n = len(og.slots)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    perp = {(pos + 1) % 4, (pos + 3) % 4}
    for a in range(n):
        for d, b in og.slots[a].items():
            if d in perp:
                parent[find(a)] = find(b)
    succ = defaultdict(set)
    indeg = defaultdict(int)
    for a in range(n):
        b = og.slots[a].get(pos)
        if b is not None:
            ra, rb = find(a), find(b)
            if ra == rb:
                raise DrawingError("segment classes contradict directions")
            if rb not in succ[ra]:
                succ[ra].add(rb)
                indeg[rb] += 1
    roots = {find(a) for a in range(n)}
    level = {r: 0 for r in roots}
    queue = deque(sorted(r for r in roots if indeg[r] == 0))
    done = 0
    while queue:
        r = queue.popleft()
        done += 1
        for s in sorted(succ[r]):
            level[s] = max(level[s], level[r] + 1)
            indeg[s] -= 1
            if indeg[s] == 0:
                queue.append(s)
    if done != len(roots):
        raise DrawingError("cyclic layering constraints")
    return [level[find(a)] for a in range(n)]


def compact(rep: OrthogonalRepresentation) -> Drawing:
    """A planar grid drawing realising ``rep`` (lengths are not optimised)."""
    g = rep.graph
    og, chains = _build(rep)
    _add_frame(og)
    _refine(og)
    xs = _layer(og, (E, W))
    ys = _layer(og, (N, S))
    used = sorted({c for chain in chains for c in chain})
    xr = {x: i for i, x in enumerate(sorted({xs[c] for c in used}))}
    yr = {y: i for i, y in enumerate(sorted({ys[c] for c in used}))}
    pt = lambda c: (xr[xs[c]], yr[ys[c]])  # noqa: E731
    points = tuple(pt(v) for v in range(g.n))
    polylines = tuple(tuple(pt(c) for c in chain) for chain in chains)
    return Drawing(g, points, polylines)


# --- validation -------------------------------------------------------------


def _dir(p, q) -> int:
    dx, dy = q[0] - p[0], q[1] - p[1]
    if dx and dy or not (dx or dy):
        raise DrawingError(f"segment {p}-{q} is not axis-parallel or is degenerate")
    if dx:
        return E if dx > 0 else W
    return N if dy > 0 else S


def _on_segment(p, a, b) -> bool:
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def _intersection(a, b, c, d):
    """Set of common points of two axis-parallel segments (None/point/'overlap')."""
    ha, hc = a[1] == b[1], c[1] == d[1]
    if ha == hc:
        same_line = (a[1] == c[1]) if ha else (a[0] == c[0])
        if not same_line:
            return None
        k = 0 if ha else 1
        lo = max(min(a[k], b[k]), min(c[k], d[k]))
        hi = min(max(a[k], b[k]), max(c[k], d[k]))
        if lo > hi:
            return None
        if lo < hi:
            return "overlap"
        return (lo, a[1]) if ha else (a[0], lo)
    if not ha:
        a, b, c, d = c, d, a, b
    p = (c[0], a[1])
    return p if _on_segment(p, a, b) and _on_segment(p, c, d) else None


def validate_drawing(drawing: Drawing, rep: OrthogonalRepresentation | None = None) -> None:
    """Raise :class:`DrawingError` unless the drawing is a faithful planar orthogonal drawing.

    Checks axis-parallel segments, distinct vertex positions, that segments
    meet only at shared vertices or consecutive bends, that the rotation read
    from the geometry equals the embedding, that the external face is drawn
    clockwise outside, and (with ``rep``) that angles and bends match.
    """
    g = drawing.graph
    if len(set(drawing.points)) != g.n:
        raise DrawingError("two vertices share a point")
    segs = []
    for e, pl in enumerate(drawing.polylines):
        u, v = g.edges[e]
        if pl[0] != drawing.points[u] or pl[-1] != drawing.points[v]:
            raise DrawingError(f"edge {e} does not join its endpoints")
        for i in range(len(pl) - 1):
            _dir(pl[i], pl[i + 1])
            segs.append((e, i, pl[i], pl[i + 1]))
        for i in range(1, len(pl) - 1):
            if _dir(pl[i - 1], pl[i]) % 2 == _dir(pl[i], pl[i + 1]) % 2:
                raise DrawingError(f"edge {e} has a degenerate bend")
    vpos = {p: v for v, p in enumerate(drawing.points)}
    for e, pl in enumerate(drawing.polylines):
        for p in pl[1:-1]:
            if p in vpos:
                raise DrawingError(f"bend of edge {e} sits on a vertex")
    # planarity (quadratic; fine at the sizes we draw)
    for i in range(len(segs)):
        e1, k1, a, b = segs[i]
        for j in range(i + 1, len(segs)):
            e2, k2, c, d = segs[j]
            x = _intersection(a, b, c, d)
            if x is None:
                continue
            if x == "overlap":
                raise DrawingError(f"edges {e1} and {e2} overlap")
            if e1 == e2 and abs(k1 - k2) == 1:
                shared = b if k2 == k1 + 1 else a
                if x == shared:
                    continue
            if x in vpos and e1 != e2 and x in (a, b) and x in (c, d):
                v = vpos[x]
                if v in g.edges[e1] and v in g.edges[e2]:
                    continue
            raise DrawingError(f"edges {e1} and {e2} cross at {x}")
    # rotation and angles
    for v in range(g.n):
        rot = g.rotation[v]
        ds = []
        for e in rot:
            pl = drawing.polylines[e]
            first = pl[1] if g.edges[e][0] == v else pl[-2]
            ds.append(_dir(drawing.points[v], first))
        if len(set(ds)) != len(ds):
            raise DrawingError(f"two edges leave vertex {v} in the same direction")
        for i, e in enumerate(rot):
            gap = (ds[(i + 1) % len(ds)] - ds[i]) % 4 or 4
            if len(rot) > 1 and sum(((ds[(j + 1) % len(ds)] - ds[j]) % 4 or 4) for j in range(len(ds))) != 4:
                raise DrawingError(f"rotation at vertex {v} differs from the embedding")
            if rep is not None and gap != rep.angles[g.out_dart(e, v)]:
                raise DrawingError(f"angle at vertex {v} differs from the representation")
    if rep is not None:
        for e, pl in enumerate(drawing.polylines):
            s = []
            for i in range(1, len(pl) - 1):
                t = _turn(_dir(pl[i - 1], pl[i]), _dir(pl[i], pl[i + 1]))
                s.append("L" if t == 1 else "R")
            if "".join(s) != rep.bends[e]:
                raise DrawingError(f"bends of edge {e} differ from the representation")
    # external face orientation
    for f in g.faces:
        poly = []
        for d in f.darts:
            pl = drawing.polylines[d >> 1]
            poly.extend(pl[:-1] if not d & 1 else pl[::-1][:-1])
        area = sum(Fraction(poly[i][0] * poly[(i + 1) % len(poly)][1] - poly[(i + 1) % len(poly)][0] * poly[i][1]) for i in range(len(poly)))
        if f.is_external and area > 0 or not f.is_external and area <= 0:
            raise DrawingError(f"face {f.id} has the wrong orientation")


# --- SVG --------------------------------------------------------------------


def render_svg(drawing: Drawing, straight=(), scale: int = 40, margin: int = 20, title: str = "") -> str:
    """SVG 1.1 text; edges in ``straight`` are red, the others blue."""
    straight = set(straight)
    w = drawing.width * scale + 2 * margin
    h = drawing.height * scale + 2 * margin
    top = drawing.height

    def xy(p):
        return f"{p[0] * scale + margin},{(top - p[1]) * scale + margin}"

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
    ]
    if title:
        out.append(f"  <title>{escape(title)}</title>")
    for e, pl in enumerate(drawing.polylines):
        color = "red" if e in straight else "blue"
        pts = " ".join(xy(p) for p in pl)
        out.append(f'  <polyline data-edge="{e}" points="{pts}" fill="none" stroke="{color}" stroke-width="3"/>')
    for v, p in enumerate(drawing.points):
        cx, cy = xy(p).split(",")
        out.append(f'  <circle data-vertex="{v}" cx="{cx}" cy="{cy}" r="6" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
