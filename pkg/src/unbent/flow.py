"""Integer min-cost flow with node demands and arc lower bounds.

Demands follow the inverted convention used throughout the package: the
demand of a node is ``inflow - outflow``, so positive demand consumes flow and
negative demand supplies it.  All arithmetic is integral.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Hashable


class MalformedNetwork(ValueError):
    pass


@dataclass(frozen=True)
class Arc:
    tail: int
    head: int
    lower: int
    cap: int
    cost: int
    tag: Hashable = None


@dataclass
class FlowNetwork:
    demand: list[int] = field(default_factory=list)
    arcs: list[Arc] = field(default_factory=list)
    labels: list[Any] = field(default_factory=list)

    @property
    def num_nodes(self) -> int:
        return len(self.demand)

    def add_node(self, demand: int = 0, label: Any = None) -> int:
        self.demand.append(demand)
        self.labels.append(label)
        return len(self.demand) - 1

    def add_arc(self, tail: int, head: int, lower: int = 0, cap: int = 0, cost: int = 0, tag: Hashable = None) -> int:
        self.arcs.append(Arc(tail, head, lower, cap, cost, tag))
        return len(self.arcs) - 1

    def without_arcs(self, drop) -> "FlowNetwork":
        """Copy with the arcs whose index is in ``drop`` set to capacity 0."""
        arcs = [Arc(a.tail, a.head, 0, 0, a.cost, a.tag) if i in drop else a for i, a in enumerate(self.arcs)]
        return FlowNetwork(list(self.demand), arcs, list(self.labels))

    def with_caps(self, caps: dict[int, int]) -> "FlowNetwork":
        arcs = [Arc(a.tail, a.head, min(a.lower, caps[i]), caps[i], a.cost, a.tag) if i in caps else a for i, a in enumerate(self.arcs)]
        return FlowNetwork(list(self.demand), arcs, list(self.labels))

    def validate(self) -> None:
        if sum(self.demand) != 0:
            raise MalformedNetwork(f"demands sum to {sum(self.demand)}, not 0")
        for i, a in enumerate(self.arcs):
            if a.lower < 0 or a.lower > a.cap or a.cost < 0:
                raise MalformedNetwork(f"arc {i} has invalid bounds or cost: {a}")
            if not (0 <= a.tail < self.num_nodes and 0 <= a.head < self.num_nodes):
                raise MalformedNetwork(f"arc {i} references a missing node")

    def dump(self) -> str:
        """Line-oriented text form, stable for goldens."""
        lines = [f"nodes {self.num_nodes}"]
        for v, d in enumerate(self.demand):
            label = self.labels[v] if v < len(self.labels) else None
            lines.append(f"node {v} demand {d}" + (f" {label}" if label is not None else ""))
        for i, a in enumerate(self.arcs):
            lines.append(f"arc {i} {a.tail}->{a.head} lower {a.lower} cap {a.cap} cost {a.cost}" + (f" {a.tag}" if a.tag is not None else ""))
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Flow:
    values: tuple[int, ...]
    cost: int

    def __getitem__(self, arc: int) -> int:
        return self.values[arc]


def check_flow(net: FlowNetwork, flow: Flow) -> None:
    """Raise ``AssertionError`` unless ``flow`` satisfies bounds and balance."""
    bal = [0] * net.num_nodes
    cost = 0
    for a, x in zip(net.arcs, flow.values):
        assert a.lower <= x <= a.cap, f"arc {a} carries {x}"
        bal[a.head] += x
        bal[a.tail] -= x
        cost += x * a.cost
    assert bal == list(net.demand), "node balance violated"
    assert cost == flow.cost, "cost mismatch"


class _Residual:
    """Residual graph after shipping lower bounds, with super source/sink."""

    def __init__(self, net: FlowNetwork):
        net.validate()
        n = net.num_nodes
        self.s, self.t = n, n + 1
        self.to: list[int] = []
        self.cap: list[int] = []
        self.cost: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(n + 2)]
        self.arc_index: list[int] = []
        demand = list(net.demand)
        for a in net.arcs:
            demand[a.tail] += a.lower
            demand[a.head] -= a.lower
            self.arc_index.append(self._add(a.tail, a.head, a.cap - a.lower, a.cost))
        self.need = 0
        for v, d in enumerate(demand):
            if d < 0:
                self._add(self.s, v, -d, 0)
                self.need -= d
            elif d > 0:
                self._add(v, self.t, d, 0)
        self.n = n + 2
        self.net = net

    def _add(self, u: int, v: int, cap: int, cost: int) -> int:
        i = len(self.to)
        self.to += [v, u]
        self.cap += [cap, 0]
        self.cost += [cost, -cost]
        self.adj[u].append(i)
        self.adj[v].append(i + 1)
        return i

    def values(self) -> tuple[int, ...]:
        return tuple(a.lower + self.cap[i ^ 1] for a, i in zip(self.net.arcs, self.arc_index))

    def max_flow(self) -> int:
        total = 0
        while True:
            parent = [-1] * self.n
            parent[self.s] = -2
            q = deque([self.s])
            while q and parent[self.t] == -1:
                u = q.popleft()
                for i in self.adj[u]:
                    if self.cap[i] > 0 and parent[self.to[i]] == -1:
                        parent[self.to[i]] = i
                        q.append(self.to[i])
            if parent[self.t] == -1:
                return total
            push = None
            v = self.t
            while v != self.s:
                i = parent[v]
                push = self.cap[i] if push is None else min(push, self.cap[i])
                v = self.to[i ^ 1]
            v = self.t
            while v != self.s:
                i = parent[v]
                self.cap[i] -= push
                self.cap[i ^ 1] += push
                v = self.to[i ^ 1]
            total += push

    def min_cost_flow(self) -> int:
        """Successive shortest paths with Dijkstra on reduced costs."""
        INF = float("inf")
        pot = [0] * self.n
        total = 0
        while total < self.need:
            dist = [INF] * self.n
            prev = [-1] * self.n
            dist[self.s] = 0
            heap = [(0, self.s)]
            while heap:
                d, u = heapq.heappop(heap)
                if d > dist[u]:
                    continue
                for i in self.adj[u]:
                    if self.cap[i] <= 0:
                        continue
                    v = self.to[i]
                    nd = d + self.cost[i] + pot[u] - pot[v]
                    if nd < dist[v]:
                        dist[v] = nd
                        prev[v] = i
                        heapq.heappush(heap, (nd, v))
            if dist[self.t] == INF:
                break
            far = max(d for d in dist if d < INF)
            for v in range(self.n):
                pot[v] += dist[v] if dist[v] < INF else far
            push = self.need - total
            v = self.t
            while v != self.s:
                i = prev[v]
                push = min(push, self.cap[i])
                v = self.to[i ^ 1]
            v = self.t
            while v != self.s:
                i = prev[v]
                self.cap[i] -= push
                self.cap[i ^ 1] += push
                v = self.to[i ^ 1]
            total += push
        return total


def solve_min_cost(net: FlowNetwork) -> Flow | None:
    """Minimum-cost feasible flow, or ``None`` when no feasible flow exists.

    Raises :class:`MalformedNetwork` if demands do not sum to zero.
    """
    res = _Residual(net)
    if res.min_cost_flow() < res.need:
        return None
    values = res.values()
    return Flow(values, sum(x * a.cost for x, a in zip(values, net.arcs)))


def check_feasible(net: FlowNetwork) -> bool:
    res = _Residual(net)
    return res.max_flow() == res.need


def brute_force_min_cost(net: FlowNetwork, max_value: int = 4) -> int | None:
    """Exhaustive minimum over integer flows with every arc value <= ``max_value``.

    Only for tiny networks; used as an independent oracle in tests.
    """
    import itertools

    net.validate()
    ranges = [range(a.lower, min(a.cap, max_value) + 1) for a in net.arcs]
    best = None
    for vals in itertools.product(*ranges):
        bal = [0] * net.num_nodes
        for a, x in zip(net.arcs, vals):
            bal[a.head] += x
            bal[a.tail] -= x
        if bal == list(net.demand):
            c = sum(x * a.cost for a, x in zip(net.arcs, vals))
            if best is None or c < best:
                best = c
    return best
