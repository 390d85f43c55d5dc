import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from unbent.flow import Flow, FlowNetwork, MalformedNetwork, brute_force_min_cost, check_feasible, check_flow, solve_min_cost


def _network(draw, max_nodes=5, max_arcs=8):
    k = draw(st.integers(min_value=2, max_value=max_nodes))
    net = FlowNetwork()
    demands = [draw(st.integers(min_value=-3, max_value=3)) for _ in range(k - 1)]
    demands.append(-sum(demands))
    for d in demands:
        net.add_node(d)
    for _ in range(draw(st.integers(min_value=1, max_value=max_arcs))):
        u = draw(st.integers(min_value=0, max_value=k - 1))
        v = draw(st.integers(min_value=0, max_value=k - 1))
        if u == v:
            continue
        net.add_arc(u, v, 0, draw(st.integers(min_value=0, max_value=4)), draw(st.integers(min_value=0, max_value=5)))
    return net


networks = st.composite(_network)


def _networkx_cost(net: FlowNetwork):
    """Reference via networkx network simplex (parallel arcs split by a midpoint)."""
    G = nx.DiGraph()
    for i, node_demand in enumerate(net.demand):
        # both use demand = inflow - outflow
        G.add_node(i, demand=node_demand)
    for j, a in enumerate(net.arcs):
        mid = ("arc", j)
        G.add_node(mid, demand=0)
        G.add_edge(a.tail, mid, capacity=a.cap, weight=a.cost)
        G.add_edge(mid, a.head, capacity=a.cap, weight=0)
    try:
        return nx.min_cost_flow_cost(G)
    except nx.NetworkXUnfeasible:
        return None


@given(networks())
@settings(max_examples=150)
def test_min_cost_matches_networkx(net):
    ours = solve_min_cost(net)
    ref = _networkx_cost(net)
    if ref is None:
        assert ours is None
        assert not check_feasible(net)
    else:
        assert ours is not None and ours.cost == ref
        check_flow(net, ours)
        assert check_feasible(net)


@given(networks(max_nodes=4, max_arcs=5))
@settings(max_examples=60)
def test_min_cost_matches_enumeration(net):
    ours = solve_min_cost(net)
    ref = brute_force_min_cost(net)
    assert (ours.cost if ours else None) == ref


def test_small_example():
    net = FlowNetwork()
    s, a, t = net.add_node(-2), net.add_node(0), net.add_node(2)
    net.add_arc(s, t, 0, 1, 5)
    net.add_arc(s, a, 0, 2, 1)
    net.add_arc(a, t, 0, 2, 1)
    flow = solve_min_cost(net)
    assert flow.cost == 4
    assert flow.values == (0, 2, 2)


def test_infeasible():
    net = FlowNetwork()
    s, t = net.add_node(-3), net.add_node(3)
    net.add_arc(s, t, 0, 2, 1)
    assert solve_min_cost(net) is None
    assert not check_feasible(net)


def test_unbalanced_rejected():
    net = FlowNetwork()
    net.add_node(1)
    net.add_node(0)
    net.add_arc(0, 1, 0, 1, 0)
    with pytest.raises(MalformedNetwork):
        net.validate()


def test_check_flow_catches_violations():
    net = FlowNetwork()
    s, t = net.add_node(-1), net.add_node(1)
    net.add_arc(s, t, 0, 1, 0)
    with pytest.raises(AssertionError):
        check_flow(net, Flow((2,), 0))
    with pytest.raises(AssertionError):
        check_flow(net, Flow((0,), 0))
