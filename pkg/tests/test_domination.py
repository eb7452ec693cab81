from hypothesis import given
from hypothesis import strategies as st

from pirecog import oracle
from pirecog.domination import build_context, domination_graph, nc_graph
from pirecog.graphs import EdgeKind, StrictOrder, clique, cross, is_chain_graph


def test_domination_graph_examples():
    assert sorted(domination_graph(StrictOrder.chain([0, 1, 2])).edges()) == [(0, 1), (0, 2), (1, 2)]
    assert domination_graph(StrictOrder.antichain(3)).edge_count == 0
    assert domination_graph(StrictOrder.from_pairs(3, [(0, 1)])).edges() == [(0, 1)]


def test_nc_graph_examples():
    assert sorted(nc_graph(StrictOrder.chain([0, 1])).edges()) == [(0, 0), (0, 1), (1, 1)]
    assert sorted(nc_graph(StrictOrder.antichain(2)).edges()) == [(0, 0), (1, 1)]
    assert nc_graph(StrictOrder.chain([0, 1, 2])).edge_count == 6


def test_context_of_antichain_pair():
    ctx = build_context(StrictOrder.antichain(2))
    assert ctx.Gtilde.edge_count == 4
    kinds = [e.kind for e in ctx.H.edges()]
    assert kinds.count(EdgeKind.CROSS) == 4 and kinds.count(EdgeKind.CLIQUE) == 1
    assert ctx.H.has(clique(0, 1))


def test_context_of_two_chain():
    ctx = build_context(StrictOrder.chain([0, 1]))
    assert sorted(ctx.Gtilde.edges()) == [(0, 0), (1, 0), (1, 1)]
    assert ctx.E0.members == frozenset({cross(0, 0), cross(1, 1)})
    assert (ctx.n, ctx.m) == (2, 1)


def test_gtilde_size_is_n_squared_minus_m():
    ctx = build_context(StrictOrder.from_pairs(3, [(0, 1)]))
    assert ctx.Gtilde.edge_count == 8


@given(st.integers(0, 100_000), st.integers(0, 12))
def test_context_invariants(seed, n):
    p = oracle.random_poset(n, seed)
    ctx = build_context(p)
    assert ctx.m == p.size
    assert ctx.Gtilde.edge_count == n * n - ctx.m
    # the diagonal is always in G~ since i < i never holds
    assert all(ctx.Gtilde.has_edge(i, i) for i in range(n))
    assert ctx.H.edge_count == ctx.Gtilde.edge_count + n * (n - 1) // 2


@given(st.integers(0, 100_000), st.integers(0, 7))
def test_domination_graph_is_chain_iff_interval_order(seed, n):
    p = oracle.random_poset(n, seed)
    assert is_chain_graph(domination_graph(p)) == oracle.oracle_is_interval_order(p)
