import itertools

import pytest

from pirecog import oracle
from pirecog.errors import TooLarge
from pirecog.graphs import BipartiteGraph, Graph, StrictOrder, complement

from support import cycle, path, standard_example, two_plus_two


def test_enumeration_counts():
    assert sum(1 for _ in oracle.all_graphs(3)) == 8
    assert [sum(1 for _ in oracle.all_posets(n)) for n in range(6)] == [1, 1, 3, 19, 219, 4231]
    intervals = [sum(oracle.oracle_is_interval_order(p) for p in oracle.all_posets(n)) for n in range(6)]
    assert intervals == [1, 1, 3, 19, 207, 3451]


def test_enumerated_posets_are_distinct_and_valid():
    seen = set()
    for p in oracle.all_posets(4):
        key = tuple(p.succ)
        assert key not in seen
        seen.add(key)
        for a, b in p.pairs():
            assert not p.less(b, a)


def test_size_limits():
    with pytest.raises(TooLarge):
        oracle.oracle_is_pi_graph(Graph.empty(oracle.MAX_ORACLE_N + 1))
    with pytest.raises(TooLarge):
        next(oracle.all_posets(oracle.MAX_ENUM_N + 1))
    with pytest.raises(TooLarge):
        oracle.oracle_has_cover(BipartiteGraph.from_edges(5, 5, list(itertools.product(range(5), repeat=2))))


def test_linear_interval_examples():
    for n in range(3):
        assert all(oracle.oracle_is_linear_interval(p) for p in oracle.all_posets(n))
    assert oracle.oracle_is_linear_interval(StrictOrder.chain([3, 0, 2, 1]))
    assert oracle.oracle_is_linear_interval(two_plus_two())
    assert not oracle.oracle_is_linear_interval(standard_example(3))


def test_every_order_up_to_five_is_linear_interval():
    # orders of dimension at most two are linear-interval, and all orders on <= 5 elements have dimension <= 2
    for n in range(6):
        assert all(oracle.oracle_is_linear_interval(p) for p in oracle.all_posets(n))


def test_pi_graph_examples():
    assert oracle.oracle_is_pi_graph(cycle(4))
    for g in (Graph.complete(5), Graph.empty(5), path(4)):
        assert oracle.oracle_is_pi_graph(g)
    for n in range(5):
        assert all(oracle.oracle_is_pi_graph(g) for g in oracle.all_graphs(n))
    assert not oracle.oracle_is_pi_graph(complement(cycle(5)))
    assert oracle.oracle_pi_report(complement(cycle(5))).orientations == 0


def test_cover_oracle_examples():
    for n in range(2, 4):
        diag = BipartiteGraph.from_edges(n, n, [(i, i) for i in range(n)])
        assert not oracle.oracle_has_cover(diag)
        assert not oracle.sat_has_cover(diag)
    full = BipartiteGraph.from_edges(3, 3, list(itertools.product(range(3), repeat=2)))
    assert oracle.oracle_has_cover(full) and oracle.sat_has_cover(full)
    assert oracle.oracle_has_cover(BipartiteGraph.from_edges(1, 1, [(0, 0)]))


def test_cover_oracles_agree_on_small_bipartite_graphs():
    pairs = list(itertools.product(range(3), repeat=2))
    diag = [(i, i) for i in range(3)]
    free = [p for p in pairs if p[0] != p[1]]
    for mask in range(1 << len(free)):
        gt = BipartiteGraph.from_edges(3, 3, diag + [free[t] for t in range(len(free)) if mask >> t & 1])
        assert oracle.oracle_has_cover(gt) == oracle.sat_has_cover(gt)
        if oracle.oracle_has_cover(gt):
            assert oracle.oracle_has_chain_cover2(gt)


def test_alternating_cycle_helpers():
    two_k2 = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert oracle.has_ac4(two_k2)
    assert not oracle.has_ac4(two_k2, [(0, 1)])
    assert oracle.oracle_has_alternating_cycle(two_k2, [(0, 1), (2, 3)])
    ap6 = Graph.from_edges(6, [(1, 2), (3, 4), (5, 0), (2, 5), (3, 0), (4, 1)])
    t = next(oracle.alternating_6_cycles(ap6))
    assert len(set(t)) == 6
    # the AP6 edges plus two chords give a double AP6
    double = Graph.from_edges(6, [(1, 2), (3, 4), (5, 0), (0, 2), (1, 5)])
    assert oracle.find_double_ap6(double) is not None
    assert oracle.find_ap5(Graph.empty(6)) is None
    # v1..v6 = 0, 1, 2, 3, 4, 2: edges 12, 34, 20 and non-edges 01, 23, 42
    t = oracle.find_ap5(Graph.from_edges(5, [(1, 2), (3, 4), (2, 0)]))
    assert t is not None and len(set(t)) == 5


def test_brute_force_sat():
    assert oracle.brute_force_sat([]) is True
    assert oracle.brute_force_sat([(0,), (1,)]) is False
    assert oracle.brute_force_sat([(0, 2), (1, 2), (0, 3), (1, 3)]) is False
    wide = [(2 * v, 2 * v + 1, 2 * v + 2) for v in range(30)] + [(2 * v + 1, 2 * v + 3) for v in range(30)]
    assert oracle.brute_force_sat(wide, max_vars=5) is None


def test_generators_are_deterministic():
    assert oracle.random_pi_instance(12, 4) == oracle.random_pi_instance(12, 4)
    assert oracle.random_poset(9, 2) == oracle.random_poset(9, 2)
    assert oracle.random_graph(7, 0.3, 1) == oracle.random_graph(7, 0.3, 1)
    g, rep = oracle.random_pi_instance(1, 0)
    assert g.n == 1 and rep.apex == (0,)


def test_generated_families_are_pi_at_small_n():
    for seed in range(40):
        for g in (oracle.random_permutation_graph(6, seed), oracle.random_interval_graph(6, seed),
                  oracle.random_pi_instance(6, seed)[0]):
            assert oracle.oracle_is_pi_graph(g)
