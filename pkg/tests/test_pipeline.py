import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pirecog import oracle
from pirecog.domination import build_context
from pirecog.graphs import Graph, StrictOrder, complement, intersect
from pirecog.pipeline import (
    NOT_BIPARTITE,
    NOT_COCOMPARABILITY,
    UNSATISFIABLE,
    is_trapezoid,
    recognize_graph,
    recognize_order,
)
from pirecog.representation import verify_representation

from support import cycle, standard_example, two_plus_two


@pytest.mark.parametrize("n", [0, 1, 2, 5, 9])
def test_complete_graphs_are_accepted(n):
    out = recognize_graph(Graph.complete(n))
    assert out.accepted
    assert verify_representation(out.representation, Graph.complete(n))


def test_c4_is_accepted():
    assert oracle.oracle_is_pi_graph(cycle(4))
    out = recognize_graph(cycle(4))
    assert out.accepted and verify_representation(out.representation, cycle(4))


def test_complement_of_c5_is_refused_early():
    g = complement(cycle(5))
    out = recognize_graph(g)
    assert not out.accepted and out.stage == NOT_COCOMPARABILITY
    assert out.to_json()["status"] == "not_pi"
    assert not oracle.oracle_is_pi_graph(g)
    assert not is_trapezoid(g)


def test_total_orders_keep_themselves_as_p1():
    for perm in itertools.permutations(range(4)):
        p = StrictOrder.chain(list(perm))
        out = recognize_order(p)
        assert out.accepted and out.realizer.P1 == p


def test_two_plus_two_is_linear_interval():
    p = two_plus_two()
    assert oracle.oracle_is_linear_interval(p)
    out = recognize_order(p)
    assert out.accepted and intersect(out.realizer.P1, out.realizer.P2) == p


def test_standard_example_of_dimension_three_is_refused():
    p = standard_example(3)
    assert not oracle.oracle_is_linear_interval(p)
    out = recognize_order(p)
    assert not out.accepted and out.stage == NOT_BIPARTITE
    assert out.witness["cycle"]
    assert not is_trapezoid(p.incomparability_graph())


def test_interval_orders_are_accepted():
    for n in range(6):
        for p in oracle.all_posets(n):
            if oracle.oracle_is_interval_order(p):
                assert recognize_order(p).accepted


def test_unsatisfiable_refusal_carries_witness():
    for s in range(400):
        p = oracle.random_poset(12, 4000 + s)
        out = recognize_order(p)
        if out.stage == UNSATISFIABLE:
            assert not oracle.sat_has_cover(build_context(p).Gtilde)
            assert out.witness["edges"]
            return
    pytest.fail("no formula-unsatisfiable instance in the sample")


def test_accepted_pi_graphs_are_trapezoid():
    for seed in range(30):
        g, _ = oracle.random_pi_instance(12, seed)
        assert recognize_graph(g).accepted and is_trapezoid(g)


def test_agrees_with_oracle_on_small_graphs():
    for n in range(5):
        for g in oracle.all_graphs(n):
            assert recognize_graph(g).accepted == oracle.oracle_is_pi_graph(g)


@settings(max_examples=150)
@given(st.integers(0, 10**6))
def test_agrees_with_oracle_on_random_six_vertex_graphs(seed):
    g = oracle.random_graph(6, 0.5, seed)
    report = oracle.oracle_pi_report(g)
    assert report.all_agree
    assert recognize_graph(g).accepted == report.verdict


@given(st.integers(0, 10**6))
def test_verdict_is_invariant_under_relabelling(seed):
    rng = random.Random(seed)
    g = oracle.random_graph(8, rng.random(), seed)
    perm = list(range(8))
    rng.shuffle(perm)
    h = Graph.from_edges(8, [(perm[a], perm[b]) for a, b in g.edges()])
    assert recognize_graph(g).accepted == recognize_graph(h).accepted


def test_timings_are_reported():
    g, _ = oracle.random_pi_instance(15, 3)
    out = recognize_graph(g)
    assert {"orientation", "conflict_graph", "formulas", "solve", "representation"} <= set(out.timings)
