import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pirecog import oracle
from pirecog.cover import LinearIntervalCover
from pirecog.domination import build_context
from pirecog.errors import InputError, NotIntervalOrder
from pirecog.graphs import Graph, StrictOrder, complement, intersect
from pirecog.orientation import transitive_orientation
from pirecog.pipeline import recognize_order
from pirecog.representation import (
    PiRepresentation,
    RealizerPair,
    build_representation,
    interval_realization,
    left_order,
    orders_from_cover,
    represented_graph,
    verify_representation,
)

from support import two_plus_two


def test_orders_from_trivial_cover():
    ctx = build_context(StrictOrder.antichain(1))
    rp = orders_from_cover(ctx, LinearIntervalCover(frozenset(), frozenset({(0, 0)})))
    assert rp.P1.n == 1 and rp.P2.size == 0
    assert rp.order() == ctx.P


def test_orders_from_antichain_cover():
    ctx = build_context(StrictOrder.antichain(2))
    rp = orders_from_cover(ctx, LinearIntervalCover(frozenset(), frozenset(itertools.product(range(2), repeat=2))))
    assert rp.P2.size == 0
    # P1 reverses the smallest-first extension 0 < 1 of the empty relation
    assert rp.P1 == StrictOrder.chain([1, 0])
    assert rp.order() == StrictOrder.antichain(2)


def test_two_chain_realizer():
    out = recognize_order(StrictOrder.chain([0, 1]))
    rp = out.realizer
    assert rp.P1.less(0, 1) and rp.P2.less(0, 1)
    assert intersect(rp.P1, rp.P2) == StrictOrder.chain([0, 1])


def test_realizer_pair_validation():
    with pytest.raises(InputError):
        RealizerPair(StrictOrder.antichain(2), StrictOrder.antichain(2))
    with pytest.raises(InputError):
        RealizerPair(StrictOrder.chain([0, 1, 2, 3]), two_plus_two())
    with pytest.raises(InputError):
        RealizerPair(StrictOrder.chain([0, 1]), StrictOrder.antichain(3))


def test_interval_realization_examples():
    assert interval_realization(StrictOrder.chain([0, 1])) == [(0, 0), (1, 1)]
    assert interval_realization(StrictOrder.antichain(2)) == [(0, 0), (0, 0)]
    with pytest.raises(NotIntervalOrder):
        interval_realization(two_plus_two())


def test_interval_realization_on_all_small_interval_orders():
    for n in range(6):
        for p in oracle.all_posets(n):
            if oracle.oracle_is_interval_order(p):
                ivs = interval_realization(p)
                for (x, (lx, rx)), (y, (ly, _)) in itertools.product(enumerate(ivs), repeat=2):
                    assert lx <= rx
                    assert p.less(x, y) == (rx < ly)
            else:
                with pytest.raises(NotIntervalOrder):
                    interval_realization(p)


def test_single_triangle():
    rep = build_representation(RealizerPair(StrictOrder.chain([0]), StrictOrder.antichain(1)))
    assert rep.apex == (0,) and rep.intervals == ((0, 1),)


def test_chain_realizer_puts_first_triangle_left():
    c = StrictOrder.chain([0, 1])
    rep = build_representation(RealizerPair(c, c))
    assert rep.left_of(0, 1) and not rep.left_of(1, 0)
    assert represented_graph(rep) == Graph.empty(2)


def test_adjacency_from_geometry():
    separated = PiRepresentation((0, 1), ((0, 1), (2, 3)))
    assert represented_graph(separated) == Graph.empty(2)
    overlapping = PiRepresentation((0, 1), ((0, 2), (1, 3)))
    assert represented_graph(overlapping) == Graph.complete(2)
    crossing = PiRepresentation((1, 0), ((0, 1), (2, 3)))
    assert represented_graph(crossing) == Graph.complete(2)


def test_representation_validation():
    with pytest.raises(InputError):
        PiRepresentation((0, 0), ((0, 1), (2, 3)))
    with pytest.raises(InputError):
        PiRepresentation((0, 1), ((1, 0), (2, 3)))
    with pytest.raises(InputError):
        PiRepresentation((0, 1), ((0, 2), (2, 3)))
    with pytest.raises(InputError):
        PiRepresentation((0,), ())
    with pytest.raises(InputError):
        PiRepresentation.from_json({"points": [0]})
    with pytest.raises(InputError):
        verify_representation(PiRepresentation((0,), ((0, 1),)), Graph.empty(2))


def test_json_round_trip():
    rep = PiRepresentation((1, 0, 2), ((0, 3), (1, 2), (4, 5)))
    assert PiRepresentation.from_json(rep.to_json()) == rep


@given(st.integers(0, 100_000), st.integers(1, 20))
def test_generated_instances_round_trip(seed, n):
    g, rep = oracle.random_pi_instance(n, seed)
    assert verify_representation(rep, g)
    assert left_order(rep).incomparability_graph() == g


def test_round_trip_at_twenty():
    for seed in range(25):
        g, _ = oracle.random_pi_instance(20, seed)
        out = recognize_order(transitive_orientation(complement(g)))
        assert out.accepted
        assert verify_representation(out.representation, g)
