"""From a cover to a linear order P1 and an interval order P2, and from those to triangles.

A representation puts the apex of every triangle on an upper line L1 and its
base interval on a lower line L2.  Two triangles are disjoint iff one lies
entirely to the left of the other, i.e. both its apex and its whole interval
come first.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cover import LinearIntervalCover
from .domination import DominationContext, domination_graph
from .errors import CyclicRelation, InputError, InternalContradiction, NotIntervalOrder
from .graphs import Graph, StrictOrder, full_mask, intersect, inverse, is_chain_graph, linear_extension


@dataclass(frozen=True)
class RealizerPair:
    P1: StrictOrder
    P2: StrictOrder

    def __post_init__(self):
        if self.P1.n != self.P2.n:
            raise InputError("realizer orders differ in size")
        if not self.P1.is_total():
            raise InputError("P1 must be a total order")
        if not is_chain_graph(domination_graph(self.P2)):
            raise InputError("P2 must be an interval order")

    def order(self) -> StrictOrder:
        return intersect(self.P1, self.P2)


def orders_from_cover(ctx: DominationContext, c: LinearIntervalCover) -> RealizerPair:
    n = ctx.n
    full = full_mask(n)
    b1, b2 = c.bipartite(n)
    try:
        P2 = StrictOrder(n, tuple(full & ~row & ~(1 << i) for i, row in enumerate(b2.rows)))
    except InputError as exc:
        raise InternalContradiction(f"complement of E2 is not an order: {exc}") from None
    q1 = {(i, j) for i, j in c.E1 if i != j}
    # Q2 is the reverse of P itself
    q2 = {(j, i) for i, j in ctx.P.pairs()}
    try:
        Q0 = linear_extension(q1 | q2, n)
    except CyclicRelation as exc:
        raise InternalContradiction(f"Q1 and Q2 have no common linear extension: {exc}") from None
    rp = RealizerPair(inverse(Q0), P2)
    if rp.order() != ctx.P:
        raise InternalContradiction("P1 and P2 do not intersect to P")
    return rp


def interval_realization(p2: StrictOrder) -> list[tuple[int, int]]:
    """Integer intervals with x < y iff the interval of x ends before the one of y starts.

    The left end of x is the rank of its down-set among all distinct
    down-sets, the right end the rank of its up-set among the distinct
    up-sets listed from largest to smallest.
    """
    n = p2.n
    downs = sorted(set(p2.pred), key=int.bit_count)
    ups = sorted(set(p2.succ), key=int.bit_count, reverse=True)
    for chain, rows in ((downs, p2.pred), (ups, p2.succ)):
        for a, b in zip(chain, chain[1:]):
            small, big = (a, b) if a.bit_count() <= b.bit_count() else (b, a)
            if small & ~big:
                x, y = rows.index(a), rows.index(b)
                raise NotIntervalOrder((x, y))
    lrank = {d: t for t, d in enumerate(downs)}
    rrank = {u: t for t, u in enumerate(ups)}
    ivs = [(lrank[p2.pred[x]], rrank[p2.succ[x]]) for x in range(n)]
    _check_intervals(p2, ivs)
    return ivs


def _check_intervals(p2: StrictOrder, ivs):
    for x, (lx, rx) in enumerate(ivs):
        if lx > rx:
            raise InternalContradiction(f"interval of {x} is reversed: {ivs[x]}")
        for y, (ly, _) in enumerate(ivs):
            if p2.less(x, y) != (rx < ly):
                raise InternalContradiction(f"intervals disagree with the order on ({x}, {y})")


@dataclass(frozen=True)
class PiRepresentation:
    """``apex[x]`` is the position of x's apex on L1; ``intervals[x]`` its base on L2."""

    apex: tuple[int, ...]
    intervals: tuple[tuple[int, int], ...]

    def __post_init__(self):
        n = len(self.apex)
        if len(self.intervals) != n:
            raise InputError("apex and interval lists differ in length")
        if sorted(self.apex) != list(range(n)):
            raise InputError("apex ranks must be a permutation of 0..n-1")
        ends = []
        for x, (l, r) in enumerate(self.intervals):
            if l > r:
                raise InputError(f"interval of {x} has l > r")
            ends += [l, r]
        if len(set(ends)) != len(ends):
            raise InputError("interval endpoints must be pairwise distinct")

    @property
    def n(self) -> int:
        return len(self.apex)

    def left_of(self, u: int, v: int) -> bool:
        return self.apex[u] < self.apex[v] and self.intervals[u][1] < self.intervals[v][0]

    def to_json(self) -> dict:
        return {"points": list(self.apex), "intervals": [list(iv) for iv in self.intervals]}

    @classmethod
    def from_json(cls, data: dict) -> PiRepresentation:
        try:
            apex = tuple(int(x) for x in data["points"])
            ivs = tuple((int(l), int(r)) for l, r in data["intervals"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed representation: {exc}") from None
        return cls(apex, ivs)


def build_representation(rp: RealizerPair) -> PiRepresentation:
    apex = rp.P1.ranking()
    ivs = interval_realization(rp.P2)
    # spread all endpoints to 0..2n-1; at equal values left ends go first so
    # touching intervals keep overlapping
    ends = sorted((v, side, x) for x, iv in enumerate(ivs) for side, v in enumerate(iv))
    spread = [[0, 0] for _ in ivs]
    for pos, (_, side, x) in enumerate(ends):
        spread[x][side] = pos
    new = [tuple(s) for s in spread]
    _check_intervals(rp.P2, new)
    return PiRepresentation(tuple(apex), tuple(new))


def left_order(r: PiRepresentation) -> StrictOrder:
    """The order "entirely left of" between triangles."""
    n = r.n
    rows = [0] * n
    for u in range(n):
        for v in range(n):
            if r.left_of(u, v):
                rows[u] |= 1 << v
    return StrictOrder(n, tuple(rows))


def represented_graph(r: PiRepresentation) -> Graph:
    return left_order(r).incomparability_graph()


def verify_representation(r: PiRepresentation, g: Graph) -> bool:
    if r.n != g.n:
        raise InputError(f"representation has {r.n} triangles, graph has {g.n} vertices")
    return represented_graph(r) == g
