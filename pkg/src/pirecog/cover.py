"""Threshold completions and the two-chain-graph cover built from a satisfying assignment."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .conflict import Color, Coloring, LiteralAssignment, assignment_to_coloring
from .domination import DominationContext
from .errors import InternalContradiction, NoCompletion
from .graphs import (
    BipartiteGraph,
    EdgeSubset,
    Graph,
    SplitGraph,
    find_alternating_cycle,
    full_mask,
    is_chain_graph,
    is_threshold_graph,
    iter_bits,
)


def complete_threshold_rows(n: int, allowed, sub) -> list[int]:
    """Rows of a threshold graph T with sub <= T <= allowed.

    Vertices are peeled one at a time: a vertex with no remaining ``sub``
    edge leaves as an isolated vertex of T, a vertex joined in ``allowed``
    to every remaining vertex leaves as a dominating one and takes all those
    edges into T.  If neither exists, every remaining vertex v has a sub
    edge vw with w missing some allowed edge uw, so the forcing digraph has
    an arc into v; it therefore has a cycle and no completion exists.
    """
    remaining = full_mask(n)
    T = [0] * n
    while remaining:
        progress = False
        for x in iter_bits(remaining):
            bit = 1 << x
            if not sub[x] & remaining:
                remaining &= ~bit
                progress = True
            elif (allowed[x] | bit) & remaining == remaining:
                nbrs = allowed[x] & remaining
                T[x] |= nbrs
                for y in iter_bits(nbrs):
                    T[y] |= bit
                remaining &= ~bit
                progress = True
        if not progress:
            cycle = find_alternating_cycle(n, allowed, sub)
            if cycle is None:
                raise InternalContradiction("peeling stuck although the forcing digraph is acyclic")
            raise NoCompletion(cycle)
    return T


def _check_completion(n: int, allowed, sub, T):
    for x in range(n):
        if sub[x] & ~T[x] or T[x] & ~allowed[x]:
            raise InternalContradiction(f"completion row {x} violates sub <= T <= host")
    if not is_threshold_graph(Graph(n, tuple(T))):
        raise InternalContradiction("completion is not a threshold graph")


def _subset_from_rows(host: SplitGraph, rows) -> EdgeSubset:
    members = []
    for x, row in enumerate(rows):
        for y in iter_bits(row >> (x + 1) << (x + 1)):
            members.append(host.edge_between(x, y))
    return EdgeSubset.of(host, members)


def threshold_completion(sub: EdgeSubset, host: SplitGraph, forbidden: EdgeSubset | None = None) -> EdgeSubset:
    """Threshold graph T with sub <= T <= E(host) - forbidden.

    Raises NoCompletion, carrying an alternating cycle, when none exists.
    """
    g = host.graph
    allowed = list(g.rows)
    if forbidden is not None:
        if forbidden.members & sub.members:
            raise ValueError("sub and forbidden overlap")
        for x, row in enumerate(forbidden.rows()):
            allowed[x] &= ~row
    rows = sub.rows()
    T = complete_threshold_rows(g.n, allowed, rows)
    _check_completion(g.n, allowed, rows, T)
    return _subset_from_rows(host, T)


@dataclass(frozen=True)
class LinearIntervalCover:
    """Two edge sets of the bipartite graph whose union is G~; E2 holds the diagonal, E1 does not."""

    E1: frozenset
    E2: frozenset

    def bipartite(self, n: int) -> tuple[BipartiteGraph, BipartiteGraph]:
        return (BipartiteGraph.from_edges(n, n, self.E1), BipartiteGraph.from_edges(n, n, self.E2))


def cover_from_assignment(ctx: DominationContext, la: LiteralAssignment, chi0: Coloring, tau) -> LinearIntervalCover:
    """Colour by tau with isolated conflict-graph vertices blue, then complete each colour class."""
    h = ctx.H
    n = ctx.n
    chi = assignment_to_coloring(la, chi0, tau)
    cr = chi.cross.copy()
    cr[(la.var_cross >= 0) & ~la.committed] = Color.BLUE
    cl = chi.clique.copy()
    cl[cl >= 0] = Color.BLUE
    chi_prime = Coloring(h, cr, cl)

    host_rows = list(h.graph.rows)
    without_diag = list(host_rows)
    for i in range(n):
        without_diag[i] &= ~(1 << (n + i))
        without_diag[n + i] &= ~(1 << i)
    red = chi_prime.rows_of(Color.RED)
    blue = chi_prime.rows_of(Color.BLUE)
    N = h.order
    for name, allowed, sub in (("red", without_diag, red), ("blue", host_rows, blue)):
        cyc = find_alternating_cycle(N, allowed, sub)
        if cyc is not None:
            raise InternalContradiction(f"{name} class has alternating cycle {cyc}")

    sets = []
    for allowed, sub in ((without_diag, red), (host_rows, blue)):
        try:
            T = complete_threshold_rows(N, allowed, sub)
        except NoCompletion as exc:
            raise InternalContradiction(f"threshold completion failed: {exc}") from None
        _check_completion(N, allowed, sub, T)
        sets.append(frozenset((i, j) for i in range(n) for j in iter_bits(T[i] >> n)))
    cover = LinearIntervalCover(sets[0], sets[1])
    if not verify_cover(ctx, cover):
        raise InternalContradiction("constructed cover fails verification")
    return cover


def verify_cover(ctx: DominationContext, c: LinearIntervalCover) -> bool:
    n = ctx.n
    try:
        b1, b2 = c.bipartite(n)
    except ValueError:
        return False
    if tuple(x | y for x, y in zip(b1.rows, b2.rows)) != ctx.Gtilde.rows:
        return False
    if any(r & ~g for r, g in zip(b1.rows + b2.rows, ctx.Gtilde.rows * 2)):
        return False
    if not (is_chain_graph(b1) and is_chain_graph(b2)):
        return False
    return all(b2.has_edge(i, i) and not b1.has_edge(i, i) for i in range(n))
