"""Bipartite graphs derived from an order and the associated split graph."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    BipartiteGraph,
    EdgeSubset,
    SplitGraph,
    StrictOrder,
    bipartite_complement,
    cross,
)


def domination_graph(p: StrictOrder) -> BipartiteGraph:
    """u_i v_j is an edge iff i < j in ``p``."""
    return BipartiteGraph(p.n, p.n, p.succ)


def nc_graph(p: StrictOrder) -> BipartiteGraph:
    """The domination graph with the diagonal u_i v_i added (i <= j)."""
    return BipartiteGraph(p.n, p.n, tuple(row | 1 << i for i, row in enumerate(p.succ)))


@dataclass(frozen=True)
class DominationContext:
    P: StrictOrder
    C: BipartiteGraph
    Gtilde: BipartiteGraph
    H: SplitGraph
    E0: EdgeSubset

    @property
    def n(self) -> int:
        return self.P.n

    @property
    def m(self) -> int:
        """Number of comparable pairs of P."""
        return self.C.edge_count


def build_context(p: StrictOrder) -> DominationContext:
    c = domination_graph(p)
    gt = bipartite_complement(c)
    h = SplitGraph(gt)
    e0 = EdgeSubset.of(h, (cross(i, i) for i in range(p.n)))
    return DominationContext(p, c, gt, h, e0)
