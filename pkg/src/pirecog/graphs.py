"""Graphs, bipartite graphs, split graphs and strict orders on packed bit rows.

Every structure stores adjacency as a tuple of Python ints: bit ``j`` of
``rows[i]`` is set iff ``i`` is related to ``j``.  All types are immutable.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from enum import IntEnum
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple

from .errors import CyclicRelation, InputError


def iter_bits(x: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def bits_to_list(x: int) -> list[int]:
    return list(iter_bits(x))


def full_mask(n: int) -> int:
    return (1 << n) - 1


def _rows_from_pairs(n: int, pairs: Iterable[tuple[int, int]], symmetric: bool) -> list[int]:
    rows = [0] * n
    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise InputError(f"pair ({a}, {b}) out of range for n={n}")
        if a == b:
            raise InputError(f"loop at vertex {a}")
        rows[a] |= 1 << b
        if symmetric:
            rows[b] |= 1 << a
    return rows


# ---------------------------------------------------------------------------
# plain graphs


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise InputError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        mask = full_mask(self.n)
        for i, row in enumerate(self.rows):
            if row & ~mask or row >> i & 1:
                raise InputError(f"row {i} has a loop or an out-of-range bit")
            for j in iter_bits(row):
                if not self.rows[j] >> i & 1:
                    raise InputError(f"adjacency not symmetric at ({i}, {j})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        return cls(n, tuple(_rows_from_pairs(n, edges, symmetric=True)))

    @classmethod
    def complete(cls, n: int) -> Graph:
        mask = full_mask(n)
        return cls(n, tuple(mask & ~(1 << i) for i in range(n)))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, u: int) -> list[int]:
        return bits_to_list(self.rows[u])

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    @cached_property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2


def complement(g: Graph) -> Graph:
    mask = full_mask(g.n)
    return Graph(g.n, tuple(mask & ~row & ~(1 << i) for i, row in enumerate(g.rows)))


def is_threshold_graph(g: Graph) -> bool:
    """Nested-neighbourhood test: the vicinal preorder must be total.

    For every pair x, y either N(x) - y is inside N(y) - x or the reverse.
    """
    rows = g.rows
    for x in range(g.n):
        for y in range(x + 1, g.n):
            nx_ = rows[x] & ~(1 << y)
            ny_ = rows[y] & ~(1 << x)
            if nx_ & ~ny_ and ny_ & ~nx_:
                return False
    return True


# ---------------------------------------------------------------------------
# strict orders


@dataclass(frozen=True)
class StrictOrder:
    """A strict partial order; ``succ[i]`` holds the elements above ``i``."""

    n: int
    succ: tuple[int, ...]

    def __post_init__(self):
        if len(self.succ) != self.n:
            raise InputError(f"expected {self.n} rows, got {len(self.succ)}")
        mask = full_mask(self.n)
        for i, row in enumerate(self.succ):
            if row & ~mask:
                raise InputError(f"row {i} has out-of-range bits")
            if row >> i & 1:
                raise InputError(f"relation is not irreflexive at {i}")
            for j in iter_bits(row):
                if self.succ[j] & ~row:
                    k = (self.succ[j] & ~row).bit_length() - 1
                    raise InputError(f"relation is not transitive: {i}<{j}<{k} but not {i}<{k}")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> StrictOrder:
        return cls(n, tuple(_rows_from_pairs(n, pairs, symmetric=False)))

    @classmethod
    def chain(cls, seq: Iterable[int]) -> StrictOrder:
        """Total order listing the elements from bottom to top."""
        seq = list(seq)
        n = len(seq)
        succ = [0] * n
        above = 0
        for x in reversed(seq):
            succ[x] = above
            above |= 1 << x
        return cls(n, tuple(succ))

    @classmethod
    def antichain(cls, n: int) -> StrictOrder:
        return cls(n, (0,) * n)

    def less(self, i: int, j: int) -> bool:
        return bool(self.succ[i] >> j & 1)

    def comparable(self, i: int, j: int) -> bool:
        return self.less(i, j) or self.less(j, i)

    @cached_property
    def pred(self) -> tuple[int, ...]:
        rows = [0] * self.n
        for i, row in enumerate(self.succ):
            for j in iter_bits(row):
                rows[j] |= 1 << i
        return tuple(rows)

    def pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.succ) for j in iter_bits(row)]

    @cached_property
    def size(self) -> int:
        """Number of comparable pairs."""
        return sum(r.bit_count() for r in self.succ)

    def is_total(self) -> bool:
        return self.size == self.n * (self.n - 1) // 2

    def ranking(self) -> list[int]:
        """Position of each element in a total order (number of elements below it)."""
        if not self.is_total():
            raise InputError("ranking requires a total order")
        return [r.bit_count() for r in self.pred]

    def sequence(self) -> list[int]:
        """Elements of a total order from bottom to top."""
        seq = [0] * self.n
        for x, r in enumerate(self.ranking()):
            seq[r] = x
        return seq

    def comparability_graph(self) -> Graph:
        return Graph(self.n, tuple(s | p for s, p in zip(self.succ, self.pred)))

    def incomparability_graph(self) -> Graph:
        return complement(self.comparability_graph())


def _check_sizes(a: StrictOrder, b: StrictOrder):
    if a.n != b.n:
        raise InputError(f"carrier size mismatch: {a.n} vs {b.n}")


def inverse(o: StrictOrder) -> StrictOrder:
    return StrictOrder(o.n, o.pred)


def intersect(a: StrictOrder, b: StrictOrder) -> StrictOrder:
    _check_sizes(a, b)
    return StrictOrder(a.n, tuple(x & y for x, y in zip(a.succ, b.succ)))


def union_as_relation(a: StrictOrder, b: StrictOrder) -> set[tuple[int, int]]:
    """Pointwise union as a raw set of pairs; it need not be an order."""
    _check_sizes(a, b)
    return set(a.pairs()) | set(b.pairs())


def find_cycle(n: int, out_rows) -> list[int] | None:
    """Return some directed cycle of the digraph given by successor bit rows, or None."""
    in_rows = [0] * n
    for u in range(n):
        for v in iter_bits(out_rows[u]):
            in_rows[v] |= 1 << u
    remaining = full_mask(n)
    changed = True
    while changed and remaining:
        changed = False
        for v in iter_bits(remaining):
            if not in_rows[v] & remaining:
                remaining &= ~(1 << v)
                changed = True
    if not remaining:
        return None
    # every remaining vertex has a remaining in-neighbour: walk backwards
    v = remaining.bit_length() - 1
    seen = {}
    walk = []
    while v not in seen:
        seen[v] = len(walk)
        walk.append(v)
        v = (in_rows[v] & remaining).bit_length() - 1
    cycle = walk[seen[v]:]
    cycle.reverse()
    return cycle


def linear_extension(rel: Iterable[tuple[int, int]], n: int) -> StrictOrder:
    """Topological sort of ``rel`` taking the smallest available index first."""
    out_rows = _rows_from_pairs(n, rel, symmetric=False)
    indeg = [0] * n
    for row in out_rows:
        for v in iter_bits(row):
            indeg[v] += 1
    heap = [v for v in range(n) if indeg[v] == 0]
    heapq.heapify(heap)
    seq = []
    while heap:
        u = heapq.heappop(heap)
        seq.append(u)
        for v in iter_bits(out_rows[u]):
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(heap, v)
    if len(seq) < n:
        raise CyclicRelation(find_cycle(n, out_rows))
    return StrictOrder.chain(seq)


# ---------------------------------------------------------------------------
# bipartite graphs


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph on classes U = 0..nU-1 and V = 0..nV-1; ``rows[i]`` is a mask over V."""

    nU: int
    nV: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.nU:
            raise InputError(f"expected {self.nU} rows, got {len(self.rows)}")
        mask = full_mask(self.nV)
        if any(r & ~mask for r in self.rows):
            raise InputError("bipartite row has out-of-range bits")

    @classmethod
    def from_edges(cls, nU: int, nV: int, edges: Iterable[tuple[int, int]]) -> BipartiteGraph:
        rows = [0] * nU
        for i, j in edges:
            if not (0 <= i < nU and 0 <= j < nV):
                raise InputError(f"cross pair ({i}, {j}) out of range")
            rows[i] |= 1 << j
        return cls(nU, nV, tuple(rows))

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.rows) for j in iter_bits(row)]

    @cached_property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    @cached_property
    def cols(self) -> tuple[int, ...]:
        cols = [0] * self.nV
        for i, row in enumerate(self.rows):
            for j in iter_bits(row):
                cols[j] |= 1 << i
        return tuple(cols)


def bipartite_complement(b: BipartiteGraph) -> BipartiteGraph:
    mask = full_mask(b.nV)
    return BipartiteGraph(b.nU, b.nV, tuple(mask & ~r for r in b.rows))


def is_chain_graph(b: BipartiteGraph) -> bool:
    """Neighbourhoods of U (hence also of V) form a chain under inclusion."""
    rows = sorted(set(b.rows), key=int.bit_count)
    return all(small & ~big == 0 for small, big in zip(rows, rows[1:]))


# ---------------------------------------------------------------------------
# split graphs


class EdgeKind(IntEnum):
    CROSS = 0
    CLIQUE = 1


class EdgeId(NamedTuple):
    """Canonical name of an edge of a split graph.

    Cross edges are ``(CROSS, i, j)`` for u_i v_j; clique edges are
    ``(CLIQUE, j1, j2)`` for v_j1 v_j2 with j1 < j2.  Tuple order puts every
    cross edge before every clique edge.
    """

    kind: EdgeKind
    a: int
    b: int

    def __repr__(self):
        if self.kind == EdgeKind.CROSS:
            return f"u{self.a}v{self.b}"
        return f"v{self.a}v{self.b}"


def cross(i: int, j: int) -> EdgeId:
    return EdgeId(EdgeKind.CROSS, i, j)


def clique(j1: int, j2: int) -> EdgeId:
    if j1 == j2:
        raise InputError("clique edge needs two distinct V vertices")
    return EdgeId(EdgeKind.CLIQUE, min(j1, j2), max(j1, j2))


@dataclass(frozen=True)
class SplitGraph:
    """U independent, V a clique, cross edges taken from ``base``.

    Combined vertex ids (used by :attr:`graph`) are ``i`` for u_i and
    ``nU + j`` for v_j.
    """

    base: BipartiteGraph

    @property
    def nU(self) -> int:
        return self.base.nU

    @property
    def nV(self) -> int:
        return self.base.nV

    @property
    def order(self) -> int:
        return self.base.nU + self.base.nV

    @cached_property
    def graph(self) -> Graph:
        nU, nV = self.nU, self.nV
        rows = [r << nU for r in self.base.rows]
        vmask = full_mask(nV) << nU
        for j, col in enumerate(self.base.cols):
            rows.append(col | (vmask & ~(1 << (nU + j))))
        return Graph(nU + nV, tuple(rows))

    def has(self, e: EdgeId) -> bool:
        if e.kind == EdgeKind.CROSS:
            return 0 <= e.a < self.nU and 0 <= e.b < self.nV and self.base.has_edge(e.a, e.b)
        return 0 <= e.a < e.b < self.nV

    def require(self, e: EdgeId):
        if not self.has(e):
            raise InputError(f"{e!r} is not an edge of the split graph")

    def endpoints(self, e: EdgeId) -> tuple[int, int]:
        """Combined vertex ids of the edge's ends."""
        if e.kind == EdgeKind.CROSS:
            return e.a, self.nU + e.b
        return self.nU + e.a, self.nU + e.b

    def edge_between(self, x: int, y: int) -> EdgeId:
        """EdgeId for the combined vertex pair ``x y`` (which must be an edge)."""
        nU = self.nU
        if x > y:
            x, y = y, x
        if y < nU:
            raise InputError(f"no edge between U vertices {x} and {y}")
        e = cross(x, y - nU) if x < nU else clique(x - nU, y - nU)
        self.require(e)
        return e

    def edges(self) -> list[EdgeId]:
        out = [cross(i, j) for i, j in self.base.edges()]
        out += [clique(a, b) for a in range(self.nV) for b in range(a + 1, self.nV)]
        return out

    @property
    def edge_count(self) -> int:
        return self.base.edge_count + self.nV * (self.nV - 1) // 2


@dataclass(frozen=True)
class EdgeSubset:
    host: SplitGraph
    members: frozenset

    def __post_init__(self):
        for e in self.members:
            self.host.require(e)

    @classmethod
    def of(cls, host: SplitGraph, edges: Iterable[EdgeId]) -> EdgeSubset:
        return cls(host, frozenset(edges))

    def __contains__(self, e) -> bool:
        return e in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)

    def rows(self) -> list[int]:
        """Bit rows over the host's combined vertex ids."""
        rows = [0] * self.host.order
        for e in self.members:
            x, y = self.host.endpoints(e)
            rows[x] |= 1 << y
            rows[y] |= 1 << x
        return rows

    def cross_pairs(self) -> set[tuple[int, int]]:
        return {(e.a, e.b) for e in self.members if e.kind == EdgeKind.CROSS}


def in_conflict(h: SplitGraph, e1: EdgeId, e2: EdgeId) -> bool:
    """True iff the two edges span an alternating 4-cycle (edges e1, e2; two non-edges)."""
    h.require(e1)
    h.require(e2)
    if e1 == e2 or e1.kind == EdgeKind.CLIQUE or e2.kind == EdgeKind.CLIQUE:
        return False
    (a, b), (c, d) = e1[1:], e2[1:]
    return not h.base.has_edge(a, d) and not h.base.has_edge(c, b)


# ---------------------------------------------------------------------------
# alternating cycles


def forcing_digraph(n: int, host_rows, sub_rows) -> list[int]:
    """Successor rows of D: u -> v iff some w has vw in sub and uw a non-edge of the host."""
    mask = full_mask(n)
    out = [0] * n
    for w in range(n):
        s = sub_rows[w]
        if not s:
            continue
        for u in iter_bits(mask & ~host_rows[w] & ~(1 << w)):
            out[u] |= s
    return out


def find_alternating_cycle(n: int, host_rows, sub_rows) -> list[int] | None:
    """Vertices v1..v2k of an alternating cycle of ``sub`` in the host, or None.

    Pairs v1v2, v3v4, ... are host non-edges and v2v3, v4v5, ..., v2k v1 lie in
    ``sub``.  Vertices may repeat.
    """
    out = forcing_digraph(n, host_rows, sub_rows)
    cycle = find_cycle(n, out)
    if cycle is None:
        return None
    mask = full_mask(n)
    walk = []
    for t, u in enumerate(cycle):
        v = cycle[(t + 1) % len(cycle)]
        w_mask = sub_rows[v] & mask & ~host_rows[u] & ~(1 << u)
        walk += [u, w_mask.bit_length() - 1]
    return walk


def has_alternating_cycle(sub, host: Graph | None = None) -> bool:
    """Alternating-cycle test via the forcing digraph.

    ``sub`` is either an :class:`EdgeSubset` (its split host is used) or an
    iterable of vertex pairs of the plain graph ``host``.
    """
    if isinstance(sub, EdgeSubset):
        g = sub.host.graph
        rows = sub.rows()
    else:
        if host is None:
            raise InputError("a host graph is required for a plain edge list")
        g = host
        rows = _rows_from_pairs(g.n, sub, symmetric=True)
        if any(r & ~h for r, h in zip(rows, g.rows)):
            raise InputError("sub contains a pair that is not a host edge")
    return find_alternating_cycle(g.n, g.rows, rows) is not None
