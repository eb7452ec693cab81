"""Conflict graph of a split graph, its 2-colouring, and the literal of every edge.

Two cross edges u_a v_b and u_c v_d conflict iff u_a v_d and u_c v_b are both
non-edges; clique edges never conflict.  So the conflicts of u_a v_b are read
off pairs of non-edges: pick u_c among the non-neighbours of v_b and v_d among
the non-neighbours of u_a.  The conflict graph is never materialised as an
edge list; its adjacency is evaluated on bit rows.

Per-edge data is kept in numpy arrays indexed ``[i, j]`` for cross edge u_i v_j
and ``[j1, j2]`` (j1 < j2) for clique edge v_j1 v_j2.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import IntEnum
from functools import cached_property

import numpy as np

from .errors import InputError, OddCycle
from .graphs import EdgeId, EdgeKind, EdgeSubset, SplitGraph, clique, cross, full_mask, in_conflict, iter_bits


class Color(IntEnum):
    RED = 0
    BLUE = 1


# Literals are ints: 2 * variable + (1 if negated).
def make_lit(var: int, negated: bool = False) -> int:
    return 2 * var + int(negated)


def negate(lit: int) -> int:
    return lit ^ 1


def lit_var(lit: int) -> int:
    return lit >> 1


def lit_str(lit: int) -> str:
    return ("~x" if lit & 1 else "x") + str(lit >> 1)


def mask_from_bools(flags) -> int:
    """Pack a 1-d boolean array into an int bitmask (bit i = flags[i])."""
    flags = np.asarray(flags, dtype=bool)
    if flags.size == 0:
        return 0
    return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")


def _clique_index(nV: int) -> np.ndarray:
    """Position of each clique edge in lexicographic order; -1 off the upper triangle."""
    idx = np.full((nV, nV), -1, dtype=np.int64)
    iu = np.triu_indices(nV, 1)
    idx[iu] = np.arange(len(iu[0]))
    return idx


class ConflictGraph:
    """Conflict graph H* of a split graph.

    Components are numbered by their smallest EdgeId: first the cross-edge
    components in the order their least edge appears, then one singleton
    component per clique edge.
    """

    def __init__(self, host: SplitGraph):
        self.host = host
        nU, nV = host.nU, host.nV
        base = host.base
        self._rows = base.rows
        fullV, fullU = full_mask(nV), full_mask(nU)
        self._nonrow = [fullV & ~r for r in base.rows]
        self._noncol = [list(iter_bits(fullU & ~c)) for c in base.cols]

        comp = np.full((nU, nV), -1, dtype=np.int64)
        parity = np.zeros((nU, nV), dtype=np.int8)
        sizes = []
        self.odd_component: int | None = None
        self.odd_root: tuple[int, int] | None = None

        rows, nonrow, noncol = self._rows, self._nonrow, self._noncol
        unvisited = list(rows)
        visited = [0] * nU
        odd_par = [0] * nU  # visited edges with parity 1, per U row
        for i in range(nU):
            while unvisited[i]:
                j = (unvisited[i] & -unvisited[i]).bit_length() - 1
                cid = len(sizes)
                unvisited[i] &= ~(1 << j)
                visited[i] |= 1 << j
                members = [(i, j)]
                ones = []
                queue = deque([(i, j, 0)])
                bad = False
                while queue:
                    a, b, pa = queue.popleft()
                    na = nonrow[a]
                    for p in noncol[b]:
                        nbr = na & rows[p]
                        if not nbr:
                            continue
                        if not bad:
                            same = nbr & visited[p] & (odd_par[p] if pa else ~odd_par[p])
                            bad = bool(same)
                        new = nbr & unvisited[p]
                        if new:
                            unvisited[p] &= ~new
                            visited[p] |= new
                            if not pa:
                                odd_par[p] |= new
                            for q in iter_bits(new):
                                members.append((p, q))
                                if not pa:
                                    ones.append((p, q))
                                queue.append((p, q, 1 - pa))
                if bad and self.odd_component is None:
                    self.odd_component = cid
                    self.odd_root = (i, j)
                mi, mj = zip(*members)
                comp[mi, mj] = cid
                if ones:
                    oi, oj = zip(*ones)
                    parity[oi, oj] = 1
                sizes.append(len(members))

        self.n_cross_components = len(sizes)
        self.k = len(sizes) + nV * (nV - 1) // 2
        self.comp = comp
        self.parity = parity
        self.component_sizes = np.array(sizes, dtype=np.int64)
        self.committed = np.zeros((nU, nV), dtype=bool)
        if sizes:
            edge = comp >= 0
            self.committed[edge] = self.component_sizes[comp[edge]] > 1
        self._clique_idx = _clique_index(nV)

    # -- adjacency ---------------------------------------------------------

    def vertices(self) -> list[EdgeId]:
        return self.host.edges()

    def adjacent(self, e1: EdgeId, e2: EdgeId) -> bool:
        return in_conflict(self.host, e1, e2)

    def _cross_neighbors(self, a: int, b: int):
        na = self._nonrow[a]
        for p in self._noncol[b]:
            for q in iter_bits(na & self._rows[p]):
                yield p, q

    def neighbors(self, e: EdgeId) -> list[EdgeId]:
        self.host.require(e)
        if e.kind == EdgeKind.CLIQUE:
            return []
        return [cross(p, q) for p, q in self._cross_neighbors(e.a, e.b)]

    def degree(self, e: EdgeId) -> int:
        self.host.require(e)
        if e.kind == EdgeKind.CLIQUE:
            return 0
        na = self._nonrow[e.a]
        return sum((na & self._rows[p]).bit_count() for p in self._noncol[e.b])

    @cached_property
    def edge_count(self) -> int:
        total = 0
        for a, row in enumerate(self._rows):
            na = self._nonrow[a]
            for b in iter_bits(row):
                total += sum((na & self._rows[p]).bit_count() for p in self._noncol[b])
        return total // 2

    # -- components --------------------------------------------------------

    def component_of(self, e: EdgeId) -> int:
        self.host.require(e)
        if e.kind == EdgeKind.CROSS:
            return int(self.comp[e.a, e.b])
        return self.n_cross_components + int(self._clique_idx[e.a, e.b])

    def is_committed(self, e: EdgeId) -> bool:
        self.host.require(e)
        return e.kind == EdgeKind.CROSS and bool(self.committed[e.a, e.b])

    def components(self) -> list[list[EdgeId]]:
        out: list[list[EdgeId]] = [[] for _ in range(self.k)]
        for e in self.vertices():
            out[self.component_of(e)].append(e)
        return out

    def odd_cycle(self) -> list[EdgeId] | None:
        """An odd cycle of the conflict graph as a list of EdgeIds, or None if bipartite."""
        if self.odd_root is None:
            return None
        root = self.odd_root
        parent = {root: None}
        depth = {root: 0}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in self._cross_neighbors(*x):
                if y not in depth:
                    depth[y] = depth[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif depth[y] % 2 == depth[x] % 2:
                    return [cross(*z) for z in _tree_cycle(parent, x, y)]
        raise AssertionError("odd component recorded but no odd cycle found")


def _tree_cycle(parent, x, y):
    """Cycle formed by tree paths from x and y to their common ancestor plus edge xy."""
    anc_x = []
    z = x
    while z is not None:
        anc_x.append(z)
        z = parent[z]
    pos = {z: t for t, z in enumerate(anc_x)}
    path_y = []
    z = y
    while z not in pos:
        path_y.append(z)
        z = parent[z]
    return anc_x[: pos[z] + 1] + path_y[::-1]


def conflict_graph(h: SplitGraph) -> ConflictGraph:
    return ConflictGraph(h)


@dataclass(frozen=True, eq=False)
class Coloring:
    """Red/blue colour of every edge of a split graph (0 = red, 1 = blue).

    ``cross`` is indexed [i, j]; ``clique`` [j1, j2] with j1 < j2.  Entries
    off the edge set are -1.
    """

    host: SplitGraph
    cross: np.ndarray
    clique: np.ndarray

    def __getitem__(self, e: EdgeId) -> Color:
        self.host.require(e)
        arr = self.cross if e.kind == EdgeKind.CROSS else self.clique
        return Color(int(arr[e.a, e.b]))

    def __eq__(self, other):
        if not isinstance(other, Coloring):
            return NotImplemented
        return (self.host == other.host and np.array_equal(self.cross, other.cross)
                and np.array_equal(self.clique, other.clique))

    def edges_of(self, color: Color) -> EdgeSubset:
        members = [cross(i, j) for i, j in zip(*np.nonzero(self.cross == color))]
        members += [clique(a, b) for a, b in zip(*np.nonzero(self.clique == color))]
        return EdgeSubset.of(self.host, members)

    def rows_of(self, color: Color) -> list[int]:
        """Bit rows, over combined vertex ids, of the edges having ``color``."""
        nU, nV = self.host.nU, self.host.nV
        sel = self.cross == color
        rows = [mask_from_bools(sel[i]) << nU for i in range(nU)]
        cl = self.clique == color
        cl = cl | cl.T
        for j in range(nV):
            rows.append(mask_from_bools(sel[:, j]) | mask_from_bools(cl[j]) << nU)
        return rows

    def is_proper(self, cg: ConflictGraph) -> bool:
        for i, j in zip(*np.nonzero(self.cross >= 0)):
            c = self.cross[i, j]
            for p, q in cg._cross_neighbors(int(i), int(j)):
                if self.cross[p, q] == c:
                    return False
        return True


def _empty_colors(h: SplitGraph) -> tuple[np.ndarray, np.ndarray]:
    nU, nV = h.nU, h.nV
    cr = np.full((nU, nV), -1, dtype=np.int8)
    cl = np.full((nV, nV), -1, dtype=np.int8)
    return cr, cl


def two_color(cg: ConflictGraph) -> Coloring:
    """BFS 2-colouring; the least edge of every component is red."""
    cycle = cg.odd_cycle()
    if cycle is not None:
        raise OddCycle(cycle)
    cr, cl = _empty_colors(cg.host)
    edge = cg.comp >= 0
    cr[edge] = cg.parity[edge]
    cl[cg._clique_idx >= 0] = Color.RED
    return Coloring(cg.host, cr, cl)


@dataclass(frozen=True, eq=False)
class LiteralAssignment:
    """Variable and polarity of every edge.

    An edge on the red side of its component gets the positive literal of
    the component's variable, an edge on the blue side the negative one.
    """

    host: SplitGraph
    k: int
    var_cross: np.ndarray  # [i, j] -> variable, -1 off the edge set
    neg_cross: np.ndarray  # [i, j] -> True for a negative literal
    committed: np.ndarray  # [i, j] -> edge has at least one conflict
    n_cross_vars: int      # clique edge variables follow the cross ones
    clique_index: np.ndarray

    @property
    def lit_cross(self) -> np.ndarray:
        """Literal code per cross edge (-1 off the edge set)."""
        out = 2 * self.var_cross + self.neg_cross
        out[self.var_cross < 0] = -1
        return out

    def variable(self, e: EdgeId) -> int:
        self.host.require(e)
        if e.kind == EdgeKind.CROSS:
            return int(self.var_cross[e.a, e.b])
        return self.n_cross_vars + int(self.clique_index[e.a, e.b])

    def literal(self, e: EdgeId) -> int:
        v = self.variable(e)
        neg = e.kind == EdgeKind.CROSS and bool(self.neg_cross[e.a, e.b])
        return make_lit(v, neg)

    def is_committed(self, e: EdgeId) -> bool:
        return e.kind == EdgeKind.CROSS and bool(self.committed[e.a, e.b])

    @cached_property
    def trivial(self) -> np.ndarray:
        """True for variables whose component is a single (uncommitted) edge."""
        flags = np.ones(self.k, dtype=bool)
        flags[self.var_cross[self.committed]] = False
        return flags


def assign_literals(cg: ConflictGraph, chi0: Coloring) -> LiteralAssignment:
    if chi0.host != cg.host:
        raise InputError("colouring belongs to a different split graph")
    edge = cg.comp >= 0
    neg = np.zeros_like(edge)
    neg[edge] = chi0.cross[edge] == Color.BLUE
    return LiteralAssignment(
        host=cg.host,
        k=cg.k,
        var_cross=cg.comp.copy(),
        neg_cross=neg,
        committed=cg.committed.copy(),
        n_cross_vars=cg.n_cross_components,
        clique_index=cg._clique_idx,
    )


def assignment_to_coloring(la: LiteralAssignment, chi0: Coloring, tau) -> Coloring:
    """Colouring in which component i keeps chi0's colours if x_i is false and swaps them if true."""
    values = np.asarray(tau, dtype=bool)
    if values.shape != (la.k,):
        raise InputError(f"assignment has {values.size} values, expected {la.k}")
    cr, cl = _empty_colors(la.host)
    edge = la.var_cross >= 0
    cr[edge] = chi0.cross[edge] ^ values[la.var_cross[edge]]
    ci = la.clique_index >= 0
    cl[ci] = chi0.clique[ci] ^ values[la.n_cross_vars + la.clique_index[ci]]
    return Coloring(la.host, cr, cl)
