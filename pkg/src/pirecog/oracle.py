"""Brute-force ground truth and random instance generators.

Nothing here calls into the recognition pipeline.  Relations are handled as
plain sets of pairs and every property is checked by direct enumeration, so
the oracle and the pipeline can only agree by both being right.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .errors import TooLarge
from .graphs import BipartiteGraph, Graph, StrictOrder
from .representation import PiRepresentation, represented_graph

MAX_ORACLE_N = 6
MAX_ENUM_N = 5
MAX_COVER_EDGES = 12


# ---------------------------------------------------------------------------
# relation helpers (pairs only)


def _transitive(rel: frozenset) -> bool:
    return all((a, d) in rel for a, b in rel for c, d in rel if b == c)


def _antisymmetric(rel) -> bool:
    return all((b, a) not in rel for a, b in rel)


def _acyclic(n: int, rel) -> bool:
    succ = {x: [b for a, b in rel if a == x] for x in range(n)}
    state = [0] * n  # 0 new, 1 on stack, 2 done

    def visit(x):
        state[x] = 1
        for y in succ[x]:
            if state[y] == 1 or (state[y] == 0 and not visit(y)):
                return False
        state[x] = 2
        return True

    return all(state[x] or visit(x) for x in range(n))


def _has_two_plus_two(rel) -> bool:
    """a < b and c < d with no other relation among the four."""
    for (a, b), (c, d) in itertools.permutations(rel, 2):
        if len({a, b, c, d}) == 4 and not any(p in rel for p in ((a, d), (c, b), (d, a), (b, c))):
            return True
    return False


def _pairs(p: StrictOrder) -> frozenset:
    return frozenset((i, j) for i in range(p.n) for j in range(p.n) if p.less(i, j))


def _order(n: int, rel) -> StrictOrder:
    return StrictOrder.from_pairs(n, rel)


# ---------------------------------------------------------------------------
# enumeration
#
# A relation on n <= 6 elements is packed into an int with bit a*n+b for the
# pair (a, b); this keeps subset tests to a single mask operation.


def _pack(n: int, rel) -> int:
    out = 0
    for a, b in rel:
        out |= 1 << (a * n + b)
    return out


def _unpack(n: int, mask: int) -> frozenset:
    return frozenset(divmod(t, n) for t in range(n * n) if mask >> t & 1)


def _extensions(n: int, rels, keep=None) -> list[frozenset]:
    """Add element n-1 to every order in ``rels`` in all transitive ways.

    The new element sits above a down-closed set and below an up-closed
    set, with everything below it under everything above it.
    """
    new = n - 1
    olds = list(range(new))
    out = []
    for rel in rels:
        below_of = {x: {a for a, b in rel if b == x} for x in olds}
        above_of = {x: {b for a, b in rel if a == x} for x in olds}
        downs = [d for d in _subsets(olds) if all(below_of[x] <= d for x in d)]
        ups = [u for u in _subsets(olds) if all(above_of[x] <= u for x in u)]
        for d in downs:
            for u in ups:
                if d & u or any((a, b) not in rel for a in d for b in u):
                    continue
                ext = rel | {(a, new) for a in d} | {(new, b) for b in u}
                if keep is None or keep(ext):
                    out.append(ext)
    return out


def _subsets(items) -> list[frozenset]:
    items = list(items)
    return [frozenset(c) for r in range(len(items) + 1) for c in itertools.combinations(items, r)]


@lru_cache(maxsize=None)
def _cached_posets(n: int) -> tuple[frozenset, ...]:
    if n == 0:
        return (frozenset(),)
    return tuple(_extensions(n, _cached_posets(n - 1)))


@lru_cache(maxsize=None)
def _cached_interval_orders(n: int) -> tuple[frozenset, ...]:
    # interval orders are closed under removing an element
    if n == 0:
        return (frozenset(),)
    return tuple(_extensions(n, _cached_interval_orders(n - 1), keep=lambda r: not _has_two_plus_two(r)))


@lru_cache(maxsize=None)
def _interval_masks(n: int) -> np.ndarray:
    return np.array([_pack(n, q) for q in _cached_interval_orders(n)], dtype=np.uint64)


def all_posets(n: int) -> Iterator[StrictOrder]:
    if n > MAX_ENUM_N:
        raise TooLarge(f"all_posets is limited to n <= {MAX_ENUM_N}")
    for rel in _cached_posets(n):
        yield _order(n, rel)


def all_graphs(n: int) -> Iterator[Graph]:
    if n > MAX_ORACLE_N:
        raise TooLarge(f"all_graphs is limited to n <= {MAX_ORACLE_N}")
    slots = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(slots)):
        yield Graph.from_edges(n, [slots[t] for t in range(len(slots)) if mask >> t & 1])


# ---------------------------------------------------------------------------
# verdicts


def _check_size(n: int):
    if n > MAX_ORACLE_N:
        raise TooLarge(f"oracle is limited to n <= {MAX_ORACLE_N}, got n = {n}")


@lru_cache(maxsize=None)
def _linear_interval(n: int, rel: frozenset) -> bool:
    """Some interval order Q contains rel and rel plus the reverse of Q - rel is acyclic."""
    want = _pack(n, rel)
    qs = _interval_masks(n)
    for q in qs[(qs & np.uint64(want)) == np.uint64(want)].tolist():
        forced = rel | {(b, a) for a, b in _unpack(n, q & ~want)}
        if _acyclic(n, forced):
            return True
    return False


def oracle_is_linear_interval(p: StrictOrder) -> bool:
    """Some interval order Q contains P and some linear extension L of P has L & Q = P."""
    _check_size(p.n)
    return _linear_interval(p.n, _pairs(p))


def transitive_orientations(g: Graph) -> list[frozenset]:
    """Every transitive orientation of ``g`` as a set of pairs (backtracking)."""
    edges = g.edges()
    out = []

    def bad(rel, a, b):
        # a new arc a->b must not close a two-step path over a non-edge or against an arc
        for x, y in rel:
            if y == a and (not g.has_edge(x, b) or (b, x) in rel):
                return True
            if x == b and (not g.has_edge(a, y) or (y, a) in rel):
                return True
        return False

    def go(t, rel):
        if t == len(edges):
            if _transitive(rel):
                out.append(frozenset(rel))
            return
        for a, b in (edges[t], edges[t][::-1]):
            if not bad(rel, a, b):
                rel.add((a, b))
                go(t + 1, rel)
                rel.discard((a, b))

    go(0, set())
    return out


def _complement_edges(g: Graph) -> Graph:
    return Graph.from_edges(g.n, [(a, b) for a, b in itertools.combinations(range(g.n), 2) if not g.has_edge(a, b)])


@dataclass(frozen=True)
class PiReport:
    verdict: bool
    orientations: int
    all_agree: bool


def oracle_pi_report(g: Graph) -> PiReport:
    _check_size(g.n)
    verdicts = [_linear_interval(g.n, rel) for rel in transitive_orientations(_complement_edges(g))]
    return PiReport(any(verdicts), len(verdicts), len(set(verdicts)) <= 1)


def oracle_is_pi_graph(g: Graph) -> bool:
    return oracle_pi_report(g).verdict


def _is_chain(edges) -> bool:
    """No induced 2K2: no two edges ab, cd with ad and cb both missing."""
    for (a, b), (c, d) in itertools.combinations(edges, 2):
        if a != c and b != d and (a, d) not in edges and (c, b) not in edges:
            return False
    return True


def _cover_search(gt: BipartiteGraph, diagonal_rule: bool) -> bool:
    edges = set(gt.edges())
    diag = {(i, i) for i in range(min(gt.nU, gt.nV))} & edges if diagonal_rule else set()
    free = sorted(edges - diag)
    if len(free) > MAX_COVER_EDGES:
        raise TooLarge(f"cover oracle is limited to {MAX_COVER_EDGES} free edges, got {len(free)}")
    for k1 in range(len(free) + 1):
        for e1 in itertools.combinations(free, k1):
            e1 = frozenset(e1)
            if not _is_chain(e1):
                continue
            must = (edges - e1) | diag
            for k in range(len(e1) + 1):
                for extra in itertools.combinations(sorted(e1), k):
                    if _is_chain(must | set(extra)):
                        return True
    return False


def oracle_has_cover(gt: BipartiteGraph) -> bool:
    """Two chain graphs E1, E2 covering ``gt`` with every diagonal edge in E2 only."""
    return _cover_search(gt, diagonal_rule=True)


def oracle_has_chain_cover2(gt: BipartiteGraph) -> bool:
    """``gt`` is the union of two chain graphs."""
    return _cover_search(gt, diagonal_rule=False)


def sat_has_cover(gt: BipartiteGraph) -> bool:
    """Cover existence as a SAT instance handed to an external solver.

    One variable per edge and side says the edge belongs to E1 (resp. E2).
    Every edge lies in E1 or E2, diagonal edges lie in E2 only, and for every
    two edges (i, j), (k, l) of a side with i != k and j != l, one of (i, l),
    (k, j) must be on that side too, so no side contains an induced 2K2.
    Needs the optional ``python-sat`` package.
    """
    from pysat.solvers import Minisat22

    edges = gt.edges()
    ids = {}
    for side in (0, 1):
        for e in edges:
            ids[side, e] = len(ids) + 1
    cls = []
    for e in edges:
        if e[0] == e[1]:
            cls += [[-ids[0, e]], [ids[1, e]]]
        else:
            cls.append([ids[0, e], ids[1, e]])
    for side in (0, 1):
        for (i, j), (k, l) in itertools.combinations(edges, 2):
            if i == k or j == l:
                continue
            cl = [-ids[side, (i, j)], -ids[side, (k, l)]]
            cl += [ids[side, x] for x in ((i, l), (k, j)) if (side, x) in ids]
            cls.append(cl)
    with Minisat22(bootstrap_with=cls) as solver:
        return solver.solve()


def oracle_is_interval_order(p: StrictOrder) -> bool:
    return not _has_two_plus_two(_pairs(p))


# ---------------------------------------------------------------------------
# alternating patterns on plain graphs


def has_ac4(g: Graph, sub=None) -> bool:
    """Four distinct vertices a, b, c, d with ab, cd in ``sub`` and bc, da non-edges."""
    sub = _edge_set(g, sub)
    for (a, b), (c, d) in itertools.product(sub, repeat=2):
        if len({a, b, c, d}) == 4 and not g.has_edge(b, c) and not g.has_edge(d, a):
            return True
    return False


def oracle_is_threshold(g: Graph) -> bool:
    return not has_ac4(g)


def _edge_set(g: Graph, sub):
    if sub is None:
        sub = g.edges()
    out = set()
    for a, b in sub:
        out.add((a, b))
        out.add((b, a))
    return out


def oracle_has_alternating_cycle(g: Graph, sub) -> bool:
    """Search closed walks that alternate a host non-edge and a ``sub`` edge.

    Depth-first over simple paths of (vertex, next-step) states; any closed
    alternating walk contains such a simple closed path.
    """
    sub = _edge_set(g, sub)
    n = g.n
    nxt = {}
    for v in range(n):
        nxt[(v, 0)] = [(w, 1) for w in range(n) if w != v and not g.has_edge(v, w)]
        nxt[(v, 1)] = [(w, 0) for w in range(n) if (v, w) in sub]

    def dfs(state, start, on_path):
        for s in nxt[state]:
            if s == start:
                return True
            if s not in on_path:
                on_path.add(s)
                if dfs(s, start, on_path):
                    return True
                on_path.discard(s)
        return False

    return any(dfs((v, 0), (v, 0), {(v, 0)}) for v in range(n))


def alternating_6_cycles(g: Graph, distinct: bool = True) -> Iterator[tuple[int, ...]]:
    """Tuples v1..v6 with v2v3, v4v5, v6v1 edges and v1v2, v3v4, v5v6 non-edges.

    With ``distinct=False`` repeated vertices are allowed (non-edges still
    join two different vertices).
    """
    n = g.n
    adj = [set(g.neighbors(v)) for v in range(n)]
    non = [set(range(n)) - adj[v] - {v} for v in range(n)]
    for v1 in range(n):
        for v2 in non[v1]:
            for v3 in adj[v2]:
                for v4 in non[v3]:
                    for v5 in adj[v4]:
                        for v6 in non[v5] & adj[v1]:
                            t = (v1, v2, v3, v4, v5, v6)
                            if not distinct or len(set(t)) == 6:
                                yield t


def find_ap5(g: Graph):
    """An alternating 6-cycle on exactly five distinct vertices, or None."""
    for t in alternating_6_cycles(g, distinct=False):
        if len(set(t)) == 5:
            return t
    return None


def find_double_ap6(g: Graph):
    """A six-vertex alternating cycle whose chords v1v3 and v2v6 (or a rotation by two) are edges."""
    for t in alternating_6_cycles(g):
        for s in (0, 2, 4):
            w = t[s:] + t[:s]
            if g.has_edge(w[0], w[2]) and g.has_edge(w[1], w[5]):
                return t
    return None


def naive_phi1_keys(g: Graph, literal: dict) -> set:
    """Clause pairs from every alternating 6-cycle whose three edges carry
    pairwise non-complementary literals.

    ``literal`` maps each edge (a, b) with a < b to an int literal
    (2 * variable + negated).  Each pair is returned as a frozenset of its
    two clauses, each clause a frozenset of literals.
    """
    keys = set()
    for t in alternating_6_cycles(g, distinct=False):
        es = {tuple(sorted(p)) for p in ((t[1], t[2]), (t[3], t[4]), (t[5], t[0]))}
        if len(es) != 3:
            continue
        ls = [literal[e] for e in es]
        if any(x == y ^ 1 for x, y in itertools.combinations(ls, 2)):
            continue
        keys.add(frozenset((frozenset(ls), frozenset(x ^ 1 for x in ls))))
    return keys


def monochromatic_ac6(g: Graph, color: dict):
    """An alternating 6-cycle whose three edges share one colour, or None.

    ``color`` maps each edge (a, b) with a < b to a colour value.
    """
    for t in alternating_6_cycles(g, distinct=False):
        cs = {color[tuple(sorted(p))] for p in ((t[1], t[2]), (t[3], t[4]), (t[5], t[0]))}
        if len(cs) == 1:
            return t
    return None


# ---------------------------------------------------------------------------
# SAT


def brute_force_sat(clauses, max_vars: int = 20) -> bool | None:
    """Exhaustive satisfiability after pure-literal elimination; None if too many variables remain."""
    clauses = [frozenset(c) for c in clauses]
    while True:
        lits = {x for c in clauses for x in c}
        pure = {x for x in lits if x ^ 1 not in lits}
        if not pure:
            break
        clauses = [c for c in clauses if not c & pure]
    vars_ = sorted({x >> 1 for c in clauses for x in c})
    if len(vars_) > max_vars:
        return None
    pos = {v: t for t, v in enumerate(vars_)}
    space = np.arange(1 << len(vars_), dtype=np.int64)
    alive = np.ones(space.size, dtype=bool)
    for c in clauses:
        sat = np.zeros(space.size, dtype=bool)
        for x in c:
            bit = (space >> pos[x >> 1]) & 1
            sat |= bit == (0 if x & 1 else 1)
        alive &= sat
        if not alive.any():
            return False
    return True


# ---------------------------------------------------------------------------
# generators


def random_pi_instance(n: int, seed: int) -> tuple[Graph, PiRepresentation]:
    """Random apex permutation and random intervals on 2n distinct integer coordinates."""
    rng = random.Random(seed)
    apex = list(range(n))
    rng.shuffle(apex)
    coords = list(range(2 * n))
    rng.shuffle(coords)
    ivs = tuple(tuple(sorted(coords[2 * x: 2 * x + 2])) for x in range(n))
    rep = PiRepresentation(tuple(apex), ivs)
    return represented_graph(rep), rep


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph.from_edges(n, [(a, b) for a, b in itertools.combinations(range(n), 2) if rng.random() < p])


def random_poset(n: int, seed: int, density: float | None = None) -> StrictOrder:
    """Transitive closure of a random DAG on randomly labelled elements."""
    rng = random.Random(seed)
    if density is None:
        density = rng.uniform(0.05, 0.6)
    labels = list(range(n))
    rng.shuffle(labels)
    above = [0] * n  # above[x] = set of positions above position x, as bits
    for x in range(n - 1, -1, -1):
        for y in range(x + 1, n):
            if rng.random() < density:
                above[x] |= (1 << y) | above[y]
    rel = [(labels[x], labels[y]) for x in range(n) for y in range(n) if above[x] >> y & 1]
    return StrictOrder.from_pairs(n, rel)


def random_permutation_graph(n: int, seed: int) -> Graph:
    rng = random.Random(seed)
    p1, p2 = list(range(n)), list(range(n))
    rng.shuffle(p1)
    rng.shuffle(p2)
    return Graph.from_edges(n, [(a, b) for a, b in itertools.combinations(range(n), 2)
                                if (p1[a] - p1[b]) * (p2[a] - p2[b]) < 0])


def random_interval_graph(n: int, seed: int) -> Graph:
    rng = random.Random(seed)
    ivs = []
    for _ in range(n):
        a, b = sorted(rng.sample(range(4 * n + 2), 2))
        ivs.append((a, b))
    return Graph.from_edges(n, [(x, y) for x, y in itertools.combinations(range(n), 2)
                                if not (ivs[x][1] < ivs[y][0] or ivs[y][1] < ivs[x][0])])
