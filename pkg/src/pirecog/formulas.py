"""Boolean formulas over the conflict-graph variables, and their solver.

``phi1`` is a list of clause pairs (alpha, not-alpha) on three literals, one
pair for every alternating 6-cycle whose three edges carry pairwise
non-complementary literals.  ``phi2`` is a 2-CNF with one clause per pair of
edges that would conflict once the diagonal u_i v_i edges are deleted.
``solve_phi`` decides phi1 & phi2 through a 2-SAT instance plus a one-pass
repair of the 3-clauses.

Literals use the integer encoding of :mod:`pirecog.conflict`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .conflict import LiteralAssignment, lit_str, make_lit, negate
from .errors import InternalContradiction, Unsatisfiable
from .graphs import EdgeId, SplitGraph, cross


def _host(ctx) -> SplitGraph:
    return ctx if isinstance(ctx, SplitGraph) else ctx.H


def _clause_str(lits) -> str:
    return "(" + " | ".join(lit_str(x) for x in lits) + ")"


# ---------------------------------------------------------------------------
# phi1


@dataclass(frozen=True)
class ClausePair:
    """alpha = (l_bc | ~l_cd | l_da) and its literal-wise negation.

    ``witness`` holds the edges bc, cd, da of the four-vertex configuration
    that produced the pair.
    """

    alpha: tuple[int, int, int]
    witness: tuple[EdgeId, EdgeId, EdgeId]

    @property
    def beta(self) -> tuple[int, int, int]:
        return tuple(negate(x) for x in self.alpha)

    @property
    def variables(self) -> frozenset[int]:
        return frozenset(x >> 1 for x in self.alpha)

    @property
    def key(self) -> frozenset:
        """Identity of the pair as a set of two clauses, each a set of literals."""
        return frozenset((frozenset(self.alpha), frozenset(self.beta)))

    def __str__(self):
        return f"{_clause_str(self.alpha)} & {_clause_str(self.beta)}"


@dataclass(frozen=True)
class Phi1:
    pairs: tuple[ClausePair, ...]

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def clauses(self) -> list[tuple[int, ...]]:
        out = []
        for p in self.pairs:
            out += [p.alpha, p.beta]
        return out

    def keys(self) -> set:
        return {p.key for p in self.pairs}


def build_phi1(ctx, la: LiteralAssignment, strict: bool = False) -> Phi1:
    """Clause pairs from four-vertex configurations.

    For every cross non-edge u_i v_j of H, look for u in U and v in V with
    committed edges u v_j, u v and u_i v whose literals l1 = l(u v_j),
    l2 = l(u v), l3 = l(u_i v) satisfy l1 != l2, l2 != l3, l1 != ~l3; each
    such choice gives alpha = (l1 | ~l2 | l3).  Reading the non-edge the
    other way round (a, c in V and b, d in U) selects the same u, v and the
    same clause, so one scan covers both.

    Pairs are kept once per distinct clause set.  With ``strict=True`` two
    distinct pairs sharing a variable raise InternalContradiction; by
    default such overlaps are kept (see :func:`phi1_overlaps`).
    """
    h = _host(ctx)
    base = h.base
    edge = np.array([[base.has_edge(i, j) for j in range(h.nV)] for i in range(h.nU)],
                    dtype=bool).reshape(h.nU, h.nV)
    lit = la.lit_cross
    com = la.committed
    found: dict[frozenset, ClausePair] = {}

    for i, j in zip(*np.nonzero(~edge)):
        B = np.flatnonzero(com[:, j])
        A = np.flatnonzero(com[i, :])
        if B.size == 0 or A.size == 0:
            continue
        mid = np.ix_(B, A)
        ok = com[mid]
        if not ok.any():
            continue
        l1 = lit[B, j][:, None]
        l3 = lit[i, A][None, :]
        l2 = lit[mid]
        ok &= (l2 != l1) & (l2 != l3) & (l1 != (l3 ^ 1))
        for r, c in zip(*np.nonzero(ok)):
            u, v = int(B[r]), int(A[c])
            alpha = (int(lit[u, j]), int(lit[u, v]) ^ 1, int(lit[i, v]))
            cand = ClausePair(alpha, (cross(u, int(j)), cross(u, v), cross(int(i), v)))
            old = found.get(cand.key)
            if old is None or sorted(cand.witness) < sorted(old.witness):
                found[cand.key] = cand

    pairs = sorted(found.values(), key=lambda p: sorted(p.witness))
    phi1 = Phi1(tuple(pairs))
    if strict:
        clash = phi1_overlaps(phi1)
        if clash:
            a, b = clash[0]
            raise InternalContradiction(f"clause pairs {a} and {b} share a variable")
    return phi1


def phi1_overlaps(phi1: Phi1) -> list[tuple[ClausePair, ClausePair]]:
    """Pairs of distinct clause pairs that share a variable."""
    by_var: dict[int, list[ClausePair]] = {}
    for p in phi1:
        for v in sorted(p.variables):
            by_var.setdefault(v, []).append(p)
    out = []
    seen = set()
    for ps in by_var.values():
        for a, b in itertools.combinations(ps, 2):
            key = (a.key, b.key)
            if key not in seen:
                seen.add(key)
                out.append((a, b))
    return out


# ---------------------------------------------------------------------------
# phi2


@dataclass(frozen=True, eq=False)
class Phi2:
    """Clauses (l(u_i v_t) | l(u_t v_j)) stored column-wise.

    ``i``, ``t``, ``j`` give the witness edges u_i v_t and u_t v_j, ``a``
    and ``b`` their literals; ``prime`` flags clauses touching an
    uncommitted edge.
    """

    i: np.ndarray
    t: np.ndarray
    j: np.ndarray
    a: np.ndarray
    b: np.ndarray
    prime: np.ndarray

    @classmethod
    def empty(cls) -> Phi2:
        z = np.zeros(0, dtype=np.int64)
        return cls(z, z, z, z, z, np.zeros(0, dtype=bool))

    def __len__(self):
        return int(self.a.size)

    def clauses(self, which: str = "all") -> list[tuple[int, int]]:
        sel = {"all": slice(None), "prime": self.prime, "doubleprime": ~self.prime}[which]
        return list(zip(self.a[sel].tolist(), self.b[sel].tolist()))

    def witness(self, idx: int) -> tuple[EdgeId, EdgeId]:
        i, t, j = int(self.i[idx]), int(self.t[idx]), int(self.j[idx])
        return cross(i, t), cross(t, j)


def build_phi2(ctx, la: LiteralAssignment) -> Phi2:
    """One clause per ordered pair (i, j) with u_i v_j outside E' and t with u_i v_t, u_t v_j in E'.

    E' is the cross edge set of H without the diagonal; i = j is allowed.
    """
    h = _host(ctx)
    n = h.nU
    if h.nV != n:
        raise ValueError("phi2 needs a split graph with equal sides")
    base = h.base
    eprime = np.array([[base.has_edge(i, j) for j in range(n)] for i in range(n)], dtype=bool).reshape(n, n)
    np.fill_diagonal(eprime, False)
    cols = eprime.T
    parts_i, parts_t, parts_j = [], [], []
    for i in range(n):
        J = np.flatnonzero(~eprime[i])
        M = cols[J] & eprime[i][None, :]
        jj, t = np.nonzero(M)
        parts_i.append(np.full(t.size, i, dtype=np.int64))
        parts_t.append(t)
        parts_j.append(J[jj])
    if not parts_i:
        return Phi2.empty()
    I, T, J = (np.concatenate(x).astype(np.int64) for x in (parts_i, parts_t, parts_j))
    lit = la.lit_cross
    a, b = lit[I, T], lit[T, J]
    prime = ~la.committed[I, T] | ~la.committed[T, J]
    return Phi2(I, T, J, a, b, prime)


# ---------------------------------------------------------------------------
# solving


@dataclass(frozen=True)
class TruthAssignment:
    values: tuple[bool, ...]

    def __len__(self):
        return len(self.values)

    def __getitem__(self, var: int) -> bool:
        return self.values[var]

    def __array__(self, dtype=None, copy=None):
        return np.array(self.values, dtype=bool if dtype is None else dtype)

    def lit(self, lit: int) -> bool:
        return self.values[lit >> 1] != bool(lit & 1)

    def satisfies(self, clause: Iterable[int]) -> bool:
        return any(self.lit(x) for x in clause)


def solve_2sat(clauses: Iterable[Sequence[int]], k: int) -> TruthAssignment:
    """Satisfy a CNF of 1- and 2-literal clauses, or raise Unsatisfiable.

    Satisfiability comes from strongly connected components of the
    implication graph.  The assignment is then built variable by variable,
    trying false first and committing to true only when setting false
    implies a contradiction; unmentioned variables stay false.
    """
    succ: dict[int, list[int]] = {}
    for cl in clauses:
        if len(cl) == 1:
            (x,) = cl
            succ.setdefault(x ^ 1, []).append(x)
        elif len(cl) == 2:
            x, y = cl
            succ.setdefault(x ^ 1, []).append(y)
            succ.setdefault(y ^ 1, []).append(x)
        else:
            raise ValueError(f"clause {cl} has more than two literals")
        if max(cl) >= 2 * k or min(cl) < 0:
            raise ValueError(f"clause {cl} mentions a variable outside 0..{k - 1}")

    nodes = sorted(set(succ) | {y for ys in succ.values() for y in ys} | {x ^ 1 for x in succ})
    comp = _tarjan(nodes, succ)
    for x in nodes:
        if not x & 1 and comp[x] == comp[x ^ 1]:
            raise Unsatisfiable(x >> 1)

    value: dict[int, bool] = {}

    def propagate(start: int) -> list[int] | None:
        """Set ``start`` and everything it implies true; None on a contradiction."""
        done = [start]
        value[start], value[start ^ 1] = True, False
        stack = [start]
        while stack:
            x = stack.pop()
            for y in succ.get(x, ()):
                state = value.get(y)
                if state is None:
                    value[y], value[y ^ 1] = True, False
                    done.append(y)
                    stack.append(y)
                elif not state:
                    for z in done:
                        del value[z], value[z ^ 1]
                    return None
        return done

    for x in nodes:
        if x & 1 or x in value:
            continue
        if propagate(x ^ 1) is None and propagate(x) is None:
            raise InternalContradiction(f"2-SAT propagation failed on satisfiable x{x >> 1}")
    out = [False] * k
    for x in nodes:
        if not x & 1:
            out[x >> 1] = value[x]
    return TruthAssignment(tuple(out))


def _tarjan(nodes, succ) -> dict[int, int]:
    """Iterative Tarjan; returns a component id per node."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    comp: dict[int, int] = {}
    stack: list[int] = []
    counter = 0
    ncomp = 0
    for root in nodes:
        if root in index:
            continue
        work = [(root, iter(succ.get(root, ())))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        while work:
            v, it = work[-1]
            pushed = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    work.append((w, iter(succ.get(w, ()))))
                    pushed = True
                    break
                if w not in comp:
                    low[v] = min(low[v], index[w])
            if pushed:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
    return comp


def _normalise_2clause(a: int, b: int):
    """Sorted tuple without repeats, or None for a tautology."""
    if a == b:
        return (a,)
    if a == b ^ 1:
        return None
    return (a, b) if a < b else (b, a)


def build_phi0(phi1: Iterable[ClausePair], units: Iterable[int]) -> set[tuple[int, int]]:
    """For each unit literal l and the clause pair mentioning l or ~l, written
    (l | x | y) & (~l | ~x | ~y), the 2-clause (~x | ~y)."""
    by_lit: dict[int, tuple[int, int, int]] = {}
    for p in phi1:
        for cl in (p.alpha, p.beta):
            for x in cl:
                by_lit[x] = cl
    out = set()
    for u in units:
        cl = by_lit.get(u)
        if cl is None:
            continue
        x, y = [z for z in cl if z != u]
        c = _normalise_2clause(negate(x), negate(y))
        if c is not None:
            out.add(c)
    return out


@dataclass
class SolveTrace:
    """Intermediate formulas of :func:`solve_phi`, for inspection and tests."""

    phi1_kept: list[ClausePair] = field(default_factory=list)
    phi2dp: set = field(default_factory=set)
    phi0: set = field(default_factory=set)
    repaired: list[int] = field(default_factory=list)


def solve_phi(phi1: Phi1, phi2: Phi2, la: LiteralAssignment, trace: SolveTrace | None = None) -> TruthAssignment:
    """Decide phi1 & phi2 and return a satisfying assignment, or raise Unsatisfiable."""
    if trace is None:
        trace = SolveTrace()
    k = la.k
    trivial = la.trivial

    # uncommitted edges are alone in their component and red, so their literal is x_i
    values = np.array(trivial, dtype=bool)

    dp = set()
    sel = ~phi2.prime
    for a, b in zip(phi2.a[sel].tolist(), phi2.b[sel].tolist()):
        c = _normalise_2clause(a, b)
        if c is not None:
            dp.add(c)
    kept = []
    for p in phi1:
        if len(set(p.alpha)) == 3:
            kept.append(p)
            continue
        for cl in (p.alpha, p.beta):
            dp.add(tuple(sorted(set(cl))))
    units = [c[0] for c in dp if len(c) == 1]
    phi0 = build_phi0(kept, units)
    trace.phi1_kept, trace.phi2dp, trace.phi0 = kept, dp, phi0

    two = solve_2sat(sorted(dp | phi0), k)
    in_two = {x >> 1 for c in dp | phi0 for x in c}
    for v in in_two:
        values[v] = two[v]

    for p in kept:
        lits = [bool(values[x >> 1]) != bool(x & 1) for x in p.alpha]
        if lits[0] == lits[1] == lits[2]:
            v = min(p.alpha) >> 1
            values[v] = not values[v]
            trace.repaired.append(v)

    tau = TruthAssignment(tuple(bool(x) for x in values))
    _verify(tau, phi1, phi2)
    return tau


def _verify(tau: TruthAssignment, phi1: Phi1, phi2: Phi2):
    for cl in phi1.clauses():
        if not tau.satisfies(cl):
            raise InternalContradiction(f"assignment violates phi1 clause {_clause_str(cl)}")
    if len(phi2):
        vals = np.asarray(tau)
        sat_a = vals[phi2.a >> 1] != (phi2.a & 1).astype(bool)
        sat_b = vals[phi2.b >> 1] != (phi2.b & 1).astype(bool)
        bad = np.flatnonzero(~(sat_a | sat_b))
        if bad.size:
            c = (int(phi2.a[bad[0]]), int(phi2.b[bad[0]]))
            raise InternalContradiction(f"assignment violates phi2 clause {_clause_str(c)}")


def to_dimacs(phi1: Phi1, phi2: Phi2, k: int) -> str:
    """DIMACS CNF text of phi1 & phi2 (variables numbered from 1)."""
    clauses = phi1.clauses() + phi2.clauses()
    lines = [f"p cnf {k} {len(clauses)}"]
    for cl in clauses:
        lines.append(" ".join(str(-((x >> 1) + 1) if x & 1 else (x >> 1) + 1) for x in cl) + " 0")
    return "\n".join(lines) + "\n"
