"""Shared instance builders and structural checks for the test suite."""

from __future__ import annotations

from dataclasses import dataclass, field

from pirecog import oracle
from pirecog.conflict import assign_literals, assignment_to_coloring, conflict_graph, two_color
from pirecog.domination import build_context
from pirecog.errors import OddCycle, Unsatisfiable
from pirecog.formulas import Phi2, SolveTrace, build_phi1, build_phi2, solve_phi
from pirecog.graphs import Graph, StrictOrder


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def two_plus_two() -> StrictOrder:
    return StrictOrder.from_pairs(4, [(0, 1), (2, 3)])


def standard_example(k: int) -> StrictOrder:
    """a_i < b_j for i != j on 2k elements."""
    return StrictOrder.from_pairs(2 * k, [(i, k + j) for i in range(k) for j in range(k) if i != j])


def edge_dict(g: Graph, value) -> dict:
    return {(a, b): value(a, b) for a, b in g.edges()}


@dataclass
class Analysis:
    """Everything the structural suites look at for one order."""

    order: StrictOrder
    bipartite: bool
    ctx: object = None
    cg: object = None
    chi0: object = None
    la: object = None
    phi1: object = None
    phi2: object = None
    sat: bool | None = None
    tau: object = None
    trace: SolveTrace = field(default_factory=SolveTrace)


def analyse(p: StrictOrder) -> Analysis:
    ctx = build_context(p)
    cg = conflict_graph(ctx.H)
    try:
        chi0 = two_color(cg)
    except OddCycle:
        return Analysis(p, False, ctx, cg)
    la = assign_literals(cg, chi0)
    a = Analysis(p, True, ctx, cg, chi0, la, build_phi1(ctx, la), build_phi2(ctx, la))
    try:
        a.tau = solve_phi(a.phi1, a.phi2, la, a.trace)
        a.sat = True
    except Unsatisfiable:
        a.sat = False
    return a


def e0_isolated(a: Analysis) -> bool:
    return not any(a.cg.committed[i, i] for i in range(a.ctx.n))


def phi1_disjoint(phi1) -> bool:
    seen = {}
    for p in phi1:
        for v in p.variables:
            if seen.setdefault(v, p.key) != p.key:
                return False
    return True


def phi1_literal_bound(phi1, k: int) -> bool:
    """Clauses of phi1 at most 2k/3: each pair of two clauses uses three variables of its own."""
    return 2 * len(phi1) <= 2 * k / 3


def phi2_size_bound(a: Analysis) -> bool:
    n, m = a.ctx.n, a.ctx.m
    return len(a.phi2) <= n * (n + m)


def congruence_violations(a: Analysis) -> list:
    """phi2'' clauses {x, y} whose partner literal y sits in a phi1 clause
    (y | c | d) without {x, ~c} or {x, ~d} also in phi2''."""
    dp = {frozenset(c) for c in a.phi2.clauses("doubleprime")}
    bad = []
    for cl in dp:
        lits = tuple(cl)
        if len(lits) != 2:
            continue
        for x, y in (lits, lits[::-1]):
            for pair in a.phi1:
                for clause in (pair.alpha, pair.beta):
                    if y not in clause or x == y ^ 1:
                        continue
                    rest = list(clause)
                    rest.remove(y)
                    c, d = rest
                    if frozenset((x, c ^ 1)) not in dp and frozenset((x, d ^ 1)) not in dp:
                        bad.append((x, y, clause))
    return bad


def h_literals(a: Analysis) -> dict:
    h = a.ctx.H
    out = {}
    for e in h.edges():
        x, y = h.endpoints(e)
        out[(min(x, y), max(x, y))] = a.la.literal(e)
    return out


def h_colors(a: Analysis, tau) -> dict:
    h = a.ctx.H
    chi = assignment_to_coloring(a.la, a.chi0, tau)
    out = {}
    for e in h.edges():
        x, y = h.endpoints(e)
        out[(min(x, y), max(x, y))] = int(chi[e])
    return out


def cnf(a: Analysis) -> list:
    return a.phi1.clauses() + a.phi2.clauses()


def phi1_only(a: Analysis):
    return solve_phi(a.phi1, Phi2.empty(), a.la)


def small_orders(max_n: int = 5):
    for n in range(max_n + 1):
        yield from oracle.all_posets(n)


def random_orders(n: int, count: int, seed0: int = 0):
    for s in range(count):
        yield oracle.random_poset(n, seed0 + s)
