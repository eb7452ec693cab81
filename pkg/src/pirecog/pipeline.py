"""End-to-end recognition of graphs and orders."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .conflict import assign_literals, conflict_graph, two_color
from .cover import LinearIntervalCover, cover_from_assignment, verify_cover
from .domination import build_context
from .errors import InternalContradiction, NotComparability, OddCycle, Unsatisfiable
from .formulas import build_phi1, build_phi2, solve_phi
from .graphs import Graph, StrictOrder, complement, intersect
from .orientation import transitive_orientation
from .representation import PiRepresentation, RealizerPair, build_representation, orders_from_cover, verify_representation

NOT_COCOMPARABILITY = "not_cocomparability"
NOT_BIPARTITE = "conflict_graph_not_bipartite"
UNSATISFIABLE = "formula_unsatisfiable"


@dataclass
class RecognitionOutcome:
    accepted: bool
    stage: str | None = None
    witness: dict | None = None
    order: StrictOrder | None = None
    realizer: RealizerPair | None = None
    cover: LinearIntervalCover | None = None
    representation: PiRepresentation | None = None
    timings: dict[str, float] = field(default_factory=dict)

    def to_json(self) -> dict:
        if self.accepted:
            return {"status": "pi", **self.representation.to_json()}
        return {"status": "not_pi", "stage": self.stage, "witness": self.witness}


class _Clock:
    def __init__(self, timings):
        self.timings = timings
        self.last = time.perf_counter()

    def lap(self, name):
        now = time.perf_counter()
        self.timings[name] = self.timings.get(name, 0.0) + now - self.last
        self.last = now


def _recognize(p: StrictOrder, clock: _Clock) -> RecognitionOutcome:
    timings = clock.timings
    ctx = build_context(p)
    cg = conflict_graph(ctx.H)
    clock.lap("conflict_graph")
    try:
        chi0 = two_color(cg)
    except OddCycle as exc:
        cycle = [[e.a, e.b] for e in exc.cycle]
        return RecognitionOutcome(False, NOT_BIPARTITE, {"cycle": cycle}, order=p, timings=timings)
    la = assign_literals(cg, chi0)
    clock.lap("coloring")
    phi1 = build_phi1(ctx, la)
    phi2 = build_phi2(ctx, la)
    clock.lap("formulas")
    try:
        tau = solve_phi(phi1, phi2, la)
    except Unsatisfiable as exc:
        members = [[i, j] for i, j in zip(*(la.var_cross == exc.variable).nonzero())]
        witness = {"variable": exc.variable, "edges": [[int(i), int(j)] for i, j in members]}
        return RecognitionOutcome(False, UNSATISFIABLE, witness, order=p, timings=timings)
    clock.lap("solve")
    cover = cover_from_assignment(ctx, la, chi0, tau)
    clock.lap("cover")
    rp = orders_from_cover(ctx, cover)
    # certified acceptance: both checks run on every instance
    if intersect(rp.P1, rp.P2) != p or not verify_cover(ctx, cover):
        raise InternalContradiction("realizer or cover failed certification")
    rep = build_representation(rp)
    clock.lap("representation")
    return RecognitionOutcome(True, order=p, realizer=rp, cover=cover, representation=rep, timings=timings)


def recognize_order(p: StrictOrder) -> RecognitionOutcome:
    """Decide whether ``p`` is the intersection of a linear order and an interval order."""
    clock = _Clock({})
    out = _recognize(p, clock)
    if out.accepted and not verify_representation(out.representation, p.incomparability_graph()):
        raise InternalContradiction("representation does not reproduce the order")
    return out


def recognize_graph(g: Graph) -> RecognitionOutcome:
    """Decide whether ``g`` is a PI graph; accepted outcomes carry a verified representation."""
    clock = _Clock({})
    try:
        p = transitive_orientation(complement(g))
    except NotComparability as exc:
        clock.lap("orientation")
        witness = {"edge": list(exc.edge) if exc.edge else None}
        return RecognitionOutcome(False, NOT_COCOMPARABILITY, witness, timings=clock.timings)
    clock.lap("orientation")
    out = _recognize(p, clock)
    if out.accepted:
        if not verify_representation(out.representation, g):
            raise InternalContradiction("representation does not reproduce the input graph")
        clock.lap("verify")
    return out


def is_trapezoid(g: Graph) -> bool:
    """Complement is a comparability graph and the conflict graph is bipartite."""
    try:
        p = transitive_orientation(complement(g))
    except NotComparability:
        return False
    return conflict_graph(build_context(p).H).odd_root is None
