"""Exception types shared across the package."""

from __future__ import annotations


class PiError(Exception):
    """Base class for every error raised by this package."""


class InputError(PiError, ValueError):
    """Malformed or inconsistent input (bad ids, size mismatch, ...)."""


class CyclicRelation(PiError):
    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__(f"relation contains the cycle {self.cycle}")


class NotComparability(PiError):
    def __init__(self, edge=None, message="graph has no transitive orientation"):
        self.edge = edge
        super().__init__(message if edge is None else f"{message} (edge {edge} forced both ways)")


class OddCycle(PiError):
    """The conflict graph is not bipartite; `cycle` lists its EdgeIds in order."""

    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__(f"conflict graph has an odd cycle of length {len(self.cycle)}")


class Unsatisfiable(PiError):
    def __init__(self, variable: int | None = None):
        self.variable = variable
        msg = "formula is unsatisfiable"
        if variable is not None:
            msg += f" (x{variable} and its negation share a strong component)"
        super().__init__(msg)


class NoCompletion(PiError):
    """No threshold completion exists; `cycle` is an alternating cycle v1..v2k."""

    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__(f"alternating cycle {self.cycle} blocks a threshold completion")


class NotIntervalOrder(PiError):
    def __init__(self, pair=None):
        self.pair = pair
        super().__init__(f"order is not an interval order (incomparable down-sets at {pair})")


class InternalContradiction(PiError, AssertionError):
    """A self-check failed; this always indicates a bug, never a property of the input."""


class TooLarge(PiError, ValueError):
    pass
