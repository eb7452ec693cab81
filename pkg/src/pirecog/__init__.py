"""Recognition of PI (simple-triangle) graphs and linear-interval orders."""

from .errors import (
    CyclicRelation,
    InputError,
    InternalContradiction,
    NoCompletion,
    NotComparability,
    NotIntervalOrder,
    OddCycle,
    PiError,
    TooLarge,
    Unsatisfiable,
)
from .graphs import BipartiteGraph, EdgeId, EdgeSubset, Graph, SplitGraph, StrictOrder
from .pipeline import RecognitionOutcome, is_trapezoid, recognize_graph, recognize_order
from .representation import PiRepresentation, RealizerPair, verify_representation

__all__ = [
    "BipartiteGraph",
    "CyclicRelation",
    "EdgeId",
    "EdgeSubset",
    "Graph",
    "InputError",
    "InternalContradiction",
    "NoCompletion",
    "NotComparability",
    "NotIntervalOrder",
    "OddCycle",
    "PiError",
    "PiRepresentation",
    "RealizerPair",
    "RecognitionOutcome",
    "SplitGraph",
    "StrictOrder",
    "TooLarge",
    "Unsatisfiable",
    "is_trapezoid",
    "recognize_graph",
    "recognize_order",
    "verify_representation",
]
