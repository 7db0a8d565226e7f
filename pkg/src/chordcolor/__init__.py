"""
chordcolor - list 3-coloring of circle graphs.

Decides list 3-coloring of circle graphs given as chord diagrams, returns
witness colorings, and decides 3-page book embeddings of ordered graphs.
"""

__version__ = "0.1.0"

from chordcolor.bookembed import OrderedGraph, PageAssignment, embed3
from chordcolor.chords import Chord, ChordDiagram, ContractViolation, crosses
from chordcolor.instance import (
    Color,
    Instance,
    PartialColoring,
    reduce,
    validate_coloring,
)
from chordcolor.oracle import BudgetExceeded, oracle_solve
from chordcolor.result import SolveResult, Verdict
from chordcolor.solver import brute_force_small, solve

__all__ = [
    "BudgetExceeded",
    "Chord",
    "ChordDiagram",
    "Color",
    "ContractViolation",
    "Instance",
    "OrderedGraph",
    "PageAssignment",
    "PartialColoring",
    "SolveResult",
    "Verdict",
    "brute_force_small",
    "crosses",
    "embed3",
    "oracle_solve",
    "reduce",
    "solve",
    "validate_coloring",
]
