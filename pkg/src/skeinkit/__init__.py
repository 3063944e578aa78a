"""Exact evaluation of framed link invariants and checks on small fusion data."""

from .diagram import BraidWord, MorseDiagram, braid_closure, parse_diagram
from .kernels import BACKEND
from .laurent import GaussInt, LaurentPoly, ParseError, parse_poly
from .skein import (
    KauffmanVariant, bracket, evaluate, evaluator_names, kauffman_poly, twin_bracket,
    two_term_state_sum,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BraidWord",
    "GaussInt",
    "KauffmanVariant",
    "LaurentPoly",
    "MorseDiagram",
    "ParseError",
    "braid_closure",
    "bracket",
    "evaluate",
    "evaluator_names",
    "kauffman_poly",
    "parse_diagram",
    "parse_poly",
    "twin_bracket",
    "two_term_state_sum",
]
