"""Stable rank inference for C*-algebra expressions."""

from .core import INF, InconsistencyError, RankInterval, TriBool
from .dsl import ParseError, format_expr, parse
from .engine import Axiom, InferenceResult, RankState, SizeLimitError, explain, infer

__all__ = [
    "INF", "Axiom", "InconsistencyError", "InferenceResult", "ParseError", "RankInterval",
    "RankState", "SizeLimitError", "TriBool", "explain", "format_expr", "infer", "parse",
]
__version__ = "1.0.0"
