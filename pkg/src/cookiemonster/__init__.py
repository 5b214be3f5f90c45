"""Exact solver, classifiers, and game engine for the cookie-jar puzzle."""

from .core import (
    InvalidMoveError,
    JarSet,
    LimitExceededError,
    Move,
    MoveMultiset,
    SolveResult,
    apply_move,
    bounds,
    covers,
    parse_jarset,
    subset_sums,
)
from .solver import oracle_solve, solve, verify_trace

__all__ = [
    "InvalidMoveError",
    "JarSet",
    "LimitExceededError",
    "Move",
    "MoveMultiset",
    "SolveResult",
    "apply_move",
    "bounds",
    "covers",
    "oracle_solve",
    "parse_jarset",
    "solve",
    "subset_sums",
    "verify_trace",
]
