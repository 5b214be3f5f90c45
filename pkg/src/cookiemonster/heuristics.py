"""Three greedy emptying strategies, each yielding a full move trace.

None of them is optimal on every instance; the test suite exhibits a
losing case for each.  All step functions are pure and deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import JarSet, Move, apply_move

ALGORITHMS = ("emja", "tmca", "ba")


@dataclass(frozen=True)
class HeuristicRun:
    algorithm: str
    trace: tuple[Move, ...]
    move_count: int


def emja_step(state: JarSet) -> Move:
    """Empty the most jars: minimize distinct nonzero counts after the move.

    Scans every (subset, amount) pair exhaustively.  Ties prefer more
    cookies removed, then the smaller amount, then the lexicographically
    smallest target set.
    """
    if state.n == 0:
        raise ValueError("empty state")
    values = state.elements
    best_key = None
    best_move = None
    for size in range(1, state.n + 1):
        for subset in combinations(range(state.n), size):
            for amount in range(1, values[subset[0]] + 1):  # min of ascending subset
                after = list(values)
                for i in subset:
                    after[i] -= amount
                distinct = len({v for v in after if v > 0})
                key = (distinct, -amount * size, amount, subset)
                if best_key is None or key < best_key:
                    best_key = key
                    best_move = Move(amount, subset)
    assert best_move is not None
    return best_move


def tmca_step(state: JarSet) -> Move:
    """Take the most cookies: maximize amount times jars hit.

    The optimum always has the shape "take v from every jar >= v" for
    some jar count v (any other move can be widened or deepened without
    losing cookies), so only distinct counts are scanned.  Ties prefer
    the larger amount.
    """
    if state.n == 0:
        raise ValueError("empty state")
    values = state.elements
    best_key = None
    best_move = None
    for i, v in enumerate(values):
        targets = tuple(range(i, state.n))  # every jar >= v
        key = (v * len(targets), v)
        if best_key is None or key > best_key:
            best_key = key
            best_move = Move(v, targets)
    assert best_move is not None
    return best_move


def ba_step(state: JarSet) -> Move:
    """Binary strategy: take the largest power of two that fits anywhere."""
    if state.n == 0:
        raise ValueError("empty state")
    values = state.elements
    amount = 1 << (values[-1].bit_length() - 1)
    targets = tuple(i for i, v in enumerate(values) if v >= amount)
    return Move(amount, targets)


_STEPS = {"emja": emja_step, "tmca": tmca_step, "ba": ba_step}


def run(algorithm: str, jars: JarSet) -> HeuristicRun:
    """Iterate one strategy until the jars are empty.

    Terminates because every step removes at least one cookie.
    """
    algorithm = algorithm.lower()
    if algorithm not in _STEPS:
        raise ValueError(f"unknown algorithm {algorithm!r}; pick one of {ALGORITHMS}")
    step = _STEPS[algorithm]
    state = jars
    trace: list[Move] = []
    while state.n:
        move = step(state)
        trace.append(move)
        state = apply_move(state, move)
    return HeuristicRun(algorithm, tuple(trace), len(trace))
