"""Core domain types and subset-sum machinery for the jar-emptying puzzle.

A puzzle instance is a set of cookie jars with pairwise distinct counts.
One move picks a subset of jars and removes the same positive amount from
each.  Everything here is exact integer arithmetic; all values are
immutable after construction and every operation is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

#: Largest jar value accepted anywhere (bounds subset-sum memory).
MAX_ELEMENT = 1_000_000


class LimitExceededError(ValueError):
    """A value or problem size exceeds a configured limit."""


class InvalidMoveError(ValueError):
    """A move is not legal in the state it was applied to."""


def _canonical_jars(values: Iterable[int]) -> tuple[int, ...]:
    out = set()
    for v in values:
        if not isinstance(v, int) or isinstance(v, bool):
            raise TypeError(f"jar value must be an int, got {v!r}")
        if v < 0:
            raise ValueError(f"jar value must be >= 0, got {v}")
        if v > MAX_ELEMENT:
            raise LimitExceededError(f"jar value {v} exceeds limit {MAX_ELEMENT}")
        if v > 0:
            out.add(v)
    return tuple(sorted(out))


@dataclass(frozen=True)
class JarSet:
    """Ascending distinct positive jar counts.

    Duplicates are merged and zeros dropped on construction: jars holding
    the same count behave identically, so they are one jar for our
    purposes.
    """

    elements: tuple[int, ...]

    def __init__(self, values: Iterable[int] = ()):
        object.__setattr__(self, "elements", _canonical_jars(values))

    @property
    def n(self) -> int:
        return len(self.elements)

    @property
    def total(self) -> int:
        return sum(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, v: int) -> bool:
        return v in self.elements

    def __str__(self) -> str:
        return "{" + ",".join(str(v) for v in self.elements) + "}"

    def scaled(self, c: int) -> "JarSet":
        """The same jars with every count multiplied by c >= 1."""
        if c < 1:
            raise ValueError("scale factor must be >= 1")
        return JarSet(v * c for v in self.elements)


@dataclass(frozen=True)
class MoveMultiset:
    """A multiset of removal amounts, stored nondecreasing."""

    amounts: tuple[int, ...]

    def __init__(self, amounts: Iterable[int] = ()):
        amts = tuple(sorted(amounts))
        for a in amts:
            if not isinstance(a, int) or isinstance(a, bool):
                raise TypeError(f"amount must be an int, got {a!r}")
            if a < 1:
                raise ValueError(f"amount must be >= 1, got {a}")
        object.__setattr__(self, "amounts", amts)

    @property
    def m(self) -> int:
        return len(self.amounts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.amounts)

    def __len__(self) -> int:
        return len(self.amounts)

    def __str__(self) -> str:
        return "<" + ",".join(str(a) for a in self.amounts) + ">"


@dataclass(frozen=True)
class Move:
    """Remove `amount` cookies from each jar listed in `targets`.

    Targets are indices into the current (canonical, ascending) state.
    """

    amount: int
    targets: tuple[int, ...]

    def __init__(self, amount: int, targets: Iterable[int]):
        object.__setattr__(self, "amount", amount)
        object.__setattr__(self, "targets", tuple(sorted(set(targets))))

    def __str__(self) -> str:
        return f"take {self.amount} from jars {list(self.targets)}"


@dataclass(frozen=True)
class SolveResult:
    """Exact answer for one instance: the move count, a witness, a trace."""

    cm: int
    witness: MoveMultiset
    trace: tuple[Move, ...]
    lower_bound: int
    upper_bound: int


def subset_sums(multiset: MoveMultiset | Iterable[int]) -> set[int]:
    """All sums of nonempty sub-multisets of the given amounts."""
    amounts = multiset.amounts if isinstance(multiset, MoveMultiset) else tuple(multiset)
    sums = {0}
    for a in amounts:
        sums |= {s + a for s in sums}
    sums.discard(0)
    return sums


def covers(multiset: MoveMultiset, jars: JarSet) -> bool:
    """True iff every jar count is a sub-multiset sum of the amounts."""
    return set(jars.elements) <= subset_sums(multiset)


def bounds(jars: JarSet) -> tuple[int, int]:
    """Universal (lower, upper) bracket on the minimum move count.

    A schedule of m amounts yields at most 2^m - 1 distinct sums, so
    n <= 2^m - 1 forces m >= ceil(log2(n+1)); emptying one jar per move
    gives the upper bound n.
    """
    n = jars.n
    return (n.bit_length(), n)  # ceil(log2(n+1)) == n.bit_length() for n >= 0


def apply_move(state: JarSet, move: Move) -> JarSet:
    """Apply a move and re-canonicalize (drop zeros, merge duplicates)."""
    if not move.targets:
        raise InvalidMoveError("move must target at least one jar")
    if move.amount < 1:
        raise InvalidMoveError(f"amount must be >= 1, got {move.amount}")
    values = list(state.elements)
    for idx in move.targets:
        if idx < 0 or idx >= len(values):
            raise InvalidMoveError(f"target index {idx} out of range for {state}")
        if values[idx] < move.amount:
            raise InvalidMoveError(
                f"cannot take {move.amount} from jar with {values[idx]}"
            )
        values[idx] -= move.amount
    return JarSet(values)


def parse_jar_values(text: str) -> list[int]:
    """Parse a comma-separated list of nonnegative integers.

    Whitespace is ignored; ordering is free (tables are sometimes listed
    descending).  Duplicates and zeros are allowed here; JarSet
    construction canonicalizes them away, game positions keep them.
    """
    stripped = text.strip()
    if not stripped:
        return []
    values = []
    for part in stripped.split(","):
        part = part.strip()
        if not part:
            raise ValueError(f"empty entry in jar list {text!r}")
        try:
            v = int(part)
        except ValueError:
            raise ValueError(f"jar value {part!r} is not an integer") from None
        if v < 0:
            raise ValueError(f"jar value must be >= 0, got {v}")
        values.append(v)
    return values


def parse_jarset(text: str) -> JarSet:
    """Parse a set literal like "13,10,7,6" into a canonical JarSet."""
    return JarSet(parse_jar_values(text))
