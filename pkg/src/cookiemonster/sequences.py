"""Generators and closed-form move counts for structured jar sets.

Arithmetic progressions sit at or near the lower bound, geometric and
superincreasing sets at the upper bound, Fibonacci prefixes in between
at one move per two jars.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import MAX_ELEMENT, JarSet, LimitExceededError

KINDS = ("arithmetic", "geometric", "fibonacci")


@dataclass(frozen=True)
class SequenceSpec:
    """A structured set: arithmetic(y, z), geometric(w, y), or fibonacci.

    `n` is the length parameter.  The fibonacci kind takes the sequence
    from its second 1 onward, so the generated set has n - 1 elements.
    """

    kind: str
    n: int
    y: int | None = None
    z: int | None = None
    w: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        if self.kind == "arithmetic":
            if self.n < 1 or self.y is None or self.y < 1 or self.z is None or self.z < 0:
                raise ValueError("arithmetic needs n >= 1, step y >= 1, offset z >= 0")
        elif self.kind == "geometric":
            if self.n < 1 or self.w is None or self.w < 1 or self.y is None or self.y < 2:
                raise ValueError("geometric needs n >= 1, scale w >= 1, ratio y >= 2")
        else:
            if self.n < 2:
                raise ValueError("fibonacci needs n >= 2")


def arithmetic(y: int, z: int, n: int) -> SequenceSpec:
    """Jars y*i + z for i = 1..n."""
    return SequenceSpec("arithmetic", n, y=y, z=z)


def geometric(w: int, y: int, n: int) -> SequenceSpec:
    """Jars w * y**(i-1) for i = 1..n."""
    return SequenceSpec("geometric", n, y=y, w=w)


def fibonacci(n: int) -> SequenceSpec:
    """Jars 1, 2, 3, 5, 8, ... up to the n-th Fibonacci number."""
    return SequenceSpec("fibonacci", n)


def generate(spec: SequenceSpec) -> JarSet:
    """Materialize the spec as a canonical jar set."""
    if spec.kind == "arithmetic":
        values = [spec.y * i + spec.z for i in range(1, spec.n + 1)]
    elif spec.kind == "geometric":
        values = [spec.w * spec.y ** (i - 1) for i in range(1, spec.n + 1)]
    else:
        fibs = [0, 1]
        while len(fibs) <= spec.n:
            fibs.append(fibs[-2] + fibs[-1])
        values = fibs[2 : spec.n + 1]
    if values and max(values) > MAX_ELEMENT:
        raise LimitExceededError(f"generated value {max(values)} exceeds {MAX_ELEMENT}")
    return JarSet(values)


def predicted_cm(spec: SequenceSpec) -> int:
    """Closed-form minimum move count for the generated set.

    Arithmetic with no offset meets the universal lower bound
    ceil(log2(n+1)); with an offset it needs ceil(log2 n) + 1 (equal to
    the lower bound exactly when n is a power of two).  Geometric sets
    need one move per jar; Fibonacci prefixes one move per two jars.
    """
    n = spec.n
    if spec.kind == "arithmetic":
        if spec.z == 0:
            return n.bit_length()  # ceil(log2(n+1))
        return (n - 1).bit_length() + 1  # ceil(log2 n) + 1
    if spec.kind == "geometric":
        return n
    return (n + 1) // 2  # ceil(n/2)


def is_superincreasing(jars: JarSet) -> bool:
    """True iff every count exceeds the sum of all smaller counts.

    Such sets cannot be emptied in fewer moves than jars.
    """
    prefix = 0
    for v in jars.elements:
        if v <= prefix:
            return False
        prefix += v
    return True
