"""Structural classification: when do 2 or 3 moves suffice, and what do
equal-sum disjoint subsets buy.

Three-jar instances need exactly 2 moves iff the largest count is the sum
of the other two.  Instances solvable in 3 moves are exactly the sets of
4..7 distinct values embeddable into the sums of three amounts
{a1, a2, a3, a1+a2, a1+a3, a2+a3, a1+a2+a3}; each embedding, together
with one sort order of those sums, induces a system of linear equations
over the sorted values.  The classic tabulated systems cover only the
embeddings whose sort order is the default one, so this module expands
the full closure (every size-n sum subset, every realizable sort order)
and matches by checking a system's equations plus positivity and
integrality of the recovered amounts.  The exact solver, not this
predicate, remains the authority on the answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from math import gcd

from .core import JarSet, LimitExceededError

# The seven sub-multiset sums of <a1,a2,a3>, as coefficient vectors.
_SYMBOLS: tuple[tuple[int, int, int], ...] = (
    (1, 0, 0),
    (0, 1, 0),
    (0, 0, 1),
    (1, 1, 0),
    (1, 0, 1),
    (0, 1, 1),
    (1, 1, 1),
)

_SYMBOL_NAMES = ("a1", "a2", "a3", "a1+a2", "a1+a3", "a2+a3", "a1+a2+a3")

MAX_PAIR_SCAN = 20  # subset-pair scan is exponential in n


@dataclass(frozen=True)
class EquationSystem:
    """One linear-equation system over sorted values k1..kn.

    `relations` are integer coefficient rows c with sum(c_i * k_i) == 0;
    `equations` is the human-readable rendering.
    """

    id: str
    equations: tuple[str, ...]
    size: int
    relations: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ClassificationReport:
    size3_rule: bool | None
    cm3_match: str | None
    equal_sum_pairs: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    x: int
    bound_from_x: int | None


def classify_size3(jars: JarSet) -> int:
    """Minimum moves for a 3-jar set: 2 iff k3 = k1 + k2, else 3."""
    if jars.n != 3:
        raise ValueError(f"size-3 rule needs exactly 3 jars, got {jars.n}")
    k1, k2, k3 = jars.elements
    return 2 if k3 == k1 + k2 else 3


# --- expanded equation systems ------------------------------------------


def _dominates(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return a != b and all(x >= y for x, y in zip(a, b))


def _normalize(coeffs: list[int]) -> tuple[int, ...]:
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    if g > 1:
        coeffs = [c // g for c in coeffs]
    for c in coeffs:
        if c > 0:
            return tuple(coeffs)
        if c < 0:
            return tuple(-x for x in coeffs)
    return tuple(coeffs)


def _render_relation(coeffs: tuple[int, ...]) -> str:
    def side(sign: int) -> str:
        terms = []
        for i, c in enumerate(coeffs):
            if c * sign > 0:
                mag = abs(c)
                terms.append(("" if mag == 1 else str(mag)) + f"k{i + 1}")
        return "+".join(terms)

    return f"{side(1)}={side(-1)}"


def _adjugate(m: list[list[int]]) -> tuple[int, list[list[int]]]:
    """Determinant and adjugate of a 3x3 integer matrix."""
    (a, b, c), (d, e, f), (g, h, i) = m
    det = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    adj = [
        [e * i - f * h, c * h - b * i, b * f - c * e],
        [f * g - d * i, a * i - c * g, c * d - a * f],
        [d * h - e * g, b * g - a * h, a * e - b * d],
    ]
    return det, adj


@dataclass(frozen=True)
class _Recipe:
    """Matcher for one (sum subset, sort order) embedding.

    For sorted values k: the embedding fits iff every relation is zero,
    the 3x3 basis solve yields integer amounts >= 1, and then S is a
    subset of the sums of those amounts by construction.
    """

    system: EquationSystem
    basis_positions: tuple[int, int, int]
    det: int
    adjugate: tuple[tuple[int, ...], ...]

    def amounts_for(self, values: tuple[int, ...]) -> tuple[int, int, int] | None:
        for rel in self.system.relations:
            if sum(c * v for c, v in zip(rel, values)):
                return None
        kb = [values[p] for p in self.basis_positions]
        out = []
        for row in self.adjugate:
            num = row[0] * kb[0] + row[1] * kb[1] + row[2] * kb[2]
            if num % self.det:
                return None
            a = num // self.det
            if a < 1:
                return None
            out.append(a)
        return tuple(out)  # type: ignore[return-value]


def _build_recipe(order: tuple[int, ...], system_id: str, equations: tuple[str, ...] | None) -> _Recipe | None:
    rows = [_SYMBOLS[s] for s in order]
    n = len(rows)
    basis = None
    for triple in combinations(range(n), 3):
        m = [list(rows[p]) for p in triple]
        det, adj = _adjugate(m)
        if det:
            basis = (triple, det, adj)
            break
    if basis is None:
        return None  # rank < 3 never happens for n >= 4, kept for safety
    triple, det, adj = basis
    relations = []
    for j in range(n):
        if j in triple:
            continue
        # rows[j] = lambda . basis, lambda = rows[j] . adj / det
        lam = [
            sum(rows[j][t] * adj[t][b] for t in range(3))
            for b in range(3)
        ]
        coeffs = [0] * n
        coeffs[j] = det
        for b, pos in enumerate(triple):
            coeffs[pos] -= lam[b]
        relations.append(_normalize(coeffs))
    relations.sort()
    if equations is None:
        equations = tuple(_render_relation(r) for r in relations)
    system = EquationSystem(system_id, equations, n, tuple(relations))
    adj_cols = tuple(tuple(adj[r][c] for c in range(3)) for r in range(3))
    return _Recipe(system, triple, det, adj_cols)


def _family_name(symbols: tuple[int, ...]) -> str:
    return "{" + ", ".join(_SYMBOL_NAMES[s] for s in sorted(symbols)) + "}"


# Tabulated systems: (size, subset of symbols in sorted-value order,
# literal equation strings).  Symbol indices: 0..2 singles, 3..5 pair
# sums in the order a1+a2, a1+a3, a2+a3, 6 the full sum.
_TABULATED: tuple[tuple[tuple[int, ...], tuple[str, ...]], ...] = (
    ((0, 1, 3, 4), ("k1+k2=k3",)),
    ((0, 1, 2, 6), ("k1+k2+k3=k4",)),
    ((0, 2, 3, 5), ("k1+k4=k2+k3",)),
    ((0, 3, 4, 5), ("2k1+k4=k2+k3",)),
    ((3, 4, 5, 6), ("k1+k2+k3=2k4",)),
    ((0, 1, 2, 4, 5), ("k1+k3=k4", "k2+k3=k5")),
    ((0, 1, 2, 4, 6), ("k1+k3=k4", "k1+k2+k3=k5")),
    ((0, 1, 3, 4, 5), ("k1+k2=k3", "k2+k4=k1+k5")),
    ((0, 1, 3, 4, 6), ("k1+k2=k3", "k2+k4=k5")),
    ((0, 3, 4, 5, 6), ("k1+k4=k5", "k2+k3=k1+k5")),
    ((0, 1, 4, 5, 6), ("k1+k4=k5", "k2+k3=k5")),
    ((0, 1, 2, 3, 4, 5), ("k1+k2=k4", "k1+k3=k5", "k2+k3=k6")),
    ((0, 1, 2, 4, 5, 6), ("k1+k3=k4", "k2+k3=k5", "k1+k2+k3=k6")),
    ((0, 1, 3, 4, 5, 6), ("k1+k2=k3", "k2+k4=k6", "k1+k5=k6")),
    ((0, 1, 2, 3, 4, 5, 6), ("k1+k2=k4", "k1+k3=k5", "k2+k3=k6", "k1+k2+k3=k7")),
)


def _build_all_recipes() -> tuple[dict[int, tuple[_Recipe, ...]], dict[int, tuple[EquationSystem, ...]]]:
    by_size: dict[int, list[_Recipe]] = {4: [], 5: [], 6: [], 7: []}
    tabulated: dict[int, list[EquationSystem]] = {4: [], 5: [], 6: [], 7: []}
    seen: dict[int, set[tuple[int, ...]]] = {4: set(), 5: set(), 6: set(), 7: set()}

    for order, equations in _TABULATED:
        n = len(order)
        recipe = _build_recipe(order, _family_name(order), equations)
        assert recipe is not None
        by_size[n].append(recipe)
        tabulated[n].append(recipe.system)
        seen[n].add(order)

    for n in (4, 5, 6, 7):
        for subset in combinations(range(7), n):
            family = _family_name(subset)
            variant = 0
            for order in permutations(subset):
                bad = any(
                    _dominates(_SYMBOLS[order[i]], _SYMBOLS[order[j]])
                    for i in range(n)
                    for j in range(i + 1, n)
                )
                if bad:
                    continue
                variant += 1
                if order in seen[n]:
                    continue
                seen[n].add(order)
                recipe = _build_recipe(order, f"{family} #{variant}", None)
                if recipe is not None:
                    by_size[n].append(recipe)
    return (
        {n: tuple(rs) for n, rs in by_size.items()},
        {n: tuple(systems) for n, systems in tabulated.items()},
    )


_RECIPES, TABULATED_SYSTEMS = _build_all_recipes()


def all_systems(size: int) -> tuple[EquationSystem, ...]:
    """Every equation system (tabulated plus expanded variants) for a size."""
    if size not in _RECIPES:
        raise ValueError(f"systems exist for sizes 4..7, got {size}")
    return tuple(r.system for r in _RECIPES[size])


def match_cm3_systems(jars: JarSet) -> str | None:
    """Identifier of the first equation system the sorted set satisfies.

    A match certifies that three removal amounts suffice; no match (for
    sizes 4..7) certifies they do not.  The solver remains the definitive
    answer and the test suite cross-checks the equivalence exhaustively.
    """
    if not 4 <= jars.n <= 7:
        raise ValueError(f"system matching covers sizes 4..7, got {jars.n}")
    values = jars.elements
    for recipe in _RECIPES[jars.n]:
        if recipe.amounts_for(values) is not None:
            return recipe.system.id
    return None


def match_all(jars: JarSet) -> tuple[str, ...]:
    """Identifiers of every equation system the sorted set satisfies."""
    if not 4 <= jars.n <= 7:
        raise ValueError(f"system matching covers sizes 4..7, got {jars.n}")
    values = jars.elements
    return tuple(
        r.system.id for r in _RECIPES[jars.n] if r.amounts_for(values) is not None
    )


def matched_amounts(jars: JarSet) -> tuple[int, int, int] | None:
    """The three amounts recovered by the first matching system, if any."""
    if not 4 <= jars.n <= 7:
        raise ValueError(f"system matching covers sizes 4..7, got {jars.n}")
    for recipe in _RECIPES[jars.n]:
        amounts = recipe.amounts_for(jars.elements)
        if amounts is not None:
            return amounts
    return None


# --- equal-sum disjoint subsets ------------------------------------------


def _pairs_by_size(values: tuple[int, ...]):
    """Yield (B, C) index-mask pairs with equal sums, smallest total first.

    Within one total size, pairs come sorted by (shared sum, B, C).  The
    lower-indexed side is always B.
    """
    n = len(values)
    for t in range(2, n + 1):
        batch = []
        for union in combinations(range(n), t):
            rest = union[1:]
            for r in range(len(rest) + 1):
                for extra in combinations(rest, r):
                    b = (union[0],) + extra
                    c = tuple(i for i in union if i not in b)
                    if not c:
                        continue
                    sb = sum(values[i] for i in b)
                    sc = sum(values[i] for i in c)
                    if sb == sc:
                        batch.append((sb, b, c))
        batch.sort()
        for sb, b, c in batch:
            yield b, c


def find_equal_sum_pairs(jars: JarSet) -> ClassificationReport:
    """Scan for disjoint equal-sum subset pairs and the bound they imply.

    Greedily keeps a collection of pairwise-disjoint pairs, smallest
    total size first; with x pairs kept, n - x moves always suffice.
    Greedy maximality is not claimed (any valid collection bounds).
    """
    if jars.n > MAX_PAIR_SCAN:
        raise LimitExceededError(
            f"equal-sum scan limited to {MAX_PAIR_SCAN} jars, got {jars.n}"
        )
    values = jars.elements
    used = 0
    taken: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    for b, c in _pairs_by_size(values):
        mask = 0
        for i in b + c:
            mask |= 1 << i
        if mask & used:
            continue
        used |= mask
        taken.append(
            (tuple(values[i] for i in b), tuple(values[i] for i in c))
        )
    x = len(taken)
    return ClassificationReport(
        size3_rule=None,
        cm3_match=None,
        equal_sum_pairs=tuple(taken),
        x=x,
        bound_from_x=jars.n - x if jars.n else None,
    )


def check_corollary_nosum(jars: JarSet) -> bool:
    """No instance at the upper bound admits an equal-sum subset pair.

    Property-suite helper: verifies the implication (minimum = n) =>
    (x = 0) on one instance, using the exact solver.
    """
    from .solver import solve

    report = find_equal_sum_pairs(jars)
    if report.x == 0:
        return True
    return solve(jars).cm < jars.n


def classify(jars: JarSet) -> ClassificationReport:
    """Full structural report: size-3 rule, system match, equal-sum pairs."""
    pairs = find_equal_sum_pairs(jars) if jars.n <= MAX_PAIR_SCAN else None
    return ClassificationReport(
        size3_rule=(jars.elements[2] == jars.elements[0] + jars.elements[1])
        if jars.n == 3
        else None,
        cm3_match=match_cm3_systems(jars) if 4 <= jars.n <= 7 else None,
        equal_sum_pairs=pairs.equal_sum_pairs if pairs else (),
        x=pairs.x if pairs else 0,
        bound_from_x=pairs.bound_from_x if pairs else None,
    )
