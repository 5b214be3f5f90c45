"""Exact minimum-move solver with witnesses, plus an independent oracle.

`solve` searches for the smallest multiset of removal amounts whose
sub-multiset sums cover every jar count, then turns the witness into a
replayable move trace.  `oracle_solve` answers the same question by raw
shortest-path search over game states and shares nothing with the
multiset search; the two must always agree where both run.
"""

from __future__ import annotations

import logging

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
    subset_sums,
)

log = logging.getLogger(__name__)

#: Largest jar value the exact multiset search accepts.
MAX_SOLVE_ELEMENT = 10_000

#: Oracle scale: raw state-space search stays tiny.
MAX_ORACLE_ELEMENT = 24
MAX_ORACLE_JARS = 6


def _search_multiset(elements: tuple[int, ...], m: int) -> tuple[int, ...] | None:
    """First (lexicographically smallest) nondecreasing m-tuple of amounts
    covering `elements`, or None.

    Amounts above max(elements) never contribute a usable sum, so the
    search is capped there.  Two prunes keep the tree narrow: the chosen
    amounts plus the best possible remainder must reach the largest jar,
    and every jar count must stay expressible as prefix-sum + a feasible
    completion (remaining amounts are >= the last chosen one).
    """
    max_amount = elements[-1]
    smask = 0
    for v in elements:
        smask |= 1 << v
    target_all = smask

    prefix: list[int] = []

    def feasible(psums: tuple[int, ...], last: int, remaining: int, prefix_total: int) -> bool:
        if prefix_total + remaining * max_amount < max_amount:
            return False
        for s in elements:
            ok = False
            for p in psums:
                if p > s:
                    break
                if p == s:
                    ok = True
                    break
                if remaining == 0:
                    continue
                r = s - p
                # r must split into t amounts, each in [last, max_amount]
                t_lo = -(-r // max_amount)
                t_hi = r // last
                if t_lo <= t_hi and t_lo <= remaining:
                    ok = True
                    break
            if not ok:
                return False
        return True

    def dfs(depth: int, last: int, psums: tuple[int, ...], sum_mask: int, prefix_total: int) -> tuple[int, ...] | None:
        if depth == m:
            if sum_mask & smask == target_all:
                return tuple(prefix)
            return None
        remaining = m - depth - 1
        for a in range(last, max_amount + 1):
            new_mask = sum_mask | (sum_mask << a) | (1 << a)
            new_psums = tuple(sorted({p + a for p in psums} | set(psums) | {a}))
            prefix.append(a)
            if feasible(new_psums, a, remaining, prefix_total + a):
                found = dfs(depth + 1, a, new_psums, new_mask, prefix_total + a)
                if found is not None:
                    return found
            prefix.pop()
        return None

    return dfs(0, 1, (0,), 1, 0)


def _decompose(value: int, amounts_desc: tuple[int, ...]) -> tuple[int, ...] | None:
    """Indices into `amounts_desc` of a sub-multiset summing to `value`.

    Scans in order, preferring to include each amount when a completion
    still exists.  That preference matters for trace synthesis: the
    remainder of such a decomposition after any prefix of amounts depends
    only on the remaining value, so jars that reach equal counts keep
    identical schedules and never diverge after canonical merging.
    """
    suffix = [0] * (len(amounts_desc) + 1)
    for i in range(len(amounts_desc) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + amounts_desc[i]

    chosen: list[int] = []

    def go(i: int, rest: int) -> bool:
        if rest == 0:
            return True
        if i == len(amounts_desc) or rest > suffix[i] or rest < 0:
            return False
        if amounts_desc[i] <= rest:
            chosen.append(i)
            if go(i + 1, rest - amounts_desc[i]):
                return True
            chosen.pop()
        return go(i + 1, rest)

    return tuple(chosen) if go(0, value) else None


def _witness_trace(jars: JarSet, witness: MoveMultiset) -> tuple[Move, ...]:
    """Turn a covering multiset into moves over successive canonical states.

    Amounts are applied in descending order; move j removes its amount
    from exactly the jars whose decomposition uses that occurrence.
    """
    occ = tuple(sorted(witness.amounts, reverse=True))
    decomp: dict[int, frozenset[int]] = {}
    for s in jars:
        d = _decompose(s, occ)
        assert d is not None, f"witness {witness} does not cover {s}"
        decomp[s] = frozenset(d)

    current = {s: s for s in jars}  # original jar -> current count
    state = jars
    trace: list[Move] = []
    for i, a in enumerate(occ):
        hit = [s for s in jars if i in decomp[s]]
        assert hit, "minimal witness has an unused amount"
        values = sorted({current[s] for s in hit})
        untouched = {current[s] for s in jars if i not in decomp[s] and current[s] > 0}
        assert not untouched & set(values), "equal-count jars diverged"
        move = Move(a, (state.elements.index(v) for v in values))
        state = apply_move(state, move)  # raises if any count would go negative
        trace.append(move)
        for s in hit:
            current[s] -= a
            assert current[s] >= 0
    assert state.n == 0
    return tuple(trace)


def solve(jars: JarSet, max_element: int = MAX_SOLVE_ELEMENT) -> SolveResult:
    """Minimum number of moves to empty the jars, with witness and trace.

    Tries multiset sizes from the lower bound upward; within a size,
    candidates are enumerated in nondecreasing lexicographic order and
    the first cover wins, so output is deterministic (the
    lexicographically smallest witness of minimum size).
    """
    if jars.n == 0:
        return SolveResult(0, MoveMultiset(), (), 0, 0)
    if jars.elements[-1] > max_element:
        raise LimitExceededError(
            f"exact solve limited to values <= {max_element}, got {jars.elements[-1]}"
        )
    lo, hi = bounds(jars)
    for m in range(lo, hi + 1):
        found = _search_multiset(jars.elements, m)
        if found is not None:
            witness = MoveMultiset(found)
            assert witness.amounts[-1] <= jars.elements[-1]
            trace = _witness_trace(jars, witness)
            return SolveResult(m, witness, trace, lo, hi)
    raise AssertionError(f"no cover of size <= n found for {jars}")  # unreachable


_oracle_cache: dict[tuple[int, ...], int] = {(): 0}


def _oracle_successors(state: tuple[int, ...]) -> set[tuple[int, ...]]:
    succ = set()
    k = len(state)
    for mask in range(1, 1 << k):
        picked = [i for i in range(k) if mask >> i & 1]
        for amount in range(1, min(state[i] for i in picked) + 1):
            nxt = list(state)
            for i in picked:
                nxt[i] -= amount
            # same canonicalization as apply_move: drop zeros, merge equals
            succ.add(tuple(sorted({v for v in nxt if v > 0})))
    return succ


def oracle_solve(jars: JarSet) -> int:
    """Minimum moves to empty, by exhaustive search over raw game states.

    Completely independent of `solve`: states are canonical ascending
    tuples, successors are every (subset, amount) move, and the answer is
    the memoized shortest distance to the empty state.
    """
    if jars.n > MAX_ORACLE_JARS or (jars.n and jars.elements[-1] > MAX_ORACLE_ELEMENT):
        raise LimitExceededError(
            f"oracle limited to {MAX_ORACLE_JARS} jars with values <= {MAX_ORACLE_ELEMENT}"
        )

    def dist(state: tuple[int, ...]) -> int:
        cached = _oracle_cache.get(state)
        if cached is not None:
            return cached
        floor = len(state).bit_length()  # same counting bound as `bounds`
        best = None
        for nxt in _oracle_successors(state):
            d = dist(nxt) + 1
            if best is None or d < best:
                best = d
                if best == floor:
                    break
        assert best is not None
        _oracle_cache[state] = best
        return best

    return dist(jars.elements)


def verify_trace(jars: JarSet, trace: list[Move] | tuple[Move, ...]) -> bool:
    """True iff the trace legally empties the jars; logs why when not."""
    state = jars
    for step, move in enumerate(trace):
        try:
            state = apply_move(state, move)
        except InvalidMoveError as exc:
            log.debug("trace invalid at move %d (%s): %s", step + 1, move, exc)
            return False
    if state.n != 0:
        log.debug("trace leaves %s instead of the empty set", state)
        return False
    return True
