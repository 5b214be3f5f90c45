"""Two-player jar game: position classification and optimal play.

Players alternate removing the same nonzero amount from a chosen subset
of jars; whoever takes the last cookie wins (the all-zero position is a
loss for the player to move).  A position is P when the player to move
loses under perfect play, N otherwise.  With two jars the P-positions
are the classic Wythoff pairs; fixing a third jar at one cookie gives a
rougher cousin of that family, tabulated here by retrograde search.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import isqrt
from typing import Iterable, Iterator, NamedTuple

from .core import InvalidMoveError, LimitExceededError, Move

#: Default cap on jar values for game search.
MAX_GAME_VALUE = 512

P = "P"
N = "N"

# Observed bounds on the aligned-family differences over the tabulated
# prefix: p1[i]-p0[i] and (q1[i]-p1[i])-(q0[i]-p0[i]).
P_DIFF_BOUNDS = (-1, 2)
D_DIFF_BOUNDS = (-4, 3)


@dataclass(frozen=True)
class GamePosition:
    """Unordered jar counts; zeros and duplicates are meaningful here."""

    jars: tuple[int, ...]

    def __init__(self, jars: Iterable[int]):
        vals = tuple(sorted(jars))
        for v in vals:
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"jar value must be an int, got {v!r}")
            if v < 0:
                raise ValueError(f"jar value must be >= 0, got {v}")
        object.__setattr__(self, "jars", vals)

    @property
    def total(self) -> int:
        return sum(self.jars)

    def __str__(self) -> str:
        return "{" + ",".join(str(v) for v in self.jars) + "}"


@dataclass(frozen=True)
class PositionClass:
    status: str  # P or N
    winning_moves: tuple[Move, ...]


@dataclass(frozen=True)
class BestMove:
    move: Move
    winning: bool


class PairRow(NamedTuple):
    i: int
    p: int
    q: int
    d: int


@dataclass(frozen=True)
class LosingPairTable:
    family: str  # "wythoff" (fixed jar 0) or "one" (fixed jar 1)
    rows: tuple[PairRow, ...]

    @property
    def phi(self) -> float:
        """Golden ratio, for display; generation never touches floats."""
        return (1 + 5**0.5) / 2


def move_classes(jars: tuple[int, ...]) -> Iterator[tuple[Move, tuple[int, ...]]]:
    """Yield (move, successor) for every distinct move class.

    Moves acting on equal-valued jars are deduplicated at value level:
    one representative targeting the lowest indices.  Successors keep
    zeros and stay sorted.
    """
    groups: list[tuple[int, list[int]]] = []
    for idx, v in enumerate(jars):
        if v == 0:
            continue
        if groups and groups[-1][0] == v:
            groups[-1][1].append(idx)
        else:
            groups.append((v, [idx]))
    if not groups:
        return
    for picks in product(*(range(len(ix) + 1) for _, ix in groups)):
        if not any(picks):
            continue
        chosen_min = min(v for (v, _), take in zip(groups, picks) if take)
        for amount in range(1, chosen_min + 1):
            targets = []
            after = list(jars)
            for (v, ix), take in zip(groups, picks):
                for i in ix[:take]:
                    targets.append(i)
                    after[i] = v - amount
            yield Move(amount, targets), tuple(sorted(after))


_pn_cache: dict[tuple[int, ...], bool] = {(): True}


def _is_p(root: tuple[int, ...]) -> bool:
    """Memoized classification: a position is P iff no move reaches a P.

    Iterative depth-first walk (totals strictly decrease, so the state
    graph is a DAG and stacks can get deep on big positions).
    """
    if not any(root):
        return True
    cached = _pn_cache.get(root)
    if cached is not None:
        return cached
    # frame: [state, successor iterator, child awaiting a verdict]
    stack: list[list] = [[root, move_classes(root), None]]
    while stack:
        frame = stack[-1]
        state, it, pending = frame
        verdict: bool | None = None
        if pending is not None:
            frame[2] = None
            if _pn_cache[pending]:
                verdict = False  # the descended-into successor is P
        descended = False
        if verdict is None:
            for _, nxt in it:
                if not any(nxt):
                    verdict = False  # reaches the terminal P
                    break
                known = _pn_cache.get(nxt)
                if known is None:
                    frame[2] = nxt
                    stack.append([nxt, move_classes(nxt), None])
                    descended = True
                    break
                if known:
                    verdict = False
                    break
        if descended:
            continue
        _pn_cache[state] = verdict is None  # no P successor found: P
        stack.pop()
    return _pn_cache[root]


def _check_limit(jars: tuple[int, ...], limit: int) -> None:
    if jars and max(jars) > limit:
        raise LimitExceededError(f"jar values capped at {limit} for game search")


def classify_position(pos: GamePosition, limit: int = MAX_GAME_VALUE) -> PositionClass:
    """P/N status plus every winning move class (empty iff P)."""
    _check_limit(pos.jars, limit)
    winning = [
        move
        for move, nxt in move_classes(pos.jars)
        if _is_p(nxt)
    ]
    if winning:
        return PositionClass(N, tuple(winning))
    return PositionClass(P, ())


def best_move(pos: GamePosition, limit: int = MAX_GAME_VALUE) -> BestMove:
    """Engine move: a winning move if one exists, else a delaying move.

    Winning moves prefer the smallest resulting total, then the
    lexicographically smallest successor; the delaying fallback uses the
    same ordering over all moves and is flagged as non-winning.
    """
    _check_limit(pos.jars, limit)
    if not any(pos.jars):
        raise InvalidMoveError("no moves from the all-zero position")
    best_win = None
    best_any = None
    for move, nxt in move_classes(pos.jars):
        key = (sum(nxt), nxt, move.amount, move.targets)
        if best_any is None or key < best_any[0]:
            best_any = (key, move)
        if _is_p(nxt) and (best_win is None or key < best_win[0]):
            best_win = (key, move)
    if best_win is not None:
        return BestMove(best_win[1], True)
    assert best_any is not None
    return BestMove(best_any[1], False)


def apply_position_move(pos: GamePosition, move: Move) -> GamePosition:
    """Apply a move to a game position (zeros kept, result re-sorted)."""
    if not move.targets:
        raise InvalidMoveError("move must target at least one jar")
    if move.amount < 1:
        raise InvalidMoveError(f"amount must be >= 1, got {move.amount}")
    vals = list(pos.jars)
    for idx in move.targets:
        if idx < 0 or idx >= len(vals):
            raise InvalidMoveError(f"target index {idx} out of range for {pos}")
        if vals[idx] < move.amount:
            raise InvalidMoveError(f"cannot take {move.amount} from jar with {vals[idx]}")
        vals[idx] -= move.amount
    return GamePosition(vals)


# --- pair tables -----------------------------------------------------------


def wythoff_recurrence(count: int) -> LosingPairTable:
    """Wythoff pairs by the mex construction.

    p_i is the smallest positive integer not seen in any earlier pair and
    q_i = p_i + i; the two columns then tile the positive integers.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    rows = []
    seen: set[int] = set()
    p = 0
    for i in range(1, count + 1):
        p += 1
        while p in seen:
            p += 1
        q = p + i
        seen.add(p)
        seen.add(q)
        rows.append(PairRow(i, p, q, i))
    # tiling check on the generated prefix: 1..p_count each appear once
    prefix = rows[-1].p
    cover = sorted(v for v in seen if v <= prefix)
    assert cover == list(range(1, prefix + 1)), "pair columns failed to tile"
    return LosingPairTable("wythoff", tuple(rows))


def wythoff_closed_form(count: int) -> LosingPairTable:
    """Wythoff pairs via floor(i*phi), in exact integer arithmetic.

    floor(i*phi) = floor((i + isqrt(5 i^2)) / 2), and since
    phi^2 = phi + 1 the partner is just p + i.  No floats: floor
    boundaries must be exact.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if count > 10**6:
        raise LimitExceededError("closed-form table capped at 10^6 rows")
    rows = []
    for i in range(1, count + 1):
        p = (i + isqrt(5 * i * i)) // 2
        rows.append(PairRow(i, p, p + i, i))
    return LosingPairTable("wythoff", tuple(rows))


def _sieve_triples(limit: int) -> set[tuple[int, int, int]]:
    """P-positions of the 3-jar game with every value <= limit.

    Retrograde sieve: walk states by increasing total; anything not yet
    marked N is P, and every position that can reach a P in one move is
    marked N.
    """
    losing: set[tuple[int, int, int]] = set()
    marked_n: set[tuple[int, int, int]] = set()
    by_total: list[list[tuple[int, int, int]]] = [[] for _ in range(3 * limit + 1)]
    for a in range(limit + 1):
        for b in range(a, limit + 1):
            for c in range(b, limit + 1):
                by_total[a + b + c].append((a, b, c))
    subsets = [(i >> 2 & 1, i >> 1 & 1, i & 1) for i in range(1, 8)]
    for total in range(3 * limit + 1):
        for state in by_total[total]:
            if state in marked_n:
                continue
            losing.add(state)
            a, b, c = state
            for da, db, dc in subsets:
                hi = limit - max(a * da, b * db, c * dc)
                for t in range(1, hi + 1):
                    pred = tuple(sorted((a + da * t, b + db * t, c + dc * t)))
                    marked_n.add(pred)
    return losing


def losing_pairs_search(fixed: int, limit: int, cap: int = MAX_GAME_VALUE) -> LosingPairTable:
    """All P-positions {fixed, p, q} with fixed <= p <= q <= limit, p >= 1.

    fixed=0 recovers the Wythoff pairs from the raw game; fixed=1 yields
    the irregular one-cookie family.
    """
    if fixed not in (0, 1):
        raise ValueError("fixed jar must be 0 or 1")
    if limit > cap:
        raise LimitExceededError(f"search limit {limit} above cap {cap}")
    pset = _sieve_triples(limit)
    rows = []
    i = 0
    for p in range(max(fixed, 1), limit + 1):
        for q in range(p, limit + 1):
            if (fixed, p, q) in pset:
                i += 1
                rows.append(PairRow(i, p, q, q - p))
    return LosingPairTable("wythoff" if fixed == 0 else "one", tuple(rows))


@dataclass(frozen=True)
class ConjectureReport:
    """Aligned comparison of the two losing-pair families.

    Slope means are report-only; the difference ranges get a pass/fail
    against the observed prefix bounds.
    """

    count: int
    wythoff_rows: tuple[PairRow, ...]
    one_rows: tuple[PairRow, ...]
    slope_mean_wythoff: float
    slope_mean_one: float
    p_diffs: tuple[int, ...]
    d_diffs: tuple[int, ...]
    p_diff_range: tuple[int, int]
    d_diff_range: tuple[int, int]
    p_diff_within_bounds: bool
    d_diff_within_bounds: bool


def conjecture_report(count: int, limit: int | None = None, cap: int = MAX_GAME_VALUE) -> ConjectureReport:
    """Align the first `count` rows of both families and compare them."""
    if count < 1:
        raise ValueError("count must be >= 1")
    search_limit = limit if limit is not None else min(cap, 3 * count + 12)
    while True:
        wyt = losing_pairs_search(0, search_limit, cap)
        one = losing_pairs_search(1, search_limit, cap)
        if len(wyt.rows) >= count and len(one.rows) >= count:
            break
        if limit is not None or search_limit >= cap:
            raise LimitExceededError(
                f"limit {search_limit} yields only "
                f"{min(len(wyt.rows), len(one.rows))} rows, need {count}"
            )
        search_limit = min(cap, search_limit * 2)
    w = wyt.rows[:count]
    o = one.rows[:count]
    p_diffs = tuple(r1.p - r0.p for r0, r1 in zip(w, o))
    d_diffs = tuple(r1.d - r0.d for r0, r1 in zip(w, o))
    p_rng = (min(p_diffs), max(p_diffs))
    d_rng = (min(d_diffs), max(d_diffs))
    return ConjectureReport(
        count=count,
        wythoff_rows=w,
        one_rows=o,
        slope_mean_wythoff=sum(r.q / r.p for r in w) / count,
        slope_mean_one=sum(r.q / r.p for r in o) / count,
        p_diffs=p_diffs,
        d_diffs=d_diffs,
        p_diff_range=p_rng,
        d_diff_range=d_rng,
        p_diff_within_bounds=P_DIFF_BOUNDS[0] <= p_rng[0] and p_rng[1] <= P_DIFF_BOUNDS[1],
        d_diff_within_bounds=D_DIFF_BOUNDS[0] <= d_rng[0] and d_rng[1] <= D_DIFF_BOUNDS[1],
    )


def table_csv(table: LosingPairTable) -> str:
    """Render a pair table as CSV with header i,p,q,d."""
    lines = ["i,p,q,d"]
    lines.extend(f"{r.i},{r.p},{r.q},{r.d}" for r in table.rows)
    return "\n".join(lines) + "\n"
