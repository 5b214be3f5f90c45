import functools
import random

import pytest

from cookiemonster.core import InvalidMoveError, LimitExceededError, Move
from cookiemonster.game import (
    GamePosition,
    LosingPairTable,
    PairRow,
    apply_position_move,
    best_move,
    classify_position,
    conjecture_report,
    losing_pairs_search,
    move_classes,
    table_csv,
    wythoff_closed_form,
    wythoff_recurrence,
    _sieve_triples,
)

WYTHOFF_10 = [(1, 1, 2), (2, 3, 5), (3, 4, 7), (4, 6, 10), (5, 8, 13),
              (6, 9, 15), (7, 11, 18), (8, 12, 20), (9, 14, 23), (10, 16, 26)]


def test_position_canonicalizes():
    pos = GamePosition([4, 1, 1])
    assert pos.jars == (1, 1, 4)
    with pytest.raises(ValueError):
        GamePosition([-1])


def test_classify_known_positions():
    assert classify_position(GamePosition([0, 0, 0])).status == "P"
    assert classify_position(GamePosition([0, 1, 2])).status == "P"
    assert classify_position(GamePosition([1, 1, 4])).status == "P"

    pc = classify_position(GamePosition([1, 2, 2]))
    assert pc.status == "N"
    successors = {
        apply_position_move(GamePosition([1, 2, 2]), m).jars for m in pc.winning_moves
    }
    assert successors == {(0, 1, 2)}


def test_classify_status_matches_winning_moves():
    rng = random.Random(8)
    for _ in range(80):
        pos = GamePosition([rng.randint(0, 12) for _ in range(3)])
        pc = classify_position(pos)
        assert (pc.status == "N") == bool(pc.winning_moves)
        for m in pc.winning_moves:
            nxt = apply_position_move(pos, m)
            assert classify_position(nxt).status == "P"


def test_classify_re_expansion_consistency():
    rng = random.Random(15)
    for _ in range(30):
        pos = GamePosition([rng.randint(0, 10) for _ in range(3)])
        succ_status = [
            classify_position(GamePosition(nxt)).status
            for _, nxt in move_classes(pos.jars)
        ]
        status = classify_position(pos).status
        if status == "P":
            assert all(s == "N" for s in succ_status)
        else:
            assert any(s == "P" for s in succ_status)


def test_classify_limit():
    with pytest.raises(LimitExceededError):
        classify_position(GamePosition([1000, 3, 2]))


def test_move_classes_dedupe_equal_jars():
    moves = [m for m, _ in move_classes((2, 2))]
    # one jar of value 2 (two choices collapse to one) and both jars
    assert {(m.amount, m.targets) for m in moves} == {
        (1, (0,)), (2, (0,)), (1, (0, 1)), (2, (0, 1)),
    }


def test_wythoff_recurrence_reference_rows():
    table = wythoff_recurrence(10)
    assert [(r.i, r.p, r.q) for r in table.rows] == [(i, p, q) for i, p, q in WYTHOFF_10]
    assert wythoff_recurrence(1).rows == (PairRow(1, 1, 2, 1),)
    assert wythoff_recurrence(2).rows[1] == PairRow(2, 3, 5, 2)
    assert all(r.d == r.i for r in table.rows)


def test_wythoff_closed_form_reference_rows():
    table = wythoff_closed_form(10)
    assert (table.rows[0].p, table.rows[0].q) == (1, 2)
    assert (table.rows[4].p, table.rows[4].q) == (8, 13)
    assert (table.rows[9].p, table.rows[9].q) == (16, 26)


def test_wythoff_three_way_agreement():
    count = 20
    rec = wythoff_recurrence(count).rows
    closed = wythoff_closed_form(count).rows
    searched = losing_pairs_search(0, 60).rows[:count]
    assert rec == closed == searched


def test_wythoff_closed_form_large_prefix_matches_recurrence():
    assert wythoff_recurrence(500).rows == wythoff_closed_form(500).rows


def test_search_wythoff_reference_rows():
    rows = losing_pairs_search(0, 30).rows[:10]
    assert [(r.p, r.q) for r in rows] == [(p, q) for _, p, q in WYTHOFF_10]


def test_search_fixed_one_first_row():
    rows = losing_pairs_search(1, 4).rows
    assert rows[0] == PairRow(1, 1, 4, 3)


def test_search_rejects_bad_args():
    with pytest.raises(ValueError):
        losing_pairs_search(2, 10)
    with pytest.raises(LimitExceededError):
        losing_pairs_search(0, 10_000)


def test_sieve_matches_memo_classifier():
    limit = 64
    pset = _sieve_triples(limit)
    rng = random.Random(4)
    states = {tuple(sorted(rng.randint(0, limit) for _ in range(3))) for _ in range(300)}
    for state in states:
        sieve_p = state in pset
        memo_p = classify_position(GamePosition(state), limit=limit).status == "P"
        assert sieve_p == memo_p, state


def test_sieve_matches_independent_brute_force():
    @functools.lru_cache(None)
    def brute_is_p(state):
        if not any(state):
            return True
        k = len(state)
        for mask in range(1, 1 << k):
            picked = [i for i in range(k) if mask >> i & 1]
            mn = min(state[i] for i in picked)
            if mn == 0:
                continue
            for t in range(1, mn + 1):
                nxt = list(state)
                for i in picked:
                    nxt[i] -= t
                if brute_is_p(tuple(sorted(nxt))):
                    return False
        return True

    limit = 25
    pset = _sieve_triples(limit)
    for a in range(limit + 1):
        for b in range(a, limit + 1):
            for c in range(b, limit + 1):
                assert ((a, b, c) in pset) == brute_is_p((a, b, c)), (a, b, c)


def test_fixed_one_structural_invariants():
    rows = losing_pairs_search(1, 110).rows[:40]
    ds = [r.d for r in rows]
    assert len(set(ds)) == len(ds)  # all differences distinct
    assert 2 not in ds  # p+2 partner always reducible to {0,1,2}
    values = {r.p for r in rows} | {r.q for r in rows}
    p_max = rows[-1].p
    missing = [v for v in range(1, p_max + 1) if v not in values]
    assert missing == [2]  # columns tile the naturals except 2
    # value 3 is the one double-duty entry (one row with p = q = 3)
    assert PairRow(2, 3, 3, 0) in rows


def test_fixed_one_reference_table_divergence():
    # the first reference rows agree with the search; the reference then
    # lists (7,9) with difference 2, but every {1,p,p+2} loses the pair
    # diagonal t=p to {0,1,2}, so the true fourth row is (7,12)
    rows = losing_pairs_search(1, 110).rows
    assert [(r.p, r.q, r.d) for r in rows[:3]] == [(1, 4, 3), (3, 3, 0), (5, 6, 1)]
    assert (rows[3].p, rows[3].q) == (7, 12)
    assert classify_position(GamePosition([1, 7, 9])).status == "N"
    reduced = apply_position_move(GamePosition([1, 7, 9]), Move(7, [1, 2]))
    assert reduced.jars == (0, 1, 2)
    assert classify_position(reduced).status == "P"


def test_best_move_examples():
    bm = best_move(GamePosition([1, 2, 2]))
    assert bm.winning
    assert apply_position_move(GamePosition([1, 2, 2]), bm.move).jars == (0, 1, 2)

    bm = best_move(GamePosition([0, 0, 1]))
    assert bm.winning
    assert apply_position_move(GamePosition([0, 0, 1]), bm.move).total == 0

    bm = best_move(GamePosition([0, 1, 2]))
    assert not bm.winning

    with pytest.raises(InvalidMoveError):
        best_move(GamePosition([0, 0, 0]))


def test_conjecture_report_first_row_and_means():
    rep = conjecture_report(1)
    assert rep.p_diffs == (0,)  # both families start at p = 1

    rep40 = conjecture_report(40)
    assert rep40.slope_mean_wythoff > 1
    assert rep40.slope_mean_one > 1


def test_conjecture_report_computed_ranges():
    # computed on the corrected tables; the reference bounds (-1,2)/(-4,3)
    # were measured on the flawed reference table and are exceeded here
    rep = conjecture_report(40)
    assert rep.p_diff_range == (-2, 2)
    assert rep.d_diff_range == (-6, 3)
    assert not rep.p_diff_within_bounds
    assert not rep.d_diff_within_bounds


def test_conjecture_report_needs_enough_rows():
    with pytest.raises(LimitExceededError):
        conjecture_report(40, limit=20)


def test_table_csv_golden():
    table = LosingPairTable("wythoff", wythoff_recurrence(3).rows)
    assert table_csv(table) == "i,p,q,d\n1,1,2,1\n2,3,5,2\n3,4,7,3\n"
