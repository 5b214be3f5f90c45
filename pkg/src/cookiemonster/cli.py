"""Command-line interface.

Exit codes: 0 success, 2 usage error, 3 limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import classifier, game, heuristics, report, sequences
from .core import (
    InvalidMoveError,
    LimitExceededError,
    Move,
    apply_move,
    bounds,
    parse_jar_values,
    parse_jarset,
)
from .solver import solve, verify_trace

SCHEMA_VERSION = 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cookie-monster",
        description="Exact solver and game engine for the cookie-jar emptying puzzle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="minimum moves to empty a set of jars")
    p.add_argument("set", help='comma-separated jar counts, e.g. "13,10,7,6"')
    p.add_argument("--trace", action="store_true", help="print the move trace")
    p.add_argument("--json", action="store_true", dest="as_json")

    p = sub.add_parser("bounds", help="universal lower/upper move bounds")
    p.add_argument("set")

    p = sub.add_parser("classify", help="structural classification report")
    p.add_argument("set")
    p.add_argument("--json", action="store_true", dest="as_json")

    p = sub.add_parser("heuristics", help="run greedy strategies against a set")
    p.add_argument("set")
    p.add_argument("--algo", default="all", choices=[*heuristics.ALGORITHMS, "all"])
    p.add_argument("--json", action="store_true", dest="as_json")

    p = sub.add_parser("sequence", help="generate a structured set and check its formula")
    p.add_argument("kind", choices=sequences.KINDS)
    p.add_argument("--n", type=int, required=True,
                   help="length parameter (fibonacci yields n-1 jars: the run starts at the second 1)")
    p.add_argument("--y", type=int, default=None,
                   help="step (arithmetic, default 1) or ratio (geometric, default 2)")
    p.add_argument("--z", type=int, default=0, help="offset (arithmetic)")
    p.add_argument("--w", type=int, default=1, help="scale (geometric)")
    p.add_argument("--json", action="store_true", dest="as_json")

    pg = sub.add_parser("game", help="two-player game engine")
    gsub = pg.add_subparsers(dest="game_command", required=True)

    p = gsub.add_parser("table", help="losing-pair table for a family")
    p.add_argument("--family", required=True, choices=["wythoff", "one"])
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--limit", type=int, default=None, help="search cap on jar values")
    p.add_argument("--csv", default=None, metavar="PATH", help="write CSV to a file")
    p.add_argument("--method", default="search",
                   choices=["search", "recurrence", "closed-form"],
                   help="wythoff family only: generation method")

    p = gsub.add_parser("eval", help="P/N status and winning moves of a position")
    p.add_argument("jars", help='comma-separated counts incl. zeros, e.g. "0,1,2"')
    p.add_argument("--json", action="store_true", dest="as_json")

    p = gsub.add_parser("play", help="play against the engine in the terminal")
    p.add_argument("jars")

    p = gsub.add_parser("conjectures", help="aligned-family diagnostics report")
    p.add_argument("--count", type=int, default=40)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--csv", default=None, metavar="PATH")
    p.add_argument("--fig-dir", default=None, metavar="DIR",
                   help="also render figures into this directory")
    p.add_argument("--json", action="store_true", dest="as_json")

    p = sub.add_parser("serve", help="run the JSON HTTP service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--static", default=None, metavar="DIR",
                   help="serve a directory of static files (the browser arena)")
    p.add_argument("--max-jars", type=int, default=None)
    p.add_argument("--max-value", type=int, default=None)

    return parser


def _cmd_solve(args) -> int:
    jars = parse_jarset(args.set)
    result = solve(jars)
    if args.as_json:
        print(json.dumps({
            "schema": SCHEMA_VERSION,
            "set": list(jars.elements),
            "cm": result.cm,
            "witness": list(result.witness.amounts),
            "trace": [{"amount": m.amount, "targets": list(m.targets)} for m in result.trace],
            "lowerBound": result.lower_bound,
            "upperBound": result.upper_bound,
        }))
        return 0
    print(f"CM = {result.cm}  witness {result.witness}")
    if args.trace:
        state = jars
        for move in result.trace:
            nxt = apply_move(state, move)
            print(f"  {state} --{move}--> {nxt}")
            state = nxt
        assert verify_trace(jars, result.trace)
    return 0


def _cmd_bounds(args) -> int:
    lo, hi = bounds(parse_jarset(args.set))
    print(f"lower={lo} upper={hi}")
    return 0


def _cmd_classify(args) -> int:
    jars = parse_jarset(args.set)
    rep = classifier.classify(jars)
    cm = solve(jars).cm
    payload = {
        "schema": SCHEMA_VERSION,
        "set": list(jars.elements),
        "cm": cm,
        "size3Rule": rep.size3_rule,
        "cm3Match": rep.cm3_match,
        "equalSumPairs": [[list(b), list(c)] for b, c in rep.equal_sum_pairs],
        "x": rep.x,
        "boundFromX": rep.bound_from_x,
    }
    if args.as_json:
        print(json.dumps(payload))
        return 0
    print(f"set {jars}: CM = {cm}")
    if rep.size3_rule is not None:
        print(f"  size-3 rule (k3 = k1+k2): {rep.size3_rule}")
    if 4 <= jars.n <= 7:
        print(f"  3-move system match: {rep.cm3_match or 'none'}")
    print(f"  equal-sum disjoint pairs: x = {rep.x}"
          + (f", bound CM <= {rep.bound_from_x}" if rep.bound_from_x is not None else ""))
    for b, c in rep.equal_sum_pairs:
        print(f"    {set(b)} vs {set(c)}")
    return 0


def _cmd_heuristics(args) -> int:
    jars = parse_jarset(args.set)
    algos = list(heuristics.ALGORITHMS) if args.algo == "all" else [args.algo]
    exact = solve(jars).cm
    runs = [heuristics.run(a, jars) for a in algos]
    if args.as_json:
        print(json.dumps({
            "schema": SCHEMA_VERSION,
            "set": list(jars.elements),
            "cm": exact,
            "runs": [
                {
                    "algorithm": r.algorithm,
                    "moveCount": r.move_count,
                    "trace": [{"amount": m.amount, "targets": list(m.targets)} for m in r.trace],
                }
                for r in runs
            ],
        }))
        return 0
    print(f"set {jars}: CM = {exact}")
    for r in runs:
        print(f"  {r.algorithm.upper():5s} {r.move_count} moves: "
              + "; ".join(str(m) for m in r.trace))
    return 0


def _cmd_sequence(args) -> int:
    if args.kind == "arithmetic":
        spec = sequences.arithmetic(args.y if args.y is not None else 1, args.z, args.n)
    elif args.kind == "geometric":
        spec = sequences.geometric(args.w, args.y if args.y is not None else 2, args.n)
    else:
        spec = sequences.fibonacci(args.n)
    jars = sequences.generate(spec)
    predicted = sequences.predicted_cm(spec)
    solved = None
    try:
        solved = solve(jars).cm
    except LimitExceededError:
        pass
    if args.as_json:
        print(json.dumps({
            "schema": SCHEMA_VERSION,
            "kind": spec.kind,
            "set": list(jars.elements),
            "predictedCm": predicted,
            "solvedCm": solved,
            "superincreasing": sequences.is_superincreasing(jars),
        }))
        return 0
    print(f"{spec.kind} set: {jars}")
    print(f"predicted CM = {predicted}" + ("" if solved is None else f", solved CM = {solved}"))
    if solved is not None and solved != predicted:
        print("NOTE: closed-form prediction disagrees with the exact solver")
    return 0


def _game_table(args) -> int:
    if args.family == "wythoff":
        if args.method == "recurrence":
            table = game.wythoff_recurrence(args.count)
        elif args.method == "closed-form":
            table = game.wythoff_closed_form(args.count)
        else:
            limit = args.limit or max(32, 3 * args.count + 12)
            table = game.losing_pairs_search(0, limit)
    else:
        limit = args.limit or max(32, 3 * args.count + 12)
        table = game.losing_pairs_search(1, limit)
    if len(table.rows) < args.count:
        print(f"warning: only {len(table.rows)} rows within limit", file=sys.stderr)
    table = game.LosingPairTable(table.family, table.rows[: args.count])
    csv_text = game.table_csv(table)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(csv_text)
        print(f"wrote {len(table.rows)} rows to {args.csv}")
    else:
        sys.stdout.write(csv_text)
    return 0


def _game_eval(args) -> int:
    pos = game.GamePosition(parse_jar_values(args.jars))
    pc = game.classify_position(pos)
    if args.as_json:
        print(json.dumps({
            "schema": SCHEMA_VERSION,
            "jars": list(pos.jars),
            "status": pc.status,
            "winningMoves": [{"amount": m.amount, "targets": list(m.targets)} for m in pc.winning_moves],
        }))
        return 0
    print(f"position {pos}: {pc.status}"
          + (" (player to move loses with perfect play)" if pc.status == game.P else ""))
    for m in pc.winning_moves:
        print(f"  winning: {m}")
    return 0


def _game_play(args, stdin=None, stdout=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout

    def say(msg: str) -> None:
        print(msg, file=stdout)

    pos = game.GamePosition(parse_jar_values(args.jars))
    say(f"position {pos} - you move first; take the last cookie to win")
    say("enter moves as AMOUNT from JAR[,JAR..] (1-based), e.g. '2 from 3'; 'q' quits")
    while True:
        if pos.total == 0:
            say("engine took the last cookie - engine wins")
            return 0
        say(f"jars: {list(pos.jars)}")
        line = stdin.readline()
        if not line or line.strip().lower() in ("q", "quit"):
            say("bye")
            return 0
        try:
            amount_text, _, jars_text = line.strip().partition("from")
            amount = int(amount_text.strip())
            targets = [int(t.strip()) - 1 for t in jars_text.strip().split(",")]
            pos = game.apply_position_move(pos, Move(amount, targets))
        except (ValueError, InvalidMoveError) as exc:
            say(f"bad move: {exc}")
            continue
        say(f"you played; jars now {list(pos.jars)}")
        if pos.total == 0:
            say("you took the last cookie - you win!")
            return 0
        reply = game.best_move(pos)
        pos = game.apply_position_move(pos, reply.move)
        say(f"engine: {reply.move}" + ("" if reply.winning else " (delaying)"))
    return 0


def _game_conjectures(args) -> int:
    rep = game.conjecture_report(args.count, args.limit)
    csv_text = report.conjecture_csv(rep)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(csv_text)
    figures = []
    if args.fig_dir:
        figures = report.render_figures(rep, args.fig_dir)
    payload = {
        "schema": SCHEMA_VERSION,
        "count": rep.count,
        "slopeMeanWythoff": rep.slope_mean_wythoff,
        "slopeMeanOne": rep.slope_mean_one,
        "pDiffRange": list(rep.p_diff_range),
        "dDiffRange": list(rep.d_diff_range),
        "pDiffWithinBounds": rep.p_diff_within_bounds,
        "dDiffWithinBounds": rep.d_diff_within_bounds,
        "pDiffBounds": list(game.P_DIFF_BOUNDS),
        "dDiffBounds": list(game.D_DIFF_BOUNDS),
        "csv": args.csv,
        "figures": figures,
    }
    if args.as_json:
        print(json.dumps(payload))
        return 0
    print(f"first {rep.count} rows of both families")
    print(f"mean q/p: wythoff {rep.slope_mean_wythoff:.4f}, fixed-one {rep.slope_mean_one:.4f} (report only)")
    print(f"p differences in {rep.p_diff_range}, bounds {game.P_DIFF_BOUNDS}: "
          + ("PASS" if rep.p_diff_within_bounds else "FAIL"))
    print(f"d differences in {rep.d_diff_range}, bounds {game.D_DIFF_BOUNDS}: "
          + ("PASS" if rep.d_diff_within_bounds else "FAIL"))
    if not args.csv:
        sys.stdout.write(csv_text)
    else:
        print(f"wrote rows to {args.csv}")
    for path in figures:
        print(f"wrote figure {path}")
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import DEFAULT_MAX_JARS, DEFAULT_MAX_VALUE, create_app

    app = create_app(
        max_jars=args.max_jars or DEFAULT_MAX_JARS,
        max_value=args.max_value or DEFAULT_MAX_VALUE,
        static_dir=args.static,
    )
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "solve":
            return _cmd_solve(args)
        if args.command == "bounds":
            return _cmd_bounds(args)
        if args.command == "classify":
            return _cmd_classify(args)
        if args.command == "heuristics":
            return _cmd_heuristics(args)
        if args.command == "sequence":
            return _cmd_sequence(args)
        if args.command == "game":
            if args.game_command == "table":
                return _game_table(args)
            if args.game_command == "eval":
                return _game_eval(args)
            if args.game_command == "play":
                return _game_play(args)
            return _game_conjectures(args)
        return _cmd_serve(args)
    except LimitExceededError as exc:
        print(f"limit exceeded: {exc}", file=sys.stderr)
        return 3
    except (ValueError, InvalidMoveError) as exc:
        print(f"error: {exc} (see --help for usage)", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
