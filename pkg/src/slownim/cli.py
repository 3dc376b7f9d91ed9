"""Command-line surface for the slow-NIM toolkit.

Subcommands
-----------
analyze    remoteness / status / best move for one position (text or JSON)
verify     cross-check the fast solver against the brute-force oracle on an
           exhaustive grid or a batch file of positions
enumerate  list m-critical positions (closed form for n = k+1, or oracle)
play       interactive game against the engine's optimal rule
bench      timing of the fast solver on large random positions

Exit codes: 0 success / full agreement, 1 verification mismatch, 2 usage
error, 3 resource limit exceeded.

The brute-force oracle bounds its explored state count; the limit is read
from the environment variable SLOWNIM_MAX_STATES (default 1,000,000).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from .critical import check_conjecture, enumerate_critical, is_m_critical
from .fast import remoteness_fast
from .game import GameSpec, apply_move, canonicalize, is_terminal, legal_moves
from .mrule import e_index, m_count, m_move
from .nim43 import nim43_status
from .oracle import (DEFAULT_MAX_STATES, MAX_STATES_ENV, ResourceLimitError,
                     critical_oracle, remoteness_oracle)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _parse_position(tokens) -> tuple[int, ...]:
    """Accept '3,3,3' or '3 3 3' (already token-split by the shell)."""
    parts: list[str] = []
    for token in tokens:
        parts.extend(p for p in token.replace(",", " ").split() if p)
    if not parts:
        raise ValueError("empty position")
    try:
        coords = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"position must be decimal integers, got {parts!r}")
    if any(c < 0 for c in coords):
        raise ValueError("pile sizes must be nonnegative")
    return coords


def _record(x, k: int, remoteness: int, branch: str, trace) -> dict:
    x = canonicalize(x)
    spec = GameSpec(len(x), k)
    keep = None
    if len(x) == k + 1 and not is_terminal(spec, x):
        keep = e_index(x)
    return {
        "position": list(x),
        "n": len(x),
        "k": k,
        "remoteness": remoteness,
        "status": "P" if remoteness % 2 == 0 else "N",
        "best_move_keep_index": keep,
        "branch": branch,
        "trace": trace,
    }


def _print_record(rec: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(rec))
        return
    pos = tuple(rec["position"])
    print(f"position {pos}  n={rec['n']} k={rec['k']}")
    print(f"remoteness {rec['remoteness']}  status {rec['status']}")
    if rec["best_move_keep_index"] is not None:
        print(f"best move: keep index {rec['best_move_keep_index']}")
    print(f"branch: {rec['branch']}")
    if rec["trace"] is not None:
        arrow = " -> ".join(str(tuple(p)) for p in rec["trace"])
        print(f"trace: {arrow}")


def cmd_analyze(args) -> int:
    x = canonicalize(args.position)
    n, k = len(x), args.k
    if k > n:
        print(f"error: k={k} exceeds pile count n={n}", file=sys.stderr)
        return EXIT_USAGE
    spec = GameSpec(n, k)
    if args.oracle or n != k + 1:
        value = remoteness_oracle(spec, x)
        branch = "oracle"
    else:
        result = remoteness_fast(x, k)
        value, branch = result.remoteness, result.branch
    trace = None
    if args.trace and n == k + 1:
        trace = [list(p) for p in m_count(x, spec).positions]
    _print_record(_record(x, k, value, branch, trace), args.json)
    return EXIT_OK


def _read_batch(path: str) -> list[tuple[int, ...]]:
    positions = []
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            line = line.split("#", 1)[0].strip()
            if line:
                positions.append(_parse_position([line]))
    return positions


def _check_one(spec: GameSpec, x, memo: dict, appendix: bool) -> list[str]:
    """Compare the fast solver, oracle, and optimal-rule playout on x."""
    problems = []
    fast = remoteness_fast(x, spec.k).remoteness
    slow = remoteness_oracle(spec, x, memo=memo)
    walk = m_count(x, spec).length
    if not fast == slow == walk:
        problems.append(f"{x}: fast={fast} oracle={slow} playout={walk}")
    if appendix:
        closed = nim43_status(x).status
        parity = "P" if fast % 2 == 0 else "N"
        if closed != parity:
            problems.append(f"{x}: closed-form={closed} solver={parity}")
    return problems


def cmd_verify(args) -> int:
    k = args.k
    spec = GameSpec(k + 1, k)
    if args.appendix and k != 3:
        print("error: --appendix applies to k=3 (four piles) only",
              file=sys.stderr)
        return EXIT_USAGE
    if args.max is None and not args.positions:
        print("error: give --max BOUND and/or --positions FILE",
              file=sys.stderr)
        return EXIT_USAGE

    import itertools

    memo: dict = {}
    mismatches: list[str] = []
    checked = 0
    try:
        if args.max is not None:
            grid = itertools.combinations_with_replacement(
                range(args.max + 1), k + 1)
            for x in grid:
                mismatches.extend(_check_one(spec, x, memo, args.appendix))
                checked += 1
        if args.positions:
            for x in _read_batch(args.positions):
                if len(x) != k + 1:
                    print(f"error: position {x} has {len(x)} piles, "
                          f"expected {k + 1}", file=sys.stderr)
                    return EXIT_USAGE
                mismatches.extend(_check_one(spec, x, memo, args.appendix))
                checked += 1
        if args.conjecture is not None:
            bound = args.max if args.max is not None else args.conjecture + 1
            for m in range(args.conjecture + 1):
                report = check_conjecture(spec, m, max(bound, m + 1))
                for violation in report.violations:
                    print(f"finding: conjecture violation at m={m}: "
                          f"{violation}")
    except ResourceLimitError as exc:
        print(f"resource limit: explored {exc.explored} states "
              f"(raise {MAX_STATES_ENV}); partial report follows",
              file=sys.stderr)
        for line in mismatches:
            print(f"mismatch: {line}")
        print(f"checked {checked} positions before the limit")
        return EXIT_RESOURCE

    for line in mismatches:
        print(f"mismatch: {line}")
    print(f"checked {checked} positions, {len(mismatches)} mismatches")
    return EXIT_OK if not mismatches else EXIT_MISMATCH


def cmd_enumerate(args) -> int:
    try:
        if args.oracle:
            n, k = args.oracle
            spec = GameSpec(n, k)
            if args.max is None:
                print("error: --oracle mode needs --max BOUND",
                      file=sys.stderr)
                return EXIT_USAGE
            positions = critical_oracle(spec, args.m, args.max)
            for x in sorted(positions):
                branch = (is_m_critical(x, k, args.m) or "-"
                          if n == k + 1 else "-")
                print(f"{','.join(map(str, x))}  {branch}")
            print(f"total {len(positions)} positions with value {args.m}")
            return EXIT_OK
        if args.k is None:
            print("error: give --k K (closed form) or --oracle N K",
                  file=sys.stderr)
            return EXIT_USAGE
        report = enumerate_critical(args.k, args.m)
        for x in sorted(report.positions):
            print(f"{','.join(map(str, x))}  {report.branches[x]}")
        print(f"total {len(report.positions)} positions with value {args.m}")
        return EXIT_OK
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


def _prompt_move(spec: GameSpec, x) -> int | None:
    """Read a legal keep-index from stdin; None means the user quit."""
    legal = legal_moves(spec, x)
    while True:
        try:
            raw = input(f"your move - keep index (1-{spec.n}, q quits): ")
        except EOFError:
            return None
        raw = raw.strip()
        if raw.lower() in {"q", "quit"}:
            return None
        try:
            keep = int(raw)
        except ValueError:
            print(f"not an index: {raw!r}")
            continue
        if keep in legal:
            return keep
        print(f"illegal move: keep {keep} (legal: {sorted(legal)})")


def cmd_play(args) -> int:
    x = canonicalize(args.position)
    k = args.k
    if len(x) != k + 1:
        print(f"error: play needs n = k+1 piles, got {len(x)} with k={k}",
              file=sys.stderr)
        return EXIT_USAGE
    spec = GameSpec(k + 1, k)
    engine_to_move = args.engine_first
    while True:
        value = remoteness_fast(x, k).remoteness
        status = "P" if value % 2 == 0 else "N"
        print(f"position {x}  remoteness {value}  status {status}")
        if is_terminal(spec, x):
            loser = "engine" if engine_to_move else "you"
            print(f"no move possible: {loser} lose{'s' if loser == 'engine' else ''}")
            return EXIT_OK
        if engine_to_move:
            keep = e_index(x)
            x = m_move(x, spec)
            print(f"engine keeps index {keep} -> {x}")
        else:
            keep = _prompt_move(spec, x)
            if keep is None:
                print("bye")
                return EXIT_OK
            x = apply_move(spec, x, keep)
        engine_to_move = not engine_to_move


def cmd_bench(args) -> int:
    k, bits, reps = args.k, args.bits, args.reps
    rng = random.Random(args.seed)
    top = 1 << bits
    total = 0.0
    for rep in range(reps):
        x = canonicalize([rng.randrange(top) for _ in range(k + 1)])
        start = time.perf_counter()
        result = remoteness_fast(x, k)
        elapsed = time.perf_counter() - start
        total += elapsed
        print(f"rep {rep + 1}: n={k + 1} bits={bits} "
              f"remoteness digits={len(str(result.remoteness))} "
              f"time {elapsed:.4f}s")
    print(f"mean {total / reps:.4f}s per position "
          f"({reps / total:.1f} positions/s)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slownim",
        description="Solver and verification toolkit for exact slow NIM "
                    "(each move removes one stone from exactly k piles).",
        epilog=f"The oracle's state budget is ${MAX_STATES_ENV} "
               f"(default {DEFAULT_MAX_STATES}).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="solve a single position")
    p.add_argument("--k", type=int, required=True,
                   help="piles reduced per move")
    p.add_argument("--oracle", action="store_true",
                   help="force the brute-force oracle")
    p.add_argument("--json", action="store_true", help="machine output")
    p.add_argument("--trace", action="store_true",
                   help="append the optimal-rule playout")
    p.add_argument("position", nargs="+",
                   help="pile sizes, comma- or space-separated")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="cross-check solvers on a grid or file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max", type=int, default=None,
                   help="exhaustive grid bound on coordinates")
    p.add_argument("--positions", default=None,
                   help="batch file: one position per line, # comments")
    p.add_argument("--appendix", action="store_true",
                   help="also check the four-pile closed-form rules (k=3)")
    p.add_argument("--conjecture", type=int, default=None, metavar="M",
                   help="report critical-position bound findings for m <= M")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list m-critical positions")
    p.add_argument("--k", type=int, default=None,
                   help="closed-form enumeration for NIM(k+1, k)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--oracle", nargs=2, type=int, default=None,
                   metavar=("N", "K"), help="oracle enumeration for NIM(N, K)")
    p.add_argument("--max", type=int, default=None,
                   help="coordinate bound for --oracle mode")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("play", help="play against the optimal rule")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--engine-first", action="store_true")
    p.add_argument("position", nargs="+")
    p.set_defaults(func=cmd_play)

    p = sub.add_parser("bench", help="time the fast solver")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--bits", type=int, default=60,
                   help="pile sizes drawn below 2^bits (default 60)")
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--seed", type=int, default=20240901)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "position"):
        try:
            args.position = _parse_position(args.position)
        except ValueError as exc:
            parser.error(str(exc))           # exits with code 2
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"resource limit: explored {exc.explored} states "
              f"(raise {MAX_STATES_ENV})", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
