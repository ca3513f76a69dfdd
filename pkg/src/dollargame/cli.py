"""Command line front end: solve, optimal, gen, serve.

Exit codes: 0 success (and, for optimal, bound holds), 1 malformed input,
2 unwinnable, 3 step/search limit hit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .coset import minimal_representative
from .engine import (DEFAULT_MAX_STEPS, StepLimitError, TieBreakPolicy,
                     borrowing_binge, greedy_stabilize, seeded_random)
from .families import (Instance, InstanceFormatError, hybrid_example,
                       instance_from_dict, intro_example, random_instance,
                       star_example)
from .graph import to_dot
from .solver import (DEFAULT_BUDGET, BudgetError, CapExceededError,
                     GreedyFailedError, verify_bound)

EXIT_OK = 0
EXIT_MALFORMED = 1
EXIT_UNWINNABLE = 2
EXIT_LIMIT = 3

POLICY_ALIASES = {
    "lowest_index": "lowest_index",
    "highest_index": "highest_index",
    "most_negative_first": "most_extreme",
    "most_chips_first": "most_extreme",
    "most_extreme": "most_extreme",
    "random": "seeded_random",
}


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _fail(message: str) -> int:
    sys.stderr.write(f"error: {message}\n")
    return EXIT_MALFORMED


def _load_instance(path: str) -> Instance:
    if path == "-":
        raw = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            raw = fh.read()
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"$: not valid JSON ({exc})") from exc
    return instance_from_dict(data)


def _policy(args: argparse.Namespace) -> TieBreakPolicy:
    rule = POLICY_ALIASES[args.policy]
    if rule == "seeded_random":
        return seeded_random(args.seed)
    return TieBreakPolicy(rule)


def cmd_solve(args: argparse.Namespace) -> int:
    try:
        inst = _load_instance(args.instance)
    except (InstanceFormatError, OSError) as exc:
        return _fail(str(exc))
    run = borrowing_binge if args.side == "dollar" else greedy_stabilize
    try:
        trace = run(inst.graph, inst.divisor, policy=_policy(args),
                    max_steps=args.max_steps, keep_states=args.trace)
    except StepLimitError as exc:
        _emit(exc.trace.to_dict(include_states=args.trace))
        return EXIT_LIMIT
    _emit(trace.to_dict(include_states=args.trace))
    if trace.status in ("won", "stable"):
        return EXIT_OK
    return EXIT_UNWINNABLE


def cmd_optimal(args: argparse.Namespace) -> int:
    try:
        inst = _load_instance(args.instance)
    except (InstanceFormatError, OSError) as exc:
        return _fail(str(exc))
    try:
        report = verify_bound(inst.graph, inst.divisor, side=args.side,
                              method=args.method, radius_cap=args.cap,
                              budget=args.budget)
    except (CapExceededError, BudgetError, StepLimitError, GreedyFailedError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_LIMIT
    payload = report.to_dict()
    if args.explain and report.status == "ok":
        # show the coset normalization of the greedy aggregate
        side_run = borrowing_binge if args.side == "dollar" else greedy_stabilize
        trace = side_run(inst.graph, inst.divisor, keep_states=False)
        payload["explain"] = minimal_representative(trace.aggregate).to_dict()
    _emit(payload)
    if report.status == "unwinnable":
        return EXIT_UNWINNABLE
    return EXIT_OK if report.holds else 5


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        if args.family == "intro":
            inst = intro_example()
        elif args.family == "star":
            inst = star_example(args.n, args.k)
        elif args.family == "hybrid":
            inst = hybrid_example(args.n, args.k)
        else:
            inst = random_instance(args.n, args.p, (args.chips[0], args.chips[1]),
                                   args.seed)
    except (ValueError, RuntimeError) as exc:
        return _fail(str(exc))
    if args.format == "dot":
        text = to_dot(inst.graph, inst.divisor, inst.name or args.family)
    else:
        text = json.dumps(inst.to_dict(), indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(static_dir=args.static_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dollargame",
        description="Chip-firing dollar game: greedy play, exact optima, service.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="run greedy play on an instance file")
    p_solve.add_argument("instance", help="instance JSON path, or - for stdin")
    p_solve.add_argument("--policy", choices=sorted(POLICY_ALIASES), default="lowest_index")
    p_solve.add_argument("--seed", type=int, default=0, help="seed for --policy random")
    p_solve.add_argument("--side", choices=["dollar", "chip"], default="dollar")
    p_solve.add_argument("--trace", action="store_true",
                         help="include intermediate configurations in the output")
    p_solve.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    p_solve.set_defaults(func=cmd_solve)

    p_opt = sub.add_parser("optimal", help="exact optimum and the m0/(n-1) bound")
    p_opt.add_argument("instance", help="instance JSON path, or - for stdin")
    p_opt.add_argument("--method", choices=["auto", "bfs", "coset"], default="auto")
    p_opt.add_argument("--side", choices=["dollar", "chip"], default="dollar")
    p_opt.add_argument("--cap", type=int, default=None,
                       help="search radius for bfs (default: greedy move count)")
    p_opt.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p_opt.add_argument("--explain", action="store_true",
                       help="attach the greedy aggregate's coset normalization")
    p_opt.set_defaults(func=cmd_optimal)

    p_gen = sub.add_parser("gen", help="emit a named instance as JSON or DOT")
    p_gen.add_argument("family", choices=["intro", "star", "hybrid", "random"])
    p_gen.add_argument("--n", type=int, default=5)
    p_gen.add_argument("--k", type=int, default=1)
    p_gen.add_argument("--p", type=float, default=0.5)
    p_gen.add_argument("--chips", type=int, nargs=2, default=[-3, 3],
                       metavar=("LO", "HI"))
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--out", default=None)
    p_gen.add_argument("--format", choices=["json", "dot"], default="json")
    p_gen.set_defaults(func=cmd_gen)

    p_serve = sub.add_parser("serve", help="run the JSON-over-HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int,
                         default=int(os.environ.get("DOLLARGAME_PORT", "8000")))
    p_serve.add_argument("--static-dir", default=None,
                         help="directory of playground assets to serve at /")
    p_serve.set_defaults(func=cmd_serve)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
