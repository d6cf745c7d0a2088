"""Command-line front end.

    actsched solve INSTANCE.json [--engine NAME]
    actsched oracle INSTANCE.json
    actsched check INSTANCE.json [--engine NAME]
    actsched check --random PROBLEM --count N --seed S [--engine NAME]

Results go to stdout as one JSON document with sorted keys; diagnostics go to
stderr. Exit status: 0 ok, 1 check mismatch, 2 parse error, 3 validation or
limit error. An infeasible instance is a successful solve whose objective is
the string "infeasible".
"""
from __future__ import annotations

import argparse
import json
import logging
import math
import random
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Callable

from actsched import checkers, oracles
from actsched.anchored import (
    AnchoredInstance,
    solve_anchored,
    solve_anchored_exact_length,
    solve_anchored_no_upper,
)
from actsched.core import UNREACHABLE, InstanceError, InvariantError, LimitError
from actsched.count import CountInstance, solve_max_count
from actsched.generators import PROBLEMS, random_instance
from actsched.lexmin import LexMinInstance, solve_lexmin, solve_lexmin_simple
from actsched.polygon import PolygonInstance, solve_partition
from actsched.submatrix import GridInstance, solve_submatrix
from actsched.window import WindowInstance, solve_window, solve_window_simple

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_INVALID = 3

REAL_TOLERANCE = 1e-9

log = logging.getLogger("actsched")


class ParseError(ValueError):
    """Instance document is unreadable or structurally wrong."""


@dataclass(frozen=True)
class Problem:
    required: tuple[str, ...]
    optional: tuple[str, ...]
    build: Callable[[dict], object]
    engines: dict[str, Callable]
    default_engine: str
    oracle: Callable
    checker: Callable
    objective: Callable
    payload: Callable


def _window(doc):
    _match_k(doc, len(doc["lower_bounds"]))
    return WindowInstance(doc["utilities"], doc["lower_bounds"], doc["upper_bounds"],
                          doc.get("n_moments"))


def _anchored(doc):
    _match_k(doc, len(doc["anchors"]))
    return AnchoredInstance(doc["utilities"], doc["lower_bounds"], doc["upper_bounds"],
                            doc["anchors"], doc.get("n_moments"))


def _match_k(doc, k):
    if "k_activities" in doc and doc["k_activities"] != k:
        raise InstanceError(f"k_activities = {doc['k_activities']!r} but {k} activities are described")


def _lexmin(doc):
    return LexMinInstance(doc["utilities"], doc["k_activities"], doc["activity_length"],
                          doc.get("n_moments"))


def _coord(c):
    # strings such as "1/3" give exact rational coordinates
    if isinstance(c, str):
        try:
            return Fraction(c)
        except ValueError:
            raise InstanceError(f"coordinate {c!r} is not a number") from None
    return c


def _polygon(doc):
    verts = doc["vertices"]
    if not isinstance(verts, list):
        raise InstanceError("vertices must be a list of [x, y] pairs")
    pts = []
    for v in verts:
        if not isinstance(v, list) or len(v) != 2:
            raise InstanceError(f"vertex {v!r} is not an [x, y] pair")
        pts.append(tuple(_coord(c) for c in v))
    return PolygonInstance(pts, doc["k_parts"], doc["chord_budget"],
                           doc.get("objective_kind", "area"), doc.get("weights"))


def _grid(doc):
    return GridInstance(doc["heights"], doc["utilities"], doc["k_distinct"],
                        doc.get("aggregate_kind", "sum"))


def _intervals(sol):
    return {"intervals": [list(iv) for iv in sol.intervals]}


PROBLEM_TABLE: dict[str, Problem] = {
    "window": Problem(
        required=("utilities", "lower_bounds", "upper_bounds"),
        optional=("n_moments", "k_activities"),
        build=_window,
        engines={"deque": solve_window, "simple": solve_window_simple},
        default_engine="deque",
        oracle=oracles.oracle_window,
        checker=checkers.check_window,
        objective=lambda s: s.objective,
        payload=_intervals,
    ),
    "anchored": Problem(
        required=("utilities", "lower_bounds", "upper_bounds", "anchors"),
        optional=("n_moments", "k_activities"),
        build=_anchored,
        engines={"general": solve_anchored, "no-upper": solve_anchored_no_upper,
                 "exact-length": solve_anchored_exact_length},
        default_engine="general",
        oracle=oracles.oracle_anchored,
        checker=checkers.check_anchored,
        objective=lambda s: s.objective,
        payload=_intervals,
    ),
    "max-count": Problem(
        required=("activities",),
        optional=(),
        build=lambda doc: CountInstance(doc["activities"]),
        engines={"greedy": solve_max_count},
        default_engine="greedy",
        oracle=oracles.oracle_count,
        checker=checkers.check_count,
        objective=lambda s: s.scheduled_count,
        payload=lambda s: {"placements": [{"activity": i, "interval": list(iv)}
                                          for i, iv in s.placements]},
    ),
    "lex-min": Problem(
        required=("utilities", "k_activities", "activity_length"),
        optional=("n_moments",),
        build=_lexmin,
        engines={"deque": solve_lexmin, "simple": solve_lexmin_simple},
        default_engine="deque",
        oracle=oracles.oracle_lexmin,
        checker=checkers.check_lexmin,
        objective=lambda s: list(s.saved_utilities),
        payload=lambda s: {"saved_moments": list(s.saved_moments),
                           "saved_utilities": list(s.saved_utilities),
                           "intervals": [list(iv) for iv in s.activity_intervals]},
    ),
    "polygon": Problem(
        required=("vertices", "k_parts", "chord_budget"),
        optional=("objective_kind", "weights"),
        build=_polygon,
        engines={"interval-dp": solve_partition},
        default_engine="interval-dp",
        oracle=oracles.oracle_partition,
        checker=checkers.check_partition,
        objective=lambda s: s.objective,
        payload=lambda s: {"parts": [{"vertices": list(p.vertices),
                                      "chords": [list(c) for c in p.chords]} for p in s.parts]},
    ),
    "submatrix": Problem(
        required=("heights", "utilities", "k_distinct"),
        optional=("aggregate_kind",),
        build=_grid,
        engines={"two-pointer": solve_submatrix},
        default_engine="two-pointer",
        oracle=oracles.oracle_submatrix,
        checker=checkers.check_rect,
        objective=lambda s: s.max_aggregate,
        payload=lambda s: {"rectangle": list(s.rectangle)},
    ),
}


def parse_document(doc) -> tuple[str, dict]:
    if not isinstance(doc, dict):
        raise ParseError("instance document must be a JSON object")
    if "problem" not in doc:
        raise ParseError("missing required key 'problem'")
    problem = doc["problem"]
    if problem not in PROBLEM_TABLE:
        raise ParseError(f"unknown problem {problem!r}; expected one of {', '.join(PROBLEMS)}")
    entry = PROBLEM_TABLE[problem]
    allowed = {"problem", *entry.required, *entry.optional}
    unknown = sorted(set(doc) - allowed)
    if unknown:
        raise ParseError(f"unknown key(s) for {problem}: {', '.join(map(repr, unknown))}")
    for key in entry.required:
        if key not in doc:
            raise ParseError(f"missing required key {key!r} for {problem}")
    return problem, doc


def load_document(path: str) -> tuple[str, dict]:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from None
    return parse_document(doc)


def build_instance(problem: str, doc: dict):
    try:
        return PROBLEM_TABLE[problem].build(doc)
    except (TypeError, AttributeError) as exc:
        raise InstanceError(f"malformed {problem} instance: {exc}") from None


def pick_engine(problem: str, name: str | None) -> tuple[str, Callable]:
    entry = PROBLEM_TABLE[problem]
    name = name or entry.default_engine
    if name not in entry.engines:
        raise InstanceError(f"engine {name!r} does not apply to {problem}; "
                            f"choose from {', '.join(sorted(entry.engines))}")
    return name, entry.engines[name]


def _jsonable(value):
    if value is UNREACHABLE:
        return "infeasible"
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else float(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if hasattr(value, "item"):
        return value.item()
    return value


def result_document(problem: str, solution, solver: str, elapsed: float) -> dict:
    entry = PROBLEM_TABLE[problem]
    objective = entry.objective(solution)
    doc = {
        "problem": problem,
        "objective": _jsonable(objective),
        "payload": _jsonable(entry.payload(solution)),
        "solver": solver,
        "elapsed_seconds": round(elapsed, 6),
    }
    if isinstance(objective, Fraction):
        doc["objective_exact"] = str(objective)
    return doc


def objectives_agree(a, b) -> bool:
    if a is UNREACHABLE or b is UNREACHABLE:
        return a is b
    if isinstance(a, list) or isinstance(b, list):
        return isinstance(a, list) and isinstance(b, list) and len(a) == len(b) and all(
            objectives_agree(x, y) for x, y in zip(a, b))
    if isinstance(a, Rational) and isinstance(b, Rational):
        return a == b
    return math.isclose(a, b, rel_tol=REAL_TOLERANCE, abs_tol=REAL_TOLERANCE)


def compare(problem: str, inst, engine: Callable) -> tuple[bool, object, object, str]:
    """Solve, verify the payload, run the oracle; ``(agree, solver_obj, oracle_obj, note)``."""
    entry = PROBLEM_TABLE[problem]
    sol = engine(inst)
    fast = entry.objective(sol)
    try:
        entry.checker(inst, sol)
    except InvariantError as exc:
        return False, fast, None, f"solver payload rejected: {exc}"
    ref = entry.objective(entry.oracle(inst))
    if not objectives_agree(fast, ref):
        return False, fast, ref, "objectives differ"
    return True, fast, ref, "agree"


def _emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")


def cmd_solve(args) -> int:
    problem, doc = load_document(args.instance)
    inst = build_instance(problem, doc)
    name, engine = pick_engine(problem, args.engine)
    start = time.perf_counter()
    sol = engine(inst)
    _emit(result_document(problem, sol, f"{problem}:{name}", time.perf_counter() - start))
    return EXIT_OK


def cmd_oracle(args) -> int:
    problem, doc = load_document(args.instance)
    inst = build_instance(problem, doc)
    start = time.perf_counter()
    sol = PROBLEM_TABLE[problem].oracle(inst)
    _emit(result_document(problem, sol, "oracle", time.perf_counter() - start))
    return EXIT_OK


def _random_options(problem: str, engine: str | None) -> dict:
    if problem == "window" and engine == "simple":
        return {"full_upper": True}
    if problem == "anchored" and engine == "no-upper":
        return {"no_upper": True}
    if problem == "anchored" and engine == "exact-length":
        return {"exact_length": True}
    return {}


def cmd_check(args) -> int:
    if args.random is not None:
        return _check_random(args)
    if args.instance is None:
        raise ParseError("check needs an instance file or --random PROBLEM")
    problem, doc = load_document(args.instance)
    inst = build_instance(problem, doc)
    name, engine = pick_engine(problem, args.engine)
    start = time.perf_counter()
    agree, fast, ref, note = compare(problem, inst, engine)
    out = {
        "problem": problem,
        "solver": f"{problem}:{name}",
        "status": "agree" if agree else "mismatch",
        "solver_objective": _jsonable(fast),
        "oracle_objective": _jsonable(ref),
        "elapsed_seconds": round(time.perf_counter() - start, 6),
    }
    _emit(out)
    if not agree:
        log.error("%s: %s (solver %r, oracle %r)", args.instance, note, fast, ref)
        return EXIT_MISMATCH
    return EXIT_OK


def _check_random(args) -> int:
    problem = args.random
    if problem not in PROBLEM_TABLE:
        raise ParseError(f"unknown problem {problem!r}; expected one of {', '.join(PROBLEMS)}")
    if args.count < 0:
        raise ParseError("--count must be nonnegative")
    name, engine = pick_engine(problem, args.engine)
    rng = random.Random(args.seed)
    options = _random_options(problem, name)
    start = time.perf_counter()
    mismatches = 0
    for idx in range(args.count):
        doc = random_instance(problem, rng, **options)
        inst = build_instance(*parse_document(doc))
        agree, fast, ref, note = compare(problem, inst, engine)
        if not agree:
            mismatches += 1
            log.error("instance %d %s: %s (solver %r, oracle %r)",
                      idx, json.dumps(doc, sort_keys=True), note, fast, ref)
    _emit({
        "problem": problem,
        "solver": f"{problem}:{name}",
        "seed": args.seed,
        "count": args.count,
        "agreements": args.count - mismatches,
        "mismatches": mismatches,
        "status": "agree" if mismatches == 0 else "mismatch",
        "elapsed_seconds": round(time.perf_counter() - start, 6),
    })
    return EXIT_MISMATCH if mismatches else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="actsched", description="Exact activity scheduling and partitioning solvers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="run the fast solver on an instance file")
    p.add_argument("instance")
    p.add_argument("--engine", help="variant engine (window, lex-min: deque|simple; "
                                    "anchored: general|no-upper|exact-length)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help="run the exhaustive reference solver")
    p.add_argument("instance")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("check", help="compare solver and oracle on a file or a random batch")
    p.add_argument("instance", nargs="?")
    p.add_argument("--random", metavar="PROBLEM", choices=PROBLEMS)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--engine")
    p.set_defaults(func=cmd_check)
    return parser


def _attach_stderr() -> None:
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("actsched: %(levelname)s: %(message)s"))
    log.handlers[:] = [handler]
    log.propagate = False


def main(argv: list[str] | None = None) -> int:
    _attach_stderr()
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        log.error("%s", exc)
        return EXIT_PARSE
    except (InstanceError, LimitError) as exc:
        log.error("%s", exc)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
