"""Acceptance criteria 1-8.

Each criterion is a function returning ``(passed, detail)``. Under pytest every
criterion is one test and the outcome lines are printed in the terminal
summary; run this file directly to print them without pytest.
"""
from __future__ import annotations

import itertools
import math
import random
import sys
import time

import pytest

from actsched import (
    UNREACHABLE,
    AnchoredInstance,
    CountInstance,
    GridInstance,
    LexMinInstance,
    MonotoneDeque,
    PolygonInstance,
    WindowInstance,
    solve_anchored,
    solve_anchored_exact_length,
    solve_anchored_no_upper,
    solve_lexmin,
    solve_lexmin_simple,
    solve_max_count,
    solve_partition,
    solve_submatrix,
    solve_window,
    solve_window_simple,
)
from actsched import _backend
from actsched.checkers import (
    check_anchored,
    check_count,
    check_lexmin,
    check_partition,
    check_rect,
    check_window,
)
from actsched.generators import (
    random_anchored,
    random_convex_polygon,
    random_grid,
    random_lexmin,
    random_window,
)
from actsched.oracles import (
    oracle_anchored,
    oracle_count,
    oracle_lexmin,
    oracle_partition,
    oracle_submatrix_all_k,
    oracle_window,
)

SEED = 20240601
REAL_TOL = 1e-9

RESULTS: dict[int, tuple[bool, str, str]] = {}


def _window(doc):
    return WindowInstance(doc["utilities"], doc["lower_bounds"], doc["upper_bounds"])


def _anchored(doc):
    return AnchoredInstance(doc["utilities"], doc["lower_bounds"], doc["upper_bounds"], doc["anchors"])


def criterion_1():
    rng = random.Random(SEED + 1)
    start = time.perf_counter()
    agree = 0
    total = 1000
    for _ in range(total):
        inst = _window(random_window(rng))
        sol = solve_window(inst)
        if sol.objective == oracle_window(inst).objective and check_window(inst, sol) == sol.objective:
            agree += 1
    elapsed = time.perf_counter() - start
    return agree == total and elapsed < 60, f"{agree}/{total} agree, {elapsed:.2f}s (limit 60s)"


def criterion_2():
    rng = random.Random(SEED + 2)
    counts = {"general": 0, "no-upper": 0, "exact-length": 0}
    total = 1000
    for _ in range(total):
        inst = _anchored(random_anchored(rng))
        sol = solve_anchored(inst)
        if sol.objective == oracle_anchored(inst).objective and check_anchored(inst, sol) == sol.objective:
            counts["general"] += 1
        inst = _anchored(random_anchored(rng, no_upper=True))
        sol = solve_anchored_no_upper(inst)
        if sol.objective == oracle_anchored(inst).objective and check_anchored(inst, sol) == sol.objective:
            counts["no-upper"] += 1
        inst = _anchored(random_anchored(rng, exact_length=True))
        sol = solve_anchored_exact_length(inst)
        if sol.objective == oracle_anchored(inst).objective and check_anchored(inst, sol) == sol.objective:
            counts["exact-length"] += 1
    ok = all(v == total for v in counts.values())
    return ok, ", ".join(f"{k} {v}/{total}" for k, v in counts.items())


def criterion_3():
    kinds = [(d, p) for p in range(6) for d in (1, 2, 3)]
    checked = agree = 0
    start = time.perf_counter()
    for size in range(7):
        for combo in itertools.combinations_with_replacement(kinds, size):
            inst = CountInstance(list(combo))
            sol = solve_max_count(inst, check_stack=True)
            checked += 1
            if sol.scheduled_count == oracle_count(inst).scheduled_count and check_count(inst, sol) >= 0:
                agree += 1
    elapsed = time.perf_counter() - start
    return agree == checked, f"{agree}/{checked} instances agree (all multisets, up to 6 activities), {elapsed:.1f}s"


def criterion_4():
    rng = random.Random(SEED + 4)
    total = 1000
    agree = 0
    for _ in range(total):
        doc = random_lexmin(rng)
        inst = LexMinInstance(doc["utilities"], doc["k_activities"], doc["activity_length"])
        a, b = solve_lexmin(inst), solve_lexmin_simple(inst)
        ref = oracle_lexmin(inst)
        if a.saved_moments == b.saved_moments == ref.saved_moments and check_lexmin(inst, a) == ref.saved_utilities:
            agree += 1
    return agree == total, f"{agree}/{total} identical saved-moment sequences (deque, simple, oracle)"


def _objectives_match(a, b, exact):
    if a is UNREACHABLE or b is UNREACHABLE:
        return a is b
    if exact:
        return a == b
    return math.isclose(a, b, rel_tol=REAL_TOL, abs_tol=REAL_TOL)


def criterion_5():
    rng = random.Random(SEED + 5)
    checked = agree = 0
    for _ in range(100):
        pts = random_convex_polygon(rng, max_n=8)
        for kind in ("area", "weighted-perimeter"):
            for k in (1, 2, 3):
                for b in (0, 1, 2):
                    inst = PolygonInstance(pts, k, b, kind)
                    sol = solve_partition(inst)
                    ref = oracle_partition(inst)
                    checked += 1
                    if _objectives_match(sol.objective, ref.objective, kind == "area"):
                        check_partition(inst, sol)
                        agree += 1
    hexagon = [(math.cos(i * math.pi / 3), math.sin(i * math.pi / 3)) for i in range(6)]
    hex_val = solve_partition(PolygonInstance(hexagon, 2, 1, "area")).objective
    hex_ok = hex_val is not UNREACHABLE and abs(hex_val - math.sqrt(3) / 2) <= REAL_TOL
    square = [(0, 0), (1, 0), (1, 1), (0, 1)]
    square_ok = solve_partition(PolygonInstance(square, 2, 1, "area")).objective is UNREACHABLE
    ok = agree == checked and hex_ok and square_ok
    return ok, (f"{agree}/{checked} random instances agree; hexagon {hex_val!r} "
                f"({'ok' if hex_ok else 'WRONG'}); square infeasible {'ok' if square_ok else 'WRONG'}")


def criterion_6():
    rng = random.Random(SEED + 6)
    grids = 500
    checked = agree = 0
    for _ in range(grids):
        h, u = random_grid(rng, 8)
        for kind in ("sum", "max"):
            table = oracle_submatrix_all_k(GridInstance(h, u, 1, kind))
            for k, ref in table.items():
                inst = GridInstance(h, u, k, kind)
                capped = solve_submatrix(inst)
                uncapped = solve_submatrix(inst, cap_lists=False)
                checked += 1
                if (capped.max_aggregate == uncapped.max_aggregate == ref.max_aggregate
                        and check_rect(inst, capped) == ref.max_aggregate):
                    agree += 1
    return agree == checked, f"{agree}/{checked} (grid, K, aggregate) cases agree over {grids} grids, capped == uncapped"


def criterion_7():
    import numpy as np

    gen = np.random.default_rng(SEED + 7)
    n = 10**6
    notes = []
    ok = True

    u = gen.integers(-1000, 1001, size=n)
    lo = gen.integers(0, 50, size=10).tolist()
    up = [a + int(gen.integers(1, 5000)) for a in lo]
    start = time.perf_counter()
    sol = solve_window(WindowInstance(u, lo, up))
    elapsed = time.perf_counter() - start
    worst = max(sol.stats["deque_ops"])
    ok &= elapsed < 10 and worst <= 4 * n and sol.feasible
    notes.append(f"window {elapsed:.2f}s, max ops/layer {worst / n:.2f}N")

    u = gen.integers(0, 100, size=n)
    start = time.perf_counter()
    lex = solve_lexmin(LexMinInstance(u, n // 4, 3))
    elapsed = time.perf_counter() - start
    ops = lex.stats["deque_ops"]
    ok &= elapsed < 5 and ops <= 4 * n
    notes.append(f"lex-min {elapsed:.2f}s, ops {ops / n:.2f}N")

    h = gen.integers(0, 30, size=(100, 100)).tolist()
    g = gen.integers(0, 10, size=(100, 100)).tolist()
    start = time.perf_counter()
    solve_submatrix(GridInstance(h, g, 10))
    elapsed = time.perf_counter() - start
    ok &= elapsed < 30
    notes.append(f"submatrix 100x100 {elapsed:.2f}s")
    return bool(ok), "; ".join(notes) + f" [backend {_backend.active_name()}]"


def criterion_8():
    rng = random.Random(SEED + 8)
    failures = []

    # deque monotonicity and amortized evictions
    for _ in range(200):
        dq = MonotoneDeque(debug=True)
        vals = [rng.randint(-20, 20) for _ in range(rng.randint(0, 80))]
        width = rng.randint(1, 10)
        for t, v in enumerate(vals):
            dq.push_back(v, t)
            dq.expire_front(t - width + 1)
            if dq.front_value() != max(vals[max(0, t - width + 1): t + 1]):
                failures.append("deque window maximum")
        if dq.evictions > len(vals):
            failures.append("deque eviction bound")

    # lex-min loop invariant pos - 1 = CK*x + CC and residue classes
    for _ in range(200):
        doc = random_lexmin(rng, max_n=30, max_k=8)
        inst = LexMinInstance(doc["utilities"], doc["k_activities"], doc["activity_length"])
        x = inst.activity_length
        for solver in (solve_lexmin, solve_lexmin_simple):
            trace = []
            solver(inst, trace=trace)
            for pos, ck, cc, chosen, cands in trace:
                if pos - 1 != ck * x + cc or any((t - pos) % x for t in cands) or (chosen - pos) % x:
                    failures.append("lex-min loop invariant")

    # monotonicity in Up, simple/deque window equivalence
    for _ in range(200):
        doc = random_window(rng)
        if not doc["lower_bounds"]:
            continue
        base = solve_window(_window(doc)).objective
        doc["upper_bounds"][rng.randrange(len(doc["upper_bounds"]))] += 2
        if solve_window(_window(doc)).objective < base:
            failures.append("window monotone in Up")
        doc = random_window(rng, full_upper=True)
        if solve_window(_window(doc)).objective != solve_window_simple(_window(doc)).objective:
            failures.append("window engine equivalence")

    # polygon: monotone in B, rotation symmetry, geometric checker
    for _ in range(25):
        pts = random_convex_polygon(rng, max_n=8)
        shift = rng.randrange(1, len(pts))
        for kind in ("area", "weighted-perimeter"):
            k = rng.randint(1, 3)
            prev = UNREACHABLE
            for b in range(4):
                inst = PolygonInstance(pts, k, b, kind)
                sol = solve_partition(inst)
                check_partition(inst, sol)
                if prev is not UNREACHABLE and (sol.objective is UNREACHABLE or sol.objective < prev - REAL_TOL):
                    failures.append("polygon monotone in B")
                prev = sol.objective
                rot = solve_partition(PolygonInstance(pts[shift:] + pts[:shift], k, b, kind)).objective
                if not _objectives_match(sol.objective, rot, False):
                    failures.append("polygon rotation symmetry")

    # submatrix: transposition invariance, monotone in K
    for _ in range(60):
        h, u = random_grid(rng, 7)
        ht, ut = [list(c) for c in zip(*h)], [list(c) for c in zip(*u)]
        for kind in ("sum", "max"):
            prev = None
            for k in range(1, min(8, len(h) * len(h[0])) + 1):
                val = solve_submatrix(GridInstance(h, u, k, kind), debug=True).max_aggregate
                if val != solve_submatrix(GridInstance(ht, ut, k, kind)).max_aggregate:
                    failures.append("submatrix transposition")
                if prev is not None and val < prev:
                    failures.append("submatrix monotone in K")
                prev = val

    # count: permutation invariance and stack ordering
    for _ in range(300):
        acts = [(rng.randint(1, 4), rng.randint(-2, 6)) for _ in range(rng.randint(0, 12))]
        shuffled = acts[:]
        rng.shuffle(shuffled)
        a = solve_max_count(CountInstance(acts), check_stack=True)
        b = solve_max_count(CountInstance(shuffled), check_stack=True)
        check_count(CountInstance(acts), a)
        if a.scheduled_count != b.scheduled_count:
            failures.append("count permutation invariance")

    distinct = sorted(set(failures))
    return not failures, "all invariant families hold" if not failures else "violated: " + ", ".join(distinct)


CRITERIA = {
    1: ("oracle equivalence, window", criterion_1),
    2: ("oracle equivalence, anchored (three engines)", criterion_2),
    3: ("oracle equivalence, max-count sweep", criterion_3),
    4: ("oracle equivalence, lex-min", criterion_4),
    5: ("oracle equivalence, polygon", criterion_5),
    6: ("oracle equivalence, submatrix", criterion_6),
    7: ("complexity smoke tests", criterion_7),
    8: ("invariant suites", criterion_8),
}


def format_line(number: int) -> str:
    ok, title, detail = RESULTS[number]
    return f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}: {detail}"


def run_criterion(number: int) -> bool:
    title, fn = CRITERIA[number]
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed criterion, reported like one
        ok, detail = False, f"raised {type(exc).__name__}: {exc}"
    RESULTS[number] = (ok, title, detail)
    return ok


@pytest.mark.slow
@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    ok = run_criterion(number)
    print(format_line(number))
    assert ok, format_line(number)


if __name__ == "__main__":
    failed = 0
    for number in sorted(CRITERIA):
        failed += not run_criterion(number)
        print(format_line(number), flush=True)
    sys.exit(1 if failed else 0)
