"""Compare the compiled and pure-Python kernels on the three hot loops.

    python3 benchmarks/bench_kernels.py [--n 200000] [--grid 60] [--repeat 3]

Prints one line per (workload, backend) with the best wall time of ``--repeat``
runs, then the speedup. Both backends must return identical answers.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from actsched import GridInstance, LexMinInstance, WindowInstance, _backend
from actsched import solve_lexmin, solve_submatrix, solve_window


def best_time(fn, repeat: int):
    best, result = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def workloads(n: int, side: int, seed: int):
    rng = np.random.default_rng(seed)
    u = rng.integers(-1000, 1001, size=n)
    window = WindowInstance(u, [1, 5, 20], [50, 400, 3000])
    lex = LexMinInstance(rng.integers(0, 100, size=n), n // 5, 3)
    grid = GridInstance(rng.integers(0, 12, size=(side, side)).tolist(),
                        rng.integers(0, 10, size=(side, side)).tolist(), 6)
    return {
        f"window  N={n} K=3": (lambda: solve_window(window), lambda s: (s.objective, s.intervals)),
        f"lex-min N={n} K={n // 5} x=3": (lambda: solve_lexmin(lex), lambda s: s.saved_moments),
        f"submatrix {side}x{side} K=6": (lambda: solve_submatrix(grid), lambda s: (s.max_aggregate, s.rectangle)),
    }


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=200_000)
    parser.add_argument("--grid", type=int, default=60)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    backends = _backend.available()
    if len(backends) == 1:
        print("compiled kernels not importable; timing the Python fallback only")
    for name, (run, key) in workloads(args.n, args.grid, args.seed).items():
        times, answers = {}, {}
        for backend in backends:
            with _backend.use(backend):
                times[backend], sol = best_time(run, args.repeat)
                answers[backend] = key(sol)
            print(f"{name:<32} {backend:<7} {times[backend] * 1e3:10.1f} ms")
        if len(set(map(repr, answers.values()))) != 1:
            raise SystemExit(f"{name}: backends disagree")
        if "cython" in times:
            print(f"{name:<32} speedup {times['python'] / times['cython']:8.1f}x")


if __name__ == "__main__":
    main()
