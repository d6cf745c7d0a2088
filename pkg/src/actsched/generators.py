"""Seeded random instances sized for the exhaustive oracles.

Every generator takes a :class:`random.Random` and returns a plain dict in
instance-file form, so the same objects feed the CLI, the tests and the
acceptance harness.
"""
from __future__ import annotations

import random

PROBLEMS = ("window", "anchored", "max-count", "lex-min", "polygon", "submatrix")


def random_window(rng: random.Random, max_n: int = 12, max_k: int = 3,
                  full_upper: bool = False) -> dict:
    n = rng.randint(0, max_n)
    k = rng.randint(0, max_k)
    lo = [rng.randint(0, 4) for _ in range(k)]
    up = [max(a, n) for a in lo] if full_upper else [a + rng.choice((0, 1, 2, n)) for a in lo]
    return {
        "problem": "window",
        "utilities": [rng.randint(-9, 9) for _ in range(n)],
        "k_activities": k,
        "lower_bounds": lo,
        "upper_bounds": up,
    }


def random_anchored(rng: random.Random, max_n: int = 12, max_k: int = 3,
                    exact_length: bool = False, no_upper: bool = False) -> dict:
    n = rng.randint(1, max_n)
    k = rng.randint(0, min(max_k, n))
    anchors = sorted(rng.sample(range(1, n + 1), k))
    lo = [rng.randint(1, 4) for _ in range(k)]
    if exact_length:
        up = list(lo)
    elif no_upper:
        up = [max(a, n) for a in lo]
    else:
        up = [a + rng.choice((0, 1, 2, n)) for a in lo]
    return {
        "problem": "anchored",
        "utilities": [rng.randint(-9, 9) for _ in range(n)],
        "k_activities": k,
        "lower_bounds": lo,
        "upper_bounds": up,
        "anchors": anchors,
    }


def random_count(rng: random.Random, max_activities: int = 8) -> dict:
    m = rng.randint(0, max_activities)
    return {
        "problem": "max-count",
        "activities": [[rng.randint(1, 3), rng.randint(0, 5)] for _ in range(m)],
    }


def random_lexmin(rng: random.Random, max_n: int = 14, max_k: int = 3, max_x: int = 3) -> dict:
    n = rng.randint(1, max_n)
    x = rng.randint(1, max_x)
    k = rng.randint(0, min(max_k, n // x))
    # a narrow value range makes utility ties common
    hi = rng.choice((2, 5, 9))
    return {
        "problem": "lex-min",
        "utilities": [rng.randint(0, hi) for _ in range(n)],
        "k_activities": k,
        "activity_length": x,
    }


def convex_hull(points) -> list[tuple[int, int]]:
    """Strictly convex hull in counterclockwise order (monotone chain)."""
    pts = sorted(set(points))
    if len(pts) < 3:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def random_convex_polygon(rng: random.Random, min_n: int = 3, max_n: int = 8,
                          box: int = 20) -> list[tuple[int, int]]:
    while True:
        cloud = [(rng.randint(0, box), rng.randint(0, box)) for _ in range(rng.randint(3, 2 * max_n))]
        hull = convex_hull(cloud)
        if min_n <= len(hull) <= max_n:
            return hull


def random_polygon(rng: random.Random, max_n: int = 8, max_k: int = 3, max_b: int = 2,
                   custom_weights: bool = False) -> dict:
    pts = random_convex_polygon(rng, max_n=max_n)
    doc = {
        "problem": "polygon",
        "vertices": [list(p) for p in pts],
        "k_parts": rng.randint(1, max_k),
        "chord_budget": rng.randint(0, max_b),
        "objective_kind": rng.choice(("area", "weighted-perimeter")),
    }
    if custom_weights:
        n = len(pts)
        w = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(a + 1, n):
                w[a][b] = w[b][a] = rng.randint(0, 9)
        doc["objective_kind"] = "weighted-perimeter"
        doc["weights"] = w
    return doc


def random_grid(rng: random.Random, max_side: int = 8) -> tuple[list, list]:
    m, n = rng.randint(1, max_side), rng.randint(1, max_side)
    alphabet = rng.randint(2, 6)
    heights = [[rng.randrange(alphabet) for _ in range(n)] for _ in range(m)]
    utilities = [[rng.randint(0, 9) for _ in range(n)] for _ in range(m)]
    return heights, utilities


def random_submatrix(rng: random.Random, max_side: int = 8) -> dict:
    heights, utilities = random_grid(rng, max_side)
    m, n = len(heights), len(heights[0])
    return {
        "problem": "submatrix",
        "heights": heights,
        "utilities": utilities,
        "k_distinct": rng.randint(1, m * n),
        "aggregate_kind": rng.choice(("sum", "max")),
    }


GENERATORS = {
    "window": random_window,
    "anchored": random_anchored,
    "max-count": random_count,
    "lex-min": random_lexmin,
    "polygon": random_polygon,
    "submatrix": random_submatrix,
}


def random_instance(problem: str, rng: random.Random, **options) -> dict:
    try:
        gen = GENERATORS[problem]
    except KeyError:
        raise ValueError(f"unknown problem {problem!r}; expected one of {', '.join(PROBLEMS)}") from None
    return gen(rng, **options)
