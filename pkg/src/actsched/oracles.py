"""Exhaustive reference solvers.

Each oracle walks the raw search space directly (no prefix sums, no deques, no
DP tables) so that agreement with the fast solvers is meaningful. All refuse
instances above :class:`OracleLimits`.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from actsched.anchored import AnchoredInstance
from actsched.core import UNREACHABLE, LimitError
from actsched.count import CountInstance, CountSolution
from actsched.lexmin import LexMinInstance, LexMinSolution
from actsched.polygon import AREA, Part, PartitionSolution, PolygonInstance
from actsched.submatrix import GridInstance, RectResult
from actsched.window import WindowInstance, WindowSolution


@dataclass(frozen=True)
class OracleLimits:
    max_moments: int = 14
    max_activities: int = 3
    max_count_activities: int = 8
    max_vertices: int = 8
    max_parts: int = 3
    max_chord_budget: int = 2
    max_grid_side: int = 8


DEFAULT_LIMITS = OracleLimits()


def _guard(cond: bool, what: str) -> None:
    if not cond:
        raise LimitError(f"oracle limit exceeded: {what}")


def _interval_search(n, u, bounds, anchors=None):
    """Best ordered tuple of disjoint intervals; ``bounds[j] = (lo, up)``."""
    k = len(bounds)
    best_val = None
    best_pick = None

    def rec(j, cursor, acc, picked):
        nonlocal best_val, best_pick
        if j == k:
            if best_val is None or acc > best_val:
                best_val, best_pick = acc, list(picked)
            return
        lo, up = bounds[j]
        anchor = anchors[j] if anchors is not None else None
        if lo == 0 and anchor is None:
            picked.append((cursor, cursor - 1))
            rec(j + 1, cursor, acc, picked)
            picked.pop()
        for s in range(cursor, n + 1):
            if anchor is not None and s > anchor:
                break
            total = 0
            for e in range(s, min(s + up - 1, n) + 1):
                total += u[e - 1]
                if e - s + 1 < max(lo, 1):
                    continue
                if anchor is not None and e < anchor:
                    continue
                picked.append((s, e))
                rec(j + 1, e + 1, acc + total, picked)
                picked.pop()

    rec(0, 1, 0, [])
    return best_val, best_pick


def oracle_window(inst: WindowInstance, limits: OracleLimits = DEFAULT_LIMITS) -> WindowSolution:
    _guard(inst.n_moments <= limits.max_moments, f"N={inst.n_moments} > {limits.max_moments}")
    _guard(inst.k_activities <= limits.max_activities,
           f"K={inst.k_activities} > {limits.max_activities}")
    u = list(inst.utilities)
    val, pick = _interval_search(inst.n_moments, u,
                                 list(zip(inst.lower_bounds, inst.upper_bounds)))
    if val is None:
        return WindowSolution(UNREACHABLE, [], "oracle")
    return WindowSolution(val, pick, "oracle")


def oracle_anchored(inst: AnchoredInstance, limits: OracleLimits = DEFAULT_LIMITS) -> WindowSolution:
    _guard(inst.n_moments <= limits.max_moments, f"N={inst.n_moments} > {limits.max_moments}")
    _guard(inst.k_activities <= limits.max_activities,
           f"K={inst.k_activities} > {limits.max_activities}")
    u = list(inst.utilities)
    val, pick = _interval_search(inst.n_moments, u,
                                 list(zip(inst.lower_bounds, inst.upper_bounds)),
                                 anchors=list(inst.anchors))
    if val is None:
        return WindowSolution(UNREACHABLE, [], "oracle")
    return WindowSolution(val, pick, "oracle")


def _pack(acts):
    """Left-packing of an ordered list of (index, duration, anchor); None if infeasible."""
    placed = []
    right = None
    for idx, length, anchor in acts:
        start = anchor - length if right is None else max(anchor - length, right)
        if start > anchor:
            return None
        placed.append((idx, (start, start + length)))
        right = start + length
    return placed


def oracle_count(inst: CountInstance, limits: OracleLimits = DEFAULT_LIMITS) -> CountSolution:
    acts = [(i, l, p) for i, (l, p) in enumerate(inst.activities)]
    _guard(len(acts) <= limits.max_count_activities,
           f"{len(acts)} activities > {limits.max_count_activities}")
    for size in range(len(acts), 0, -1):
        for subset in itertools.combinations(acts, size):
            ordered = sorted(subset, key=lambda a: a[2])
            groups = [list(g) for _, g in itertools.groupby(ordered, key=lambda a: a[2])]
            for perms in itertools.product(*(itertools.permutations(g) for g in groups)):
                placed = _pack([a for g in perms for a in g])
                if placed is not None:
                    return CountSolution(size, placed)
    return CountSolution(0, [])


def oracle_lexmin(inst: LexMinInstance, limits: OracleLimits = DEFAULT_LIMITS) -> LexMinSolution:
    n, k, x = inst.n_moments, inst.k_activities, inst.activity_length
    _guard(n <= limits.max_moments, f"N={n} > {limits.max_moments}")
    _guard(k <= limits.max_activities, f"K={k} > {limits.max_activities}")
    u = list(inst.utilities)
    best = None

    def rec(j, cursor, starts):
        nonlocal best
        if j == k:
            covered = set()
            for s in starts:
                covered.update(range(s, s + x))
            saved = [t for t in range(1, n + 1) if t not in covered]
            key = ([u[t - 1] for t in saved], saved)
            if best is None or key < best[0]:
                best = (key, list(starts))
            return
        for s in range(cursor, n - x + 2):
            starts.append(s)
            rec(j + 1, s + x, starts)
            starts.pop()

    rec(0, 1, [])
    (utils, saved), starts = best
    return LexMinSolution(saved, utils, [(s, s + x - 1) for s in starts], "oracle")


def _shoelace(pts):
    total = 0
    for (x1, y1), (x2, y2) in zip(pts, pts[1:] + pts[:1]):
        total += x1 * y2 - x2 * y1
    return total


def part_value(inst: PolygonInstance, verts: list[int]):
    """Area or weighted perimeter of the convex hull of the given polygon vertices."""
    verts = sorted(verts)
    if inst.objective_kind == AREA:
        pts = [inst.vertices[v] for v in verts]
        twice = _shoelace(pts)
        exact = all(isinstance(c, Rational) for p in pts for c in p)
        return Fraction(twice, 2) if exact else twice / 2
    if len(verts) == 2:
        return inst.weight(verts[0], verts[1])
    total = 0
    for a, b in zip(verts, verts[1:] + verts[:1]):
        total += inst.weight(a, b)
    return total


def chord_count(n: int, verts: list[int]) -> int:
    verts = sorted(verts)
    if len(verts) == n:
        return 0
    if len(verts) == 2:
        return 0 if (verts[1] - verts[0]) % n in (1, n - 1) else 1
    return sum(1 for a, b in zip(verts, verts[1:] + verts[:1]) if (b - a) % n != 1)


def _separated(n: int, s: tuple, t: tuple) -> bool:
    """True when every vertex of ``t`` falls into one cyclic gap of ``s``."""
    s_sorted = sorted(s)
    gap = None
    for v in t:
        g = sum(1 for a in s_sorted if a < v) % len(s_sorted)
        if gap is None:
            gap = g
        elif g != gap:
            return False
    return True


def oracle_partition(inst: PolygonInstance, limits: OracleLimits = DEFAULT_LIMITS) -> PartitionSolution:
    n, K, B = inst.n, inst.k_parts, inst.chord_budget
    _guard(n <= limits.max_vertices, f"n={n} > {limits.max_vertices}")
    _guard(K <= limits.max_parts, f"K={K} > {limits.max_parts}")
    _guard(B <= limits.max_chord_budget, f"B={B} > {limits.max_chord_budget}")
    candidates = []
    for size in range(2, n + 1):
        for verts in itertools.combinations(range(n), size):
            if size == 2:
                if inst.objective_kind == AREA:
                    continue
                if (verts[1] - verts[0]) % n not in (1, n - 1):
                    continue
            if chord_count(n, list(verts)) > B:
                continue
            candidates.append((verts, part_value(inst, list(verts))))
    best_val, best_pick = None, None

    def rec(start, chosen, used, acc):
        nonlocal best_val, best_pick
        if len(chosen) == K:
            if best_val is None or acc > best_val:
                best_val, best_pick = acc, list(chosen)
            return
        for idx in range(start, len(candidates)):
            verts, val = candidates[idx]
            if used.intersection(verts):
                continue
            if not all(_separated(n, c, verts) and _separated(n, verts, c) for c in chosen):
                continue
            chosen.append(verts)
            rec(idx + 1, chosen, used | set(verts), acc + val)
            chosen.pop()

    rec(0, [], frozenset(), 0)
    if best_val is None:
        return PartitionSolution(UNREACHABLE, [])
    parts = []
    for verts in best_pick:
        vs = list(verts)
        chords = [(a, b) for a, b in zip(vs, vs[1:]) if (b - a) % n != 1]
        parts.append(Part((vs[0], vs[-1]), vs, chords))
    return PartitionSolution(best_val, parts)


def oracle_submatrix(inst: GridInstance, limits: OracleLimits = DEFAULT_LIMITS) -> RectResult:
    m, n = inst.shape
    _guard(m <= limits.max_grid_side and n <= limits.max_grid_side,
           f"grid {m}x{n} exceeds {limits.max_grid_side}")
    heights = inst.heights
    utils = inst.utilities
    best_val, best_rect = None, None
    for ls in range(m):
        for lj in range(ls, m):
            for cd in range(n):
                for cs in range(cd + 1):
                    cells = [(r, c) for r in range(ls, lj + 1) for c in range(cs, cd + 1)]
                    if len({heights[r][c] for r, c in cells}) > inst.k_distinct:
                        continue
                    vals = [utils[r][c] for r, c in cells]
                    agg = sum(vals) if inst.aggregate_kind == "sum" else max(vals)
                    if best_val is None or agg > best_val:
                        best_val, best_rect = agg, (ls + 1, lj + 1, cs + 1, cd + 1)
    return RectResult(best_val, best_rect, "oracle")


def oracle_submatrix_all_k(inst: GridInstance, limits: OracleLimits = DEFAULT_LIMITS) -> dict[int, RectResult]:
    """``oracle_submatrix`` for every K in ``1..M*N`` from a single enumeration.

    Rectangles are visited in the same order with the same strict comparison,
    so each entry (rectangle included) equals the per-K oracle.
    """
    m, n = inst.shape
    _guard(m <= limits.max_grid_side and n <= limits.max_grid_side,
           f"grid {m}x{n} exceeds {limits.max_grid_side}")
    heights = inst.heights
    utils = inst.utilities
    use_sum = inst.aggregate_kind == "sum"
    # per exact distinct count d: (aggregate, visit order, rectangle), first maximum kept
    by_count: dict[int, tuple] = {}
    order = 0
    for ls in range(m):
        for lj in range(ls, m):
            for cd in range(n):
                for cs in range(cd + 1):
                    cells = [(r, c) for r in range(ls, lj + 1) for c in range(cs, cd + 1)]
                    d = len({heights[r][c] for r, c in cells})
                    vals = [utils[r][c] for r, c in cells]
                    agg = sum(vals) if use_sum else max(vals)
                    cur = by_count.get(d)
                    if cur is None or agg > cur[0]:
                        by_count[d] = (agg, order, (ls + 1, lj + 1, cs + 1, cd + 1))
                    order += 1
    out = {}
    best = None
    for k in range(1, m * n + 1):
        cand = by_count.get(k)
        if cand is not None and (best is None or cand[0] > best[0]
                                 or (cand[0] == best[0] and cand[1] < best[1])):
            best = cand
        out[k] = RectResult(best[0], best[2], "oracle")
    return out


__all__ = [
    "OracleLimits",
    "DEFAULT_LIMITS",
    "oracle_window",
    "oracle_anchored",
    "oracle_count",
    "oracle_lexmin",
    "oracle_partition",
    "oracle_submatrix",
    "oracle_submatrix_all_k",
    "part_value",
    "chord_count",
]
