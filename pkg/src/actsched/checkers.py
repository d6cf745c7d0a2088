"""Independent feasibility checkers.

Each checker validates a returned solution against its instance from first
principles and returns the objective recomputed from the payload. Nothing here
calls a solver, so a checker can vouch for a solution it did not produce.
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

from actsched.core import UNREACHABLE, InvariantError


class CheckError(InvariantError):
    """A solution violates its instance's constraints."""


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise CheckError(msg)


def _interval_objective(inst, intervals, anchors=None):
    n = inst.n_moments
    k = len(inst.lower_bounds)
    _require(len(intervals) == k, f"expected {k} intervals, got {len(intervals)}")
    cursor = 1
    total = 0
    for j, (s, e) in enumerate(intervals):
        length = e - s + 1
        lo, up = inst.lower_bounds[j], inst.upper_bounds[j]
        _require(lo <= length <= up, f"interval {j + 1} = [{s}, {e}] has length {length} outside [{lo}, {up}]")
        if length == 0:
            _require(1 <= s <= n + 1, f"empty interval {j + 1} sits at {s}, outside 1..{n + 1}")
            continue
        _require(s >= cursor, f"interval {j + 1} = [{s}, {e}] overlaps or precedes the previous one")
        _require(1 <= s and e <= n, f"interval {j + 1} = [{s}, {e}] leaves 1..{n}")
        if anchors is not None:
            _require(s <= anchors[j] <= e, f"interval {j + 1} = [{s}, {e}] misses anchor {anchors[j]}")
        total += sum(inst.utilities[s - 1:e])
        cursor = e + 1
    return total


def check_window(inst, solution):
    """Returns the recomputed objective; UNREACHABLE solutions must carry no intervals."""
    if solution.objective is UNREACHABLE:
        _require(not solution.intervals, "unreachable solution carries intervals")
        return UNREACHABLE
    total = _interval_objective(inst, solution.intervals)
    _require(total == solution.objective, f"intervals sum to {total}, reported {solution.objective}")
    return total


def check_anchored(inst, solution):
    if solution.objective is UNREACHABLE:
        _require(not solution.intervals, "unreachable solution carries intervals")
        return UNREACHABLE
    total = _interval_objective(inst, solution.intervals, anchors=inst.anchors)
    _require(total == solution.objective, f"intervals sum to {total}, reported {solution.objective}")
    return total


def check_count(inst, solution) -> int:
    placements = solution.placements
    _require(len(placements) == solution.scheduled_count,
             f"{len(placements)} placements for a reported count of {solution.scheduled_count}")
    seen = set()
    prev_end = None
    for idx, (u, v) in placements:
        _require(0 <= idx < len(inst.activities), f"unknown activity index {idx}")
        _require(idx not in seen, f"activity {idx} scheduled twice")
        seen.add(idx)
        length, anchor = inst.activities[idx]
        _require(v - u == length, f"activity {idx} placed on [{u}, {v}] but lasts {length}")
        _require(u <= anchor <= v, f"activity {idx} placed on [{u}, {v}] misses anchor {anchor}")
        _require(prev_end is None or prev_end <= u, f"activity {idx} at [{u}, {v}] overlaps its predecessor")
        prev_end = v
    return len(placements)


def check_lexmin(inst, solution) -> list:
    """Returns the saved-utility sequence implied by the activity blocks."""
    n, k, x = inst.n_moments, inst.k_activities, inst.activity_length
    blocks = solution.activity_intervals
    _require(len(blocks) == k, f"expected {k} blocks, got {len(blocks)}")
    covered = set()
    cursor = 1
    for s, e in blocks:
        _require(e - s + 1 == x, f"block [{s}, {e}] does not have length {x}")
        _require(s >= cursor and e <= n, f"block [{s}, {e}] overlaps or leaves 1..{n}")
        covered.update(range(s, e + 1))
        cursor = e + 1
    saved = [t for t in range(1, n + 1) if t not in covered]
    _require(list(solution.saved_moments) == saved,
             f"saved moments {list(solution.saved_moments)} are not the complement {saved}")
    utils = [inst.utilities[t - 1] for t in saved]
    _require(list(solution.saved_utilities) == utils, "saved utilities do not match the saved moments")
    return utils


def _sign(value, scale) -> int:
    if isinstance(value, Rational):
        return (value > 0) - (value < 0)
    eps = 1e-12 * scale
    return 1 if value > eps else (-1 if value < -eps else 0)


def _orient(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _strictly_separated(p: list, q: list, scale) -> bool:
    """Separating-axis test on the edge lines of both point sets (closed regions)."""
    for pts, other in ((p, q), (q, p)):
        m = len(pts)
        edges = [(pts[0], pts[1])] if m == 2 else [(pts[i], pts[(i + 1) % m]) for i in range(m)]
        for a, b in edges:
            own = {_sign(_orient(a, b, c), scale) for c in pts} - {0}
            sides = {_sign(_orient(a, b, c), scale) for c in other}
            if 0 in sides or len(sides) != 1:
                continue
            if not own or sides.isdisjoint(own):
                return True
    return False


def _shoelace_half(pts):
    twice = 0
    for (x1, y1), (x2, y2) in zip(pts, pts[1:] + pts[:1]):
        twice += x1 * y2 - x2 * y1
    if all(isinstance(c, Rational) for p in pts for c in p):
        return Fraction(twice, 2)
    return twice / 2


def check_partition(inst, solution, *, tol: float = 1e-9):
    """Vertex-disjoint, budgeted, pairwise non-touching parts; returns the recomputed objective."""
    if solution.objective is UNREACHABLE:
        _require(not solution.parts, "unreachable solution carries parts")
        return UNREACHABLE
    n = inst.n
    parts = [sorted(part.vertices) for part in solution.parts]
    _require(len(parts) == inst.k_parts, f"expected {inst.k_parts} parts, got {len(parts)}")
    used: set = set()
    total = 0
    for verts in parts:
        _require(len(verts) == len(set(verts)), f"part {verts} repeats a vertex")
        _require(all(0 <= v < n for v in verts), f"part {verts} names a vertex outside 0..{n - 1}")
        _require(used.isdisjoint(verts), f"part {verts} shares a vertex with another part")
        used.update(verts)
        if len(verts) == 2:
            a, b = verts
            _require((b - a) % n in (1, n - 1) and inst.objective_kind != "area",
                     f"two-vertex part {verts} is not a polygon edge in perimeter mode")
            total += inst.weight(a, b)
            continue
        _require(len(verts) >= 3, f"part {verts} has fewer than 3 vertices")
        ring = list(zip(verts, verts[1:] + verts[:1]))
        chords = 0 if len(verts) == n else sum(1 for a, b in ring if (b - a) % n != 1)
        _require(chords <= inst.chord_budget, f"part {verts} uses {chords} chords > {inst.chord_budget}")
        if inst.objective_kind == "area":
            total += _shoelace_half([inst.vertices[v] for v in verts])
        else:
            total += sum(inst.weight(a, b) for a, b in ring)
    scale = max(1.0, max(abs(float(c)) for p in inst.vertices for c in p)) ** 2
    for x in range(len(parts)):
        for y in range(x + 1, len(parts)):
            px = [inst.vertices[v] for v in parts[x]]
            py = [inst.vertices[v] for v in parts[y]]
            _require(_strictly_separated(px, py, scale), f"parts {parts[x]} and {parts[y]} touch or overlap")
    reported = solution.objective
    if isinstance(total, Fraction) and isinstance(reported, Rational):
        _require(total == reported, f"parts total {total}, reported {reported}")
    else:
        _require(math.isclose(total, reported, rel_tol=tol, abs_tol=tol),
                 f"parts total {total}, reported {reported}")
    return total


def check_rect(inst, result):
    """Rectangle holds at most K distinct heights; returns the recomputed aggregate."""
    m, n = len(inst.heights), len(inst.heights[0])
    ls, lj, cs, cd = result.rectangle
    _require(1 <= ls <= lj <= m and 1 <= cs <= cd <= n, f"rectangle {result.rectangle} is outside {m}x{n}")
    rows = range(ls - 1, lj)
    cols = range(cs - 1, cd)
    distinct = {inst.heights[r][c] for r in rows for c in cols}
    _require(len(distinct) <= inst.k_distinct,
             f"rectangle {result.rectangle} holds {len(distinct)} > {inst.k_distinct} heights")
    vals = [inst.utilities[r][c] for r in rows for c in cols]
    agg = sum(vals) if inst.aggregate_kind == "sum" else max(vals)
    _require(agg == result.max_aggregate, f"rectangle aggregates to {agg}, reported {result.max_aggregate}")
    return agg


__all__ = [
    "CheckError",
    "check_window",
    "check_anchored",
    "check_count",
    "check_lexmin",
    "check_partition",
    "check_rect",
]
