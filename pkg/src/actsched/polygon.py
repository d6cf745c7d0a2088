"""Partition a convex polygon into K non-touching convex parts.

Each part's corners are polygon vertices, parts share no vertex, and a part may
use at most B edges that are not polygon edges (chords). The objective is the
total area or total weighted perimeter of the parts.

Vertex intervals are cyclic: ``(i, L)`` denotes vertices ``i, i+1, ..., i+L-1``
modulo n. The interval table ``best[i][L][p]`` holds the optimum for exactly
``p`` parts inside the interval. A part that uses both interval ends walks from
``i`` to ``i+L-1`` along polygon edges and chords; the walk is memoized in a
chain table indexed by (chords used, parts nested under those chords).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Sequence

from actsched.core import UNREACHABLE, InstanceError, LimitError

MAX_CHORD_BUDGET = 3
AREA = "area"
PERIMETER = "perimeter"
_KIND_ALIASES = {"area": AREA, "perimeter": PERIMETER, "weighted-perimeter": PERIMETER,
                 "weighted_perimeter": PERIMETER}


@dataclass
class PolygonInstance:
    vertices: Sequence[tuple]
    k_parts: int
    chord_budget: int
    objective_kind: str = AREA
    weights: Sequence[Sequence] | None = None

    def __post_init__(self):
        kind = _KIND_ALIASES.get(str(self.objective_kind))
        if kind is None:
            raise InstanceError(f"objective_kind must be 'area' or 'weighted-perimeter', got {self.objective_kind!r}")
        self.objective_kind = kind
        pts = []
        for v in self.vertices:
            try:
                x, y = v
            except (TypeError, ValueError):
                raise InstanceError(f"vertex {v!r} is not an (x, y) pair") from None
            pts.append((x, y))
        self.vertices = tuple(pts)
        n = len(pts)
        if n < 3:
            raise InstanceError("a polygon needs at least 3 vertices")
        for name in ("k_parts", "chord_budget"):
            v = getattr(self, name)
            if isinstance(v, bool) or int(v) != v:
                raise InstanceError(f"{name} must be an integer")
            setattr(self, name, int(v))
        if self.k_parts < 1:
            raise InstanceError("k_parts must be >= 1")
        if self.chord_budget < 0:
            raise InstanceError("chord_budget must be >= 0")
        if self.chord_budget > MAX_CHORD_BUDGET:
            raise LimitError(f"chord_budget {self.chord_budget} exceeds the cap {MAX_CHORD_BUDGET}")
        check_strictly_convex(pts)
        if self.weights is not None:
            w = [list(row) for row in self.weights]
            if len(w) != n or any(len(row) != n for row in w):
                raise InstanceError(f"weights must be an {n}x{n} matrix")
            for a in range(n):
                for b in range(n):
                    if w[a][b] != w[b][a]:
                        raise InstanceError(f"weights not symmetric at ({a}, {b})")
                    if w[a][b] < 0:
                        raise InstanceError(f"negative weight at ({a}, {b})")
            self.weights = tuple(tuple(row) for row in w)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def exact(self) -> bool:
        """Whether area arithmetic can run on exact rationals."""
        return all(isinstance(c, Rational) and not isinstance(c, bool)
                   for v in self.vertices for c in v)

    def weight(self, a: int, b: int):
        if self.weights is not None:
            return self.weights[a][b]
        (x1, y1), (x2, y2) = self.vertices[a], self.vertices[b]
        return math.hypot(x2 - x1, y2 - y1)


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def check_strictly_convex(pts: Sequence[tuple]) -> None:
    """Every vertex strictly left of every non-incident edge (counterclockwise order)."""
    n = len(pts)
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        for k in range(n):
            if k in (i, (i + 1) % n):
                continue
            c = _cross(a, b, pts[k])
            if c == 0:
                raise InstanceError(f"vertices {i}, {(i + 1) % n}, {k} are collinear")
            if c < 0:
                raise InstanceError(
                    "vertices are not in strictly convex counterclockwise position "
                    f"(vertex {k} lies right of edge {i}-{(i + 1) % n})"
                )


@dataclass
class PartitionTable:
    """Interval values ``A`` and, once solved, the part-count table."""

    n: int
    areas: list[list]
    amax: list[list[list]] | None = None

    def interval_value(self, i: int, j: int):
        """``A(i, j)`` for the cyclic vertex interval from ``i`` to ``j``."""
        return self.areas[i % self.n][(j - i) % self.n + 1]


@dataclass
class Part:
    interval: tuple[int, int]
    vertices: list[int]
    chords: list[tuple[int, int]]


@dataclass
class PartitionSolution:
    objective: object
    parts: list[Part] = field(default_factory=list)

    @property
    def feasible(self) -> bool:
        return self.objective is not UNREACHABLE


def precompute_interval_values(inst: PolygonInstance) -> PartitionTable:
    """``A(i, L)`` for every start ``i`` and length ``L`` in O(n^2).

    Area mode: area of the sub-polygon on those vertices (0 for L <= 2).
    Perimeter mode: its closed weighted perimeter; a 2-vertex interval counts its
    single edge once.
    """
    n = inst.n
    pts = inst.vertices
    exact = inst.exact()
    zero = Fraction(0) if (inst.objective_kind == AREA and exact) else 0
    areas = [[None] * (n + 1) for _ in range(n)]
    for i in range(n):
        areas[i][1] = zero
        if inst.objective_kind == AREA:
            areas[i][2] = zero
            for length in range(3, n + 1):
                b, c = (i + length - 2) % n, (i + length - 1) % n
                cr = _cross(pts[i], pts[b], pts[c])
                tri = Fraction(cr, 2) if exact else cr / 2
                areas[i][length] = areas[i][length - 1] + tri
        else:
            w = inst.weight
            areas[i][2] = w(i, (i + 1) % n)
            for length in range(3, n + 1):
                b, c = (i + length - 2) % n, (i + length - 1) % n
                val = areas[i][length - 1] + w(i, c) + w(b, c)
                if length >= 4:
                    val -= w(i, b)
                areas[i][length] = val
    return PartitionTable(n, areas)


def _better(cur, cand) -> bool:
    return cand is not None and (cur is None or cand > cur)


def solve_partition(inst: PolygonInstance) -> PartitionSolution:
    n, K, B = inst.n, inst.k_parts, inst.chord_budget
    kind = inst.objective_kind
    table = precompute_interval_values(inst)
    A = table.areas
    chord_gain = 2 if kind == PERIMETER else 0
    w = inst.weight

    def chord_value(a: int, length: int):
        val = -A[a][length]
        if chord_gain:
            val += chord_gain * w(a, (a + length - 1) % n)
        return val

    Q = K  # nested-part budgets 0..K-1
    best = [[None] * (n + 1) for _ in range(n)]
    best_ch = [[None] * (n + 1) for _ in range(n)]
    # chain[i][L][c][q] and chain excluding the direct chord i -> i+L-1
    chain = [[None] * (n + 1) for _ in range(n)]
    chain_ch = [[None] * (n + 1) for _ in range(n)]
    chainx = [[None] * (n + 1) for _ in range(n)]
    chainx_ch = [[None] * (n + 1) for _ in range(n)]

    for length in range(1, n + 1):
        for i in range(n):
            _fill_chain(i, length, n, B, Q, best, chain, chain_ch, chainx, chainx_ch, chord_value)
            _fill_best(i, length, n, K, B, kind, A, w, best, best_ch, chainx)

    answer, start = None, None
    for i in range(n):
        if _better(answer, best[i][n][K]):
            answer, start = best[i][n][K], i
    table.amax = best
    if answer is None:
        return PartitionSolution(UNREACHABLE, [])
    walker = _Walker(n, best_ch, chain_ch, chainx_ch)
    parts = walker.parts(start, n, K)
    return PartitionSolution(answer, parts)


def _fill_chain(i, length, n, B, Q, best, chain, chain_ch, chainx, chainx_ch, chord_value):
    vals = [[None] * Q for _ in range(B + 1)]
    chs = [[None] * Q for _ in range(B + 1)]
    if length == 1:
        vals[0][0] = 0
        chs[0][0] = ("start",)
        chain[i][1], chain_ch[i][1] = vals, chs
        return
    prev = chain[i][length - 1]
    for c in range(B + 1):
        for q in range(Q):
            if prev[c][q] is not None:
                vals[c][q] = prev[c][q]
                chs[c][q] = ("edge",)
    # chords (a, b) with b = i + length - 1 and a = i + a_off, b - a >= 2
    xvals = xchs = None
    for a_off in range(length - 3, -1, -1):
        if a_off == 0:
            xvals = [row[:] for row in vals]
            xchs = [row[:] for row in chs]
        a = (i + a_off) % n
        inner_len = length - a_off - 2
        inner = best[(a + 1) % n][inner_len]
        head = chain[i][a_off + 1]
        cv = chord_value(a, length - a_off)
        for c in range(1, B + 1):
            hc = head[c - 1]
            for q in range(Q):
                for qn in range(q + 1):
                    h = hc[q - qn]
                    nest = inner[qn]
                    if h is None or nest is None:
                        continue
                    cand = h + cv + nest
                    if _better(vals[c][q], cand):
                        vals[c][q] = cand
                        chs[c][q] = ("chord", a_off, qn)
    if xvals is None:
        xvals, xchs = vals, chs
    chain[i][length], chain_ch[i][length] = vals, chs
    chainx[i][length], chainx_ch[i][length] = xvals, xchs


def _fill_best(i, length, n, K, B, kind, A, w, best, best_ch, chainx):
    vals = [None] * (K + 1)
    chs = [None] * (K + 1)
    vals[0] = 0
    chs[0] = ("empty",)
    nxt = (i + 1) % n
    for p in range(1, K + 1):
        v, ch = None, None
        if length >= 2:
            cand = best[nxt][length - 1][p]
            if _better(v, cand):
                v, ch = cand, ("drop_first",)
            cand = best[i][length - 1][p]
            if _better(v, cand):
                v, ch = cand, ("drop_last",)
            for s_off in range(length - 1):
                left = best[i][s_off + 1]
                right = best[(i + s_off + 1) % n][length - s_off - 1]
                for q in range(1, p):
                    if left[q] is None or right[p - q] is None:
                        continue
                    cand = left[q] + right[p - q]
                    if _better(v, cand):
                        v, ch = cand, ("split", s_off, q)
        if length == 2 and kind == PERIMETER and p == 1:
            cand = w(i, nxt)
            if _better(v, cand):
                v, ch = cand, ("edge",)
        if length >= 3:
            emax = B if length == n else B - 1
            xv = chainx[i][length]
            for c in range(0, emax + 1):
                h = xv[c][p - 1]
                if h is None:
                    continue
                cand = A[i][length] + h
                if _better(v, cand):
                    v, ch = cand, ("close", c)
        vals[p], chs[p] = v, ch
    best[i][length], best_ch[i][length] = vals, chs


class _Walker:
    def __init__(self, n, best_ch, chain_ch, chainx_ch):
        self.n = n
        self.best_ch = best_ch
        self.chain_ch = chain_ch
        self.chainx_ch = chainx_ch

    def parts(self, i: int, length: int, p: int) -> list[Part]:
        n = self.n
        if p == 0:
            return []
        ch = self.best_ch[i][length][p]
        tag = ch[0]
        if tag == "drop_first":
            return self.parts((i + 1) % n, length - 1, p)
        if tag == "drop_last":
            return self.parts(i, length - 1, p)
        if tag == "split":
            _, s_off, q = ch
            return (self.parts(i, s_off + 1, q)
                    + self.parts((i + s_off + 1) % n, length - s_off - 1, p - q))
        j = (i + length - 1) % n
        if tag == "edge":
            return [Part((i, j), [i, j], [])]
        if tag == "close":
            verts: list[int] = []
            chords: list[tuple[int, int]] = []
            nested: list[Part] = []
            self._chain(i, length, ch[1], p - 1, True, verts, chords, nested)
            return [Part((i, j), verts, chords)] + nested
        raise AssertionError(f"unexpected choice {ch!r}")

    def _chain(self, i, length, c, q, excl, verts, chords, nested):
        n = self.n
        table = self.chainx_ch if excl else self.chain_ch
        ch = table[i][length][c][q]
        b = (i + length - 1) % n
        if ch[0] == "start":
            verts.append(i)
            return
        if ch[0] == "edge":
            self._chain(i, length - 1, c, q, False, verts, chords, nested)
            verts.append(b)
            return
        _, a_off, qn = ch
        a = (i + a_off) % n
        self._chain(i, a_off + 1, c - 1, q - qn, False, verts, chords, nested)
        verts.append(b)
        chords.append((a, b))
        nested.extend(self.parts((a + 1) % n, length - a_off - 2, qn))
