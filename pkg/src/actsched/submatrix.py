"""Best rectangle of a height grid with at most K distinct heights.

For every top row and every bottom row the columns are swept with two pointers:
each column keeps the list of distinct heights it holds between the two rows
(capped at K+1 entries), and the left pointer advances while the window's
union has more than K distinct heights. Because utilities are nonnegative,
only that widest window per right column needs scoring. Scoring is O(1) per
window through 2D prefix sums (sum) or a 2D sparse table (max).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from actsched import _backend
from actsched.core import InstanceError

SUM = "sum"
MAX = "max"


@dataclass
class GridInstance:
    heights: Sequence[Sequence]
    utilities: Sequence[Sequence]
    k_distinct: int
    aggregate_kind: str = SUM

    def __post_init__(self):
        h = [list(row) for row in self.heights]
        u = [list(row) for row in self.utilities]
        if not h or not h[0]:
            raise InstanceError("heights must be a non-empty matrix")
        m, n = len(h), len(h[0])
        if any(len(row) != n for row in h):
            raise InstanceError("heights rows differ in length")
        if len(u) != m or any(len(row) != n for row in u):
            raise InstanceError(f"utilities must be a {m}x{n} matrix like heights")
        for r, row in enumerate(u):
            for c, v in enumerate(row):
                if isinstance(v, bool) or not v >= 0:
                    raise InstanceError(f"utility at ({r + 1}, {c + 1}) must be a nonnegative number, got {v!r}")
        for row in h:
            for v in row:
                try:
                    hash(v)
                except TypeError:
                    raise InstanceError(f"height {v!r} is not hashable") from None
        k = self.k_distinct
        if isinstance(k, bool) or int(k) != k:
            raise InstanceError("k_distinct must be an integer")
        k = int(k)
        if k < 1:
            raise InstanceError("k_distinct must be >= 1")
        if k > m * n:
            raise InstanceError(f"k_distinct {k} exceeds M*N = {m * n}")
        if self.aggregate_kind not in (SUM, MAX):
            raise InstanceError(f"aggregate_kind must be 'sum' or 'max', got {self.aggregate_kind!r}")
        self.heights = tuple(tuple(row) for row in h)
        self.utilities = tuple(tuple(row) for row in u)
        self.k_distinct = k

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.heights), len(self.heights[0])

    def transposed(self) -> "GridInstance":
        return GridInstance(
            [list(col) for col in zip(*self.heights)],
            [list(col) for col in zip(*self.utilities)],
            self.k_distinct,
            self.aggregate_kind,
        )


@dataclass
class RectResult:
    """``rectangle`` is ``(LS, LJ, CS, CD)``: top, bottom, left, right; 1-based, inclusive."""

    max_aggregate: object
    rectangle: tuple[int, int, int, int]
    engine: str = "two-pointer"
    stats: dict = field(default_factory=dict)


class UtilityIndex:
    """O(1) rectangle aggregates: 2D prefix sums or a 2D sparse table."""

    def __init__(self, utilities, kind: str = SUM):
        u = _backend.numeric_array(utilities)
        if u.ndim != 2:
            raise InstanceError("utilities must be a 2D matrix")
        if (u < 0).any():
            raise InstanceError("utilities must be nonnegative")
        self.kind = kind
        self.shape = u.shape
        m, n = u.shape
        if kind == SUM:
            ps = np.zeros((m + 1, n + 1), dtype=u.dtype)
            ps[1:, 1:] = u.cumsum(axis=0).cumsum(axis=1)
            self._ps = ps
        elif kind == MAX:
            la = (m).bit_length()
            lb = (n).bit_length()
            table = np.zeros((la, lb, m, n), dtype=u.dtype)
            table[0, 0] = u
            for b in range(1, lb):
                h = 1 << (b - 1)
                table[0, b, :, : n - h] = np.maximum(table[0, b - 1, :, : n - h],
                                                     table[0, b - 1, :, h:])
            for a in range(1, la):
                h = 1 << (a - 1)
                table[a, :, : m - h, :] = np.maximum(table[a - 1, :, : m - h, :],
                                                     table[a - 1, :, h:, :])
            self._table = table
        else:
            raise InstanceError(f"unknown aggregate kind {kind!r}")

    def query(self, r1, r2, c1, c2):
        """Aggregate over rows ``r1..r2`` and columns ``c1..c2`` (0-based, inclusive).

        Arguments may be broadcastable integer arrays.
        """
        if self.kind == SUM:
            ps = self._ps
            r2p = np.asarray(r2) + 1
            c2p = np.asarray(c2) + 1
            return ps[r2p, c2p] - ps[r1, c2p] - ps[r2p, c1] + ps[r1, c1]
        r1 = np.asarray(r1)
        r2 = np.asarray(r2)
        c1 = np.asarray(c1)
        c2 = np.asarray(c2)
        a = _floor_log2(r2 - r1 + 1)
        b = _floor_log2(c2 - c1 + 1)
        t = self._table
        r2s = r2 - (1 << a) + 1
        c2s = c2 - (1 << b) + 1
        return np.maximum(np.maximum(t[a, b, r1, c1], t[a, b, r2s, c1]),
                          np.maximum(t[a, b, r1, c2s], t[a, b, r2s, c2s]))


def _floor_log2(x):
    x = np.asarray(x, dtype=np.int64)
    out = np.zeros(x.shape, dtype=np.int64)
    y = x.copy()
    while True:
        mask = y > 1
        if not mask.any():
            return out
        out[mask] += 1
        y[mask] >>= 1


def build_utility_index(utilities, kind: str = SUM) -> UtilityIndex:
    return UtilityIndex(utilities, kind)


def _encode(heights) -> tuple[np.ndarray, np.ndarray, int]:
    lookup: dict = {}
    codes = np.array([[lookup.setdefault(v, len(lookup)) for v in row] for row in heights],
                     dtype=np.int64)
    local = np.empty_like(codes)
    for c in range(codes.shape[1]):
        _, inv = np.unique(codes[:, c], return_inverse=True)
        local[:, c] = inv.reshape(-1)
    return np.ascontiguousarray(codes), np.ascontiguousarray(local), len(lookup)


def leftmost_columns(inst: GridInstance, top: int, *, cap_lists: bool = True) -> np.ndarray:
    """``out[LJ - top, CD]`` = smallest ``CS`` whose window has <= K distinct heights.

    0-based; ``CD + 1`` when even column ``CD`` alone exceeds K.
    """
    codes, local, n_codes = _encode(inst.heights)
    kern = _backend.kernels_for(codes)
    return np.asarray(kern.leftmost_columns(codes, local, top, inst.k_distinct, cap_lists, n_codes),
                      dtype=np.int64)


def solve_submatrix(inst: GridInstance, *, cap_lists: bool = True, debug: bool = False) -> RectResult:
    m, n = inst.shape
    if m > n:
        res = solve_submatrix(inst.transposed(), cap_lists=cap_lists, debug=debug)
        ls, lj, cs, cd = res.rectangle
        res.rectangle = (cs, cd, ls, lj)
        res.stats["transposed"] = True
        return res
    codes, local, n_codes = _encode(inst.heights)
    kern = _backend.kernels_for(codes)
    index = UtilityIndex(inst.utilities, inst.aggregate_kind)
    all_ones = inst.aggregate_kind == SUM and all(v == 1 for row in inst.utilities for v in row)
    k = inst.k_distinct
    cd_idx = np.arange(n)[None, :]
    best_val, best_rect = None, None
    scored = 0
    for ls in range(m):
        cs = np.asarray(kern.leftmost_columns(codes, local, ls, k, cap_lists, n_codes),
                        dtype=np.int64)
        lj_idx = np.arange(ls, m)[:, None]
        valid = cs <= cd_idx
        if not valid.any():
            continue
        cs_safe = np.minimum(cs, cd_idx)
        if all_ones:
            agg = (lj_idx - ls + 1) * (cd_idx - cs_safe + 1)
        else:
            agg = index.query(ls, lj_idx, cs_safe, cd_idx)
        agg = np.where(valid, agg, -1)
        scored += int(valid.sum())
        flat = int(np.argmax(agg))
        r, c = divmod(flat, n)
        val = agg[r, c]
        if debug:
            _debug_windows(inst, ls, cs)
        if best_val is None or val > best_val:
            best_val = val
            best_rect = (ls + 1, ls + r + 1, int(cs[r, c]) + 1, c + 1)
    if isinstance(best_val, np.generic):
        best_val = best_val.item()
    return RectResult(best_val, best_rect, "two-pointer",
                      {"scored_windows": scored, "backend": kern.__name__.rsplit(".", 1)[-1]})


def _debug_windows(inst: GridInstance, ls: int, cs: np.ndarray) -> None:
    h = inst.heights
    k = inst.k_distinct
    for r in range(cs.shape[0]):
        lj = ls + r
        for cd in range(cs.shape[1]):
            left = int(cs[r, cd])
            if left > cd:
                continue
            distinct = {h[i][j] for i in range(ls, lj + 1) for j in range(left, cd + 1)}
            if len(distinct) > k:
                raise AssertionError(f"window rows {ls}-{lj} cols {left}-{cd} has {len(distinct)} > {k} heights")
