"""K chronologically ordered activities with per-activity length bounds.

Activity ``j`` covers between ``Lo(j)`` and ``Up(j)`` consecutive moments, the
intervals are moment-disjoint, and the total utility of covered moments is
maximized. ``Lo(j) = 0`` allows an empty activity, reported as ``(s, s - 1)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from actsched import _backend
from actsched._pykernels import CARRY
from actsched.core import UNREACHABLE, InstanceError, as_int_list

_INT64_HEADROOM = 2**62


@dataclass
class WindowInstance:
    utilities: Sequence
    lower_bounds: Sequence[int]
    upper_bounds: Sequence[int]
    n_moments: int | None = None

    def __post_init__(self):
        n = len(self.utilities)
        if self.n_moments is None:
            self.n_moments = n
        elif self.n_moments != n:
            raise InstanceError(f"n_moments={self.n_moments} but {n} utilities given")
        lo = as_int_list(self.lower_bounds, "lower_bounds")
        up = as_int_list(self.upper_bounds, "upper_bounds")
        if len(lo) != len(up):
            raise InstanceError("lower_bounds and upper_bounds differ in length")
        for j, (a, b) in enumerate(zip(lo, up), 1):
            if a < 0:
                raise InstanceError(f"Lo({j}) = {a} is negative")
            if a > b:
                raise InstanceError(f"Lo({j}) = {a} exceeds Up({j}) = {b}")
        self.lower_bounds = tuple(lo)
        self.upper_bounds = tuple(min(b, n) for b in up)

    @property
    def k_activities(self) -> int:
        return len(self.lower_bounds)


@dataclass
class WindowSolution:
    objective: object
    intervals: list[tuple[int, int]]
    engine: str = "deque"
    stats: dict = field(default_factory=dict)

    @property
    def feasible(self) -> bool:
        return self.objective is not UNREACHABLE


def _prefix_array(utilities) -> np.ndarray:
    u = _backend.numeric_array(utilities)
    if u.dtype == np.int64 and len(u):
        if int(np.abs(u).max()) * (len(u) + 1) >= _INT64_HEADROOM:
            u = np.array([int(v) for v in u], dtype=object)
    sp = np.zeros(len(u) + 1, dtype=u.dtype)
    if len(u):
        sp[1:] = np.cumsum(u)
    return sp


def _to_python(v):
    return v.item() if isinstance(v, np.generic) else v


def solve_window(inst: WindowInstance) -> WindowSolution:
    """Exact optimum for arbitrary bounds, one monotone-deque sweep per activity.

    ``stats["deque_ops"]`` lists the deque operation count of every layer.
    """
    n = inst.n_moments
    k = inst.k_activities
    sp = _prefix_array(inst.utilities)
    kern = _backend.kernels_for(sp)
    prev_val = np.zeros(n + 1, dtype=sp.dtype)
    prev_reach = np.ones(n + 1, dtype=np.uint8)
    cur_val = np.zeros(n + 1, dtype=sp.dtype)
    cur_reach = np.zeros(n + 1, dtype=np.uint8)
    choices = np.empty((k, n + 1), dtype=np.int32)
    ops = []
    for j in range(k):
        ops.append(
            int(kern.window_layer(sp, prev_val, prev_reach, inst.lower_bounds[j],
                                  inst.upper_bounds[j], cur_val, cur_reach, choices[j]))
        )
        prev_val, cur_val = cur_val, prev_val
        prev_reach, cur_reach = cur_reach, prev_reach
    stats = {"deque_ops": ops, "backend": kern.__name__.rsplit(".", 1)[-1]}
    if not prev_reach[n]:
        return WindowSolution(UNREACHABLE, [], "deque", stats)
    return WindowSolution(_to_python(prev_val[n]), _walk_back(choices, n), "deque", stats)


def _walk_back(choices: np.ndarray, n: int) -> list[tuple[int, int]]:
    intervals = []
    i = n
    for j in range(choices.shape[0] - 1, -1, -1):
        row = choices[j, : i + 1]
        if row[i] == CARRY:
            i = int(np.flatnonzero(row != CARRY)[-1])
        m = int(choices[j, i])
        intervals.append((m + 1, i))
        i = m
    intervals.reverse()
    return intervals


def solve_window_simple(inst: WindowInstance) -> WindowSolution:
    """Running-maximum engine for the case ``Up(j) = N`` for every activity."""
    n = inst.n_moments
    if any(b < n for b in inst.upper_bounds):
        raise InstanceError("simple engine requires Up(j) >= N for every activity")
    sp = [0]
    for v in inst.utilities:
        sp.append(sp[-1] + v)
    prev: list = [0] * (n + 1)
    parents = []
    for lo in inst.lower_bounds:
        cur: list = [None] * (n + 1)
        par = [None] * (n + 1)
        sbest = None
        arg = -1
        for i in range(n + 1):
            m = i - lo
            if m >= 0 and prev[m] is not None:
                scand = prev[m] - sp[m]
                if sbest is None or scand >= sbest:
                    sbest, arg = scand, m
            carry = cur[i - 1] if i > 0 else None
            if sbest is not None:
                cand = sbest + sp[i]
                if carry is not None and carry >= cand:
                    cur[i], par[i] = carry, CARRY
                else:
                    cur[i], par[i] = cand, arg
            elif carry is not None:
                cur[i], par[i] = carry, CARRY
        parents.append(par)
        prev = cur
    if prev[n] is None:
        return WindowSolution(UNREACHABLE, [], "simple")
    intervals = []
    i = n
    for par in reversed(parents):
        while par[i] == CARRY:
            i -= 1
        m = par[i]
        intervals.append((m + 1, i))
        i = m
    intervals.reverse()
    return WindowSolution(prev[n], intervals, "simple")
