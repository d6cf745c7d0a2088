"""Anchored variant: activity ``j`` must also cover its anchor moment ``p(j)``.

Moments are grouped into segments ``[p(j), p(j+1) - 1]`` (with ``p(K+1) = N+1``);
a moment in segment ``j`` can only be the right end of activity ``j``. The table
``best[i]`` is the optimum with the first ``j`` activities placed and activity
``j`` ending at or before ``i``. Three engines share this table: a general deque
sweep, a prefix-maximum engine for ``Up = N`` and a direct one for ``Lo = Up``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from actsched.core import UNREACHABLE, InstanceError, MonotoneDeque, PrefixSums, as_int_list
from actsched.window import WindowSolution

_CARRY = -1


@dataclass
class AnchoredInstance:
    utilities: Sequence
    lower_bounds: Sequence[int]
    upper_bounds: Sequence[int]
    anchors: Sequence[int]
    n_moments: int | None = None

    def __post_init__(self):
        n = len(self.utilities)
        if self.n_moments is None:
            self.n_moments = n
        elif self.n_moments != n:
            raise InstanceError(f"n_moments={self.n_moments} but {n} utilities given")
        lo = as_int_list(self.lower_bounds, "lower_bounds")
        up = as_int_list(self.upper_bounds, "upper_bounds")
        p = as_int_list(self.anchors, "anchors")
        if not (len(lo) == len(up) == len(p)):
            raise InstanceError("lower_bounds, upper_bounds and anchors differ in length")
        for j, (a, b) in enumerate(zip(lo, up), 1):
            if a < 1:
                raise InstanceError(f"Lo({j}) = {a}; an anchored activity covers at least its anchor")
            if a > b:
                raise InstanceError(f"Lo({j}) = {a} exceeds Up({j}) = {b}")
        for j, pj in enumerate(p, 1):
            if not 1 <= pj <= n:
                raise InstanceError(f"anchor p({j}) = {pj} outside 1..{n}")
        if any(b <= a for a, b in zip(p, p[1:])):
            raise InstanceError("anchors must be strictly increasing")
        self.lower_bounds = tuple(lo)
        self.upper_bounds = tuple(min(b, n) for b in up)
        self.anchors = tuple(p)

    @property
    def k_activities(self) -> int:
        return len(self.anchors)


def segment_labels(inst: AnchoredInstance) -> list[int]:
    """``a(t)`` for ``t = 0..N``: index of the activity whose segment holds ``t``."""
    n = inst.n_moments
    a = [0] * (n + 1)
    bounds = (0,) + inst.anchors + (n + 1,)
    for j in range(1, inst.k_activities + 1):
        for t in range(bounds[j], bounds[j + 1]):
            a[t] = j
    return a


def _walk_back(choice: list, n: int) -> list[tuple[int, int]]:
    intervals = []
    i = n
    while choice[i] is not None:
        c = choice[i]
        if c == _CARRY:
            i -= 1
            continue
        intervals.append((c + 1, i))
        i = c
    intervals.reverse()
    return intervals


def _finish(best: list, choice: list, n: int, k: int, engine: str) -> WindowSolution:
    if k == 0:
        return WindowSolution(0, [], engine)
    if best[n] is None:
        return WindowSolution(UNREACHABLE, [], engine)
    intervals = _walk_back(choice, n)
    if len(intervals) != k:
        raise AssertionError(f"reconstructed {len(intervals)} intervals, expected {k}")
    return WindowSolution(best[n], intervals, engine)


def _start_tables(inst: AnchoredInstance):
    n = inst.n_moments
    best: list = [None] * (n + 1)
    choice: list = [None] * (n + 1)
    first = inst.anchors[0] if inst.anchors else n + 1
    for t in range(first):
        best[t] = 0
    return best, choice


def solve_anchored(inst: AnchoredInstance, *, debug: bool = False) -> WindowSolution:
    """General engine, amortized O(N)."""
    n, k = inst.n_moments, inst.k_activities
    sp = PrefixSums(inst.utilities)
    best, choice = _start_tables(inst)
    p = (0,) + inst.anchors + (n + 1,)
    dq = MonotoneDeque(debug=debug)
    ops = 0
    for j in range(1, k + 1):
        lo, up = inst.lower_bounds[j - 1], inst.upper_bounds[j - 1]
        left, right = p[j], p[j + 1] - 1
        dq.clear()
        nxt = max(left - up, p[j - 1])
        for i in range(left, right + 1):
            thigh = min(i - lo, left - 1)
            while nxt <= thigh:
                if best[nxt] is not None:
                    dq.push_back(best[nxt] - sp[nxt], nxt)
                nxt += 1
            dq.expire_front(max(i - up, p[j - 1]))
            carry = best[i - 1] if i > left else None
            front = dq.front()
            if front is not None:
                cand = front.value + sp[i]
                if carry is not None and carry >= cand:
                    best[i], choice[i] = carry, _CARRY
                else:
                    best[i], choice[i] = cand, front.moment
            elif carry is not None:
                best[i], choice[i] = carry, _CARRY
        ops += dq.operations
        dq.pushes = dq.evictions = dq.expirations = 0
    sol = _finish(best, choice, n, k, "general")
    sol.stats["deque_ops"] = ops
    return sol


def solve_anchored_no_upper(inst: AnchoredInstance) -> WindowSolution:
    """Prefix-maximum engine; requires ``Up(j) >= N`` for every activity."""
    n, k = inst.n_moments, inst.k_activities
    if any(b < n for b in inst.upper_bounds):
        raise InstanceError("no-upper engine requires Up(j) >= N for every activity")
    sp = PrefixSums(inst.utilities)
    best, choice = _start_tables(inst)
    p = (0,) + inst.anchors + (n + 1,)
    for j in range(1, k + 1):
        lo = inst.lower_bounds[j - 1]
        left, right = p[j], p[j + 1] - 1
        # running max of best[t] - sp[t] over t = p(j-1)..p(j)-1
        vmax: dict[int, tuple] = {}
        run = None
        for t in range(p[j - 1], left):
            if best[t] is not None:
                v = best[t] - sp[t]
                if run is None or v >= run[0]:
                    run = (v, t)
            vmax[t] = run
        for i in range(left, right + 1):
            carry = best[i - 1] if i > left else None
            cand = None
            if i - lo >= p[j - 1]:
                prev = min(i - lo, left - 1)
                cand = vmax[prev]
            if cand is not None:
                val = cand[0] + sp[i]
                if carry is not None and carry >= val:
                    best[i], choice[i] = carry, _CARRY
                else:
                    best[i], choice[i] = val, cand[1]
            elif carry is not None:
                best[i], choice[i] = carry, _CARRY
    return _finish(best, choice, n, k, "no-upper")


def solve_anchored_exact_length(inst: AnchoredInstance) -> WindowSolution:
    """Direct engine; requires ``Lo(j) = Up(j)`` for every activity."""
    n, k = inst.n_moments, inst.k_activities
    # Up is clamped to N, so Lo > N leaves Up = N < Lo (infeasible, still exact-length)
    if any(a != b and not (b == n and a > n) for a, b in zip(inst.lower_bounds, inst.upper_bounds)):
        raise InstanceError("exact-length engine requires Lo(j) = Up(j) for every activity")
    sp = PrefixSums(inst.utilities)
    best, choice = _start_tables(inst)
    p = (0,) + inst.anchors + (n + 1,)
    for j in range(1, k + 1):
        length = inst.lower_bounds[j - 1]
        left, right = p[j], p[j + 1] - 1
        for i in range(left, right + 1):
            carry = best[i - 1] if i > left else None
            m = i - length
            val = None
            if p[j - 1] <= m <= left - 1 and best[m] is not None:
                val = best[m] + sp.range_sum(m + 1, i)
            if val is not None and not (carry is not None and carry >= val):
                best[i], choice[i] = val, m
            elif carry is not None:
                best[i], choice[i] = carry, _CARRY
    return _finish(best, choice, n, k, "exact-length")
