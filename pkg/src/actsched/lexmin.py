"""Lexicographically minimal sequence of uncovered ("saved") utilities.

K activities of length x are placed on disjoint moments of 1..N. Moments left
uncovered are read in chronological order; their utility sequence is minimized
lexicographically. The greedy picks the next saved moment among
``pos, pos + x, ..., pos + (K - CK) * x`` (smallest utility, then earliest
moment) and covers everything it skipped with whole activities.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from actsched import _backend
from actsched.core import InstanceError


@dataclass
class LexMinInstance:
    utilities: Sequence
    k_activities: int
    activity_length: int
    n_moments: int | None = None

    def __post_init__(self):
        n = len(self.utilities)
        if self.n_moments is None:
            self.n_moments = n
        elif self.n_moments != n:
            raise InstanceError(f"n_moments={self.n_moments} but {n} utilities given")
        for name in ("k_activities", "activity_length"):
            v = getattr(self, name)
            if isinstance(v, bool) or int(v) != v:
                raise InstanceError(f"{name} must be an integer")
            setattr(self, name, int(v))
        if self.k_activities < 0:
            raise InstanceError("k_activities must be >= 0")
        if self.activity_length < 1:
            raise InstanceError("activity_length must be >= 1")
        if self.k_activities * self.activity_length > n:
            raise InstanceError(
                f"K*x = {self.k_activities * self.activity_length} exceeds N = {n}"
            )


@dataclass
class LexMinSolution:
    saved_moments: list[int]
    saved_utilities: list
    activity_intervals: list[tuple[int, int]]
    engine: str = "deque"
    stats: dict = field(default_factory=dict)


def _intervals_from_saved(saved_mask: np.ndarray, x: int) -> list[tuple[int, int]]:
    covered = np.flatnonzero(saved_mask[1:] == 0) + 1
    starts = covered[::x]
    return [(int(s), int(s) + x - 1) for s in starts]


def solve_lexmin(inst: LexMinInstance, *, trace: list | None = None) -> LexMinSolution:
    """Residue-deque engine, amortized O(N).

    Passing ``trace`` (a list) records ``(pos, CK, CC, chosen, deque moments)``
    per greedy step and forces the Python kernel.
    """
    u = _backend.numeric_array(inst.utilities)
    padded = np.empty(len(u) + 1, dtype=u.dtype)
    padded[0] = 0
    padded[1:] = u
    kern = _backend.kernels_for(padded)
    if trace is not None:
        from actsched import _pykernels as kern
    saved, ops = kern.lexmin_sweep(padded, inst.k_activities, inst.activity_length, trace)
    saved = np.asarray(saved, dtype=np.uint8)
    moments = np.flatnonzero(saved[1:]) + 1
    utilities = padded[moments].tolist()
    return LexMinSolution(
        moments.tolist(),
        utilities,
        _intervals_from_saved(saved, inst.activity_length),
        "deque",
        {"deque_ops": int(ops), "backend": kern.__name__.rsplit(".", 1)[-1]},
    )


def solve_lexmin_simple(inst: LexMinInstance, *, trace: list | None = None) -> LexMinSolution:
    """Direct O(N*K) scan of the candidate moments at every step.

    ``trace`` records ``(pos, CK, CC, chosen, candidates)`` per step.
    """
    n, k, x = inst.n_moments, inst.k_activities, inst.activity_length
    u = list(inst.utilities)
    free = n - k * x
    ck = cc = 0
    pos = 1
    saved: list[int] = []
    intervals: list[tuple[int, int]] = []
    while ck < k and cc < free:
        candidates = [pos + i * x for i in range(k - ck + 1)]
        chosen = candidates[0]
        for t in candidates[1:]:
            if u[t - 1] < u[chosen - 1]:
                chosen = t
        if trace is not None:
            trace.append((pos, ck, cc, chosen, tuple(candidates)))
        j = (chosen - pos) // x
        intervals.extend((pos + i * x, pos + (i + 1) * x - 1) for i in range(j))
        ck += j
        cc += 1
        saved.append(chosen)
        pos = chosen + 1
    if ck == k:
        saved.extend(range(pos, n + 1))
    else:
        intervals.extend((t, t + x - 1) for t in range(pos, n + 1, x))
    return LexMinSolution(saved, [u[t - 1] for t in saved], intervals, "simple")
