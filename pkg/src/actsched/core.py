"""Shared primitives: the Unreachable sentinel, prefix sums and the monotone deque."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class _Unreachable:
    """Objective value of an infeasible subproblem.

    Absorbs addition, compares below every finite number and equals only itself.
    """

    _instance: "_Unreachable | None" = None

    def __new__(cls) -> "_Unreachable":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Unreachable"

    def __reduce__(self):
        return (_Unreachable, ())

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        if other is self:
            raise ArithmeticError("Unreachable - Unreachable is undefined")
        return self

    def __lt__(self, other) -> bool:
        return other is not self

    def __le__(self, other) -> bool:
        return True

    def __gt__(self, other) -> bool:
        return False

    def __ge__(self, other) -> bool:
        return other is self

    def __eq__(self, other) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("actsched.Unreachable")


UNREACHABLE = _Unreachable()


def is_reachable(value) -> bool:
    return value is not UNREACHABLE and value is not None


def ext_max(*values):
    """Maximum of extended values; Unreachable only if every argument is."""
    best = UNREACHABLE
    for v in values:
        if v is None:
            continue
        if best is UNREACHABLE or (v is not UNREACHABLE and v > best):
            best = v
    return best


class PrefixSums:
    """Cumulative sums ``sp[0] = 0``, ``sp[i] = sp[i-1] + u(i)`` over 1-based moments."""

    __slots__ = ("sp",)

    def __init__(self, utilities: Iterable):
        sp = [0]
        acc = 0
        for v in utilities:
            acc = acc + v
            sp.append(acc)
        self.sp = sp

    def __len__(self) -> int:
        return len(self.sp) - 1

    def __getitem__(self, i: int):
        return self.sp[i]

    def range_sum(self, a: int, b: int):
        """Sum of ``u(a..b)``, both ends inclusive and 1-based."""
        n = len(self.sp) - 1
        if not (1 <= a <= b <= n):
            raise IndexError(f"range_sum({a}, {b}) outside 1..{n}")
        return self.sp[b] - self.sp[a - 1]


def range_sum(ps: PrefixSums, a: int, b: int):
    return ps.range_sum(a, b)


@dataclass(frozen=True)
class ScoredMoment:
    value: object
    moment: int


class MonotoneDeque:
    """Sliding-window extremum deque over (value, moment) pairs.

    Moments strictly increase front to back. In the default maximizing mode values
    are non-increasing front to back and a push evicts back entries with
    ``value <= new`` (so ties resolve to the newest moment). With
    ``minimize=True`` values are non-decreasing and a push evicts only entries
    with ``value > new``, which keeps the earliest moment among equal minima.

    Counters ``pushes``, ``evictions`` and ``expirations`` are always maintained;
    ``debug=True`` re-checks both ordering invariants after every mutation.
    """

    __slots__ = ("_items", "minimize", "debug", "pushes", "evictions", "expirations")

    def __init__(self, items: Iterable[tuple] = (), *, minimize: bool = False, debug: bool = False):
        self._items: deque[tuple] = deque()
        self.minimize = minimize
        self.debug = debug
        self.pushes = 0
        self.evictions = 0
        self.expirations = 0
        for value, moment in items:
            self.push_back(value, moment)

    def __len__(self) -> int:
        return len(self._items)

    def __bool__(self) -> bool:
        return bool(self._items)

    def __iter__(self) -> Iterator[ScoredMoment]:
        return (ScoredMoment(v, m) for v, m in self._items)

    def __repr__(self) -> str:
        return f"MonotoneDeque({list(self._items)!r})"

    def as_pairs(self) -> list[tuple]:
        return list(self._items)

    @property
    def operations(self) -> int:
        return self.pushes + self.evictions + self.expirations

    def push_back(self, value, moment: int) -> None:
        items = self._items
        if items and moment <= items[-1][1]:
            raise ValueError(f"moment {moment} does not exceed back moment {items[-1][1]}")
        if value is UNREACHABLE or value is None:
            raise ValueError("Unreachable values are never queued")
        if self.minimize:
            while items and items[-1][0] > value:
                items.pop()
                self.evictions += 1
        else:
            while items and items[-1][0] <= value:
                items.pop()
                self.evictions += 1
        items.append((value, moment))
        self.pushes += 1
        if self.debug:
            self.check()

    def expire_front(self, min_moment: int) -> None:
        items = self._items
        while items and items[0][1] < min_moment:
            items.popleft()
            self.expirations += 1
        if self.debug:
            self.check()

    def front(self) -> ScoredMoment | None:
        if not self._items:
            return None
        v, m = self._items[0]
        return ScoredMoment(v, m)

    def back(self) -> ScoredMoment | None:
        if not self._items:
            return None
        v, m = self._items[-1]
        return ScoredMoment(v, m)

    def front_value(self):
        """Front value, or Unreachable when empty."""
        return self._items[0][0] if self._items else UNREACHABLE

    def clear(self) -> None:
        self._items.clear()

    def check(self) -> None:
        prev = None
        for v, m in self._items:
            if prev is not None:
                pv, pm = prev
                if m <= pm:
                    raise AssertionError(f"moments not increasing: {pm} then {m}")
                if (v < pv) if self.minimize else (v > pv):
                    raise AssertionError(f"values out of order: {pv} then {v}")
            prev = (v, m)


def deque_push_back(dq: MonotoneDeque, item: ScoredMoment) -> MonotoneDeque:
    dq.push_back(item.value, item.moment)
    return dq


def deque_expire_front(dq: MonotoneDeque, min_moment: int) -> MonotoneDeque:
    dq.expire_front(min_moment)
    return dq


def deque_front_max(dq: MonotoneDeque):
    return dq.front_value()


def as_int_list(values: Sequence, name: str) -> list[int]:
    out = []
    for v in values:
        if isinstance(v, bool) or int(v) != v:
            raise InstanceError(f"{name} must contain integers, got {v!r}")
        out.append(int(v))
    return out


class InstanceError(ValueError):
    """Instance violates a problem's input contract."""


class LimitError(ValueError):
    """Instance exceeds a size limit (oracle blow-up guard or engine cap)."""


class InvariantError(AssertionError):
    """An internal algorithmic invariant failed; the result would be wrong."""
