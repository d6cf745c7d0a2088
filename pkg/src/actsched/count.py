"""Maximum number of anchored fixed-length activities on the real line.

Activity ``i`` occupies ``[u, u + l(i)]`` with ``u <= p(i) <= u + l(i)``; intervals
may share endpoints but not interior points. A greedy sweep in anchor order
keeps a stack of scheduled activities and swaps out the top one whenever the
newcomer would end earlier.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from actsched.core import InstanceError, InvariantError


@dataclass
class CountInstance:
    activities: Sequence[tuple]

    def __post_init__(self):
        acts = []
        for idx, item in enumerate(self.activities):
            try:
                duration, anchor = item
            except (TypeError, ValueError):
                raise InstanceError(f"activity {idx} must be a (duration, anchor) pair") from None
            if isinstance(duration, bool) or isinstance(anchor, bool):
                raise InstanceError(f"activity {idx} has a boolean field")
            if not duration > 0:
                raise InstanceError(f"activity {idx} has nonpositive duration {duration!r}")
            acts.append((duration, anchor))
        self.activities = tuple(acts)


@dataclass
class CountSolution:
    scheduled_count: int
    placements: list[tuple[int, tuple]] = field(default_factory=list)


def solve_max_count(inst: CountInstance, *, check_stack: bool = False) -> CountSolution:
    """Greedy with a stack; O(N log N) for the sort plus O(N) for the sweep.

    Placements are ``(activity index, (u, v))`` in left-to-right order. Equal
    anchors are processed shorter-first, which keeps the unschedule branch valid
    (the new top then always ends strictly before the anchor). Two activities
    sharing an anchor can sit on either side of it, so when the top shares the
    newcomer's anchor the order "newcomer, then top" is tried as well and the
    arrangement ending earlier wins.
    """
    order = sorted(range(len(inst.activities)),
                   key=lambda i: (inst.activities[i][1], inst.activities[i][0], i))
    stack: list[tuple[int, object, object]] = []
    for i in order:
        length, anchor = inst.activities[i]
        if not stack:
            stack.append((i, anchor - length, anchor))
            continue
        top, x, y = stack[-1]
        grown = None
        if anchor >= y:
            u = max(anchor - length, y)
            grown = [(i, u, u + length)]
        if inst.activities[top][1] == anchor:
            swapped = _place_before_top(inst, stack, i)
            if swapped is not None and (grown is None or swapped[-1][2] < grown[-1][2]):
                grown = swapped
        if grown is not None:
            if len(grown) == 2:
                stack.pop()
            stack.extend(grown)
        elif length < y - x:
            stack.pop()
            if stack:
                y2 = stack[-1][2]
                if not y2 < anchor:
                    raise InvariantError(
                        f"new stack top ends at {y2!r}, not before anchor {anchor!r}"
                    )
                u = max(anchor - length, y2)
            else:
                u = anchor - length
            stack.append((i, u, u + length))
        if check_stack:
            _check_stack(stack)
    return CountSolution(len(stack), [(i, (u, v)) for i, u, v in stack])


def _place_before_top(inst: CountInstance, stack, i):
    """Re-place the top after activity ``i`` (both share one anchor); None if infeasible."""
    top = stack[-1][0]
    length, anchor = inst.activities[i]
    top_len = inst.activities[top][0]
    below = stack[-2][2] if len(stack) > 1 else None
    u = anchor - length if below is None else max(anchor - length, below)
    if u > anchor:
        return None
    v = max(anchor - top_len, u + length)
    if v > anchor:
        return None
    return [(i, u, u + length), (top, v, v + top_len)]


def _check_stack(stack) -> None:
    for (_, u1, v1), (_, u2, v2) in zip(stack, stack[1:]):
        if not (u1 <= u2 and v1 <= v2 and v1 <= u2):
            raise InvariantError(f"stack out of order: ({u1}, {v1}) then ({u2}, {v2})")
