import pytest
from hypothesis import given
from hypothesis import strategies as st

from actsched.core import (
    UNREACHABLE,
    MonotoneDeque,
    PrefixSums,
    ScoredMoment,
    deque_expire_front,
    deque_front_max,
    deque_push_back,
    ext_max,
    is_reachable,
    range_sum,
)


def pairs(dq):
    return dq.as_pairs()


@pytest.mark.parametrize(
    "start, push, expected",
    [
        ([(5, 1), (3, 2)], (4, 3), [(5, 1), (4, 3)]),
        ([(5, 1)], (5, 2), [(5, 2)]),
        ([], (7, 0), [(7, 0)]),
    ],
)
def test_push_back_examples(start, push, expected):
    dq = deque_push_back(MonotoneDeque(start), ScoredMoment(*push))
    assert pairs(dq) == expected


@pytest.mark.parametrize(
    "min_moment, expected",
    [(2, [(4, 3)]), (0, [(5, 1), (4, 3)]), (9, [])],
)
def test_expire_front_examples(min_moment, expected):
    dq = MonotoneDeque([(5, 1), (4, 3)])
    assert pairs(deque_expire_front(dq, min_moment)) == expected


def test_expire_front_nothing_to_expire():
    assert pairs(deque_expire_front(MonotoneDeque([(5, 1)]), 0)) == [(5, 1)]


def test_front_max_examples():
    assert deque_front_max(MonotoneDeque([(5, 1), (4, 3)])) == 5
    assert deque_front_max(MonotoneDeque()) is UNREACHABLE
    assert deque_front_max(MonotoneDeque([(-2, 0)])) == -2


def test_push_rejects_stale_moment_and_unreachable():
    dq = MonotoneDeque([(1, 4)])
    with pytest.raises(ValueError):
        dq.push_back(0, 4)
    with pytest.raises(ValueError):
        dq.push_back(UNREACHABLE, 5)


def test_minimize_mode_keeps_earliest_tie():
    dq = MonotoneDeque([(3, 1), (2, 2)], minimize=True)
    dq.push_back(2, 3)
    assert pairs(dq) == [(2, 2), (2, 3)]
    assert dq.front_value() == 2


ops = st.lists(
    st.one_of(
        st.tuples(st.just("push"), st.integers(-20, 20), st.integers(1, 3)),
        st.tuples(st.just("expire"), st.integers(0, 4), st.just(0)),
    ),
    max_size=60,
)


@given(ops, st.booleans())
def test_invariants_after_every_mutation(script, minimize):
    dq = MonotoneDeque(minimize=minimize, debug=True)
    moment = 0
    low = 0
    for kind, a, b in script:
        if kind == "push":
            moment += b
            dq.push_back(a, moment)
        else:
            low = max(low, moment - a)
            dq.expire_front(low)
        dq.check()


@given(st.lists(st.integers(-50, 50), max_size=200), st.integers(1, 20))
def test_evictions_bounded_and_front_is_window_max(values, width):
    dq = MonotoneDeque()
    for t, v in enumerate(values):
        dq.push_back(v, t)
        dq.expire_front(t - width + 1)
        window = values[max(0, t - width + 1): t + 1]
        assert dq.front_value() == max(window)
    assert dq.pushes == len(values)
    assert dq.evictions <= len(values)
    assert dq.expirations <= len(values)


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=40), st.data())
def test_front_max_after_expiry_matches_scan(values, data):
    lo = data.draw(st.integers(0, len(values)))
    dq = MonotoneDeque()
    for t, v in enumerate(values):
        dq.push_back(v, t)
    dq.expire_front(lo)
    kept = [v for t, v in enumerate(values) if t >= lo]
    assert dq.front_value() == (max(kept) if kept else UNREACHABLE)


@pytest.mark.parametrize(
    "u, a, b, expected",
    [((3, -2, -2, 3), 1, 2, 1), ((3, -2, -2, 3), 1, 4, 2), ((5,), 1, 1, 5)],
)
def test_range_sum_examples(u, a, b, expected):
    assert range_sum(PrefixSums(u), a, b) == expected


@given(st.lists(st.integers(-10**12, 10**12), min_size=1, max_size=30))
def test_range_sum_matches_loop(u):
    ps = PrefixSums(u)
    n = len(u)
    for a in range(1, n + 1):
        total = 0
        for b in range(a, n + 1):
            total += u[b - 1]
            assert ps.range_sum(a, b) == total


def test_range_sum_rejects_bad_ranges():
    ps = PrefixSums([1, 2, 3])
    for a, b in [(0, 1), (2, 1), (1, 4)]:
        with pytest.raises(IndexError):
            ps.range_sum(a, b)


def test_unreachable_algebra():
    assert UNREACHABLE + 5 is UNREACHABLE
    assert 5 + UNREACHABLE is UNREACHABLE
    assert UNREACHABLE < -10**18
    assert not is_reachable(UNREACHABLE) and is_reachable(0)
    assert ext_max(UNREACHABLE, -3, None) == -3
    assert ext_max(UNREACHABLE) is UNREACHABLE
