"""Pure-Python kernels. Same signatures and outputs as the compiled ``_ckernels``.

Arrays come in as numpy arrays (any dtype, including ``object``); outputs are
written in place. Moment 0 is the empty prefix.
"""
from __future__ import annotations

CARRY = -1
NONE = -2


def window_layer(sp, prev_val, prev_reach, lo, up, cur_val, cur_reach, choice):
    """One activity layer of the deque DP.

    ``cur_val[i]`` becomes ``max(cur_val[i-1], sp[i] + max{prev_val[m] - sp[m]})``
    over reachable ``m`` in ``[i - up, i - lo]``. ``choice[i]`` holds the chosen
    ``m`` (the activity covers ``m+1..i``), ``CARRY`` or ``NONE``.
    Returns the number of deque operations (pushes, back evictions, front expiries).
    """
    sp_l = sp.tolist()
    pv = prev_val.tolist()
    pr = prev_reach.tolist()
    n = len(sp_l) - 1
    out_v = [0] * (n + 1)
    out_r = [0] * (n + 1)
    out_c = [NONE] * (n + 1)
    dq_v: list = []
    dq_m: list[int] = []
    head = 0
    ops = 0
    for i in range(n + 1):
        m = i - lo
        if m >= 0 and pr[m]:
            v = pv[m] - sp_l[m]
            while len(dq_v) > head and dq_v[-1] <= v:
                dq_v.pop()
                dq_m.pop()
                ops += 1
            dq_v.append(v)
            dq_m.append(m)
            ops += 1
        lim = i - up
        while len(dq_v) > head and dq_m[head] < lim:
            head += 1
            ops += 1
        carry = i > 0 and out_r[i - 1]
        if len(dq_v) > head:
            cand = sp_l[i] + dq_v[head]
            if carry and out_v[i - 1] >= cand:
                out_v[i], out_r[i], out_c[i] = out_v[i - 1], 1, CARRY
            else:
                out_v[i], out_r[i], out_c[i] = cand, 1, dq_m[head]
        elif carry:
            out_v[i], out_r[i], out_c[i] = out_v[i - 1], 1, CARRY
    cur_val[:] = out_v
    cur_reach[:] = out_r
    choice[:] = out_c
    return ops


def lexmin_sweep(u, k, x, trace=None):
    """Residue-deque greedy. ``u`` is indexed 1..N (slot 0 unused).

    Returns ``(saved_mask, ops)`` where ``saved_mask[t]`` is 1 for saved moments.
    When ``trace`` is a list, one ``(pos, ck, cc, chosen, deque_moments)`` tuple is
    appended per greedy step.
    """
    ul = u.tolist()
    n = len(ul) - 1
    free = n - k * x
    saved = [0] * (n + 1)
    dq_u: list[list] = [[] for _ in range(x)]
    dq_m: list[list[int]] = [[] for _ in range(x)]
    heads = [0] * x
    ops = 0
    ck = cc = 0
    pos = 1
    while ck < k and cc < free:
        r = pos % x
        qu, qm = dq_u[r], dq_m[r]
        h = heads[r]
        while h < len(qm) and qm[h] < pos:
            h += 1
            ops += 1
        if h == len(qm):
            qu.append(ul[pos])
            qm.append(pos)
            ops += 1
            nxt = pos + x
        else:
            nxt = qm[-1] + x
        limit = pos + (k - ck) * x
        while nxt <= limit:
            val = ul[nxt]
            while len(qm) > h and qu[-1] > val:
                qu.pop()
                qm.pop()
                ops += 1
            qu.append(val)
            qm.append(nxt)
            ops += 1
            nxt += x
        heads[r] = h
        t = qm[h]
        if trace is not None:
            trace.append((pos, ck, cc, t, tuple(qm[h:])))
        ck += (t - pos) // x
        cc += 1
        saved[t] = 1
        pos = t + 1
    if ck == k:
        for t in range(pos, n + 1):
            saved[t] = 1
    return saved, ops


def leftmost_columns(codes, local, top, k, cap, n_codes):
    """For each bottom row ``LJ >= top`` and right column ``CD``, the smallest left
    column ``CS`` such that rows ``top..LJ`` x columns ``CS..CD`` hold at most ``k``
    distinct codes (``CD + 1`` if none). All indices 0-based.

    ``local`` is unused here (the dict-based lists need no per-column recoding); it
    is accepted so both kernels share one signature.
    """
    rows = codes.tolist()
    m = len(rows)
    n = len(rows[0]) if m else 0
    col_lists: list[list] = [[] for _ in range(n)]
    col_counts: list[dict] = [{} for _ in range(n)]
    out = []
    for lj in range(top, m):
        row = rows[lj]
        for c in range(n):
            lst = col_lists[c]
            if cap and len(lst) > k:
                continue
            h = row[c]
            cnt = col_counts[c]
            if h in cnt:
                cnt[h] += 1
            else:
                cnt[h] = 1
                lst.append(h)
        window: dict = {}
        cs = 0
        line = [0] * n
        for cd in range(n):
            for h in col_lists[cd]:
                window[h] = window.get(h, 0) + 1
            while len(window) > k:
                for h in col_lists[cs]:
                    left = window[h] - 1
                    if left:
                        window[h] = left
                    else:
                        del window[h]
                cs += 1
            line[cd] = cs
        out.append(line)
    return out
