# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Behaviour mirrors ``actsched._pykernels`` exactly."""
import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t, int32_t, uint8_t

cnp.import_array()

ctypedef fused value_t:
    int64_t
    double

DEF CARRY = -1
DEF NONE = -2


def window_layer(value_t[::1] sp, value_t[::1] prev_val, uint8_t[::1] prev_reach,
                 Py_ssize_t lo, Py_ssize_t up,
                 value_t[::1] cur_val, uint8_t[::1] cur_reach, int32_t[::1] choice):
    cdef Py_ssize_t n = sp.shape[0] - 1
    cdef Py_ssize_t i, m, lim, head = 0, tail = 0
    cdef long long ops = 0
    cdef value_t v, cand
    cdef bint carry
    dq_v_arr = np.empty(n + 1, dtype=np.asarray(sp).dtype)
    cdef value_t[::1] dq_v = dq_v_arr
    cdef Py_ssize_t[::1] dq_m = np.empty(n + 1, dtype=np.intp)
    for i in range(n + 1):
        m = i - lo
        if m >= 0 and prev_reach[m]:
            v = prev_val[m] - sp[m]
            while tail > head and dq_v[tail - 1] <= v:
                tail -= 1
                ops += 1
            dq_v[tail] = v
            dq_m[tail] = m
            tail += 1
            ops += 1
        lim = i - up
        while tail > head and dq_m[head] < lim:
            head += 1
            ops += 1
        carry = i > 0 and cur_reach[i - 1]
        if tail > head:
            cand = sp[i] + dq_v[head]
            if carry and cur_val[i - 1] >= cand:
                cur_val[i] = cur_val[i - 1]
                cur_reach[i] = 1
                choice[i] = CARRY
            else:
                cur_val[i] = cand
                cur_reach[i] = 1
                choice[i] = <int32_t>dq_m[head]
        elif carry:
            cur_val[i] = cur_val[i - 1]
            cur_reach[i] = 1
            choice[i] = CARRY
        else:
            cur_val[i] = 0
            cur_reach[i] = 0
            choice[i] = NONE
    return ops


def lexmin_sweep(value_t[::1] u, Py_ssize_t k, Py_ssize_t x, trace=None):
    if trace is not None:
        raise ValueError("tracing is only supported by the Python kernels")
    cdef Py_ssize_t n = u.shape[0] - 1
    cdef Py_ssize_t free = n - k * x
    cdef Py_ssize_t cap = n // x + 2
    saved_arr = np.zeros(n + 1, dtype=np.uint8)
    cdef uint8_t[::1] saved = saved_arr
    qv_arr = np.empty(cap * x, dtype=np.asarray(u).dtype)
    cdef value_t[::1] qv = qv_arr
    cdef Py_ssize_t[::1] qm = np.empty(cap * x, dtype=np.intp)
    cdef Py_ssize_t[::1] heads = np.zeros(x, dtype=np.intp)
    cdef Py_ssize_t[::1] tails = np.zeros(x, dtype=np.intp)
    cdef Py_ssize_t ck = 0, cc = 0, pos = 1, r, base, h, tl, nxt, limit, t
    cdef long long ops = 0
    cdef value_t val
    while ck < k and cc < free:
        r = pos % x
        base = r * cap
        h = heads[r]
        tl = tails[r]
        while h < tl and qm[base + h] < pos:
            h += 1
            ops += 1
        if h == tl:
            # restart the buffer; every stored moment has expired
            h = 0
            tl = 0
            qv[base] = u[pos]
            qm[base] = pos
            tl = 1
            ops += 1
            nxt = pos + x
        else:
            nxt = qm[base + tl - 1] + x
        limit = pos + (k - ck) * x
        while nxt <= limit:
            val = u[nxt]
            while tl > h and qv[base + tl - 1] > val:
                tl -= 1
                ops += 1
            qv[base + tl] = val
            qm[base + tl] = nxt
            tl += 1
            ops += 1
            nxt += x
        heads[r] = h
        tails[r] = tl
        t = qm[base + h]
        ck += (t - pos) // x
        cc += 1
        saved[t] = 1
        pos = t + 1
    if ck == k:
        for t in range(pos, n + 1):
            saved[t] = 1
    return saved_arr, ops


def leftmost_columns(int64_t[:, ::1] codes, int64_t[:, ::1] local, Py_ssize_t top,
                     Py_ssize_t k, bint cap, Py_ssize_t n_codes):
    cdef Py_ssize_t m = codes.shape[0], n = codes.shape[1]
    cdef Py_ssize_t width = m
    if cap and k + 1 < m:
        width = k + 1
    cdef int32_t[:, ::1] col_cnt = np.zeros((n, m), dtype=np.int32)
    cdef int64_t[:, ::1] col_list = np.empty((n, width), dtype=np.int64)
    cdef Py_ssize_t[::1] col_len = np.zeros(n, dtype=np.intp)
    cdef int32_t[::1] window = np.zeros(n_codes, dtype=np.int32)
    out_arr = np.empty((m - top, n), dtype=np.int64)
    cdef int64_t[:, ::1] out = out_arr
    cdef Py_ssize_t lj, c, cd, cs, e, size, lc
    cdef int64_t g
    for lj in range(top, m):
        for c in range(n):
            if cap and col_len[c] > k:
                continue
            lc = local[lj, c]
            if col_cnt[c, lc] == 0:
                col_list[c, col_len[c]] = codes[lj, c]
                col_len[c] += 1
            col_cnt[c, lc] += 1
        size = 0
        cs = 0
        for cd in range(n):
            for e in range(col_len[cd]):
                g = col_list[cd, e]
                if window[g] == 0:
                    size += 1
                window[g] += 1
            while size > k:
                for e in range(col_len[cs]):
                    g = col_list[cs, e]
                    window[g] -= 1
                    if window[g] == 0:
                        size -= 1
                cs += 1
            out[lj - top, cd] = cs
        for c in range(cs, n):
            for e in range(col_len[c]):
                window[col_list[c, e]] = 0
    return out_arr
