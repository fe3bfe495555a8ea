# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled inner loops: orbit sweep, codeword enumeration, antilog tables."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t, int32_t, uint8_t

cnp.import_array()


def leader_array(Py_ssize_t N, int64_t q):
    cdef cnp.ndarray[int64_t, ndim=1] cl_arr = np.full(N, -1, dtype=np.int64)
    cdef int64_t[::1] cl = cl_arr
    cdef list leaders = []
    cdef list sizes = []
    cdef Py_ssize_t t
    cdef int64_t u, size
    for t in range(N):
        if cl[t] >= 0:
            continue
        u = t
        size = 0
        while True:
            cl[u] = t
            size += 1
            u = (u * q) % N
            if u == t:
                break
        leaders.append(t)
        sizes.append(size)
    return (np.asarray(leaders, dtype=np.int64),
            np.asarray(sizes, dtype=np.int64),
            cl_arr)


def weight_distribution(const uint8_t[:, ::1] G, int p, int e, Py_ssize_t n,
                        const int64_t[::1] indptr, const int64_t[::1] indices):
    """Histogram of symbol weights over every GF(p)-combination of the rows of G.

    G has K rows of n*e GF(p) digits; symbol j occupies digits [j*e, (j+1)*e).
    indptr/indices list, per row, the symbols touched by that row.
    """
    cdef Py_ssize_t K = G.shape[0]
    cdef Py_ssize_t L = G.shape[1]
    cdef cnp.ndarray[int64_t, ndim=1] counts_arr = np.zeros(n + 1, dtype=np.int64)
    cdef int64_t[::1] counts = counts_arr
    cdef cnp.ndarray[int32_t, ndim=1] cur_arr = np.zeros(L, dtype=np.int32)
    cdef int32_t[::1] cur = cur_arr
    cdef cnp.ndarray[int32_t, ndim=1] dig_arr = np.zeros(K if K > 0 else 1, dtype=np.int32)
    cdef int32_t[::1] digits = dig_arr
    cdef Py_ssize_t r, jj, j, c, base
    cdef int64_t w = 0
    cdef int before, after, v
    counts[0] = 1
    if K == 0:
        return counts_arr
    while True:
        r = 0
        while r < K:
            # add row r once: digit r goes d -> d+1 (mod p)
            for jj in range(indptr[r], indptr[r + 1]):
                j = indices[jj]
                base = j * e
                before = 0
                after = 0
                for c in range(e):
                    if cur[base + c] != 0:
                        before = 1
                    v = cur[base + c] + G[r, base + c]
                    if v >= p:
                        v -= p
                    cur[base + c] = v
                    if v != 0:
                        after = 1
                w += after - before
            digits[r] += 1
            if digits[r] == p:
                digits[r] = 0
                r += 1
            else:
                break
        if r == K:
            break
        counts[w] += 1
    return counts_arr


def antilog_table(int p, int D, const int64_t[::1] low):
    """Integer (base-p) representations of x^k mod f for k in [0, p^D - 2].

    `low` holds the coefficients c_0..c_{D-1} of the monic modulus f.
    """
    cdef int64_t M = 1
    cdef int i
    for i in range(D):
        M *= p
    M -= 1
    cdef cnp.ndarray[int64_t, ndim=1] out_arr = np.empty(M, dtype=np.int64)
    cdef int64_t[::1] out = out_arr
    cdef cnp.ndarray[int64_t, ndim=1] cur_arr = np.zeros(D, dtype=np.int64)
    cdef int64_t[::1] cur = cur_arr
    cdef int64_t k, top, val
    cur[0] = 1
    for k in range(M):
        val = 0
        for i in range(D - 1, -1, -1):
            val = val * p + cur[i]
        out[k] = val
        top = cur[D - 1]
        for i in range(D - 1, 0, -1):
            cur[i] = (cur[i - 1] - top * low[i]) % p
            if cur[i] < 0:
                cur[i] += p
        cur[0] = (-top * low[0]) % p
        if cur[0] < 0:
            cur[0] += p
    return out_arr
