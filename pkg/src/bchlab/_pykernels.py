"""NumPy fallbacks for the compiled kernels in ``_ckernels.pyx``.

Same signatures and same outputs; selected when the extension is missing or
``BCHLAB_PURE_PYTHON`` is set.
"""

import numpy as np

_CHUNK = 1 << 15


def leader_array(N, q):
    t = np.arange(N, dtype=np.int64)
    cur = t.copy()
    mins = t.copy()
    size = np.zeros(N, dtype=np.int64)
    j = 0
    while True:
        j += 1
        cur = (cur * q) % N
        np.minimum(mins, cur, out=mins)
        back = (cur == t) & (size == 0)
        size[back] = j
        if not (size == 0).any():
            break
    leaders = np.flatnonzero(mins == t).astype(np.int64)
    return leaders, size[leaders], mins


def weight_distribution(G, p, e, n, indptr=None, indices=None):
    G = np.asarray(G, dtype=np.int64)
    K = G.shape[0]
    counts = np.zeros(n + 1, dtype=np.int64)
    if K == 0:
        counts[0] = 1
        return counts
    total = p**K
    powers = p ** np.arange(K, dtype=np.int64)
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        msgs = (idx[:, None] // powers[None, :]) % p
        words = (msgs @ G) % p
        nz = words.reshape(len(idx), n, e).any(axis=2)
        counts += np.bincount(nz.sum(axis=1), minlength=n + 1)
    return counts


def antilog_table(p, D, low):
    low = [int(c) for c in low]
    M = p**D - 1
    out = np.empty(M, dtype=np.int64)
    cur = [0] * D
    cur[0] = 1
    for k in range(M):
        val = 0
        for i in range(D - 1, -1, -1):
            val = val * p + cur[i]
        out[k] = val
        top = cur[D - 1]
        cur = [(-top * low[0]) % p] + [(cur[i - 1] - top * low[i]) % p for i in range(1, D)]
    return out
