"""Backend selection for the hot loops.

The compiled extension is used when importable; setting ``BCHLAB_PURE_PYTHON=1``
forces the NumPy fallback.
"""

import os

import numpy as np

from bchlab import _pykernels

try:
    from bchlab import _ckernels
except ImportError:  # pragma: no cover - depends on build
    _ckernels = None

if _ckernels is not None and not os.environ.get("BCHLAB_PURE_PYTHON"):
    BACKEND = "cython"
    _impl = _ckernels
else:
    BACKEND = "python"
    _impl = _pykernels


def backends():
    """Names of the kernel implementations available in this process."""
    out = {"python": _pykernels}
    if _ckernels is not None:
        out["cython"] = _ckernels
    return out


def leader_array(N, q, impl=None):
    """Return (leaders, sizes, cl) for the orbits of t -> t*q mod N."""
    impl = impl or _impl
    return impl.leader_array(int(N), int(q))


def row_support(G, e):
    n = G.shape[1] // e
    nz = G.reshape(G.shape[0], n, e).any(axis=2)
    indptr = np.zeros(G.shape[0] + 1, dtype=np.int64)
    indptr[1:] = np.cumsum(nz.sum(axis=1))
    indices = np.ascontiguousarray(np.nonzero(nz)[1], dtype=np.int64)
    return indptr, indices


def weight_distribution(G, p, e, impl=None):
    """Weight histogram of the GF(p)-span of G (K x n*e digits, e digits per symbol)."""
    impl = impl or _impl
    G = np.ascontiguousarray(G, dtype=np.uint8)
    n = G.shape[1] // e
    indptr, indices = row_support(G, e)
    return impl.weight_distribution(G, int(p), int(e), n, indptr, indices)


def antilog_table(p, D, low, impl=None):
    impl = impl or _impl
    return impl.antilog_table(int(p), int(D), np.ascontiguousarray(low, dtype=np.int64))
