"""numba @njit implementations of the graph kernels.

Same contracts as ``numpy_backend``; the loops here are the hot paths of
the eigensolver (matvecs) and of the per-iteration balance checks.
"""

from __future__ import annotations

import numpy as np
from numba import njit

NAME = "numba"


@njit(cache=True)
def signed_matvec(indptr, indices, signs, x):
    n = indptr.shape[0] - 1
    y = np.zeros(n, dtype=np.float64)
    for i in range(n):
        acc = 0.0
        for k in range(indptr[i], indptr[i + 1]):
            acc += signs[k] * x[indices[k]]
        y[i] = acc
    return y


@njit(cache=True)
def abs_matvec(indptr, indices, x):
    n = indptr.shape[0] - 1
    y = np.zeros(n, dtype=np.float64)
    for i in range(n):
        acc = 0.0
        for k in range(indptr[i], indptr[i + 1]):
            acc += x[indices[k]]
        y[i] = acc
    return y


@njit(cache=True)
def color_components(indptr, indices, signs, respect_signs):
    n = indptr.shape[0] - 1
    comp = np.full(n, -1, dtype=np.int64)
    side = np.zeros(n, dtype=np.int8)
    queue = np.empty(n, dtype=np.int64)
    cid = 0
    for root in range(n):
        if comp[root] >= 0:
            continue
        comp[root] = cid
        side[root] = 1
        queue[0] = root
        head, tail = 0, 1
        while head < tail:
            u = queue[head]
            head += 1
            su = np.int64(side[u])
            for k in range(indptr[u], indptr[u + 1]):
                w = indices[k]
                forced = np.int64(signs[k]) * su if respect_signs else np.int64(1)
                if comp[w] < 0:
                    comp[w] = cid
                    side[w] = forced
                    queue[tail] = w
                    tail += 1
                elif respect_signs and np.int64(side[w]) != forced:
                    return comp, side, False, u, np.int64(w)
        cid += 1
    return comp, side, True, np.int64(-1), np.int64(-1)


@njit(cache=True)
def restore_vertices(indptr, indices, signs, order, side, in_sub):
    restored = np.empty(order.shape[0], dtype=np.int64)
    count = 0
    for idx in range(order.shape[0]):
        v = order[idx]
        forced = np.int64(0)
        ok = True
        for k in range(indptr[v], indptr[v + 1]):
            u = indices[k]
            if in_sub[u]:
                f = np.int64(signs[k]) * np.int64(side[u])
                if forced == 0:
                    forced = f
                elif f != forced:
                    ok = False
                    break
        if ok and forced != 0:
            side[v] = forced
            in_sub[v] = True
            restored[count] = v
            count += 1
    return restored[:count]
