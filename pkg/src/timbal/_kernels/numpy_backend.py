"""Vectorized numpy implementations of the graph kernels.

This is the reference backend: the numba backend must agree with it on
every input (up to the choice of conflict witness).  Graphs are given as
CSR-style arrays: ``indptr`` (len n+1), ``indices`` (neighbor lists, sorted
per vertex) and ``signs`` (+1/-1 per slot, symmetric).
"""

from __future__ import annotations

import numpy as np

NAME = "numpy"


def signed_matvec(indptr, indices, signs, x):
    """Multiply the signed adjacency matrix by x."""
    n = indptr.shape[0] - 1
    rows = np.repeat(np.arange(n), np.diff(indptr))
    return np.bincount(rows, weights=signs * x[indices], minlength=n)


def abs_matvec(indptr, indices, x):
    """Multiply the unsigned (absolute) adjacency matrix by x."""
    n = indptr.shape[0] - 1
    rows = np.repeat(np.arange(n), np.diff(indptr))
    return np.bincount(rows, weights=x[indices], minlength=n)


def _expand(indptr, frontier):
    """All CSR slots of the frontier vertices, plus the slot's source vertex."""
    starts = indptr[frontier]
    counts = indptr[frontier + 1] - starts
    total = int(counts.sum())
    if total == 0:
        return (np.empty(0, dtype=np.int64), np.empty(0, dtype=frontier.dtype))
    offsets = np.arange(total) - np.repeat(np.cumsum(counts) - counts, counts)
    slots = np.repeat(starts, counts) + offsets
    parents = np.repeat(frontier, counts)
    return slots, parents


def color_components(indptr, indices, signs, respect_signs):
    """Label connected components and two-color them by edge sign.

    Roots are taken in ascending vertex order and get side +1; traversing an
    edge (u, w, s) forces side(w) = s * side(u).  With ``respect_signs`` a
    forced contradiction stops the traversal and the violating edge is
    returned; without it, signs are ignored and every side is +1.

    Returns (comp, side, ok, conflict_u, conflict_v).  comp/side are partial
    when ok is False.
    """
    n = indptr.shape[0] - 1
    comp = np.full(n, -1, dtype=np.int64)
    side = np.zeros(n, dtype=np.int8)
    cid = 0
    root = 0
    while root < n:
        if comp[root] >= 0:
            root += 1
            continue
        comp[root] = cid
        side[root] = 1
        frontier = np.array([root], dtype=np.int64)
        while frontier.size:
            slots, parents = _expand(indptr, frontier)
            if slots.size == 0:
                break
            targets = indices[slots]
            if respect_signs:
                forced = (signs[slots] * side[parents]).astype(np.int8)
            else:
                forced = np.ones(slots.shape[0], dtype=np.int8)
            fresh = comp[targets] < 0
            if respect_signs:
                seen = ~fresh
                bad = np.flatnonzero(side[targets[seen]] != forced[seen])
                if bad.size:
                    k = bad[0]
                    return comp, side, False, int(parents[seen][k]), int(targets[seen][k])
            new_targets = targets[fresh]
            if new_targets.size == 0:
                break
            uniq, first = np.unique(new_targets, return_index=True)
            comp[uniq] = cid
            side[uniq] = forced[fresh][first]
            if respect_signs:
                bad = np.flatnonzero(side[new_targets] != forced[fresh])
                if bad.size:
                    k = bad[0]
                    return comp, side, False, int(parents[fresh][k]), int(new_targets[k])
            frontier = uniq
        cid += 1
        root += 1
    return comp, side, True, -1, -1


def restore_vertices(indptr, indices, signs, order, side, in_sub):
    """Re-add vertices whose edges into the current subgraph force one side.

    Scans ``order`` once; a vertex is restored iff it has at least one edge
    into the subgraph and all such edges force the same side.  ``side`` and
    ``in_sub`` are updated in place.  Returns the restored vertices in order.
    """
    restored = []
    for v in order:
        lo, hi = indptr[v], indptr[v + 1]
        targets = indices[lo:hi]
        present = in_sub[targets]
        if not present.any():
            continue
        forced = signs[lo:hi][present] * side[targets[present]]
        if forced.max() == forced.min():
            side[v] = forced[0]
            in_sub[v] = True
            restored.append(int(v))
    return np.asarray(restored, dtype=np.int64)
