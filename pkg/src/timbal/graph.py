"""Immutable sparse signed graphs and combinatorial balance operations.

A :class:`SignedGraph` is a simple undirected graph whose edges carry a
+1/-1 sign, stored in CSR form (per-vertex sorted neighbor lists).  Vertices
are dense 0-based indices internally; the original labels are kept in
``ext_ids`` and used in all user-facing output.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import ParseError


class SignedGraph:
    """Simple undirected graph with +1/-1 edge signs.

    Instances are immutable after construction and safe to share across
    threads.  Use :func:`from_edge_list` or the generators in ``datagen``
    to build one.
    """

    __slots__ = ("n", "indptr", "indices", "signs", "ext_ids",
                 "m_pos", "m_neg", "degrees", "_ext_index")

    def __init__(self, n, indptr, indices, signs, ext_ids, m_pos, m_neg):
        self.n = int(n)
        self.indptr = indptr
        self.indices = indices
        self.signs = signs
        self.ext_ids = ext_ids
        self.m_pos = int(m_pos)
        self.m_neg = int(m_neg)
        self.degrees = np.diff(indptr)
        self._ext_index = None
        for arr in (self.indptr, self.indices, self.signs,
                    self.ext_ids, self.degrees):
            arr.setflags(write=False)

    # -- construction ------------------------------------------------------

    @classmethod
    def from_half_edges(cls, n: int, eu, ev, es, ext_ids=None) -> "SignedGraph":
        """Build from one record per undirected edge (dense endpoints, u != v)."""
        eu = np.asarray(eu, dtype=np.int64)
        ev = np.asarray(ev, dtype=np.int64)
        es = np.asarray(es, dtype=np.int64)
        src = np.concatenate([eu, ev])
        dst = np.concatenate([ev, eu])
        sgn = np.concatenate([es, es])
        return cls._from_slots(n, src, dst, sgn, ext_ids)

    @classmethod
    def _from_slots(cls, n, src, dst, sgn, ext_ids):
        """Build from directed slot arrays already containing both directions."""
        order = np.lexsort((dst, src))
        src = src[order]
        dst = dst[order]
        sgn = sgn[order]
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
        if ext_ids is None:
            ext_ids = np.arange(n, dtype=object)
        else:
            ext_ids = np.asarray(ext_ids, dtype=object)
        m_pos = int(np.count_nonzero(sgn > 0)) // 2
        m_neg = int(np.count_nonzero(sgn < 0)) // 2
        return cls(n, indptr, dst.astype(np.int32), sgn.astype(np.int8),
                   ext_ids, m_pos, m_neg)

    def _with_signs(self, signs) -> "SignedGraph":
        """Same topology, new per-slot signs."""
        half = self.half_edge_mask()
        m_pos = int(np.count_nonzero(signs[half] > 0))
        return SignedGraph(self.n, self.indptr, self.indices,
                           signs.astype(np.int8), self.ext_ids,
                           m_pos, self.m - m_pos)

    # -- basic accessors ----------------------------------------------------

    @property
    def m(self) -> int:
        return self.m_pos + self.m_neg

    @property
    def max_degree(self) -> int:
        return int(self.degrees.max()) if self.n else 0

    def neighbors(self, i: int) -> np.ndarray:
        return self.indices[self.indptr[i]:self.indptr[i + 1]]

    def signs_of(self, i: int) -> np.ndarray:
        return self.signs[self.indptr[i]:self.indptr[i + 1]]

    def slot_rows(self) -> np.ndarray:
        """Source vertex of every CSR slot."""
        return np.repeat(np.arange(self.n), self.degrees)

    def half_edge_mask(self) -> np.ndarray:
        """Boolean slot mask selecting each undirected edge once (u < v)."""
        return self.slot_rows() < self.indices

    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Canonical edge list (u, v, sign) with u < v, sorted by (u, v)."""
        half = self.half_edge_mask()
        return (self.slot_rows()[half], self.indices[half].astype(np.int64),
                self.signs[half].astype(np.int64))

    def ext_index(self) -> dict:
        """Mapping external label -> dense index (built lazily, then cached)."""
        if self._ext_index is None:
            object.__setattr__  # noqa: B018 -- plain slot write below
            idx = {label: i for i, label in enumerate(self.ext_ids)}
            # bypass the read-only convention for the lazy cache slot
            SignedGraph._ext_index.__set__(self, idx)
        return self._ext_index

    def __eq__(self, other):
        if not isinstance(other, SignedGraph):
            return NotImplemented
        return (self.n == other.n
                and np.array_equal(self.indptr, other.indptr)
                and np.array_equal(self.indices, other.indices)
                and np.array_equal(self.signs, other.signs)
                and np.array_equal(self.ext_ids, other.ext_ids))

    __hash__ = None

    def __repr__(self):
        return f"SignedGraph(n={self.n}, m_pos={self.m_pos}, m_neg={self.m_neg})"

    def validate(self) -> None:
        """Check structural invariants; raises AssertionError on violation.

        Intended for tests and debugging, not production paths.
        """
        assert self.indptr.shape == (self.n + 1,)
        assert self.indptr[0] == 0 and self.indptr[-1] == len(self.indices)
        assert len(self.signs) == len(self.indices)
        assert np.all((self.signs == 1) | (self.signs == -1))
        rows = self.slot_rows()
        assert not np.any(rows == self.indices), "self-loop present"
        for i in range(self.n):
            nb = self.neighbors(i)
            assert np.all(np.diff(nb) > 0), "neighbor list not strictly sorted"
        # symmetry with matching signs
        a, b, s = self.edge_arrays()
        rev = {(int(v), int(u)): int(sg) for u, v, sg in zip(a, b, s)}
        half = self.half_edge_mask()
        back = ~half & (rows != self.indices)
        for u, v, sg in zip(rows[back], self.indices[back], self.signs[back]):
            assert rev.get((int(u), int(v))) == int(sg), "asymmetric edge"
        assert self.m_pos == int(np.count_nonzero(s > 0))
        assert self.m_neg == int(np.count_nonzero(s < 0))


@dataclass(frozen=True)
class Partition:
    """Two-sided coloring witnessing balance: side[i] is +1 or -1."""

    side: np.ndarray

    @property
    def v1(self) -> np.ndarray:
        return np.flatnonzero(self.side == 1)

    @property
    def v2(self) -> np.ndarray:
        return np.flatnonzero(self.side == -1)


@dataclass(frozen=True)
class Conflict:
    """Certificate that a graph is unbalanced: one edge whose forced
    two-coloring contradicts an earlier assignment."""

    u: int
    v: int
    sign: int
    ext_u: Hashable = None
    ext_v: Hashable = None


@dataclass(frozen=True)
class ComponentLabeling:
    """Connected components ignoring signs."""

    labels: np.ndarray
    sizes: np.ndarray

    @property
    def n_components(self) -> int:
        return len(self.sizes)

    @property
    def largest(self) -> int:
        """Index of the largest component (ties: smallest component id)."""
        if self.n_components == 0:
            raise ValueError("empty graph has no components")
        return int(np.argmax(self.sizes))

    def vertices_of(self, comp: int) -> np.ndarray:
        return np.flatnonzero(self.labels == comp)


def from_edge_list(records: Iterable[Sequence],
                   line_numbers: Sequence[int] | None = None) -> SignedGraph:
    """Build a signed graph from (u-label, v-label, weight) records.

    Labels are arbitrary hashable tokens; dense indices follow first
    appearance among the edges that survive cleanup.  Self-loops are
    dropped. Duplicate unordered pairs are aggregated by summing weights;
    pairs whose aggregate is exactly zero are dropped, otherwise the edge
    sign is the sign of the aggregate.  Records with weight exactly 0 are
    ignored (a single warning reports how many).

    ``line_numbers`` lets file loaders report real line numbers in parse
    errors; by default the 1-based record ordinal is used.
    """
    agg: dict[frozenset, list] = {}
    zero_count = 0
    for ordinal, rec in enumerate(records):
        line = line_numbers[ordinal] if line_numbers is not None else ordinal + 1
        try:
            u, v, w = rec
        except (TypeError, ValueError):
            raise ParseError("expected a (u, v, weight) record", line) from None
        try:
            w = float(w)
        except (TypeError, ValueError):
            raise ParseError(f"non-numeric weight {w!r}", line) from None
        if not math.isfinite(w):
            raise ParseError(f"non-finite weight {w!r}", line)
        if u == v:
            continue
        if w == 0.0:
            zero_count += 1
            continue
        key = frozenset((u, v))
        entry = agg.get(key)
        if entry is None:
            agg[key] = [w, ordinal, u, v]
        else:
            entry[0] += w
    if zero_count:
        warnings.warn(f"ignored {zero_count} zero-weight record(s)",
                      stacklevel=2)

    edges = sorted((e for e in agg.values() if e[0] != 0.0),
                   key=lambda e: e[1])
    index: dict = {}
    labels: list = []

    def dense(label):
        i = index.get(label)
        if i is None:
            i = len(labels)
            index[label] = i
            labels.append(label)
        return i

    eu = np.empty(len(edges), dtype=np.int64)
    ev = np.empty(len(edges), dtype=np.int64)
    es = np.empty(len(edges), dtype=np.int64)
    for k, (wsum, _, u, v) in enumerate(edges):
        eu[k] = dense(u)
        ev[k] = dense(v)
        es[k] = 1 if wsum > 0 else -1
    return SignedGraph.from_half_edges(len(labels), eu, ev, es,
                                       np.asarray(labels, dtype=object))


def induced_subgraph(g: SignedGraph, keep) -> SignedGraph:
    """Subgraph on the vertex set ``keep`` (dense indices), edges restricted
    to pairs inside it.  External ids are preserved; the dense order of the
    kept vertices is preserved too."""
    keep = np.asarray(sorted(set(int(v) for v in np.asarray(keep, dtype=np.int64).ravel())),
                      dtype=np.int64)
    if keep.size and (keep[0] < 0 or keep[-1] >= g.n):
        raise ValueError(f"vertex index out of range for graph with n={g.n}")
    remap = np.full(g.n, -1, dtype=np.int64)
    remap[keep] = np.arange(keep.size)
    rows = g.slot_rows()
    sel = (remap[rows] >= 0) & (remap[g.indices] >= 0)
    return SignedGraph._from_slots(keep.size, remap[rows[sel]],
                                   remap[g.indices[sel]],
                                   g.signs[sel].astype(np.int64),
                                   g.ext_ids[keep] if g.n else g.ext_ids)


def connected_components(g: SignedGraph) -> ComponentLabeling:
    """Label connected components, ignoring edge signs."""
    labels, _, _, _, _ = _kernels.color_components(
        g.indptr, g.indices, g.signs, False)
    sizes = np.bincount(labels) if g.n else np.zeros(0, dtype=np.int64)
    return ComponentLabeling(labels, sizes.astype(np.int64))


def check_balance(g: SignedGraph) -> Partition | Conflict:
    """Two-color the graph so every positive edge joins equal sides and
    every negative edge joins opposite sides.

    Succeeds iff every component is balanced.  Each component's root (its
    smallest vertex) is put on side +1.  On failure returns a
    :class:`Conflict` carrying one violating edge.
    """
    _, side, ok, u, v = _kernels.color_components(
        g.indptr, g.indices, g.signs, True)
    if ok:
        return Partition(side.copy())
    nb = g.neighbors(u)
    sign = int(g.signs_of(u)[np.searchsorted(nb, v)])
    return Conflict(int(u), int(v), sign,
                    g.ext_ids[u], g.ext_ids[v])


def switch(g: SignedGraph, s) -> SignedGraph:
    """Flip the sign of every edge with exactly one endpoint in ``s``.

    Switching is a diagonal +-1 similarity of the signed Laplacian, so it
    preserves the spectrum and the balance status.
    """
    s = np.asarray(list(s) if not isinstance(s, np.ndarray) else s,
                   dtype=np.int64).ravel()
    if s.size and (s.min() < 0 or s.max() >= g.n):
        raise ValueError(f"vertex index out of range for graph with n={g.n}")
    flag = np.ones(g.n, dtype=np.int8)
    flag[s] = -1
    new_signs = g.signs * flag[g.slot_rows()] * flag[g.indices]
    return g._with_signs(new_signs)
