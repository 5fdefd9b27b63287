"""Order statistics on index buffers: descending index sort and linear selection.

The selection routines here are the deterministic median-of-medians scheme
(groups of five), so the running time and the number of value comparisons are
worst-case linear.  They operate on a buffer of indices into the key vector z;
z itself is never permuted, which lets callers keep addressing it by original
index while assembling partitioned buffers.

All indices are 0-based; ranks (k, c, g, p) are 1-based counts, "k-th largest".
"""

from __future__ import annotations

import numpy as np


class ComparisonCounter:
    """Mutable tally of the value comparisons performed by a selection call."""

    __slots__ = ("count",)

    def __init__(self):
        self.count = 0


def _as_keys(z) -> np.ndarray:
    arr = np.asarray(z, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError(f"expected a 1-d key vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("key vector entries must be finite")
    return arr


def sort_indices(z) -> np.ndarray:
    """Indices of z in descending value order; equal values keep ascending index."""
    z = _as_keys(z)
    return np.argsort(-z, kind="stable")


def _insertion_desc(z, buf, lo, hi, cnt):
    # Counted insertion sort, descending, on buf[lo..hi].
    for a in range(lo + 1, hi + 1):
        t = buf[a]
        zt = z[t]
        b = a
        while b > lo:
            cnt.count += 1
            if z[buf[b - 1]] < zt:
                buf[b] = buf[b - 1]
                b -= 1
            else:
                break
        buf[b] = t


def _median3_pos(z, buf, pa, pb, pc, cnt):
    # Position (in buf) of the median of three buffer entries.
    a, b, c = z[buf[pa]], z[buf[pb]], z[buf[pc]]
    cnt.count += 1
    if a < b:
        cnt.count += 1
        if b < c:
            return pb
        cnt.count += 1
        return pc if a < c else pa
    cnt.count += 1
    if c < b:
        return pb
    cnt.count += 1
    return pc if c < a else pa


def _median5_pos(z, buf, lo, hi, cnt):
    # Position of a median element of buf[lo..hi], 1 <= size <= 5.
    # For the full 5-element case this takes at most 7 comparisons: two pair
    # sorts, a pair swap, one cross comparison, then a median of three.
    size = hi - lo + 1
    if size == 1:
        return lo
    if size == 2:
        cnt.count += 1
        return lo if z[buf[lo]] < z[buf[lo + 1]] else lo + 1
    if size == 3:
        return _median3_pos(z, buf, lo, lo + 1, lo + 2, cnt)
    if size == 4:
        _insertion_desc(z, buf, lo, hi, cnt)
        return lo + 1
    pa, pb, pc, pd, pe = lo, lo + 1, lo + 2, lo + 3, lo + 4
    cnt.count += 1
    if z[buf[pa]] > z[buf[pb]]:
        pa, pb = pb, pa
    cnt.count += 1
    if z[buf[pc]] > z[buf[pd]]:
        pc, pd = pd, pc
    cnt.count += 1
    if z[buf[pa]] > z[buf[pc]]:
        pa, pb, pc, pd = pc, pd, pa, pb
    # Now z[pa] <= z[pb], z[pa] <= z[pc] <= z[pd]: pa is below the median and
    # max(pb, pd) is above it, leaving a median of three.
    cnt.count += 1
    if z[buf[pb]] < z[buf[pd]]:
        return _median3_pos(z, buf, pc, pb, pe, cnt)
    return _median3_pos(z, buf, pc, pd, pe, cnt)


def _mom_select(z, buf, lo, hi, rank, cnt):
    # Value-index whose key is the (rank+1)-th largest in buf[lo..hi].
    # Deterministic median-of-medians pivoting; partially reorders buf in
    # place.  The three-way partition keeps duplicate-heavy inputs shrinking
    # strictly, so the loop always terminates.
    while True:
        size = hi - lo + 1
        if size <= 5:
            _insertion_desc(z, buf, lo, hi, cnt)
            return buf[lo + rank]

        # Gather the group-of-5 medians at the front of the segment.
        ng = 0
        g = lo
        while g <= hi:
            ge = min(g + 4, hi)
            mp = _median5_pos(z, buf, g, ge, cnt)
            buf[lo + ng], buf[mp] = buf[mp], buf[lo + ng]
            ng += 1
            g = ge + 1
        pivot = _mom_select(z, buf, lo, lo + ng - 1, (ng - 1) // 2, cnt)
        pv = z[pivot]

        gt, eq, lt = [], [], []
        for a in range(lo, hi + 1):
            v = z[buf[a]]
            cnt.count += 1
            if v > pv:
                gt.append(buf[a])
            else:
                cnt.count += 1
                if v == pv:
                    eq.append(buf[a])
                else:
                    lt.append(buf[a])
        buf[lo : hi + 1] = gt + eq + lt
        if rank < len(gt):
            hi = lo + len(gt) - 1
        elif rank < len(gt) + len(eq):
            return eq[rank - len(gt)]
        else:
            rank -= len(gt) + len(eq)
            lo = lo + len(gt) + len(eq)


def select_kth_descending(z, indices, k: int, counter: ComparisonCounter | None = None):
    """Index (from ``indices``) whose key is a k-th largest value of z there.

    Worst-case linear in ``len(indices)``.  Ties are broken arbitrarily: the
    contract is on the value, not on which equal-keyed index is returned.
    Pass a :class:`ComparisonCounter` to tally the value comparisons made.
    """
    z = _as_keys(z)
    buf = [int(i) for i in indices]
    if not 1 <= k <= len(buf):
        raise ValueError(f"rank k must lie in [1, {len(buf)}], got {k}")
    cnt = counter if counter is not None else ComparisonCounter()
    return int(_mom_select(z, buf, 0, len(buf) - 1, k - 1, cnt))


def quickpartition(z, indices, c: int, counter: ComparisonCounter | None = None) -> np.ndarray:
    """Permute the index set so position c (1-based) holds a c-th largest key.

    Returns b with z[b[i]] >= z[b[c-1]] >= z[b[t]] for all i < c-1 < t; the
    order inside the two sides is unspecified.  Worst-case linear; z is never
    permuted, only the returned index buffer is.
    """
    z = _as_keys(z)
    buf = [int(i) for i in indices]
    if not 1 <= c <= len(buf):
        raise ValueError(f"partition rank c must lie in [1, {len(buf)}], got {c}")
    cnt = counter if counter is not None else ComparisonCounter()
    pv = z[_mom_select(z, buf, 0, len(buf) - 1, c - 1, cnt)]
    # Exact three-way layout around the pivot value guarantees the contract
    # even with duplicate keys.
    out = np.empty(len(buf), dtype=np.int64)
    w = 0
    for i in buf:
        cnt.count += 1
        if z[i] > pv:
            out[w] = i
            w += 1
    for i in buf:
        cnt.count += 1
        if z[i] == pv:
            out[w] = i
            w += 1
    for i in buf:
        cnt.count += 1
        if z[i] < pv:
            out[w] = i
            w += 1
    return out


def quickpartition_two(
    z, indices, g: int, p: int, counter: ComparisonCounter | None = None
) -> np.ndarray:
    """Doubly partition the index set at ranks g <= p (both 1-based).

    Returns b with z[b_i] >= z[b_g] >= z[b_t] >= z[b_p] >= z[b_c] for
    i < g < t < p < c (1-based positions): a partition at p followed by a
    partition of the leading p-1 entries at g.  Worst-case linear.
    """
    z = _as_keys(z)
    n = len(list(indices)) if not hasattr(indices, "__len__") else len(indices)
    if not 1 <= g <= p <= n:
        raise ValueError(f"ranks must satisfy 1 <= g <= p <= {n}, got g={g} p={p}")
    cnt = counter if counter is not None else ComparisonCounter()
    b = quickpartition(z, indices, p, counter=cnt)
    if g < p:
        b[: p - 1] = quickpartition(z, b[: p - 1], g, counter=cnt)
    return b
