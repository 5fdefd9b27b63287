"""Compiled hot loops for the decoders.

Everything here is numba-compiled so the linear-time scans really run in
linear time at machine speed; the Python wrappers in :mod:`coxlat.decoders`
own validation and result assembly.  The selection code mirrors the
reference implementation in :mod:`coxlat.selection`: deterministic
median-of-medians pivoting (groups of five), Hoare partitioning, worst-case
linear.  Index buffers are permuted in place; key vectors are never touched.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def _insertion_desc(z, w, lo, hi):
    for a in range(lo + 1, hi + 1):
        t = w[a]
        zt = z[t]
        b = a
        while b > lo and z[w[b - 1]] < zt:
            w[b] = w[b - 1]
            b -= 1
        w[b] = t


@njit(cache=True)
def _median3(z, w, pa, pb, pc):
    a = z[w[pa]]
    b = z[w[pb]]
    c = z[w[pc]]
    if a < b:
        if b < c:
            return pb
        return pc if a < c else pa
    if c < b:
        return pb
    return pc if c < a else pa


@njit(cache=True)
def _median5(z, w, lo, hi):
    size = hi - lo + 1
    if size == 1:
        return lo
    if size == 2:
        return lo if z[w[lo]] < z[w[lo + 1]] else lo + 1
    if size == 3:
        return _median3(z, w, lo, lo + 1, lo + 2)
    if size == 4:
        _insertion_desc(z, w, lo, hi)
        return lo + 1
    pa = lo
    pb = lo + 1
    pc = lo + 2
    pd = lo + 3
    pe = lo + 4
    if z[w[pa]] > z[w[pb]]:
        pa, pb = pb, pa
    if z[w[pc]] > z[w[pd]]:
        pc, pd = pd, pc
    if z[w[pa]] > z[w[pc]]:
        pa, pb, pc, pd = pc, pd, pa, pb
    # z[pa] is below the median, max(z[pb], z[pd]) above; a median of three remains.
    if z[w[pb]] < z[w[pd]]:
        return _median3(z, w, pc, pb, pe)
    return _median3(z, w, pc, pd, pe)


@njit(cache=True)
def _gather_medians(z, w, lo, hi):
    # Swap the median of every group of five to the front of the segment;
    # returns the number of gathered medians.
    ng = 0
    g = lo
    while g <= hi:
        ge = min(g + 4, hi)
        mp = _median5(z, w, g, ge)
        tmp = w[lo + ng]
        w[lo + ng] = w[mp]
        w[mp] = tmp
        ng += 1
        g = ge + 1
    return ng


@njit(cache=True)
def _mom_select(z, w, lo, hi, rank, scratch):
    # Value-index holding the (rank+1)-th largest key of w[lo..hi]; reorders w.
    # Iterative median-of-medians: the pivot recursion is flattened onto an
    # explicit frame stack (self-recursive jitted functions cannot be cached),
    # and each level does an exact three-way partition, so duplicate-heavy
    # inputs shrink strictly and terminate.
    st = np.empty((64, 3), np.int64)
    depth = 0
    res = -1
    have = False
    while True:
        if not have:
            size = hi - lo + 1
            if size <= 5:
                _insertion_desc(z, w, lo, hi)
                res = w[lo + rank]
                have = True
            else:
                st[depth, 0] = lo
                st[depth, 1] = hi
                st[depth, 2] = rank
                depth += 1
                ng = _gather_medians(z, w, lo, hi)
                hi = lo + ng - 1
                rank = (ng - 1) // 2
            continue
        if depth == 0:
            return res
        # res is the median-of-medians of the frame below; use it as pivot.
        depth -= 1
        lo = st[depth, 0]
        hi = st[depth, 1]
        rank = st[depth, 2]
        pv = z[res]
        have = False
        t = 0
        for a in range(lo, hi + 1):
            if z[w[a]] > pv:
                scratch[t] = w[a]
                t += 1
        ngt = t
        for a in range(lo, hi + 1):
            if z[w[a]] == pv:
                scratch[t] = w[a]
                t += 1
        neq = t
        for a in range(lo, hi + 1):
            if z[w[a]] < pv:
                scratch[t] = w[a]
                t += 1
        for a in range(t):
            w[lo + a] = scratch[a]
        if rank < ngt:
            hi = lo + ngt - 1
        elif rank < neq:
            res = w[lo + rank]
            have = True
        else:
            rank -= neq
            lo = lo + neq


@njit(cache=True)
def _partition_rank(z, w, lo, hi, c, scratch):
    # In-place partition of w[lo..hi] so the local 1-based position c holds a
    # c-th largest key; three-way layout handles duplicate keys exactly.
    pv = z[_mom_select(z, w, lo, hi, c - 1, scratch)]
    t = 0
    for a in range(lo, hi + 1):
        if z[w[a]] > pv:
            scratch[t] = w[a]
            t += 1
    for a in range(lo, hi + 1):
        if z[w[a]] == pv:
            scratch[t] = w[a]
            t += 1
    for a in range(lo, hi + 1):
        if z[w[a]] < pv:
            scratch[t] = w[a]
            t += 1
    for a in range(t):
        w[lo + a] = scratch[a]


@njit(cache=True)
def top_rank_indices(z, c):
    """Indices of the c largest entries of z (any order), worst-case linear."""
    n1 = z.shape[0]
    w = np.empty(n1, np.int64)
    for t in range(n1):
        w[t] = t
    if c < n1:
        scratch = np.empty(n1, np.int64)
        _partition_rank(z, w, 0, n1 - 1, c, scratch)
    return w[:c]


@njit(cache=True)
def _bucketize(z, q):
    # Stable counting sort of indices into q buckets of fractional parts:
    # bucket j collects coordinates with q - floor(q*(z+1/2)) == j.  The input
    # must sit in [-0.5, 0.5); the clamp only absorbs float roundup of z+0.5.
    n1 = z.shape[0]
    jidx = np.empty(n1, np.int64)
    counts = np.zeros(q + 1, np.int64)
    for i in range(n1):
        j = q - np.int64(np.floor(q * (z[i] + 0.5)))
        if j < 1:
            j = 1
        elif j > q:
            j = q
        jidx[i] = j
        counts[j] += 1
    starts = np.zeros(q + 1, np.int64)
    fill = np.zeros(q + 1, np.int64)
    pos = 0
    for j in range(1, q + 1):
        starts[j] = pos
        fill[j] = pos
        pos += counts[j]
    w = np.empty(n1, np.int64)
    for i in range(n1):
        j = jidx[i]
        w[fill[j]] = i
        fill[j] += 1
    return w, counts, starts


@njit(cache=True)
def linear_scan(z, gamma0, m, q):
    """Linear-time candidate scan over fractional parts z (in [-0.5, 0.5)).

    Buckets the coordinates, doubly partitions each bucket at the only two
    local offsets that can glue in and win, and runs the running-sum update
    of the candidate objective.  Returns the bucket-concatenated index order
    w and the number k* of leading entries of w the winning pre-image
    increments.
    """
    n1 = z.shape[0]
    w, counts, starts = _bucketize(z, q)
    scratch = np.empty(n1, np.int64)
    alpha = 0.0
    beta = 0.0
    for i in range(n1):
        alpha += z[i]
        beta += z[i] * z[i]
    gamma = gamma0
    best = np.inf
    k_star = 0
    k = 1
    inv = 1.0 / n1
    for j in range(1, q + 1):
        size = counts[j]
        if size == 0:
            continue
        lo = starts[j]
        hi = lo + size - 1
        g = m - gamma
        p = size - (size + gamma) % m
        if g <= size:
            if g == p:
                _partition_rank(z, w, lo, hi, g, scratch)
            else:
                _partition_rank(z, w, lo, hi, p, scratch)
                _partition_rank(z, w, lo, lo + p - 2, g, scratch)
        for t in range(size):
            zi = z[w[lo + t]]
            alpha -= 1.0
            beta += 1.0 - 2.0 * zi
            gamma += 1
            if gamma == m:
                gamma = 0
            tl = t + 1
            if tl == g or tl == p:
                d = beta - alpha * alpha * inv
                if d < best:
                    best = d
                    k_star = k
            k += 1
    return w, k_star


@njit(cache=True)
def anstar_scan(z):
    """Linear-time scan for the m = 1 member: every candidate glues in.

    With m = 1 the two bucket offsets collapse to the first and last element,
    so no double partition is needed: the bucket maximum is swapped to the
    front and only the endpoints are costed.
    """
    n1 = z.shape[0]
    q = n1
    w, counts, starts = _bucketize(z, q)
    alpha = 0.0
    beta = 0.0
    for i in range(n1):
        alpha += z[i]
        beta += z[i] * z[i]
    best = np.inf
    k_star = 0
    k = 1
    inv = 1.0 / n1
    for j in range(1, q + 1):
        size = counts[j]
        if size == 0:
            continue
        lo = starts[j]
        if size > 1:
            am = lo
            for t in range(lo + 1, lo + size):
                if z[w[t]] > z[w[am]]:
                    am = t
            tmp = w[lo]
            w[lo] = w[am]
            w[am] = tmp
        for t in range(size):
            zi = z[w[lo + t]]
            alpha -= 1.0
            beta += 1.0 - 2.0 * zi
            if t == 0 or t == size - 1:
                d = beta - alpha * alpha * inv
                if d < best:
                    best = d
                    k_star = k
            k += 1
    return w, k_star


@njit(cache=True)
def _an_decode_inplace(y, u, z, w, scratch, use_linear):
    # Nearest-point pre-image in the root lattice (m = n+1); fills u.
    n1 = y.shape[0]
    ssum = 0
    for t in range(n1):
        f = np.floor(y[t])
        r = y[t] - f
        if r >= 0.5:
            f += 1.0
            r -= 1.0
        u[t] = np.int64(f)
        z[t] = r
        ssum += u[t]
    gamma = (n1 - ssum % n1) % n1
    if gamma > 0:
        if use_linear:
            for t in range(n1):
                w[t] = t
            _partition_rank(z, w, 0, n1 - 1, gamma, scratch)
            for t in range(gamma):
                u[w[t]] += 1
        else:
            order = np.argsort(z)
            for t in range(gamma):
                u[order[n1 - 1 - t]] += 1


@njit(cache=True)
def glue_decode(y, py, m, q, use_linear):
    """Coset-sweep decoder: root-lattice decode in each of the q translates.

    py is the zero-sum projection of y.  Returns the winning pre-image with
    the translate folded back in; ties keep the smallest translate index.
    """
    n1 = y.shape[0]
    ybuf = np.empty(n1, np.float64)
    u = np.empty(n1, np.int64)
    z = np.empty(n1, np.float64)
    w = np.empty(n1, np.int64)
    scratch = np.empty(n1, np.int64)
    ubest = np.empty(n1, np.int64)
    ibest = 0
    dbest = np.inf
    for gi in range(q):
        kk = gi * m
        lead = n1 - kk
        a = kk / n1
        b = (kk - n1) / n1
        for t in range(n1):
            gv = a if t < lead else b
            ybuf[t] = y[t] - gv
        _an_decode_inplace(ybuf, u, z, w, scratch, use_linear)
        su = 0
        for t in range(n1):
            su += u[t]
        mean = su / n1
        d = 0.0
        for t in range(n1):
            gv = a if t < lead else b
            e = py[t] - (u[t] - mean) - gv
            d += e * e
        if d < dbest:
            dbest = d
            ibest = gi
            for t in range(n1):
                ubest[t] = u[t]
    kk = ibest * m
    for t in range(n1 - kk, n1):
        ubest[t] -= 1
    return ubest
