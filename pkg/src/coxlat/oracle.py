"""Exhaustive ground truth at small dimension.

:func:`np_bruteforce` enumerates every integer pre-image in a box around the
rounded query and keeps the admissible one whose projection is closest; it is
the independent check for all the scan decoders and deliberately shares
nothing with them beyond the projection/rounding/membership primitives.
:func:`enumerate_shell` enumerates the minimal-norm shell (exact integer
arithmetic), which pins down kissing numbers such as 240 for the E8 member.

Enumeration order is lexicographic over the coordinate box and there is no
pruning beyond the divisibility filter: slow and obviously correct, with the
inner distance math vectorized so the small-n sweeps stay affordable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .decoders import NearestPointResult
from .lattice import CoxeterLattice, as_vector, project, round_half_up, squared_distance

MAX_ORACLE_N = 9

# Rows per enumeration block; bounds peak memory of the vectorized math.
_CHUNK_ROWS = 1 << 20


@dataclass(frozen=True)
class ShellReport:
    """Minimal nonzero squared norm of the lattice and how many vectors attain it."""

    min_norm2: float
    count: int


@lru_cache(maxsize=8)
def _full_grid(length: int, radius: int) -> np.ndarray:
    # All offset rows in [-radius, radius]^length, lexicographic order.
    vals = np.arange(-radius, radius + 1, dtype=np.int8)
    grids = np.meshgrid(*([vals] * length), indexing="ij")
    return np.stack([g.reshape(-1) for g in grids], axis=1)


def _iter_offsets(length: int, radius: int):
    if (2 * radius + 1) ** length <= _CHUNK_ROWS or length == 1:
        yield _full_grid(length, radius)
        return
    for v in range(-radius, radius + 1):
        for tail in _iter_offsets(length - 1, radius):
            block = np.empty((tail.shape[0], length), dtype=np.int8)
            block[:, 0] = v
            block[:, 1:] = tail
            yield block


@lru_cache(maxsize=4)
def _offset_tables(length: int, radius: int):
    # Cached row sums and zero-sum projections of the full grid (small lengths).
    off = _full_grid(length, radius)
    sums = off.sum(axis=1, dtype=np.int64)
    proj = off.astype(np.float64)
    proj -= proj.mean(axis=1, keepdims=True)
    return off, sums, proj


def np_bruteforce(lattice: CoxeterLattice, y, radius: int = 2) -> NearestPointResult:
    """Exhaustively find a nearest point of A(n, m) to y.

    Enumerates every integer w with w_i within ``radius`` of the rounded
    query, keeps those whose sum is divisible by m, and minimizes the
    distance between the projections.  Radius 2 already covers the optimum
    (some admissible candidate differs from the rounded query by 0 or +1 per
    coordinate, up to an all-ones shift) with a full unit of margin; smaller
    radii are rejected rather than trusted.
    """
    if lattice.n > MAX_ORACLE_N:
        raise ValueError(f"exhaustive search is limited to n <= {MAX_ORACLE_N}, got n={lattice.n}")
    radius = int(radius)
    if radius < 2:
        raise ValueError(f"radius must be at least 2, got {radius}")
    y = as_vector(y, lattice.dim)
    base = round_half_up(y)
    base_sum = int(base.sum())
    pz = project(y - base)
    m = lattice.m
    length = lattice.dim

    best_d = np.inf
    best_off = None
    if (2 * radius + 1) ** length <= _CHUNK_ROWS:
        off, sums, proj = _offset_tables(length, radius)
        d2 = np.square(proj - pz).sum(axis=1)
        d2[(base_sum + sums) % m != 0] = np.inf
        b = int(np.argmin(d2))
        best_d = d2[b]
        best_off = off[b]
    else:
        for off in _iter_offsets(length, radius):
            sums = off.sum(axis=1, dtype=np.int64)
            proj = off.astype(np.float64)
            proj -= proj.mean(axis=1, keepdims=True)
            d2 = np.square(proj - pz).sum(axis=1)
            d2[(base_sum + sums) % m != 0] = np.inf
            b = int(np.argmin(d2))
            if d2[b] < best_d:
                best_d = d2[b]
                best_off = off[b].copy()
    if not np.isfinite(best_d):
        raise RuntimeError("no admissible candidate found; this cannot happen for m <= n+1")
    u = base + best_off
    x = project(u.astype(np.float64))
    return NearestPointResult(u=u, x=x, d2=squared_distance(project(y), x))


def enumerate_shell(lattice: CoxeterLattice, coord_bound: int = 3) -> ShellReport:
    """Enumerate the minimal-norm nonzero shell of A(n, m).

    Scans all integer pre-images with coordinates in [-coord_bound,
    coord_bound]; the squared projected norm of an integer w is the exact
    rational ((n+1)|w|^2 - (sum w)^2) / (n+1), so minima are compared in
    integer arithmetic.  Pre-images differing by any integer multiple of the
    all-ones vector project identically (and stay members, since m divides
    n+1), so they are counted once via the representative whose coordinate
    sum is smallest in magnitude (ties resolved nonnegative).
    """
    if lattice.n > MAX_ORACLE_N:
        raise ValueError(f"shell enumeration is limited to n <= {MAX_ORACLE_N}, got n={lattice.n}")
    bound = int(coord_bound)
    if bound < 2:
        raise ValueError(f"coord_bound must be at least 2, got {bound}")
    n1 = lattice.dim
    m = lattice.m

    best_n = None
    hits = []
    for off in _iter_offsets(n1, bound):
        w16 = off.astype(np.int16)
        norm2 = np.einsum("ij,ij->i", w16, w16).astype(np.int64)
        sums = off.sum(axis=1, dtype=np.int64)
        scaled = n1 * norm2 - sums * sums
        keep = (sums % m == 0) & (scaled > 0)
        if not keep.any():
            continue
        chunk_min = int(scaled[keep].min())
        if best_n is None or chunk_min < best_n:
            best_n = chunk_min
            hits = []
        if chunk_min == best_n:
            hits.append(off[keep & (scaled == best_n)].astype(np.int64))

    if best_n is None:
        raise RuntimeError("no nonzero lattice vector within the coordinate bound")
    shell = np.concatenate(hits)
    sums = shell.sum(axis=1)
    period = n1
    c = np.floor_divide(sums, period)
    rem = sums - c * period
    c = c + (2 * rem > period)
    canon = shell - c[:, None]
    count = int(np.unique(canon, axis=0).shape[0])
    return ShellReport(min_norm2=best_n / n1, count=count)
