"""Nearest-point decoders for the Coxeter lattice family.

Five routes to the same answer, trading generality for speed:

* :func:`np_loglinear` -- sort the fractional parts once, then scan the n+1
  rounding candidates with O(1) running-sum updates.  O(n log n).
* :func:`np_linear` -- replace the sort by a bucket partition plus two
  worst-case-linear selections per bucket.  O(n).
* :func:`np_an_loglinear` / :func:`np_an_linear` -- the m = n+1 member (the
  root lattice A_n), where exactly one candidate glues in and no distance
  comparison is needed.
* :func:`np_anstar_loglinear` / :func:`np_anstar_linear` -- the m = 1 member
  (the dual A_n*), where every candidate glues in and the coset test
  vanishes.
* :func:`np_glue` -- baseline coset sweep: decode in each of the q translates
  of A_n and keep the best.  O(q n), so O(n^2) when q grows with n.

All decoders return a :class:`NearestPointResult`; the reported squared
distance is recomputed from the projected query and the returned point, not
taken from the scan recursion, so accumulated float error stays bounded at
the API boundary.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .lattice import CoxeterLattice, as_vector, make_lattice


@dataclass(frozen=True, eq=False)
class NearestPointResult:
    """A nearest lattice point: integer pre-image u, projection x = Qu, squared distance."""

    u: np.ndarray
    x: np.ndarray
    d2: float


@dataclass(frozen=True, eq=False)
class GlueVector:
    """Exact coset representative: integer numerators over denominator n+1."""

    numerators: np.ndarray
    denominator: int

    def to_float(self) -> np.ndarray:
        return self.numerators / self.denominator


@dataclass(frozen=True, eq=False)
class BucketPartition:
    """Indices 0..n grouped into the q fractional-part buckets, in scan order."""

    buckets: list


def _round_frac(y: np.ndarray):
    # round-half-up pre-image and its centered fractional part in one pass;
    # the floor/remainder form is exact, so z lands in [-0.5, 0.5) always.
    f = np.floor(y)
    r = y - f
    up = r >= 0.5
    return (f + up).astype(np.int64), r - up


def _finish(y: np.ndarray, u: np.ndarray) -> NearestPointResult:
    # The reported distance is recomputed from the projections, not carried
    # over from the scan recursion.
    uf = u.astype(np.float64)
    x = uf - uf.mean()
    e = (y - y.mean()) - x
    return NearestPointResult(u=u, x=x, d2=float(e @ e))


def _loglinear_scan(lattice: CoxeterLattice, y: np.ndarray):
    """Shared candidate scan: rounded base point, sorted fractional parts,
    objective value of every prefix candidate, and the coset-validity mask
    (None when m = 1, where the test vanishes)."""
    n1 = lattice.dim
    u0, z = _round_frac(y)
    alpha0 = float(z.sum())
    beta0 = float(z @ z)
    s = np.argsort(-z, kind="stable")
    prefix = np.empty(n1, dtype=np.float64)
    prefix[0] = 0.0
    np.cumsum(z[s[:-1]], out=prefix[1:])
    steps = np.arange(n1, dtype=np.float64)
    alpha = alpha0 - steps
    beta = beta0 + steps - 2.0 * prefix
    d = beta - alpha * alpha / n1
    if lattice.m == 1:
        valid = None
    else:
        gamma0 = int(u0.sum()) % lattice.m
        valid = (np.arange(n1) + gamma0) % lattice.m == 0
    return u0, z, s, d, valid


def np_loglinear(lattice: CoxeterLattice, y) -> NearestPointResult:
    """Nearest point in A(n, m) by sorted candidate scan; O(n log n)."""
    y = as_vector(y, lattice.dim)
    u, _, s, d, valid = _loglinear_scan(lattice, y)
    if valid is None:
        k_star = int(np.argmin(d))
    else:
        cand = np.flatnonzero(valid)
        k_star = int(cand[np.argmin(d[cand])])
    u[s[:k_star]] += 1
    return _finish(y, u)


def np_linear(lattice: CoxeterLattice, y) -> NearestPointResult:
    """Nearest point in A(n, m) by bucketed selection scan; worst-case O(n)."""
    y = as_vector(y, lattice.dim)
    u, z = _round_frac(y)
    gamma0 = int(u.sum()) % lattice.m
    w, k_star = _kernels.linear_scan(z, gamma0, lattice.m, lattice.q)
    u[w[:k_star]] += 1
    return _finish(y, u)


def bucket_partition(lattice: CoxeterLattice, z) -> BucketPartition:
    """Group indices by fractional-part bucket: index i lands in bucket
    q - floor(q*(z_i + 1/2)), counted from 1; insertion order is ascending i.

    The input must already be a centered fractional part, every coordinate in
    [-0.5, 0.5); anything else signals a rounding-convention violation
    upstream and is rejected.
    """
    z = as_vector(z, lattice.dim)
    if not np.all((z >= -0.5) & (z < 0.5)):
        raise ValueError("bucket keys must lie in [-0.5, 0.5); round the input first")
    q = lattice.q
    j = q - np.floor(q * (z + 0.5)).astype(np.int64)
    # z + 0.5 can round up to 1.0 in floats right below the boundary; clamp
    # the bucket back into range instead of inventing bucket 0.
    np.clip(j, 1, q, out=j)
    order = np.argsort(j, kind="stable")
    counts = np.bincount(j, minlength=q + 1)[1:]
    return BucketPartition(buckets=np.split(order, np.cumsum(counts)[:-1]))


def glue_vector(lattice: CoxeterLattice, i: int) -> GlueVector:
    """The i-th coset representative: j = n+1-i leading entries i/(n+1), then
    i trailing entries -j/(n+1), held exactly as integers over n+1."""
    i = int(i)
    if not 0 <= i <= lattice.n:
        raise ValueError(f"glue index must lie in [0, {lattice.n}], got {i}")
    n1 = lattice.dim
    j = n1 - i
    nums = np.concatenate(
        [np.full(j, i, dtype=np.int64), np.full(i, -j, dtype=np.int64)]
    )
    return GlueVector(numerators=nums, denominator=n1)


def np_glue(lattice: CoxeterLattice, y, an_decoder: str = "linear") -> NearestPointResult:
    """Nearest point by sweeping the q translates of the root lattice.

    ``an_decoder`` picks the inner A_n routine ("linear" or "loglinear").
    Ties between translates keep the smallest translate index.
    """
    y = as_vector(y, lattice.dim)
    if an_decoder not in ("linear", "loglinear"):
        raise ValueError(f"an_decoder must be 'linear' or 'loglinear', got {an_decoder!r}")
    py = y - y.mean()
    u = _kernels.glue_decode(y, py, lattice.m, lattice.q, an_decoder == "linear")
    return _finish(y, u)


def np_an_loglinear(y) -> NearestPointResult:
    """Nearest point in the root lattice A_n (the m = n+1 member).

    Exactly one of the n+1 scan candidates glues in, so the scan collapses to
    incrementing the top-gamma fractional parts.  O(n log n) from the sort.
    """
    y = as_vector(y)
    n1 = y.shape[0]
    u, z = _round_frac(y)
    gamma = (n1 - int(u.sum())) % n1
    if gamma:
        s = np.argsort(-z, kind="stable")
        u[s[:gamma]] += 1
    return _finish(y, u)


def np_an_linear(y) -> NearestPointResult:
    """Root-lattice decode with the sort replaced by one linear selection; O(n)."""
    y = as_vector(y)
    n1 = y.shape[0]
    u, z = _round_frac(y)
    gamma = (n1 - int(u.sum())) % n1
    if gamma:
        u[_kernels.top_rank_indices(z, gamma)] += 1
    return _finish(y, u)


def np_anstar_loglinear(y) -> NearestPointResult:
    """Nearest point in the dual lattice A_n* (the m = 1 member), sorted scan.

    Every candidate glues in, so the coset test drops out of the scan.
    """
    y = as_vector(y)
    lattice = make_lattice(y.shape[0] - 1, 1)
    u, _, s, d, _ = _loglinear_scan(lattice, y)
    k_star = int(np.argmin(d))
    u[s[:k_star]] += 1
    return _finish(y, u)


def np_anstar_linear(y) -> NearestPointResult:
    """Dual-lattice decode in worst-case O(n): per bucket only the first and
    last element can win, so the double partition reduces to an argmax swap."""
    y = as_vector(y)
    u, z = _round_frac(y)
    w, k_star = _kernels.anstar_scan(z)
    u[w[:k_star]] += 1
    return _finish(y, u)


ALGORITHMS = ("loglinear", "linear", "glue", "an", "anstar")


def decode(lattice: CoxeterLattice, y, algorithm: str = "linear") -> NearestPointResult:
    """Dispatch a decode by algorithm name.

    "an" and "anstar" are the specialized members and require the lattice to
    actually be the m = n+1 or m = 1 member; both use their linear variants.
    """
    if algorithm == "loglinear":
        return np_loglinear(lattice, y)
    if algorithm == "linear":
        return np_linear(lattice, y)
    if algorithm == "glue":
        return np_glue(lattice, y)
    if algorithm == "an":
        if lattice.m != lattice.dim:
            raise ValueError("'an' decodes the m = n+1 member; build the lattice with m = n+1")
        return np_an_linear(y)
    if algorithm == "anstar":
        if lattice.m != 1:
            raise ValueError("'anstar' decodes the m = 1 member; build the lattice with m = 1")
        return np_anstar_linear(y)
    raise ValueError(f"unknown algorithm {algorithm!r}; expected one of {ALGORITHMS}")
