"""Coxeter lattice family A(n, m) and the shared geometric primitives.

A(n, m) is the n-dimensional lattice obtained by taking the integer vectors
of length n+1 whose coordinate sum is divisible by m, and projecting them
orthogonally onto the hyperplane ``x . 1 = 0``.  The order m must divide n+1;
when it does not, the family collapses to the m = 1 member.  Special members:
m = n+1 gives the root lattice A_n, m = 1 gives its dual A_n*, and
(n, m) = (8, 3), (7, 4), (7, 2) give E8, E7 and E7* respectively.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Per-coordinate tolerance scale for "lies in the zero-sum hyperplane" checks.
PROJECTION_TOL = 1e-9


@dataclass(frozen=True)
class CoxeterLattice:
    """The lattice A(n, m): (n+1)-long integer pre-images with sum divisible by m.

    q = (n+1) / m counts the cosets of the m = n+1 member (the root lattice
    A_n) inside this lattice.  Use :func:`make_lattice` to construct values;
    the constructor itself rejects inconsistent triples.
    """

    n: int
    m: int
    q: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"lattice dimension n must be >= 1, got {self.n}")
        if not 1 <= self.m <= self.n + 1:
            raise ValueError(f"glue order m must lie in [1, n+1], got {self.m}")
        if self.q * self.m != self.n + 1:
            raise ValueError(
                f"inconsistent lattice: q*m must equal n+1, got q={self.q} m={self.m} n={self.n}"
            )

    @property
    def dim(self) -> int:
        """Length of the ambient vectors, n+1."""
        return self.n + 1


def make_lattice(n: int, m: int) -> CoxeterLattice:
    """Build A(n, m), normalizing m to 1 when it does not divide n+1.

    Non-divisor orders define the same point set as m = 1, so they are
    normalized rather than rejected; m > n+1 or m < 1 is an error.
    """
    n = int(n)
    m = int(m)
    if n < 1:
        raise ValueError(f"lattice dimension n must be >= 1, got {n}")
    if m < 1:
        raise ValueError(f"glue order m must be >= 1, got {m}")
    if m > n + 1:
        raise ValueError(f"glue order m must not exceed n+1 = {n + 1}, got {m}")
    if (n + 1) % m != 0:
        m = 1
    return CoxeterLattice(n=n, m=m, q=(n + 1) // m)


@dataclass(frozen=True)
class Decomposition:
    """A vector split into its zero-sum part and its component along all-ones."""

    projected: np.ndarray
    t: float


def as_vector(y, dim: int | None = None) -> np.ndarray:
    """Validate and convert y to a finite 1-d float64 array (of length dim if given)."""
    arr = np.ascontiguousarray(y, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError(f"expected a 1-d vector, got shape {arr.shape}")
    if dim is not None and arr.shape[0] != dim:
        raise ValueError(f"expected a vector of length {dim}, got {arr.shape[0]}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("vector entries must be finite")
    return arr


def project(v) -> np.ndarray:
    """Project v onto the zero-sum hyperplane: v - (sum(v)/len(v)) * 1.

    Runs in O(n); the (n+1) x (n+1) projection matrix is never formed.
    """
    v = as_vector(v)
    return v - v.sum() / v.shape[0]


def decompose(y) -> Decomposition:
    """Split y into orthogonal components y = projected + t * 1."""
    y = as_vector(y)
    t = y.sum() / y.shape[0]
    return Decomposition(projected=y - t, t=float(t))


def round_half_up(y) -> np.ndarray:
    """Round each coordinate to the nearest integer; exact halves round toward +inf.

    This is the single rounding convention used throughout the package.  The
    floor/remainder formulation is exact in double precision, so the
    companion fractional part always lands in [-0.5, 0.5).
    """
    y = as_vector(y)
    f = np.floor(y)
    return (f + (y - f >= 0.5)).astype(np.int64)


def centered_frac(y) -> np.ndarray:
    """Centered fractional part y - round_half_up(y), in [-0.5, 0.5) per coordinate."""
    y = as_vector(y)
    f = np.floor(y)
    r = y - f
    return r - (r >= 0.5)


def is_member(lattice: CoxeterLattice, u) -> bool:
    """True iff the integer vector u is a pre-image of a point of the lattice.

    Exact integer arithmetic; the sum is reduced with a nonnegative modulus.
    """
    arr = np.asarray(u)
    if arr.ndim != 1 or arr.shape[0] != lattice.dim:
        raise ValueError(f"expected an integer vector of length {lattice.dim}")
    if not np.issubdtype(arr.dtype, np.integer):
        rounded = np.rint(arr)
        if not np.all(arr == rounded):
            raise ValueError("pre-image coordinates must be integers")
        arr = rounded.astype(np.int64)
    return int(arr.sum()) % lattice.m == 0


def squared_distance(a, b) -> float:
    """Squared Euclidean distance between two equal-length vectors."""
    a = as_vector(a)
    b = as_vector(b, dim=a.shape[0])
    d = a - b
    return float(d @ d)
