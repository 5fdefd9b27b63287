"""Nearest-point solvers and quantizers for the Coxeter lattice family A(n, m)."""

from .decoders import (
    ALGORITHMS,
    BucketPartition,
    GlueVector,
    NearestPointResult,
    bucket_partition,
    decode,
    glue_vector,
    np_an_linear,
    np_an_loglinear,
    np_anstar_linear,
    np_anstar_loglinear,
    np_glue,
    np_linear,
    np_loglinear,
)
from .lattice import (
    CoxeterLattice,
    Decomposition,
    centered_frac,
    decompose,
    is_member,
    make_lattice,
    project,
    round_half_up,
    squared_distance,
)
from .oracle import ShellReport, enumerate_shell, np_bruteforce
from .selection import (
    ComparisonCounter,
    quickpartition,
    quickpartition_two,
    select_kth_descending,
    sort_indices,
)

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "BucketPartition",
    "ComparisonCounter",
    "CoxeterLattice",
    "CoxeterLatticeQuantizer",
    "Decomposition",
    "GlueVector",
    "NearestPointResult",
    "ShellReport",
    "bucket_partition",
    "centered_frac",
    "decode",
    "decompose",
    "enumerate_shell",
    "glue_vector",
    "is_member",
    "make_lattice",
    "np_an_linear",
    "np_an_loglinear",
    "np_anstar_linear",
    "np_anstar_loglinear",
    "np_bruteforce",
    "np_glue",
    "np_linear",
    "np_loglinear",
    "project",
    "quickpartition",
    "quickpartition_two",
    "round_half_up",
    "select_kth_descending",
    "sort_indices",
    "squared_distance",
]


def __getattr__(name):
    # The sklearn import is heavyweight; load the estimator only on demand.
    if name == "CoxeterLatticeQuantizer":
        from .quantizer import CoxeterLatticeQuantizer

        return CoxeterLatticeQuantizer
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
