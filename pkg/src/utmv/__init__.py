"""Laboratory for the vector-matrix-vector (u^T M v) query model."""

from .domains import COMPLEX, GF2, INT, RAT, REAL, DomainKind, ScalarDomain
from .matrix import DenseMatrix, basis, indicator, ones
from .oracle import BilinearOracle, QueryLedger, TestReport, Verdict, ones_in_submatrix
from .instances import generate_instance
from .rng import child_seed, make_rng

__all__ = [
    "BilinearOracle", "COMPLEX", "DenseMatrix", "DomainKind", "GF2", "INT", "QueryLedger", "RAT",
    "REAL", "ScalarDomain", "TestReport", "Verdict", "basis", "child_seed", "generate_instance",
    "indicator", "make_rng", "ones", "ones_in_submatrix",
]
__version__ = "0.1.0"
