"""Exact scalar, polynomial, matrix and lattice arithmetic."""

from ._backend import BACKEND, Q, fmt_q, parse_rational, to_q
from .lattice import (
    DEFAULT_SPECTRUM_BOUND,
    IntegerLattice,
    hnf,
    integer_kernel,
    lattice_intersect_subspace,
    lattice_membership,
    length_spectrum,
)
from .linalg import (
    LinearSolution,
    charpoly,
    determinant,
    inverse,
    kernel_basis,
    rank,
    rref,
    solve_linear,
)
from .matrix import Matrix
from .poly import Poly

__all__ = [
    "BACKEND",
    "DEFAULT_SPECTRUM_BOUND",
    "IntegerLattice",
    "LinearSolution",
    "Matrix",
    "Poly",
    "Q",
    "charpoly",
    "determinant",
    "fmt_q",
    "hnf",
    "integer_kernel",
    "inverse",
    "kernel_basis",
    "lattice_intersect_subspace",
    "lattice_membership",
    "length_spectrum",
    "parse_rational",
    "rank",
    "rref",
    "solve_linear",
    "to_q",
]
