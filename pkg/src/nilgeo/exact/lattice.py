"""Integer lattices spanned by rational vectors.

Membership and sublattice computations go through the Hermite normal form of
an integer-scaled basis; short-vector enumeration works on the exact Gram
matrix.
"""

from __future__ import annotations

import math
from collections import Counter
from math import lcm
from typing import Sequence

from ._backend import Q, numden, to_q
from .linalg import inverse, kernel_basis, rank
from .matrix import Matrix

DEFAULT_SPECTRUM_BOUND = 64


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``g = gcd(a, b) >= 0`` and ``a x + b y = g``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def hnf(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style Hermite normal form of an integer matrix.

    The result spans the same Z-module as ``rows``: zero rows are dropped,
    pivots are positive and strictly move right, and entries above a pivot are
    reduced into ``[0, pivot)``.
    """
    A = [[int(x) for x in r] for r in rows]
    if not A:
        return []
    ncols = len(A[0])
    r = 0
    for c in range(ncols):
        if r == len(A):
            break
        for i in range(r + 1, len(A)):
            b = A[i][c]
            if b == 0:
                continue
            a = A[r][c]
            g, x, y = xgcd(a, b)
            ag, bg = a // g, b // g
            top, low = A[r], A[i]
            A[r] = [x * s + y * t for s, t in zip(top, low)]
            A[i] = [-bg * s + ag * t for s, t in zip(top, low)]
        p = A[r][c]
        if p == 0:
            continue
        if p < 0:
            A[r] = [-s for s in A[r]]
            p = -p
        for k in range(r):
            f = A[k][c] // p
            if f:
                A[k] = [s - f * t for s, t in zip(A[k], A[r])]
        r += 1
    return [row for row in A if any(row)]


def integer_kernel(rows: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    """Z-basis (in HNF) of ``{a in Z^ncols : A a = 0}`` for an integer matrix ``A``."""
    nrows = len(rows)
    if nrows == 0:
        return [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]
    aug = [[rows[r][k] for r in range(nrows)] + [1 if k == j else 0 for j in range(ncols)]
           for k in range(ncols)]
    H = hnf(aug)
    kern = [row[nrows:] for row in H if not any(row[:nrows])]
    return hnf(kern)


def _common_denominator(vectors) -> int:
    d = 1
    for v in vectors:
        for x in v:
            d = lcm(d, numden(x)[1])
    return d


def _scaled_integer_rows(vectors, d: int) -> list[list[int]]:
    out = []
    for v in vectors:
        row = []
        for x in v:
            num, den = numden(x)
            row.append(num * (d // den))
        out.append(row)
    return out


class IntegerLattice:
    """Z-span of linearly independent rational vectors in ``Q^ambient_dim``.

    The stored basis is the canonical (Hermite) basis of the Z-module, so two
    lattices are equal iff their ``basis`` tuples agree.
    """

    __slots__ = ("ambient_dim", "basis", "gram", "_denominator", "_int_hnf")

    def __init__(self, basis: Sequence[Sequence], ambient_dim: int | None = None):
        vectors = [tuple(to_q(x) for x in v) for v in basis]
        if ambient_dim is None:
            if not vectors:
                raise ValueError("ambient_dim is required for the zero lattice")
            ambient_dim = len(vectors[0])
        for v in vectors:
            if len(v) != ambient_dim:
                raise ValueError(f"basis vector {v} is not in dimension {ambient_dim}")
        if vectors and rank(Matrix(vectors, ambient_dim)) != len(vectors):
            raise ValueError("lattice basis vectors are linearly dependent")
        d = _common_denominator(vectors)
        H = hnf(_scaled_integer_rows(vectors, d))
        self.ambient_dim = ambient_dim
        self._denominator = d
        self._int_hnf = H
        self.basis = tuple(tuple(Q(x, d) for x in row) for row in H)
        self.gram = Matrix(
            [[sum((a * b for a, b in zip(u, v)), Q(0)) for v in self.basis] for u in self.basis],
            len(self.basis),
        )

    # -- constructors -----------------------------------------------------
    @classmethod
    def standard(cls, dim: int) -> "IntegerLattice":
        return cls.diagonal([1] * dim)

    @classmethod
    def diagonal(cls, scales: Sequence) -> "IntegerLattice":
        n = len(scales)
        return cls([[to_q(s) if i == j else Q(0) for j in range(n)] for i, s in enumerate(scales)], n)

    # -- queries ----------------------------------------------------------
    @property
    def rank(self) -> int:
        return len(self.basis)

    def __contains__(self, v) -> bool:
        return lattice_membership(self, v)

    def scaled(self, factor) -> "IntegerLattice":
        f = to_q(factor)
        return IntegerLattice([[f * x for x in b] for b in self.basis], self.ambient_dim)

    def dual(self) -> "IntegerLattice":
        """Dual lattice inside the real span, computed as ``gram^-1 basis``."""
        if not self.basis:
            return IntegerLattice([], self.ambient_dim)
        ginv = inverse(self.gram)
        B = Matrix(self.basis, self.ambient_dim)
        return IntegerLattice((ginv @ B).rows, self.ambient_dim)

    def __eq__(self, other):
        if not isinstance(other, IntegerLattice):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"IntegerLattice(rank={self.rank}, ambient_dim={self.ambient_dim}, basis={self.basis})"


def lattice_membership(L: IntegerLattice, v: Sequence) -> bool:
    """True iff ``v`` is an integer combination of the basis of ``L``."""
    v = [to_q(x) for x in v]
    if len(v) != L.ambient_dim:
        raise ValueError(f"vector has {len(v)} coordinates, lattice lives in {L.ambient_dim}")
    d = L._denominator
    target = []
    for x in v:
        y = x * d
        num, den = numden(y)
        if den != 1:
            return False
        target.append(num)
    for row in L._int_hnf:
        c = next(j for j, a in enumerate(row) if a)
        q, r = divmod(target[c], row[c])
        if r:
            return False
        if q:
            target = [t - q * a for t, a in zip(target, row)]
    return not any(target)


def lattice_intersect_subspace(L: IntegerLattice, subspace: Sequence[Sequence]) -> IntegerLattice:
    """Sublattice of the points of ``L`` lying in the span of ``subspace``."""
    n = L.ambient_dim
    if not L.basis:
        return IntegerLattice([], n)
    S = [tuple(to_q(x) for x in s) for s in subspace]
    if not S:
        return IntegerLattice([], n)
    normals = kernel_basis(Matrix(S, n))  # spans the orthogonal complement
    if not normals:
        return L
    # x = a B lies in span(S) iff N x = 0 iff (N B^T) a = 0
    A = [[sum((p * q for p, q in zip(nv, b)), Q(0)) for b in L.basis] for nv in normals]
    int_rows = []
    for row in A:
        d = _common_denominator([row])
        int_rows.append(_scaled_integer_rows([row], d)[0])
    coeffs = integer_kernel(int_rows, len(L.basis))
    vectors = [
        tuple(sum((c * b[i] for c, b in zip(a, L.basis)), Q(0)) for i in range(n)) for a in coeffs
    ]
    return IntegerLattice(vectors, n)


def _ldl(G: Matrix) -> tuple[list, list[list]]:
    """``G = U^T D U`` with unit upper-triangular ``U``; returns (diag, U)."""
    n = G.nrows
    U = [[Q(1) if i == j else Q(0) for j in range(n)] for i in range(n)]
    D = [Q(0)] * n
    for i in range(n):
        D[i] = G[i, i] - sum((U[k][i] ** 2 * D[k] for k in range(i)), Q(0))
        if D[i] <= 0:
            raise ValueError("Gram matrix is not positive definite")
        for j in range(i + 1, n):
            s = G[i, j] - sum((U[k][i] * U[k][j] * D[k] for k in range(i)), Q(0))
            U[i][j] = s / D[i]
    return D, U


def _floor_sqrt(s) -> int:
    """floor(sqrt(s)) for a rational s >= 0."""
    return math.isqrt(math.floor(s))


def enumerate_short_vectors(L: IntegerLattice, bound) -> list[tuple[tuple[int, ...], object]]:
    """All coefficient vectors ``a`` with ``|a B|^2 <= bound``, with their norms."""
    bound = to_q(bound)
    if bound < 0:
        raise ValueError("bound must be non-negative")
    k = L.rank
    if k == 0:
        return [((), Q(0))]
    D, U = _ldl(L.gram)
    out = []
    coords = [0] * k

    def recurse(i: int, remaining):
        # centre of the i-th coordinate given the later ones
        centre = -sum((U[i][j] * coords[j] for j in range(i + 1, k)), Q(0))
        s = remaining / D[i]
        t = _floor_sqrt(s)
        lo = math.floor(centre) - t - 1
        hi = math.ceil(centre) + t + 1
        for x in range(lo, hi + 1):
            y = x - centre
            used = D[i] * y * y
            if used > remaining:
                continue
            coords[i] = x
            if i == 0:
                out.append((tuple(coords), bound - remaining + used))
            else:
                recurse(i - 1, remaining - used)
        coords[i] = 0

    recurse(k - 1, bound)
    return out


def length_spectrum(L: IntegerLattice, bound=DEFAULT_SPECTRUM_BOUND) -> list[tuple[object, int]]:
    """Sorted ``(squared_length, multiplicity)`` pairs for all lattice vectors of
    squared length at most ``bound`` (the zero vector included)."""
    counts = Counter(norm for _, norm in enumerate_short_vectors(L, bound))
    return sorted(counts.items())
