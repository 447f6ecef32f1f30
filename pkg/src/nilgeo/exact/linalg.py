"""Exact linear algebra: row reduction, kernels, linear solves, determinants
and characteristic polynomials."""

from __future__ import annotations

from dataclasses import dataclass, field

from ._backend import Q, fmt_q
from .matrix import Matrix
from .poly import Poly


def rref(M: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form over the rationals, with its pivot columns."""
    rows = [list(r) for r in M.rows]
    pivots: list[int] = []
    r = 0
    for c in range(M.ncols):
        if r == len(rows):
            break
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [a * inv for a in rows[r]]
        pivot_row = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], pivot_row)]
        pivots.append(c)
        r += 1
    return Matrix(rows, M.ncols), pivots


def rank(M: Matrix) -> int:
    return len(rref(M)[1])


def kernel_basis(M: Matrix) -> list[tuple]:
    """Null space basis ``{x : M x = 0}``, one vector per free column.

    Each vector has a 1 in its free column and zeros in the other free
    columns, which is the basis read off the reduced row echelon form.  Two
    matrices have the same kernel iff this list is identical.
    """
    R, pivots = rref(M)
    free = [c for c in range(M.ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Q(0)] * M.ncols
        v[f] = Q(1)
        for r, p in enumerate(pivots):
            v[p] = -R[r, f]
        basis.append(tuple(v))
    return basis


@dataclass(frozen=True)
class LinearSolution:
    """Outcome of ``A x = b``.

    ``particular`` is ``None`` when the system is inconsistent (then
    ``rank_augmented == rank + 1``).  ``kernel`` spans the homogeneous
    solutions, so the solution is unique iff it is empty.
    """

    particular: tuple | None
    kernel: list[tuple] = field(default_factory=list)
    rank: int = 0
    rank_augmented: int = 0

    @property
    def consistent(self) -> bool:
        return self.particular is not None

    @property
    def unique(self) -> bool:
        return self.consistent and not self.kernel


def solve_linear(A: Matrix, b) -> LinearSolution:
    if len(b) != A.nrows:
        raise ValueError(f"right-hand side has {len(b)} entries, expected {A.nrows}")
    aug = Matrix([list(r) + [bi] for r, bi in zip(A.rows, b)], A.ncols + 1)
    R, pivots = rref(aug)
    kernel = kernel_basis(A)
    rank_a = len([p for p in pivots if p < A.ncols])
    if A.ncols in pivots:
        return LinearSolution(None, kernel, rank_a, rank_a + 1)
    x = [Q(0)] * A.ncols
    for r, p in enumerate(pivots):
        x[p] = R[r, A.ncols]
    return LinearSolution(tuple(x), kernel, rank_a, rank_a)


def inverse(M: Matrix) -> Matrix:
    if not M.is_square():
        raise ValueError("inverse of a non-square matrix")
    n = M.nrows
    aug = Matrix([list(r) + [Q(1) if i == j else Q(0) for j in range(n)] for i, r in enumerate(M.rows)])
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return Matrix([r[n:] for r in R.rows], n)


def determinant(M: Matrix):
    """Bareiss fraction-free elimination.  Works over rationals and over
    polynomial entries (every division it performs is exact)."""
    if not M.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = M.nrows
    if n == 0:
        return Q(1)
    a = [list(r) for r in M.rows]
    sign = 1
    prev = Q(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return a[k][k] * 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = _exact_div(num, prev)
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return d if sign == 1 else -d


def _exact_div(num, den):
    if isinstance(den, Poly) and not den.is_constant():
        return poly_exact_div(num, den)
    if isinstance(den, Poly):
        den = den.constant_value()
    return num / den


def poly_exact_div(num, den: Poly) -> Poly:
    """Exact multivariate division; raises if ``den`` does not divide ``num``."""
    if not isinstance(num, Poly):
        num = Poly.const(num, den.nvars)
    if num.is_zero():
        return num
    # lex-leading terms
    lead = max(den.terms)
    lc = den.terms[lead]
    quotient = Poly(den.nvars)
    rem = num
    while not rem.is_zero():
        lt = max(rem.terms)
        diff = tuple(a - b for a, b in zip(lt, lead))
        if any(d < 0 for d in diff):
            raise ArithmeticError("polynomial division is not exact")
        q = Poly(den.nvars, {diff: rem.terms[lt] / lc})
        quotient = quotient + q
        rem = rem - q * den
    return quotient


def charpoly(M: Matrix) -> list:
    """Characteristic polynomial ``det(lambda I - M)`` by Faddeev-LeVerrier.

    Returns coefficients lowest degree first, so ``coeffs[k]`` multiplies
    ``lambda**k``; the list has ``n + 1`` entries and ends with 1.  The only
    divisions are by the integers ``1..n``, so polynomial entries are fine.
    """
    if not M.is_square():
        raise ValueError(f"characteristic polynomial of a non-square {M.shape} matrix")
    n = M.nrows
    coeffs = [None] * (n + 1)
    coeffs[n] = Q(1)
    if n == 0:
        return coeffs
    N = Matrix.zeros(n)
    ident = Matrix.identity(n)
    for k in range(1, n + 1):
        N = M @ N + ident * coeffs[n - k + 1]
        coeffs[n - k] = -(M @ N).trace() / k
    return coeffs


def charpoly_to_string(coeffs: list, var: str = "t", names=None) -> str:
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        cs = c.to_string(names) if isinstance(c, Poly) else fmt_q(c)
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if not mono:
            parts.append(f"({cs})" if isinstance(c, Poly) and len(c.terms) > 1 else cs)
        elif cs == "1":
            parts.append(mono)
        else:
            cs = f"({cs})" if isinstance(c, Poly) and len(c.terms) > 1 else cs
            parts.append(f"{cs}*{mono}")
    return " + ".join(parts) if parts else "0"
