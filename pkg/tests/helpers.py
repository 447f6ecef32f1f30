"""Independent reference implementations used only by the tests.

Nothing here calls the package's elimination, charpoly, HNF or enumeration
code; each routine is the slow textbook definition.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from nilgeo.exact import Matrix, Poly, Q


def rand_q(rng: random.Random, bound: int = 5):
    return Q(rng.randint(-bound, bound), rng.randint(1, bound))


def rand_vec(rng: random.Random, n: int, bound: int = 5) -> tuple:
    return tuple(rand_q(rng, bound) for _ in range(n))


def cofactor_det(rows):
    """Laplace expansion along the first row; entries may be Poly."""
    n = len(rows)
    if n == 0:
        return Q(1)
    if n == 1:
        return rows[0][0]
    total = Q(0)
    for j in range(n):
        a = rows[0][j]
        if a == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = a * cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def cofactor_charpoly(M: Matrix, nvars: int) -> list:
    """Coefficients of det(t I - M), low to high, with ``t`` an extra variable.

    Entries of ``M`` are rationals or Polys in ``nvars`` variables; the result
    is a list of Polys in the same ``nvars`` variables.
    """
    n = M.nrows
    total_vars = nvars + 1

    def lift(x):
        if isinstance(x, Poly):
            return Poly(total_vars, {e + (0,): c for e, c in x.terms.items()})
        return Poly.const(x, total_vars)

    t = Poly.var(nvars, total_vars)
    rows = [[(t if i == j else Poly.const(0, total_vars)) - lift(M[i, j]) for j in range(n)] for i in range(n)]
    det = cofactor_det(rows)
    if not isinstance(det, Poly):
        det = Poly.const(det, total_vars)
    coeffs = [dict() for _ in range(n + 1)]
    for e, c in det.terms.items():
        coeffs[e[-1]][e[:-1]] = c
    return [Poly(nvars, c) for c in coeffs]


def fraction_solve(rows, rhs):
    """Gaussian elimination over ``fractions.Fraction``; None if inconsistent."""
    n = len(rows[0]) if rows else 0
    A = [[Fraction(int(x.numerator), int(x.denominator)) for x in r] + [Fraction(int(b.numerator), int(b.denominator))]
         for r, b in zip(rows, rhs)]
    piv_cols, r = [], 0
    for c in range(n):
        p = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        A[r] = [x / A[r][c] for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        piv_cols.append(c)
        r += 1
    if any(all(x == 0 for x in row[:-1]) and row[-1] != 0 for row in A):
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(piv_cols):
        x[c] = A[i][-1]
    return x


def brute_membership(basis, v) -> bool:
    """Solve for coordinates in a full-rank basis and test integrality."""
    cols = list(zip(*basis))  # ambient x rank
    x = fraction_solve([list(r) for r in cols], list(v))
    if x is None:
        return False
    # verify the solution reproduces v (overdetermined case)
    for i, row in enumerate(cols):
        if sum(Fraction(int(a.numerator), int(a.denominator)) * xi for a, xi in zip(row, x)) != v[i]:
            return False
    return all(xi.denominator == 1 for xi in x)


def brute_spectrum(basis, bound, box: int) -> list:
    """Squared lengths of all coefficient vectors in ``[-box, box]^k`` within ``bound``."""
    counts: dict = {}
    k = len(basis)
    for coeffs in itertools.product(range(-box, box + 1), repeat=k):
        v = [sum((c * b[i] for c, b in zip(coeffs, basis)), Q(0)) for i in range(len(basis[0]))]
        s = sum((x * x for x in v), Q(0))
        if s <= bound:
            counts[s] = counts.get(s, 0) + 1
    return sorted(counts.items())


def direct_type_a_poly(A) -> Poly:
    """``<J(j_{X^z} X^v), X^v>`` with symbolic ``X``; the direct Type A test."""
    N = A.n + A.m
    xs = Poly.variables(N)
    xv, xz = xs[:A.n], xs[A.n:]
    J = Matrix.zeros(A.n)
    for P in A.j_maps:
        J = J + P @ P
    jx = A.j_apply(xz, xv)
    Jjx = J.vecmul(jx)
    total = Poly.const(0, N)
    for a, b in zip(Jjx, xv):
        total = total + a * b
    return total


ACCEPTANCE_LINES: list[str] = []


def gate(number: int, title: str, ok: bool, detail: str = "") -> None:
    """Record one acceptance line, then assert."""
    line = f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}  {title}" + (f"  [{detail}]" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line
