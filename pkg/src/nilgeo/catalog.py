"""Named algebras: Heisenberg family, the quaternionic H-type algebra, the
isospectral pair n(j) / n(j') on R^6 + R^3, and seeded random algebras."""

from __future__ import annotations

import random
import re
from typing import Callable

from .algebra import MetricTwoStepAlgebra, from_j_maps
from .exact import Matrix, Poly, Q

PAPER_V_LABELS = ("X_i", "X_j", "X_k", "Y_i", "Y_j", "Y_k")
PAPER_Z_LABELS = ("Z_i", "Z_j", "Z_k")


def _split_linear(symbolic: list[list], m: int) -> list[Matrix]:
    """Coefficient matrices of a matrix whose entries are linear forms in c_1..c_m."""
    mats = []
    for k in range(m):
        exp = tuple(1 if i == k else 0 for i in range(m))
        rows = []
        for row in symbolic:
            out = []
            for entry in row:
                if isinstance(entry, Poly):
                    if entry.total_degree() > 1 or (0,) * m in entry.terms:
                        raise ValueError("entries must be linear forms")
                    out.append(entry.terms.get(exp, Q(0)))
                else:
                    if entry != 0:
                        raise ValueError("entries must be linear forms")
                    out.append(Q(0))
            rows.append(out)
        mats.append(Matrix(rows))
    return mats


def paper_nj_symbolic() -> Matrix:
    """``j_C`` of n(j) with symbolic ``C = (c1, c2, c3)``, left quaternion action on both blocks."""
    c1, c2, c3 = Poly.variables(3)
    return Matrix([
        [0, c3, -c2, 0, 0, 0],
        [-c3, 0, c1, 0, 0, 0],
        [c2, -c1, 0, 0, 0, 0],
        [0, 0, 0, 0, c3, -c2],
        [0, 0, 0, -c3, 0, c1],
        [0, 0, 0, c2, -c1, 0],
    ])


def paper_njprime_symbolic() -> Matrix:
    """``j'_C`` of n(j'): right quaternion action with the two blocks swapped."""
    c1, c2, c3 = Poly.variables(3)
    return Matrix([
        [0, 0, 0, 0, -c3, c2],
        [0, 0, 0, c3, 0, -c1],
        [0, 0, 0, -c2, c1, 0],
        [0, -c3, c2, 0, 0, 0],
        [c3, 0, -c1, 0, 0, 0],
        [-c2, c1, 0, 0, 0, 0],
    ])


def paper_nj() -> MetricTwoStepAlgebra:
    return from_j_maps(
        6, 3, _split_linear(paper_nj_symbolic().rows, 3), "paper-nj",
        v_labels=PAPER_V_LABELS, z_labels=PAPER_Z_LABELS,
    )


def paper_njprime() -> MetricTwoStepAlgebra:
    return from_j_maps(
        6, 3, _split_linear(paper_njprime_symbolic().rows, 3), "paper-njprime",
        v_labels=PAPER_V_LABELS, z_labels=PAPER_Z_LABELS,
    )


def heisenberg(k: int = 1) -> MetricTwoStepAlgebra:
    """The (2k+1)-dimensional Heisenberg algebra, ``j = rot + ... + rot``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    n = 2 * k
    rows = [[Q(0)] * n for _ in range(n)]
    for i in range(k):
        rows[2 * i][2 * i + 1] = Q(1)
        rows[2 * i + 1][2 * i] = Q(-1)
    return from_j_maps(n, 1, [Matrix(rows)], f"heisenberg-{k}")


# quaternion units 1, i, j, k as indices 0..3: _QMUL[a][b] = (sign, index) of e_a e_b
_QMUL = [
    [(1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2)],
    [(1, 2), (-1, 3), (-1, 0), (1, 1)],
    [(1, 3), (1, 2), (-1, 1), (-1, 0)],
]


def quaternionic_heisenberg() -> MetricTwoStepAlgebra:
    """H-type algebra on ``H + Im H`` with ``j_Z x = Z x`` (left multiplication)."""
    mats = []
    for unit in (1, 2, 3):
        rows = [[Q(0)] * 4 for _ in range(4)]
        for a in range(4):
            sign, b = _QMUL[unit][a]
            rows[a][b] = Q(sign)  # <Z e_a, e_b>
        mats.append(Matrix(rows))
    return from_j_maps(4, 3, mats, "quaternionic-heisenberg",
                       v_labels=("1", "i", "j", "k"), z_labels=("i", "j", "k"))


def abelian(n: int, m: int) -> MetricTwoStepAlgebra:
    return from_j_maps(n, m, [Matrix.zeros(n) for _ in range(m)], f"abelian-{n}-{m}")


def type_a_counterexample() -> MetricTwoStepAlgebra:
    """n=4, m=2 with ``j_1 = rot(1,2) + 2 rot(3,4)`` and ``j_2 = rot(1,3)``.

    Here ``J = diag(-2, -1, -5, -4)`` and ``J o j_2`` is not skew.
    """
    j1 = [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 2], [0, 0, -2, 0]]
    j2 = [[0, 0, 1, 0], [0, 0, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 0]]
    return from_j_maps(4, 2, [Matrix(j1), Matrix(j2)], "type-a-counterexample")


def random_algebra(seed: int, n: int, m: int, coeff_bound: int = 3) -> MetricTwoStepAlgebra:
    """Deterministic random algebra.

    Each raw entry is ``p/q`` with ``|p| <= coeff_bound`` and
    ``1 <= q <= coeff_bound``; the j-matrix is ``(M - M^T) / 2``.
    """
    if coeff_bound < 1:
        raise ValueError("coeff_bound must be positive")
    rng = random.Random(f"nilgeo-random-{seed}-{n}-{m}-{coeff_bound}")
    mats = []
    for _ in range(m):
        raw = [[Q(rng.randint(-coeff_bound, coeff_bound), rng.randint(1, coeff_bound))
                for _ in range(n)] for _ in range(n)]
        M = Matrix(raw)
        mats.append((M - M.T) * Q(1, 2))
    return from_j_maps(n, m, mats, f"random-{seed}-{n}-{m}")


_FIXED: dict[str, Callable[[], MetricTwoStepAlgebra]] = {
    "paper-nj": paper_nj,
    "paper-njprime": paper_njprime,
    "h3": lambda: heisenberg(1),
    "quaternionic-heisenberg": quaternionic_heisenberg,
    "type-a-counterexample": type_a_counterexample,
}

_PATTERNS: list[tuple[re.Pattern, Callable]] = [
    (re.compile(r"^heisenberg-(\d+)$"), lambda k: heisenberg(int(k))),
    (re.compile(r"^abelian-(\d+)-(\d+)$"), lambda n, m: abelian(int(n), int(m))),
    (re.compile(r"^random-(\d+)-(\d+)-(\d+)(?:-(\d+))?$"),
     lambda s, n, m, b=None: random_algebra(int(s), int(n), int(m), int(b) if b else 3)),
]


def catalog_names() -> list[str]:
    return sorted(_FIXED) + ["heisenberg-<k>", "abelian-<n>-<m>", "random-<seed>-<n>-<m>[-<bound>]"]


def get(name: str) -> MetricTwoStepAlgebra:
    """Look up a catalog algebra by name (see :func:`catalog_names`)."""
    if name in _FIXED:
        return _FIXED[name]()
    for pattern, factory in _PATTERNS:
        match = pattern.match(name)
        if match:
            return factory(*[g for g in match.groups() if g is not None])
    raise KeyError(f"unknown catalog algebra {name!r}; known: {', '.join(catalog_names())}")


def catalog() -> dict[str, MetricTwoStepAlgebra]:
    """The fixed named algebras plus a few small parametrised members."""
    out = {name: factory() for name, factory in _FIXED.items()}
    out["heisenberg-2"] = heisenberg(2)
    out["abelian-3-2"] = abelian(3, 2)
    return out
