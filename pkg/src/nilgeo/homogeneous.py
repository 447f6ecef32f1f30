"""Ambrose-Singer verification of candidate homogeneous structures.

A structure tensor is stored by components: ``T[a][b]`` is the coordinate
vector of ``T_{e_a} e_b`` in the orthonormal basis ``v_1..v_n, z_1..z_m``.
Everything is checked on basis tuples, which suffices by multilinearity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import geometry as G
from .algebra import ElementVector, MetricTwoStepAlgebra
from .exact import Q, fmt_q
from .exact import vectors as V
from .exact._backend import HALF

EQUATIONS = ("AS1", "AS2", "AS3", "NR4", "contraction")


def central_bracket_apply(table: Sequence[Sequence[Sequence]], x: Sequence, y: Sequence) -> tuple:
    """Bilinear extension of a basis table ``table[a][b]`` (a vector in ``z``)."""
    m = len(table)
    acc = [Q(0)] * m
    for a, xa in enumerate(x):
        if xa == 0:
            continue
        for b, yb in enumerate(y):
            if yb == 0:
                continue
            w = xa * yb
            for c, t in enumerate(table[a][b]):
                if t != 0:
                    acc[c] = acc[c] + w * t
    return tuple(acc)


def nr_tensor_apply(A: MetricTwoStepAlgebra, central, X: ElementVector, Y: ElementVector) -> ElementVector:
    """``T_X Y = -j_{Y^z} X^v/2 + j_{X^z} Y^v/2 + [X^v, Y^v]/2 + T~(X^z, Y^z)``."""
    v = V.scale(HALF, V.sub(A.j_apply(X.z, Y.v), A.j_apply(Y.z, X.v)))
    z = V.add(V.scale(HALF, A.bracket_v(X.v, Y.v)), central_bracket_apply(central, X.z, Y.z))
    return ElementVector(v, z)


def nr_tensor_table(A: MetricTwoStepAlgebra, central) -> list[list[tuple]]:
    E = [A.basis_element(i) for i in range(A.dim)]
    return [[nr_tensor_apply(A, central, X, Y).coords for Y in E] for X in E]


def zero_tensor_table(A: MetricTwoStepAlgebra) -> list[list[tuple]]:
    z = V.zero(A.dim)
    return [[z] * A.dim for _ in range(A.dim)]


@dataclass
class EquationCheck:
    name: str
    passed: bool = True
    checked: int = 0
    first_failure: dict | None = None

    def fail(self, indices, lhs, rhs, labels):
        self.passed = False
        if self.first_failure is None:
            self.first_failure = {
                "indices": list(indices),
                "basis": [labels[i] for i in indices],
                "lhs": _fmt(lhs),
                "rhs": _fmt(rhs),
            }


@dataclass
class HomogeneityReport:
    checks: dict[str, EquationCheck] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def first_failing(self) -> EquationCheck | None:
        return next((c for c in self.checks.values() if not c.passed), None)

    def flags(self) -> dict[str, bool]:
        return {name: c.passed for name, c in self.checks.items()}

    def to_dict(self) -> dict:
        return {
            name: {"passed": c.passed, "checked": c.checked, "first_failure": c.first_failure}
            for name, c in self.checks.items()
        }


def _fmt(x):
    if isinstance(x, (tuple, list)):
        return [fmt_q(a) for a in x]
    return fmt_q(x)


class _Tables:
    """Component tables of the closed-form connection, curvature and Ricci tensor."""

    def __init__(self, A: MetricTwoStepAlgebra):
        def build():
            N = A.dim
            E = [A.basis_element(i) for i in range(N)]
            conn = [[G.nabla(A, X, Y).coords for Y in E] for X in E]
            curv = [[[G.curvature(A, X, Y, Z).coords for Z in E] for Y in E] for X in E]
            ric = [[G.ricci_tensor(A, X, Y) for Y in E] for X in E]
            nric = [[[G.nabla_ric(A, X, Y, Z) for Z in E] for Y in E] for X in E]
            return conn, curv, ric, nric
        self.conn, self.curv, self.ric, self.nric = A.memo("homogeneous_tables", build)
        self.N = A.dim


def _sparse(vec):
    return [(i, x) for i, x in enumerate(vec) if x != 0]


def _addmul(acc: list, c, vec):
    for i, x in enumerate(vec):
        if x != 0:
            acc[i] = acc[i] + c * x


def _left(table, a: int, w) -> list:
    """``L_{e_a}(w) = sum_c w_c table[a][c]``."""
    acc = [Q(0)] * len(w)
    row = table[a]
    for c, wc in enumerate(w):
        if wc != 0:
            _addmul(acc, wc, row[c])
    return acc


def _derivation_terms(op, curv, v: int, x: int, y: int, z: int, N: int) -> list:
    """``op_v(R(x,y)z) - R(op_v x, y)z - R(x, op_v y)z - R(x, y)(op_v z)``."""
    out = _left(op, v, curv[x][y][z])
    for a, c in _sparse(op[v][x]):
        _addmul(out, -c, curv[a][y][z])
    for a, c in _sparse(op[v][y]):
        _addmul(out, -c, curv[x][a][z])
    for a, c in _sparse(op[v][z]):
        _addmul(out, -c, curv[x][y][a])
    return out


def verify_homogeneous_structure(
    A: MetricTwoStepAlgebra,
    tensor: Sequence[Sequence[Sequence]] | None = None,
    central_bracket: Sequence[Sequence[Sequence]] | None = None,
) -> HomogeneityReport:
    """Check the Ambrose-Singer equations, the natural-reductivity condition and
    the Ricci contraction for a structure tensor on all basis tuples.

    Pass either a full component table ``tensor`` or a ``central_bracket``
    (``m x m`` table of ``z``-vectors), in which case the tensor is assembled in
    the 2-step naturally reductive shape.
    """
    if tensor is None:
        if central_bracket is None:
            raise ValueError("give a tensor table or a central bracket table")
        tensor = nr_tensor_table(A, central_bracket)
    T = [[list(vec) for vec in row] for row in tensor]
    tabs = _Tables(A)
    N, labels = tabs.N, A.labels
    conn, curv, ric, nric = tabs.conn, tabs.curv, tabs.ric, tabs.nric
    checks = {name: EquationCheck(name) for name in EQUATIONS}

    # (nabla_V R)(X,Y)Z = T_V(R(X,Y)Z) - R(T_V X,Y)Z - R(X,T_V Y)Z - R(X,Y)T_V Z
    c1 = checks["AS1"]
    for v in range(N):
        for x in range(N):
            for y in range(N):
                for z in range(N):
                    c1.checked += 1
                    lhs = _derivation_terms(conn, curv, v, x, y, z, N)
                    rhs = _derivation_terms(T, curv, v, x, y, z, N)
                    if lhs != rhs:
                        c1.fail((v, x, y, z), lhs, rhs, labels)

    # (nabla_X T)_Y Z = [T_X, T_Y] Z - T_{T_X Y} Z
    c2 = checks["AS2"]
    for x in range(N):
        for y in range(N):
            txy = T[x][y]
            for z in range(N):
                c2.checked += 1
                lhs = _left(conn, x, T[y][z])
                _addmul_neg_left_vec(lhs, T, conn[x][y], z)
                for c, w in _sparse(conn[x][z]):
                    _addmul(lhs, -w, T[y][c])
                rhs = _left(T, x, T[y][z])
                for c, w in enumerate(_left(T, y, T[x][z])):
                    if w != 0:
                        rhs[c] = rhs[c] - w
                _addmul_neg_left_vec(rhs, T, txy, z)
                if lhs != rhs:
                    c2.fail((x, y, z), lhs, rhs, labels)

    c3, c4, c5 = checks["AS3"], checks["NR4"], checks["contraction"]
    for x in range(N):
        for y in range(N):
            for z in range(N):
                c3.checked += 1
                s = T[x][y][z] + T[x][z][y]
                if s != 0:
                    c3.fail((x, y, z), T[x][y][z], -T[x][z][y], labels)
                c4.checked += 1
                s = T[x][y][z] + T[y][x][z]
                if s != 0:
                    c4.fail((x, y, z), T[x][y][z], -T[y][x][z], labels)
                c5.checked += 1
                rhs = -V.dot(T[x][y], [ric[a][z] for a in range(N)]) - V.dot(
                    [ric[y][a] for a in range(N)], T[x][z]
                )
                if nric[x][y][z] != rhs:
                    c5.fail((x, y, z), nric[x][y][z], rhs, labels)
    return HomogeneityReport(checks)


def _addmul_neg_left_vec(acc: list, T, u, z: int):
    """``acc -= T_u e_z`` for a vector ``u``."""
    for a, ua in enumerate(u):
        if ua != 0:
            _addmul(acc, -ua, T[a][z])
