"""Closed-form left-invariant Riemannian geometry of a metric 2-step algebra.

All functions take an algebra and :class:`ElementVector` arguments and are
multilinear; coordinates may be rationals or polynomials.  The independent
Koszul-based versions live in :mod:`nilgeo.oracles`.
"""

from __future__ import annotations

from .algebra import ElementVector, MetricTwoStepAlgebra
from .exact import Matrix, Q
from .exact import vectors as V
from .exact._backend import EIGHTH, HALF, QUARTER


def _E(v, z) -> ElementVector:
    return ElementVector(tuple(v), tuple(z))


def nabla(A: MetricTwoStepAlgebra, X: ElementVector, Y: ElementVector) -> ElementVector:
    """Levi-Civita connection ``nabla_X Y`` on left-invariant fields."""
    v = V.add(A.j_apply(X.z, Y.v), A.j_apply(Y.z, X.v))
    return _E(V.scale(-HALF, v), V.scale(HALF, A.bracket_v(X.v, Y.v)))


def curvature(A: MetricTwoStepAlgebra, X: ElementVector, Y: ElementVector, Z: ElementVector) -> ElementVector:
    """``R(X, Y) Z`` via the 12-term 2-step expansion."""
    j, br = A.j_apply, A.bracket_v
    xv, yv, zv, xz, yz, zz = X.v, Y.v, Z.v, X.z, Y.z, Z.z
    v = V.scale(HALF, j(br(xv, yv), zv))
    quarter_v = V.add(
        V.sub(j(br(xv, zv), yv), j(br(yv, zv), xv)),
        V.add(
            V.sub(j(xz, j(zz, yv)), j(yz, j(zz, xv))),
            V.sub(j(xz, j(yz, zv)), j(yz, j(xz, zv))),
        ),
    )
    v = V.add(v, V.scale(QUARTER, quarter_v))
    z = V.add(
        V.sub(br(yv, j(xz, zv)), br(xv, j(yz, zv))),
        V.neg(V.add(br(j(zz, xv), yv), br(xv, j(zz, yv)))),
    )
    return _E(v, V.scale(QUARTER, z))


def jacobi_operator(A: MetricTwoStepAlgebra, Vec: ElementVector, X: ElementVector) -> ElementVector:
    """``R_V(X) = R(X, V) V`` from its own 7-term expansion."""
    j, br = A.j_apply, A.bracket_v
    vv, vz, xv, xz = Vec.v, Vec.z, X.v, X.z
    jvv = j(vz, vv)
    v = V.add(
        V.scale(Q(3, 4), j(br(xv, vv), vv)),
        V.add(
            V.scale(HALF, j(xz, jvv)),
            V.scale(-QUARTER, V.add(j(vz, j(xz, vv)), j(vz, j(vz, xv)))),
        ),
    )
    z = V.add(
        V.scale(-HALF, br(xv, jvv)),
        V.scale(QUARTER, V.sub(br(vv, j(xz, vv)), br(j(vz, xv), vv))),
    )
    return _E(v, z)


def endo_J(A: MetricTwoStepAlgebra) -> Matrix:
    """``J = sum_k j_{z_k}^2`` on ``v`` (symmetric, so row/column action agree)."""
    def build():
        J = Matrix.zeros(A.n)
        for P in A.j_maps:
            J = J + P @ P
        return J
    return A.memo("endo_J", build)


def endo_B(A: MetricTwoStepAlgebra) -> Matrix:
    """``B`` on ``z`` with ``<B z_a, z_b> = sum_i <j_{z_a} v_i, j_{z_b} v_i>``."""
    def build():
        mats = A.j_maps
        return Matrix(
            [[sum((x * y for x, y in zip(Pa.flatten(), Pb.flatten())), Q(0)) for Pb in mats]
             for Pa in mats],
            A.m,
        )
    return A.memo("endo_B", build)


def ricci_operator(A: MetricTwoStepAlgebra, X: ElementVector) -> ElementVector:
    """``rho(X) = J(X^v)/2 + B(X^z)/4``."""
    return _E(V.scale(HALF, endo_J(A).vecmul(X.v)), V.scale(QUARTER, endo_B(A).vecmul(X.z)))


def ricci_tensor(A: MetricTwoStepAlgebra, X: ElementVector, Y: ElementVector):
    return (HALF * V.dot(endo_J(A).vecmul(X.v), Y.v)
            + QUARTER * V.dot(endo_B(A).vecmul(X.z), Y.z))


def nabla_ric(A: MetricTwoStepAlgebra, X: ElementVector, Y: ElementVector, Z: ElementVector):
    """``(nabla_X ric)(Y, Z)`` by the six-term closed form."""
    J, B = endo_J(A), endo_B(A)
    j, br = A.j_apply, A.bracket_v
    JY, JZ = J.vecmul(Y.v), J.vecmul(Z.v)
    quarter = (V.dot(j(X.z, Y.v), JZ) + V.dot(j(X.z, Z.v), JY)
               + V.dot(j(Y.z, X.v), JZ) + V.dot(j(Z.z, X.v), JY))
    eighth = V.dot(br(X.v, Z.v), B.vecmul(Y.z)) + V.dot(br(X.v, Y.v), B.vecmul(Z.z))
    return QUARTER * quarter - EIGHTH * eighth


def scalar_curvature(A: MetricTwoStepAlgebra):
    return sum(
        (ricci_tensor(A, A.basis_element(i), A.basis_element(i)) for i in range(A.dim)), Q(0)
    )
