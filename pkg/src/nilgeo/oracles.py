"""Definition-level geometry computed from structure constants alone.

Nothing here calls the closed forms in :mod:`nilgeo.geometry` or the
algebra's ``j_apply``/``bracket_v``.  The connection comes from the Koszul
formula for left-invariant fields, curvature from
``R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y]``, Ricci from the trace of the
Jacobi operator over an orthonormal basis, and ``nabla ric`` from the
derivation rule for a left-invariant tensor.
"""

from __future__ import annotations

from .algebra import ElementVector, MetricTwoStepAlgebra
from .exact import Matrix, Poly, Q
from .exact._backend import HALF


class KoszulOracle:
    def __init__(self, A: MetricTwoStepAlgebra):
        self.n, self.m = A.n, A.m
        N = self.N = A.n + A.m
        # c[a][b][c] = <[e_a, e_b], e_c> on the full algebra
        c = [[[Q(0)] * N for _ in range(N)] for _ in range(N)]
        table = A.structure_constants()
        for a in range(A.n):
            for b in range(A.n):
                for k, val in enumerate(table[a][b]):
                    c[a][b][A.n + k] = val
        self._c = c
        self._bracket = [[self._sparse(c[a][b]) for b in range(N)] for a in range(N)]
        self._gamma = [
            [
                self._sparse([HALF * (c[a][b][t] - c[b][t][a] + c[t][a][b]) for t in range(N)])
                for b in range(N)
            ]
            for a in range(N)
        ]

    @staticmethod
    def _sparse(values):
        return tuple((i, x) for i, x in enumerate(values) if x != 0)

    def _bilinear(self, table, x, y) -> list:
        out = [Q(0)] * self.N
        for a, xa in enumerate(x):
            if xa == 0:
                continue
            row = table[a]
            for b, yb in enumerate(y):
                if yb == 0:
                    continue
                entries = row[b]
                if not entries:
                    continue
                w = xa * yb
                for t, g in entries:
                    out[t] = out[t] + w * g
        return out

    def _wrap(self, coords) -> ElementVector:
        return ElementVector(tuple(coords[: self.n]), tuple(coords[self.n:]))

    # -- primitives on coordinates ----------------------------------------
    def _nabla(self, x, y):
        return self._bilinear(self._gamma, x, y)

    def _brk(self, x, y):
        return self._bilinear(self._bracket, x, y)

    def _curv(self, x, y, z):
        a = self._nabla(x, self._nabla(y, z))
        b = self._nabla(y, self._nabla(x, z))
        c = self._nabla(self._brk(x, y), z)
        return [p - q - r for p, q, r in zip(a, b, c)]

    def _rho(self, x):
        total = [Q(0)] * self.N
        for i in range(self.N):
            e = [Q(1) if k == i else Q(0) for k in range(self.N)]
            r = self._curv(x, e, e)
            total = [s + t for s, t in zip(total, r)]
        return total

    def _ric(self, x, y):
        return _dot(self._rho(x), y)

    # -- public API on ElementVector --------------------------------------
    def bracket(self, X: ElementVector, Y: ElementVector) -> ElementVector:
        return self._wrap(self._brk(X.coords, Y.coords))

    def nabla(self, X: ElementVector, Y: ElementVector) -> ElementVector:
        return self._wrap(self._nabla(X.coords, Y.coords))

    def curvature(self, X, Y, Z) -> ElementVector:
        return self._wrap(self._curv(X.coords, Y.coords, Z.coords))

    def jacobi_operator(self, Vec, X) -> ElementVector:
        return self.curvature(X, Vec, Vec)

    def ricci_operator(self, X) -> ElementVector:
        return self._wrap(self._rho(X.coords))

    def ricci_tensor(self, X, Y):
        return self._ric(X.coords, Y.coords)

    def nabla_ric(self, X, Y, Z):
        x, y, z = X.coords, Y.coords, Z.coords
        return -self._ric(self._nabla(x, y), z) - self._ric(y, self._nabla(x, z))

    def koszul_residual(self, X, Y, W):
        """``2<nabla_X Y, W> - (<[X,Y],W> - <[Y,W],X> + <[W,X],Y>)``; zero for a valid connection."""
        x, y, w = X.coords, Y.coords, W.coords
        lhs = 2 * _dot(self._nabla(x, y), w)
        rhs = _dot(self._brk(x, y), w) - _dot(self._brk(y, w), x) + _dot(self._brk(w, x), y)
        return lhs - rhs

    def j_operator(self, Z) -> Matrix:
        """Matrix ``P`` of ``j_Z`` from the duality ``<j_Z x, y> = <[x, y], Z>``."""
        zc = [Q(0)] * self.n + list(Z)
        return Matrix(
            [[_dot(self._c[a][b], zc) for b in range(self.n)] for a in range(self.n)], self.n
        )

    def endo_J(self) -> Matrix:
        """``J`` by composing duality-defined ``j`` operators: ``sum_k j_k(j_k(v_a))``."""
        rows = []
        for a in range(self.n):
            acc = [Q(0)] * self.n
            for k in range(self.m):
                P = self.j_operator([Q(1) if t == k else Q(0) for t in range(self.m)])
                once = P.row(a)
                twice = P.vecmul(once)
                acc = [s + t for s, t in zip(acc, twice)]
            rows.append(acc)
        return Matrix(rows, self.n)

    def endo_B(self) -> Matrix:
        """``B(z_a) = sum_i [v_i, j_{z_a} v_i]`` with brackets from the structure constants."""
        rows = []
        for a in range(self.m):
            P = self.j_operator([Q(1) if t == a else Q(0) for t in range(self.m)])
            acc = [Q(0)] * self.N
            for i in range(self.n):
                e = [Q(1) if k == i else Q(0) for k in range(self.N)]
                jv = list(P.row(i)) + [Q(0)] * self.m
                acc = [s + t for s, t in zip(acc, self._brk(e, jv))]
            rows.append(acc[self.n:])
        return Matrix(rows, self.m)


def type_a_polynomial(A: MetricTwoStepAlgebra) -> Poly:
    """``(nabla_X ric)(X, X)`` for a fully symbolic ``X`` in ``n + m`` variables.

    The algebra is of Type A exactly when this polynomial vanishes.
    """
    N = A.dim
    X = ElementVector.from_coords(Poly.variables(N), A.n)
    value = KoszulOracle(A).nabla_ric(X, X, X)
    return value if isinstance(value, Poly) else Poly.const(value, N)


def _dot(u, v):
    total = Q(0)
    for a, b in zip(u, v):
        if a != 0 and b != 0:
            total = total + a * b
    return total
