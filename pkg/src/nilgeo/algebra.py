"""Metric 2-step nilpotent Lie algebras ``n = v + z`` given by their j-maps.

Convention
----------
``j_maps[k]`` is the matrix ``P_k`` with ``P_k[a][b] = <[v_a, v_b], z_k>``.
The endomorphism ``j_Z`` of ``v`` is then the one satisfying
``<j_Z x, y> = <[x, y], Z>``, which in coordinates is the *row* action
``j_Z x = x P_Z`` with ``P_Z = sum_k Z_k P_k``.  Composition of operators
reverses matrix order: the operator ``j_X o j_Y`` has matrix ``P_Y P_X``.
Every formula in this package goes through :meth:`MetricTwoStepAlgebra.j_apply`
and :meth:`MetricTwoStepAlgebra.bracket_v`, so the convention lives here only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .exact import Matrix, Poly, Q, fmt_q, to_q
from .exact import vectors as V


class AlgebraError(ValueError):
    """Invalid algebra data."""


class NonSkewError(AlgebraError):
    def __init__(self, index: int, entry: tuple[int, int], values=None):
        self.index = index
        self.entry = entry
        a, b = entry
        detail = ""
        if values is not None:
            detail = f" ({fmt_q(values[0])} vs {fmt_q(values[1])})"
        super().__init__(f"NonSkew: j[{index}] entry ({a},{b}) is not minus entry ({b},{a}){detail}")


class DimensionError(AlgebraError):
    pass


class AntisymmetryError(AlgebraError):
    pass


def _coerce(x):
    return x if isinstance(x, Poly) else to_q(x)


@dataclass(frozen=True)
class ElementVector:
    """An element ``X = X^v + X^z`` of ``n``, stored as its two coordinate blocks."""

    v: tuple
    z: tuple

    @classmethod
    def make(cls, v: Iterable = (), z: Iterable = ()) -> "ElementVector":
        return cls(tuple(_coerce(x) for x in v), tuple(_coerce(x) for x in z))

    @classmethod
    def from_coords(cls, coords: Sequence, n: int) -> "ElementVector":
        coords = tuple(_coerce(x) for x in coords)
        return cls(coords[:n], coords[n:])

    @classmethod
    def zero(cls, n: int, m: int) -> "ElementVector":
        return cls(V.zero(n), V.zero(m))

    @classmethod
    def basis(cls, n: int, m: int, index: int) -> "ElementVector":
        """``index`` in ``0..n+m-1``; the first ``n`` are ``v``-basis vectors."""
        coords = V.unit(n + m, index)
        return cls(coords[:n], coords[n:])

    @property
    def coords(self) -> tuple:
        return self.v + self.z

    def __add__(self, other: "ElementVector") -> "ElementVector":
        return ElementVector(V.add(self.v, other.v), V.add(self.z, other.z))

    def __sub__(self, other: "ElementVector") -> "ElementVector":
        return ElementVector(V.sub(self.v, other.v), V.sub(self.z, other.z))

    def __neg__(self) -> "ElementVector":
        return ElementVector(V.neg(self.v), V.neg(self.z))

    def __rmul__(self, c) -> "ElementVector":
        return ElementVector(V.scale(c, self.v), V.scale(c, self.z))

    def dot(self, other: "ElementVector"):
        return V.dot(self.v, other.v) + V.dot(self.z, other.z)

    def norm2(self):
        return self.dot(self)

    def is_zero(self) -> bool:
        return V.is_zero(self.v) and V.is_zero(self.z)

    def v_part(self) -> "ElementVector":
        return ElementVector(self.v, V.scale(0, self.z))

    def z_part(self) -> "ElementVector":
        return ElementVector(V.scale(0, self.v), self.z)


class MetricTwoStepAlgebra:
    """``n = v + z`` with orthonormal standard bases and a linear map ``j: z -> so(v)``."""

    def __init__(
        self,
        dim_v: int,
        dim_z: int,
        j_maps: Sequence,
        name: str | None = None,
        v_labels: Sequence[str] | None = None,
        z_labels: Sequence[str] | None = None,
    ):
        if dim_v < 0 or dim_z < 0:
            raise DimensionError("dimensions must be non-negative")
        if len(j_maps) != dim_z:
            raise DimensionError(f"expected {dim_z} j-matrices, got {len(j_maps)}")
        mats = []
        for k, P in enumerate(j_maps):
            P = P if isinstance(P, Matrix) else Matrix(P, dim_v if not P else None)
            if P.shape != (dim_v, dim_v):
                raise DimensionError(f"j[{k}] has shape {P.shape}, expected ({dim_v}, {dim_v})")
            bad = P.first_nonskew_entry()
            if bad is not None:
                a, b = bad
                raise NonSkewError(k, bad, (P[a, b], P[b, a]))
            mats.append(P)
        self.n = dim_v
        self.m = dim_z
        self.j_maps: tuple[Matrix, ...] = tuple(mats)
        self.name = name
        self.v_labels = tuple(v_labels) if v_labels else tuple(f"v{i + 1}" for i in range(dim_v))
        self.z_labels = tuple(z_labels) if z_labels else tuple(f"z{k + 1}" for k in range(dim_z))
        # sparse rows: _sparse[k][a] = ((b, P_k[a][b]), ...) over nonzero entries
        self._sparse = tuple(
            tuple(tuple((b, x) for b, x in enumerate(row) if x != 0) for row in P.rows)
            for P in mats
        )
        self._memo: dict = {}

    # -- basic data -------------------------------------------------------
    @property
    def dim_v(self) -> int:
        return self.n

    @property
    def dim_z(self) -> int:
        return self.m

    @property
    def dim(self) -> int:
        return self.n + self.m

    @property
    def labels(self) -> tuple[str, ...]:
        return self.v_labels + self.z_labels

    def memo(self, key, factory):
        """Per-instance cache for derived data (the algebra itself is immutable)."""
        if key not in self._memo:
            self._memo[key] = factory()
        return self._memo[key]

    def __eq__(self, other):
        if not isinstance(other, MetricTwoStepAlgebra):
            return NotImplemented
        return (self.n, self.m, self.j_maps) == (other.n, other.m, other.j_maps)

    def __hash__(self):
        return hash((self.n, self.m, self.j_maps))

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<MetricTwoStepAlgebra{label} n={self.n} m={self.m}>"

    # -- j and bracket ----------------------------------------------------
    def j_of(self, Z: Sequence) -> Matrix:
        """Matrix ``sum_k Z_k j_maps[k]``; coordinates may be polynomials."""
        if len(Z) != self.m:
            raise DimensionError(f"central vector has {len(Z)} coordinates, expected {self.m}")
        n = self.n
        acc = [[Q(0)] * n for _ in range(n)]
        for zk, sp in zip(Z, self._sparse):
            if zk == 0:
                continue
            for a, row in enumerate(sp):
                for b, x in row:
                    acc[a][b] = acc[a][b] + zk * x
        return Matrix(acc, n)

    def j_apply(self, Z: Sequence, x: Sequence) -> tuple:
        """``j_Z x`` for ``Z`` in ``z`` and ``x`` in ``v`` (row action, see module docs)."""
        acc = [Q(0)] * self.n
        for zk, sp in zip(Z, self._sparse):
            if zk == 0:
                continue
            for a, xa in enumerate(x):
                if xa == 0:
                    continue
                c = zk * xa
                for b, p in sp[a]:
                    acc[b] = acc[b] + c * p
        return tuple(acc)

    def bracket_v(self, x: Sequence, y: Sequence) -> tuple:
        """``[x, y]`` for ``x, y`` in ``v``, as a vector in ``z``."""
        out = []
        nz_y = [(b, yb) for b, yb in enumerate(y) if yb != 0]
        ydict = dict(nz_y)
        for sp in self._sparse:
            total = Q(0)
            for a, xa in enumerate(x):
                if xa == 0:
                    continue
                s = Q(0)
                for b, p in sp[a]:
                    yb = ydict.get(b)
                    if yb is not None:
                        s = s + p * yb
                if s != 0:
                    total = total + xa * s
            out.append(total)
        return tuple(out)

    def bracket(self, X: ElementVector, Y: ElementVector) -> ElementVector:
        return ElementVector(V.zero(self.n), self.bracket_v(X.v, Y.v))

    def basis_element(self, index: int) -> ElementVector:
        return ElementVector.basis(self.n, self.m, index)

    def element(self, v: Iterable = (), z: Iterable = ()) -> ElementVector:
        v = tuple(v) or (0,) * self.n
        z = tuple(z) or (0,) * self.m
        if len(v) != self.n or len(z) != self.m:
            raise DimensionError("element coordinates do not match the algebra dimensions")
        return ElementVector.make(v, z)

    def structure_constants(self) -> list[list[tuple]]:
        """``table[a][b]`` is ``[v_a, v_b]`` as a vector in ``z``."""
        def build():
            return [
                [tuple(P[a, b] for P in self.j_maps) for b in range(self.n)] for a in range(self.n)
            ]
        return self.memo("structure_constants", build)

    def nonzero_brackets(self) -> list[tuple[int, int, tuple]]:
        """``(a, b, [v_a, v_b])`` for ``a < b`` with a nonzero bracket."""
        table = self.structure_constants()
        return [
            (a, b, table[a][b])
            for a in range(self.n)
            for b in range(a + 1, self.n)
            if not V.is_zero(table[a][b])
        ]

    def j_squared(self, Z: Sequence) -> Matrix:
        """Matrix of the operator ``j_Z o j_Z``."""
        P = self.j_of(Z)
        return P @ P

    def j_commutator(self, X: Sequence, Y: Sequence) -> Matrix:
        """Matrix of the operator ``j_X j_Y - j_Y j_X``.

        Under the row action this is ``P_Y P_X - P_X P_Y``, i.e. minus the
        plain matrix commutator of the stored matrices.
        """
        PX, PY = self.j_of(X), self.j_of(Y)
        return PY @ PX - PX @ PY

    def scaled(self, factor) -> "MetricTwoStepAlgebra":
        f = to_q(factor)
        return MetricTwoStepAlgebra(
            self.n, self.m, [P * f for P in self.j_maps], None, self.v_labels, self.z_labels
        )


def from_j_maps(n: int, m: int, j_maps: Sequence, name: str | None = None, **labels) -> MetricTwoStepAlgebra:
    return MetricTwoStepAlgebra(n, m, j_maps, name, **labels)


def from_structure_constants(
    n: int, m: int, table: Mapping[tuple[int, int], Sequence] | Iterable, name: str | None = None, **labels
) -> MetricTwoStepAlgebra:
    """Build the algebra from brackets ``[v_a, v_b] = z-vector``.

    ``table`` maps ``(a, b)`` to a length-``m`` vector, or is an iterable of
    ``(a, b, vector)`` triples.  Entries given for both ``(a, b)`` and
    ``(b, a)`` must be negatives of each other; ``(a, a)`` must be zero.
    """
    items = table.items() if isinstance(table, Mapping) else (((a, b), z) for a, b, z in table)
    given: dict[tuple[int, int], tuple] = {}
    for (a, b), z in items:
        if not (0 <= a < n and 0 <= b < n):
            raise DimensionError(f"bracket index ({a},{b}) out of range for dim_v={n}")
        z = tuple(to_q(x) for x in z)
        if len(z) != m:
            raise DimensionError(f"bracket [{a},{b}] has {len(z)} coordinates, expected {m}")
        if a == b and not V.is_zero(z):
            raise AntisymmetryError(f"[v{a},v{a}] must vanish")
        if (a, b) in given and given[(a, b)] != z:
            raise AntisymmetryError(f"bracket ({a},{b}) given twice with different values")
        if (b, a) in given and given[(b, a)] != V.neg(z):
            raise AntisymmetryError(f"brackets ({a},{b}) and ({b},{a}) are not antisymmetric")
        given[(a, b)] = z
    mats = []
    for k in range(m):
        rows = [[Q(0)] * n for _ in range(n)]
        for (a, b), z in given.items():
            rows[a][b] = z[k]
            rows[b][a] = -z[k]
        mats.append(Matrix(rows, n))
    return MetricTwoStepAlgebra(n, m, mats, name, **labels)


def j_of(A: MetricTwoStepAlgebra, Z: Sequence) -> Matrix:
    return A.j_of(Z)


def j_squared(A: MetricTwoStepAlgebra, Z: Sequence) -> Matrix:
    return A.j_squared(Z)


def symbolic_central_vector(m: int) -> tuple[Poly, ...]:
    """``(c_1, ..., c_m)`` as polynomials in ``m`` variables."""
    return tuple(Poly.variables(m))
