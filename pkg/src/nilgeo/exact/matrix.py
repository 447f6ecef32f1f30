"""Dense matrices over an exact commutative ring (rationals or :class:`Poly`)."""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from ._backend import Q, fmt_q, to_q
from .poly import Poly


def _coerce_entry(x):
    if isinstance(x, Poly):
        return x
    return to_q(x)


class Matrix:
    """Immutable dense matrix.  Entries are backend rationals or polynomials."""

    __slots__ = ("rows", "nrows", "ncols", "_hash")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        data = tuple(tuple(_coerce_entry(x) for x in row) for row in rows)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        for i, row in enumerate(data):
            if len(row) != ncols:
                raise ValueError(f"row {i} has {len(row)} entries, expected {ncols}")
        self.rows = data
        self.nrows = len(data)
        self.ncols = ncols
        self._hash = None

    @classmethod
    def _raw(cls, rows: tuple, ncols: int) -> "Matrix":
        m = cls.__new__(cls)
        m.rows = rows
        m.nrows = len(rows)
        m.ncols = ncols
        m._hash = None
        return m

    # -- constructors -----------------------------------------------------
    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> "Matrix":
        ncols = nrows if ncols is None else ncols
        z = Q(0)
        return cls._raw(tuple((z,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.scalar(1, n)

    @classmethod
    def scalar(cls, value, n: int) -> "Matrix":
        v = _coerce_entry(value)
        z = Q(0) if not isinstance(v, Poly) else Poly(v.nvars)
        return cls._raw(tuple(tuple(v if i == j else z for j in range(n)) for i in range(n)), n)

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        n = len(values)
        vals = [_coerce_entry(v) for v in values]
        return cls._raw(
            tuple(tuple(vals[i] if i == j else Q(0) for j in range(n)) for i in range(n)), n
        )

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "Matrix":
        if not columns:
            raise ValueError("need at least one column")
        return cls(zip(*columns), ncols=len(columns))

    # -- access -----------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def row(self, i: int) -> tuple:
        return self.rows[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    # -- arithmetic -------------------------------------------------------
    def _check_same_shape(self, other: "Matrix"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_shape(other)
        return Matrix._raw(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
            self.ncols,
        )

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_shape(other)
        return Matrix._raw(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
            self.ncols,
        )

    def __neg__(self):
        return Matrix._raw(tuple(tuple(-a for a in r) for r in self.rows), self.ncols)

    def __mul__(self, scalar):
        if isinstance(scalar, Matrix):
            return NotImplemented
        c = _coerce_entry(scalar)
        return Matrix._raw(tuple(tuple(c * a for a in r) for r in self.rows), self.ncols)

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.ncols
        orows = other.rows
        out = []
        for r in self.rows:
            acc = [0] * cols
            for k, a in enumerate(r):
                if a == 0:
                    continue
                ok = orows[k]
                for j in range(cols):
                    b = ok[j]
                    if b != 0:
                        acc[j] = acc[j] + a * b
            out.append(tuple(x if not isinstance(x, int) else Q(x) for x in acc))
        return Matrix._raw(tuple(out), cols)

    def __pow__(self, k: int) -> "Matrix":
        if not self.is_square() or k < 0:
            raise ValueError("power needs a square matrix and k >= 0")
        result = Matrix.identity(self.nrows)
        for _ in range(k):
            result = result @ self
        return result

    def commutator(self, other: "Matrix") -> "Matrix":
        """Matrix commutator ``self @ other - other @ self``."""
        return self @ other - other @ self

    def apply(self, x: Sequence) -> tuple:
        """Column action ``M x``."""
        if len(x) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(_dot(r, x) for r in self.rows)

    def vecmul(self, x: Sequence) -> tuple:
        """Row action ``x M``."""
        if len(x) != self.nrows:
            raise ValueError("vector length mismatch")
        acc = [Q(0)] * self.ncols
        for xi, r in zip(x, self.rows):
            if xi == 0:
                continue
            for j, a in enumerate(r):
                if a != 0:
                    acc[j] = acc[j] + xi * a
        return tuple(acc)

    @property
    def T(self) -> "Matrix":
        return Matrix._raw(tuple(zip(*self.rows)) if self.rows else (), self.nrows)

    def trace(self):
        if not self.is_square():
            raise ValueError("trace of a non-square matrix")
        total = Q(0)
        for i in range(self.nrows):
            total = total + self.rows[i][i]
        return total

    def map(self, f: Callable) -> "Matrix":
        return Matrix(tuple(tuple(f(a) for a in r) for r in self.rows), self.ncols)

    def flatten(self) -> tuple:
        return tuple(a for r in self.rows for a in r)

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return all(a == 0 for r in self.rows for a in r)

    def is_skew(self) -> bool:
        return self.first_nonskew_entry() is None

    def first_nonskew_entry(self) -> tuple[int, int] | None:
        if not self.is_square():
            return (0, 0)
        for i in range(self.nrows):
            for j in range(i, self.ncols):
                if self.rows[i][j] + self.rows[j][i] != 0:
                    return (i, j)
        return None

    def is_symmetric(self) -> bool:
        if not self.is_square():
            return False
        return all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.nrows)
            for j in range(i + 1, self.ncols)
        )

    def scalar_value(self):
        """Return ``c`` if the matrix equals ``c * Id`` exactly, else ``None``."""
        if not self.is_square() or self.nrows == 0:
            return None
        c = self.rows[0][0]
        for i, r in enumerate(self.rows):
            for j, a in enumerate(r):
                if (a != c) if i == j else (a != 0):
                    return None
        return c

    # -- equality / display -----------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s)
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shape, self.rows))
        return self._hash

    def to_strings(self, names: Sequence[str] | None = None) -> list[list[str]]:
        return [
            [a.to_string(names) if isinstance(a, Poly) else fmt_q(a) for a in r]
            for r in self.rows
        ]

    def __repr__(self):
        body = "; ".join(", ".join(r) for r in self.to_strings())
        return f"Matrix([{body}])"


def _dot(u: Sequence, v: Sequence):
    total = Q(0)
    for a, b in zip(u, v):
        if a != 0 and b != 0:
            total = total + a * b
    return total
