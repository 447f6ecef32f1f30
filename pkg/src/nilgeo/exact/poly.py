"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`Poly` in ``nvars`` variables stores a map from exponent tuples to
nonzero coefficients.  Exponents may be negative, which makes division by a
monomial exact; the kernel analysis of symbolic j-maps relies on this to keep
entries such as ``c2/c1`` without introducing a fraction field.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from ._backend import Q, fmt_q, to_q


class Poly:
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[tuple, object] | None = None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exp, coef in terms.items():
                if len(exp) != nvars:
                    raise ValueError(f"exponent {exp} does not have {nvars} entries")
                c = to_q(coef)
                if c != 0:
                    clean[tuple(exp)] = c
        self.terms = clean
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, value, nvars: int) -> "Poly":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def var(cls, index: int, nvars: int) -> "Poly":
        exp = [0] * nvars
        exp[index] = 1
        return cls(nvars, {tuple(exp): 1})

    @classmethod
    def variables(cls, nvars: int) -> list["Poly"]:
        return [cls.var(i, nvars) for i in range(nvars)]

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "Poly":
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    # -- coercion ---------------------------------------------------------
    def _coerce(self, other) -> "Poly | None":
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        try:
            c = to_q(other)
        except (TypeError, ValueError):
            return None
        return Poly._raw(self.nvars, {(0,) * self.nvars: c} if c != 0 else {})

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for exp, c in o.terms.items():
            s = out.get(exp, 0) + c
            if s == 0:
                out.pop(exp, None)
            else:
                out[exp] = s
        return Poly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                c = to_q(other)
            except (TypeError, ValueError):
                return NotImplemented
            if c == 0:
                return Poly._raw(self.nvars, {})
            return Poly._raw(self.nvars, {e: v * c for e, v in self.terms.items()})
        o = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return Poly._raw(self.nvars, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Exact division by a nonzero rational or by a single-term polynomial."""
        if isinstance(other, Poly):
            if len(other.terms) != 1:
                raise ZeroDivisionError("division only by a nonzero monomial")
            (exp, coef), = other.terms.items()
            inv = 1 / coef
            return Poly._raw(
                self.nvars,
                {tuple(a - b for a, b in zip(e, exp)): c * inv for e, c in self.terms.items()},
            )
        c = to_q(other)
        if c == 0:
            raise ZeroDivisionError("polynomial division by zero")
        inv = 1 / c
        return Poly._raw(self.nvars, {e: v * inv for e, v in self.terms.items()})

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = Poly.const(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        if self._hash is None:
            if not self.terms:
                self._hash = hash(0)
            elif len(self.terms) == 1 and all(e == 0 for e in next(iter(self.terms))):
                self._hash = hash(next(iter(self.terms.values())))
            else:
                self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- inspection -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self):
        """The value of a constant polynomial; raises if not constant."""
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get((0,) * self.nvars, Q(0))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def monomial_support(self) -> set[int]:
        """Variables that appear with nonzero exponent in a monomial."""
        if len(self.terms) != 1:
            raise ValueError("not a monomial")
        exp = next(iter(self.terms))
        return {i for i, e in enumerate(exp) if e}

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def is_laurent(self) -> bool:
        return any(x < 0 for e in self.terms for x in e)

    # -- evaluation -------------------------------------------------------
    def evaluate(self, point: Sequence):
        if len(point) != self.nvars:
            raise ValueError("point has wrong number of coordinates")
        pt = [to_q(x) for x in point]
        total = Q(0)
        for exp, c in self.terms.items():
            term = c
            for x, e in zip(pt, exp):
                if e:
                    term *= x ** e
            total += term
        return total

    def substitute(self, values: Mapping[int, object]) -> "Poly":
        """Substitute rational values for some variables (others kept)."""
        vals = {i: to_q(v) for i, v in values.items()}
        out: dict = {}
        for exp, c in self.terms.items():
            coef = c
            new_exp = list(exp)
            for i, v in vals.items():
                if exp[i]:
                    coef *= v ** exp[i]
                    new_exp[i] = 0
            if coef == 0:
                continue
            key = tuple(new_exp)
            s = out.get(key, 0) + coef
            if s == 0:
                out.pop(key, None)
            else:
                out[key] = s
        return Poly._raw(self.nvars, out)

    # -- display ----------------------------------------------------------
    def to_string(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = list(names) if names else [f"x{i + 1}" for i in range(self.nvars)]
        parts = []
        for exp in sorted(self.terms, key=lambda e: (-sum(e), [-x for x in e])):
            c = self.terms[exp]
            mono = "*".join(
                n if e == 1 else f"{n}^{e}" for n, e in zip(names, exp) if e
            )
            if not mono:
                parts.append(fmt_q(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{fmt_q(c)}*{mono}")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Poly({self.to_string()})"


def poly_vector(values: Iterable, nvars: int) -> tuple[Poly, ...]:
    """Lift a vector of rationals (or polys) to polynomials in ``nvars`` variables."""
    return tuple(v if isinstance(v, Poly) else Poly.const(v, nvars) for v in values)
