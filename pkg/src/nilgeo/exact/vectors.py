"""Tuple-based exact vectors.  Entries may be rationals or polynomials."""

from __future__ import annotations

from typing import Iterable, Sequence

from ._backend import Q, to_q


def vec(values: Iterable) -> tuple:
    return tuple(to_q(v) for v in values)


def zero(n: int) -> tuple:
    z = Q(0)
    return (z,) * n


def unit(n: int, i: int) -> tuple:
    return tuple(Q(1) if k == i else Q(0) for k in range(n))


def add(u: Sequence, v: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def neg(u: Sequence) -> tuple:
    return tuple(-a for a in u)


def scale(c, u: Sequence) -> tuple:
    if c == 0:
        return tuple(a * 0 for a in u)
    return tuple(c * a for a in u)


def dot(u: Sequence, v: Sequence):
    total = Q(0)
    for a, b in zip(u, v):
        if a != 0 and b != 0:
            total = total + a * b
    return total


def lincomb(coeffs: Sequence, vectors: Sequence[Sequence], length: int) -> tuple:
    acc = [Q(0)] * length
    for c, v in zip(coeffs, vectors):
        if c == 0:
            continue
        for i, a in enumerate(v):
            if a != 0:
                acc[i] = acc[i] + c * a
    return tuple(acc)


def is_zero(u: Sequence) -> bool:
    return all(a == 0 for a in u)
