"""Coordinate-aligned abelian subalgebras ``W + z`` and the census comparison."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import ElementVector, MetricTwoStepAlgebra
from .exact import fmt_q


def commuting_witness(A: MetricTwoStepAlgebra, vectors: Sequence[ElementVector]) -> tuple[int, int] | None:
    """First index pair ``(i, j)`` with ``[u_i, u_j] != 0``."""
    for i, j in itertools.combinations(range(len(vectors)), 2):
        if not A.bracket(vectors[i], vectors[j]).is_zero():
            return i, j
    return None


def is_abelian_subspace(A: MetricTwoStepAlgebra, vectors: Sequence[ElementVector]) -> bool:
    return commuting_witness(A, vectors) is None


@dataclass
class AbelianReport:
    w_dim: int
    subsets: list[tuple[int, ...]]
    rejected: dict[tuple[int, ...], tuple[int, int]] = field(default_factory=dict)
    labels: tuple[str, ...] = ()

    @property
    def count(self) -> int:
        return len(self.subsets)

    def to_dict(self) -> dict:
        return {
            "w_dim": self.w_dim,
            "count": self.count,
            "subsets": [[self.labels[i] for i in s] for s in self.subsets],
        }


def coordinate_abelian_census(A: MetricTwoStepAlgebra, w_dim: int) -> AbelianReport:
    """All ``w_dim``-subsets ``W`` of the ``v``-basis with ``W + z`` abelian.

    Rejected subsets keep a non-commuting pair of basis indices.
    """
    if not 0 <= w_dim <= A.n:
        raise ValueError(f"w_dim must lie in [0, {A.n}]")
    table = A.structure_constants()
    found, rejected = [], {}
    for subset in itertools.combinations(range(A.n), w_dim):
        # z is central, so only pairs inside W matter
        bad = next(((a, b) for a, b in itertools.combinations(subset, 2) if any(table[a][b])), None)
        if bad is None:
            found.append(subset)
        else:
            rejected[subset] = bad
    return AbelianReport(w_dim, found, rejected, A.v_labels)


@dataclass
class NonisomorphismEvidence:
    counts_a: dict[int, int]
    counts_b: dict[int, int]
    distinguishing: list[int]
    proof_flag: bool = False

    @property
    def distinguished(self) -> bool:
        return bool(self.distinguishing)

    @property
    def summary(self) -> str:
        if not self.distinguished:
            return "no coordinate-level distinction"
        d = self.distinguishing[0]
        word = "proof (supplied argument)" if self.proof_flag else "evidence"
        return (f"{word}: coordinate abelian census differs at w_dim={d} "
                f"({self.counts_a[d]} vs {self.counts_b[d]})")

    def to_dict(self) -> dict:
        return {
            "counts_a": {str(k): v for k, v in self.counts_a.items()},
            "counts_b": {str(k): v for k, v in self.counts_b.items()},
            "distinguishing": self.distinguishing,
            "summary": self.summary,
        }


def nonisomorphism_evidence(A: MetricTwoStepAlgebra, B: MetricTwoStepAlgebra,
                            proof_flag: bool = False) -> NonisomorphismEvidence:
    """Compare coordinate censuses in every dimension.

    A difference is only evidence: the census ignores abelian subalgebras that
    are not spanned by basis vectors.  ``proof_flag`` records that the caller
    supplies an external argument upgrading it to a proof.
    """
    if (A.n, A.m) != (B.n, B.m):
        raise ValueError("algebras must have the same dimensions")
    ca = {d: coordinate_abelian_census(A, d).count for d in range(A.n + 1)}
    cb = {d: coordinate_abelian_census(B, d).count for d in range(B.n + 1)}
    diff = [d for d in ca if ca[d] != cb[d]]
    return NonisomorphismEvidence(ca, cb, diff, proof_flag)


def format_vector(v: ElementVector) -> list[str]:
    return [fmt_q(x) for x in v.coords]
