"""Sufficient criteria for isospectrality of a pair of 2-step nilmanifolds.

A nilmanifold here is an algebra plus lattices ``M`` in ``v`` and ``L`` in
``z``.  The three conditions compared are:

(i)   ``j_Z`` and ``j'_Z`` have the same characteristic polynomial for all ``Z``;
(ii)  ``[m_a, m_b]`` lies in ``2L`` for all generators of ``M`` (both sides);
(iii) for every ``Z`` in the dual lattice ``L*`` the kernel lattices
      ``ker(j_Z) & M`` and ``ker(j'_Z) & M`` have the same length spectrum.

(iii) is decided symbolically by proving the kernels coincide stratum by
stratum; when that proof is unavailable it falls back to comparing bounded
length spectra on a deterministic sample of ``L*``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .algebra import DimensionError, MetricTwoStepAlgebra, symbolic_central_vector
from .exact import (
    DEFAULT_SPECTRUM_BOUND,
    IntegerLattice,
    Matrix,
    Poly,
    Q,
    charpoly,
    fmt_q,
    kernel_basis,
    lattice_intersect_subspace,
    length_spectrum,
)
from .exact.linalg import charpoly_to_string

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"
ESTABLISHED, NOT_ESTABLISHED = "isospectral-by-criterion", "not-established"
SAMPLE_RADIUS = 3


@dataclass(frozen=True)
class NilmanifoldData:
    algebra: MetricTwoStepAlgebra
    lattice_M: IntegerLattice
    lattice_L: IntegerLattice

    def __post_init__(self):
        if self.lattice_M.ambient_dim != self.algebra.n or self.lattice_L.ambient_dim != self.algebra.m:
            raise DimensionError("lattice ambient dimensions must be (dim_v, dim_z)")

    @classmethod
    def with_defaults(cls, A: MetricTwoStepAlgebra, M_scale=None, L_scale=None) -> "NilmanifoldData":
        """Diagonal lattices; unspecified ones default to ``Z^6`` and ``(Z/2)^3``
        when ``(n, m) = (6, 3)``, otherwise to the unit lattices."""
        paper_shape = (A.n, A.m) == (6, 3)
        if M_scale is None:
            M_scale = [1] * A.n
        if L_scale is None:
            L_scale = [Q(1, 2)] * A.m if paper_shape else [1] * A.m
        if len(M_scale) != A.n or len(L_scale) != A.m:
            raise DimensionError("lattice scales must have dim_v and dim_z entries")
        return cls(A, IntegerLattice.diagonal(M_scale), IntegerLattice.diagonal(L_scale))


@dataclass
class CriterionResult:
    status: str
    witness: dict | None = None
    reason: str = ""
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        return {"status": self.status, "witness": self.witness, "reason": self.reason,
                "details": self.details}


@dataclass
class IsospectralVerdict:
    criterion_i: CriterionResult
    criterion_ii: CriterionResult
    criterion_iii: CriterionResult

    @property
    def overall(self) -> str:
        ok = all(c.passed for c in (self.criterion_i, self.criterion_ii, self.criterion_iii))
        return ESTABLISHED if ok else NOT_ESTABLISHED

    def to_dict(self) -> dict:
        return {
            "criterion_i": self.criterion_i.to_dict(),
            "criterion_ii": self.criterion_ii.to_dict(),
            "criterion_iii": self.criterion_iii.to_dict(),
            "overall": self.overall,
        }


def _check_dims(A: MetricTwoStepAlgebra, B: MetricTwoStepAlgebra):
    if (A.n, A.m) != (B.n, B.m):
        raise DimensionError(f"dimension mismatch: ({A.n},{A.m}) vs ({B.n},{B.m})")


def _names(m: int) -> list[str]:
    return [f"c{k + 1}" for k in range(m)]


# -- criterion (i) -------------------------------------------------------------

def symbolic_charpoly(A: MetricTwoStepAlgebra) -> list:
    """Coefficients (low to high degree) of ``det(t - j_C)`` with ``C`` symbolic."""
    return A.memo("symbolic_charpoly", lambda: charpoly(A.j_of(symbolic_central_vector(A.m))))


def _small_central_vectors(m: int):
    for k in range(m):
        yield tuple(Q(1) if i == k else Q(0) for i in range(m))
    for coeffs in itertools.product((0, 1, -1, 2), repeat=m):
        if any(coeffs):
            yield tuple(Q(c) for c in coeffs)


def criterion_eigenvalues(A: MetricTwoStepAlgebra, B: MetricTwoStepAlgebra) -> CriterionResult:
    _check_dims(A, B)
    pa, pb = symbolic_charpoly(A), symbolic_charpoly(B)
    names = _names(A.m)
    details = {"charpoly_a": charpoly_to_string(pa, "t", names),
               "charpoly_b": charpoly_to_string(pb, "t", names)}
    if pa == pb:
        return CriterionResult(PASS, details=details)
    for Z in _small_central_vectors(A.m):
        ca, cb = charpoly(A.j_of(Z)), charpoly(B.j_of(Z))
        if ca != cb:
            witness = {"Z": [fmt_q(x) for x in Z],
                       "charpoly_a": charpoly_to_string(ca), "charpoly_b": charpoly_to_string(cb)}
            return CriterionResult(FAIL, witness, "characteristic polynomials differ", details)
    # polynomials differ but no small witness; still a certified failure
    return CriterionResult(FAIL, {"symbolic": True}, "symbolic characteristic polynomials differ", details)


# -- criterion (ii) ------------------------------------------------------------

def bracket_lattice_witness(D: NilmanifoldData) -> dict | None:
    A, M = D.algebra, D.lattice_M
    twoL = D.lattice_L.scaled(2)
    for a, b in itertools.combinations(range(M.rank), 2):
        z = A.bracket_v(M.basis[a], M.basis[b])
        if z not in twoL:
            return {"pair": [a, b], "m_a": [fmt_q(x) for x in M.basis[a]],
                    "m_b": [fmt_q(x) for x in M.basis[b]], "bracket": [fmt_q(x) for x in z]}
    return None


def criterion_bracket_lattice(D: NilmanifoldData, D2: NilmanifoldData | None = None) -> CriterionResult:
    for label, data in (("a", D), ("b", D2)):
        if data is None:
            continue
        w = bracket_lattice_witness(data)
        if w is not None:
            w["side"] = label
            return CriterionResult(FAIL, w, "a generator bracket is not in 2L")
    return CriterionResult(PASS)


# -- criterion (iii): stratified symbolic kernels -------------------------------

def _is_safe_pivot(p, k: int) -> bool:
    """Nonzero on the whole stratum: a constant times a power of ``c_k``."""
    if not isinstance(p, Poly):
        return p != 0
    if not p.is_monomial():
        return False
    return p.monomial_support() <= {k}


def stratum_kernel(P: Matrix, k: int) -> tuple[list[tuple], int] | None:
    """Kernel basis and rank of a symbolic matrix on the stratum where
    ``c_k`` is the first nonzero coordinate.

    ``P`` must already have ``c_1..c_{k-1}`` substituted by zero.  Pivots are
    restricted to monomials in ``c_k``; if elimination stalls on an entry that
    may vanish inside the stratum, the rank is not constant there and ``None``
    is returned.
    """
    rows = [list(r) for r in P.rows]
    nr, nc = P.shape
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        pick = next((i for i in range(r, nr) if _is_safe_pivot(rows[i][c], k)), None)
        if pick is None:
            continue
        rows[r], rows[pick] = rows[pick], rows[r]
        p = rows[r][c]
        rows[r] = [x / p if x != 0 else x for x in rows[r]]
        for i in range(nr):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    if any(x != 0 for row in rows[r:] for x in row):
        return None
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for f in free:
        v = [Q(0)] * nc
        v[f] = Q(1)
        for i, p in enumerate(pivots):
            v[p] = -rows[i][f]
        basis.append(tuple(v))
    return basis, len(pivots)


def _stratum_matrix(A: MetricTwoStepAlgebra, k: int) -> Matrix:
    P = A.j_of(symbolic_central_vector(A.m))
    zeros = {i: 0 for i in range(k)}
    return P.map(lambda x: x.substitute(zeros) if isinstance(x, Poly) else x)


def _fmt_entry(x, names) -> str:
    return x.to_string(names) if isinstance(x, Poly) else fmt_q(x)


def symbolic_kernel_equality(A: MetricTwoStepAlgebra, B: MetricTwoStepAlgebra) -> tuple[bool | None, list[dict]]:
    """``True`` if ``ker j_Z = ker j'_Z`` for all ``Z != 0`` (proved per stratum),
    ``False`` with a stratum witness if the kernels provably differ somewhere,
    ``None`` if some stratum is not decidable by this method."""
    _check_dims(A, B)
    names = _names(A.m)
    strata = []
    decided = True
    for k in range(A.m):
        PA, PB = _stratum_matrix(A, k), _stratum_matrix(B, k)
        ka, kb = stratum_kernel(PA, k), stratum_kernel(PB, k)
        entry: dict = {"stratum": k, "condition": _stratum_label(k, names)}
        if ka is None or kb is None:
            entry["status"] = "undecided"
            decided = False
            strata.append(entry)
            continue
        basis, rank_a = ka
        _, rank_b = kb
        entry["kernel_basis"] = [[_fmt_entry(x, names) for x in v] for v in basis]
        entry["rank_a"], entry["rank_b"] = rank_a, rank_b
        # kernel of the row action x -> x P equals the column kernel (P skew)
        annihilated = all(all(x == 0 for x in PB.apply(v)) for v in basis)
        entry["annihilated"] = annihilated
        entry["status"] = "equal" if annihilated and rank_a == rank_b else "different"
        strata.append(entry)
    if not decided:
        return None, strata
    return all(s["status"] == "equal" for s in strata), strata


def _stratum_label(k: int, names) -> str:
    zeros = [f"{names[i]} = 0" for i in range(k)]
    return ", ".join(zeros + [f"{names[k]} != 0"])


# -- criterion (iii): sampled length spectra -----------------------------------

def dual_sample(L: IntegerLattice, radius: int = SAMPLE_RADIUS) -> list[tuple]:
    """Nonzero points of ``L*`` whose coefficients in the canonical dual basis
    have max-norm at most ``radius``, in lexicographic coefficient order."""
    Ld = L.dual()
    out = []
    for coeffs in itertools.product(range(-radius, radius + 1), repeat=Ld.rank):
        if not any(coeffs):
            continue
        out.append(tuple(sum((c * b[i] for c, b in zip(coeffs, Ld.basis)), Q(0))
                         for i in range(L.ambient_dim)))
    return out


def kernel_lattice(A: MetricTwoStepAlgebra, M: IntegerLattice, Z) -> IntegerLattice:
    return lattice_intersect_subspace(M, kernel_basis(A.j_of(Z)))


def sampled_kernel_spectra(D: NilmanifoldData, D2: NilmanifoldData, bound=DEFAULT_SPECTRUM_BOUND,
                           radius: int = SAMPLE_RADIUS) -> CriterionResult:
    sample = dual_sample(D.lattice_L, radius)
    provenance = {"mode": "sampled", "bound": fmt_q(Q(bound)), "radius": radius,
                  "samples": len(sample), "dual_basis": _fmt_basis(D.lattice_L.dual())}
    for Z in sample:
        sa = length_spectrum(kernel_lattice(D.algebra, D.lattice_M, Z), bound)
        sb = length_spectrum(kernel_lattice(D2.algebra, D2.lattice_M, Z), bound)
        if sa != sb:
            witness = {"Z": [fmt_q(x) for x in Z], "spectrum_a": _fmt_spec(sa), "spectrum_b": _fmt_spec(sb)}
            return CriterionResult(FAIL, witness, "kernel lattices have different length spectra", provenance)
    return CriterionResult(PASS, reason="pass on sample", details=provenance)


def _fmt_spec(spec) -> list:
    return [[fmt_q(v), c] for v, c in spec]


def _fmt_basis(L: IntegerLattice) -> list:
    return [[fmt_q(x) for x in b] for b in L.basis]


def criterion_kernel_lattices(D: NilmanifoldData, D2: NilmanifoldData, mode: str = "symbolic",
                              bound=DEFAULT_SPECTRUM_BOUND) -> CriterionResult:
    _check_dims(D.algebra, D2.algebra)
    if mode not in ("symbolic", "sampled"):
        raise ValueError(f"unknown mode {mode!r}")
    if D.lattice_M != D2.lattice_M or D.lattice_L != D2.lattice_L:
        return CriterionResult(INCONCLUSIVE, reason="the two nilmanifolds use different lattices")
    if mode == "symbolic":
        equal, strata = symbolic_kernel_equality(D.algebra, D2.algebra)
        details = {"mode": "symbolic", "strata": strata, "dual_basis": _fmt_basis(D.lattice_L.dual())}
        if equal:
            return CriterionResult(PASS, reason="kernels coincide on every stratum", details=details)
        # unequal or undecided kernels do not decide the length-spectrum condition
        result = sampled_kernel_spectra(D, D2, bound)
        result.details["symbolic"] = details
        result.details["fallback"] = "kernels not proved equal" if equal is None else "kernels differ"
        return result
    return sampled_kernel_spectra(D, D2, bound)


def gordon_wilson(D: NilmanifoldData, D2: NilmanifoldData, mode: str = "symbolic",
                  bound=DEFAULT_SPECTRUM_BOUND) -> IsospectralVerdict:
    return IsospectralVerdict(
        criterion_eigenvalues(D.algebra, D2.algebra),
        criterion_bracket_lattice(D, D2),
        criterion_kernel_lattices(D, D2, mode, bound),
    )
