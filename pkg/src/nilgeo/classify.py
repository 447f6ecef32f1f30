"""Decision procedures: Type A, Heisenberg type, parallel Ricci, and the
naturally reductive structure solver."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from . import geometry as G
from .algebra import MetricTwoStepAlgebra
from .exact import Matrix, Poly, Q, fmt_q, solve_linear
from .exact import vectors as V
from .exact.linalg import kernel_basis
from .homogeneous import HomogeneityReport, central_bracket_apply, verify_homogeneous_structure


# -- Type A ------------------------------------------------------------------

def is_type_A(A: MetricTwoStepAlgebra) -> bool:
    """True iff ``J o j_{z_k}`` is skew-symmetric for every central basis vector."""
    J = G.endo_J(A)
    # row action: x -> (x P_k) J, matrix P_k J
    return all((P @ J).is_skew() for P in A.j_maps)


def type_a_witness(A: MetricTwoStepAlgebra) -> dict | None:
    J = G.endo_J(A)
    for k, P in enumerate(A.j_maps):
        M = P @ J
        bad = M.first_nonskew_entry()
        if bad is not None:
            a, b = bad
            return {"k": k, "entry": [a, b], "values": [fmt_q(M[a, b]), fmt_q(M[b, a])]}
    return None


# -- Heisenberg type -----------------------------------------------------------

@dataclass(frozen=True)
class HeisenbergClassification:
    """``clifford`` holds ``s_ab`` with ``j_a j_b + j_b j_a = s_ab Id`` when every
    anticommutator is scalar; then ``j_Z^2 = lambda(Z) Id`` with
    ``lambda(Z) = sum_{a,b} lam[a][b] Z_a Z_b`` and ``lam = s / 2``."""

    heisenberg_type: bool
    clifford: tuple | None
    lam: tuple | None  # present iff lambda is negative definite
    witness: dict | None = None

    @property
    def modified(self) -> bool:
        return self.lam is not None

    def lambda_poly(self) -> Poly | None:
        if self.clifford is None:
            return None
        m = len(self.clifford)
        zs = Poly.variables(m)
        total = Poly.const(0, m)
        for a in range(m):
            for b in range(m):
                total = total + (self.clifford[a][b] / 2) * zs[a] * zs[b]
        return total


def heisenberg_classification(A: MetricTwoStepAlgebra) -> HeisenbergClassification:
    m = A.m
    s = [[Q(0)] * m for _ in range(m)]
    for a in range(m):
        for b in range(a, m):
            Pa, Pb = A.j_maps[a], A.j_maps[b]
            anti = Pa @ Pb + Pb @ Pa
            c = anti.scalar_value()
            if c is None:
                return HeisenbergClassification(False, None, None, {"pair": [a, b]})
            s[a][b] = s[b][a] = c
    clifford = tuple(tuple(r) for r in s)
    lam = tuple(tuple(x / 2 for x in r) for r in s)
    negdef = m > 0 and _negative_definite(lam)
    htype = m > 0 and all(s[a][b] == (-2 if a == b else 0) for a in range(m) for b in range(m))
    return HeisenbergClassification(htype, clifford, lam if negdef else None)


def _negative_definite(S) -> bool:
    """Exact LDL^T on ``-S``: every pivot must be positive."""
    M = [[-x for x in r] for r in S]
    n = len(M)
    for k in range(n):
        p = M[k][k]
        if p <= 0:
            return False
        for i in range(k + 1, n):
            f = M[i][k] / p
            for j in range(k, n):
                M[i][j] = M[i][j] - f * M[k][j]
    return True


# -- scalar invariants and parallel Ricci --------------------------------------

@dataclass(frozen=True)
class ScalarInvariants:
    C: object | None  # J = C Id_v
    D: object | None  # B = D Id_z

    @property
    def both(self) -> bool:
        return self.C is not None and self.D is not None

    def to_dict(self) -> dict:
        return {"C": None if self.C is None else fmt_q(self.C),
                "D": None if self.D is None else fmt_q(self.D)}


def scalar_invariants(A: MetricTwoStepAlgebra) -> ScalarInvariants:
    return ScalarInvariants(G.endo_J(A).scalar_value(), G.endo_B(A).scalar_value())


def nabla_ric_witness(A: MetricTwoStepAlgebra) -> dict | None:
    """First basis triple with ``(nabla_X ric)(Y, Z) != 0``, or ``None``."""
    E = [A.basis_element(i) for i in range(A.dim)]
    for x, X in enumerate(E):
        for y, Y in enumerate(E):
            for z, Z in enumerate(E):
                val = G.nabla_ric(A, X, Y, Z)
                if val != 0:
                    return {"indices": [x, y, z], "basis": [A.labels[i] for i in (x, y, z)],
                            "value": fmt_q(val)}
    return None


def has_parallel_ricci(A: MetricTwoStepAlgebra) -> bool:
    """``nabla ric == 0`` on all basis triples, cross-checked against ``D = 2C``."""
    general = nabla_ric_witness(A) is None
    inv = scalar_invariants(A)
    if inv.both and A.n > 0 and A.m > 0 and general != (inv.D == 2 * inv.C):
        raise AssertionError(
            f"parallel-Ricci shortcut disagrees with the general check on {A!r}"
        )
    return general


# -- naturally reductive structures --------------------------------------------

@dataclass
class NRStructure:
    central_bracket: list  # central_bracket[a][b] is T~(z_a, z_b) as a z-vector
    C: object
    D: object
    unique: bool
    flags: dict[str, bool]
    report: HomogeneityReport
    kind: str = field(default="structure", init=False)

    def apply(self, X, Y) -> tuple:
        return central_bracket_apply(self.central_bracket, X, Y)

    def recheck(self, A: MetricTwoStepAlgebra) -> bool:
        _, flags, report = _verify_central_bracket(A, self.central_bracket)
        return all(flags.values()) and report.passed

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "C": fmt_q(self.C),
            "D": fmt_q(self.D),
            "unique": self.unique,
            "central_bracket": [[[fmt_q(x) for x in vec] for vec in row] for row in self.central_bracket],
            "flags": dict(self.flags),
            "equations": self.report.to_dict(),
        }


OBSTRUCTION_KINDS = (
    "CommutatorOutsideImage",
    "CentralBracketNotSkew",
    "CentralBracketNotJacobi",
    "ASVerificationFailed",
)


@dataclass
class Obstruction:
    obstruction: str
    pair: tuple[int, int] | None = None
    residual: Matrix | None = None
    instance: dict | None = None
    central_bracket: list | None = None
    detail: str = ""
    kind: str = field(default="obstruction", init=False)

    def recheck(self, A: MetricTwoStepAlgebra) -> bool:
        """Re-derive the failure from scratch."""
        if self.obstruction == "CommutatorOutsideImage":
            a, b = self.pair
            K = _commutator(A, a, b)
            R = self.residual
            if R.is_zero() or any(_frob(R, P) != 0 for P in A.j_maps):
                return False
            # K - R lies in span{j_k} and R is a nonzero vector orthogonal to it
            return _solve_in_span(A, K - R).consistent
        _, flags, report = _verify_central_bracket(A, self.central_bracket)
        if self.obstruction == "CentralBracketNotSkew":
            return not (flags["skew"] and flags["antisymmetric"])
        if self.obstruction == "CentralBracketNotJacobi":
            return not flags["jacobi"]
        return not (report.passed and flags["condition2"])

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "obstruction": self.obstruction, "detail": self.detail}
        if self.pair is not None:
            out["pair"] = list(self.pair)
        if self.residual is not None:
            out["residual"] = self.residual.to_strings()
        if self.instance is not None:
            out["instance"] = self.instance
        return out


@dataclass
class Inapplicable:
    reason: str
    C: object | None = None
    D: object | None = None
    kind: str = field(default="inapplicable", init=False)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "reason": self.reason,
                "C": None if self.C is None else fmt_q(self.C),
                "D": None if self.D is None else fmt_q(self.D)}


NROutcome = Union[NRStructure, Obstruction, Inapplicable]


def _commutator(A: MetricTwoStepAlgebra, a: int, b: int) -> Matrix:
    """Operator commutator ``[j_a, j_b]``."""
    return A.j_commutator(V.unit(A.m, a), V.unit(A.m, b))


def _frob(P: Matrix, Qm: Matrix):
    return sum((x * y for x, y in zip(P.flatten(), Qm.flatten()) if x != 0 and y != 0), Q(0))


def _span_system(A: MetricTwoStepAlgebra) -> Matrix:
    def build():
        return Matrix.from_columns([P.flatten() for P in A.j_maps]) if A.m else Matrix.zeros(A.n * A.n, 0)
    return A.memo("j_span_system", build)


def _solve_in_span(A: MetricTwoStepAlgebra, K: Matrix):
    return solve_linear(_span_system(A), K.flatten())


def _least_squares_residual(A: MetricTwoStepAlgebra, K: Matrix) -> Matrix:
    gram = G.endo_B(A)
    h = [_frob(P, K) for P in A.j_maps]
    w = solve_linear(gram, h).particular
    approx = Matrix.zeros(A.n)
    for wk, P in zip(w, A.j_maps):
        approx = approx + P * wk
    return K - approx


def _min_norm(x: tuple, kernel: list[tuple]) -> tuple:
    """Project ``x`` onto the orthogonal complement of ``span(kernel)``."""
    if not kernel:
        return x
    gram = Matrix([[V.dot(u, v) for v in kernel] for u in kernel])
    coeffs = solve_linear(gram, [V.dot(u, x) for u in kernel]).particular
    return V.sub(x, V.lincomb(coeffs, kernel, len(x)))


def solve_central_bracket(A: MetricTwoStepAlgebra) -> tuple[list | None, bool, Obstruction | None]:
    """Solve ``j_{W_ab} = [j_a, j_b]`` for every central basis pair ``a < b``."""
    m = A.m
    table = [[V.zero(m) for _ in range(m)] for _ in range(m)]
    unique = True
    for a in range(m):
        for b in range(a + 1, m):
            K = _commutator(A, a, b)
            sol = _solve_in_span(A, K)
            if not sol.consistent:
                R = _least_squares_residual(A, K)
                return None, False, Obstruction(
                    "CommutatorOutsideImage", (a, b), R,
                    detail=f"[j_{A.z_labels[a]}, j_{A.z_labels[b]}] is not of the form j_W",
                )
            unique = unique and sol.unique
            w = _min_norm(sol.particular, sol.kernel)
            table[a][b] = w
            table[b][a] = V.neg(w)
    return table, unique, None


def _verify_central_bracket(A: MetricTwoStepAlgebra, table) -> tuple[dict | None, dict[str, bool], HomogeneityReport]:
    """Check skewness, antisymmetry, Jacobi, the commutator condition, and the
    homogeneity equations of the assembled tensor.  Returns the first failing
    algebraic instance, the flags, and the equation report."""
    m = A.m
    first: dict | None = None
    flags = {"antisymmetric": True, "skew": True, "jacobi": True, "condition2": True}

    def note(flag, instance):
        nonlocal first
        flags[flag] = False
        if first is None:
            first = {"check": flag, **instance}

    for a in range(m):
        for b in range(m):
            if table[a][b] != V.neg(table[b][a]):
                note("antisymmetric", {"pair": [a, b]})
            for c in range(m):
                if table[a][b][c] != -table[a][c][b]:
                    note("skew", {"triple": [a, b, c]})
    for a in range(m):
        for b in range(m):
            for c in range(m):
                ab = table[a][b]
                s = V.add(
                    V.add(central_bracket_apply(table, ab, V.unit(m, c)),
                          central_bracket_apply(table, table[b][c], V.unit(m, a))),
                    central_bracket_apply(table, table[c][a], V.unit(m, b)),
                )
                if not V.is_zero(s):
                    note("jacobi", {"triple": [a, b, c], "value": [fmt_q(x) for x in s]})

    # j_{T~(X,Y)} = [j_X, j_Y] as a polynomial identity in X, Y
    xs = Poly.variables(2 * m)
    X, Y = tuple(xs[:m]), tuple(xs[m:])
    if m:
        lhs = A.j_of(central_bracket_apply(table, X, Y))
        rhs = A.j_commutator(X, Y)
        if lhs != rhs:
            note("condition2", {"detail": "j of the central bracket differs from the commutator"})
    report = verify_homogeneous_structure(A, central_bracket=table)
    flags.update(report.flags())
    return first, flags, report


def naturally_reductive_structure(A: MetricTwoStepAlgebra) -> NROutcome:
    inv = scalar_invariants(A)
    if inv.C is None:
        return Inapplicable("J is not a scalar multiple of the identity", inv.C, inv.D)
    if inv.D is None:
        return Inapplicable("B is not a scalar multiple of the identity", inv.C, inv.D)
    if inv.D == 2 * inv.C:
        return Inapplicable("D = 2C (parallel Ricci case)", inv.C, inv.D)
    table, unique, obstruction = solve_central_bracket(A)
    if obstruction is not None:
        return obstruction
    first, flags, report = _verify_central_bracket(A, table)
    if not (flags["skew"] and flags["antisymmetric"]):
        return Obstruction("CentralBracketNotSkew", instance=first, central_bracket=table,
                           detail="solved central bracket is not skew")
    if not flags["jacobi"]:
        return Obstruction("CentralBracketNotJacobi", instance=first, central_bracket=table,
                           detail="solved central bracket violates the Jacobi identity")
    if not (report.passed and flags["condition2"]):
        failing = report.first_failing()
        instance = first if failing is None else {"equation": failing.name, **(failing.first_failure or {})}
        return Obstruction("ASVerificationFailed", instance=instance, central_bracket=table,
                           detail="assembled tensor fails a homogeneity equation")
    return NRStructure(table, inv.C, inv.D, unique, flags, report)


# -- aggregate -----------------------------------------------------------------

@dataclass
class PropertyReport:
    type_A: bool
    heisenberg_type: bool
    modified_heisenberg: tuple | None
    scalar_J: object | None
    scalar_B: object | None
    parallel_ricci: bool
    witnesses: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "type_A": self.type_A,
            "heisenberg_type": self.heisenberg_type,
            "modified_heisenberg": None if self.modified_heisenberg is None
            else [[fmt_q(x) for x in r] for r in self.modified_heisenberg],
            "scalar_J": None if self.scalar_J is None else fmt_q(self.scalar_J),
            "scalar_B": None if self.scalar_B is None else fmt_q(self.scalar_B),
            "parallel_ricci": self.parallel_ricci,
            "witnesses": self.witnesses,
        }


def property_report(A: MetricTwoStepAlgebra) -> PropertyReport:
    inv = scalar_invariants(A)
    heis = heisenberg_classification(A)
    witnesses = {}
    type_a = is_type_A(A)
    if not type_a:
        witnesses["type_A"] = type_a_witness(A)
    if heis.witness is not None:
        witnesses["heisenberg"] = heis.witness
    parallel = has_parallel_ricci(A)
    if not parallel:
        witnesses["parallel_ricci"] = nabla_ric_witness(A)
    return PropertyReport(type_a, heis.heisenberg_type, heis.lam, inv.C, inv.D, parallel, witnesses)


def injective_j(A: MetricTwoStepAlgebra) -> bool:
    return not kernel_basis(_span_system(A)) if A.m else True
