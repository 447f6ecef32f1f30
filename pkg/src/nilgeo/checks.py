"""Exhaustive basis-level consistency checks for one algebra.

Compares every closed form with its Koszul-based oracle and checks the
standard curvature identities on all basis tuples.  Used by ``inspect`` for
the report summary and by ``fuzz``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import geometry as G
from .algebra import MetricTwoStepAlgebra
from .exact import Q, fmt_q
from .exact import vectors as V
from .oracles import KoszulOracle


@dataclass
class CheckCount:
    checked: int = 0
    failed: int = 0
    first_failure: dict | None = None

    def record(self, ok: bool, instance=None, lhs=None, rhs=None):
        self.checked += 1
        if not ok:
            self.failed += 1
            if self.first_failure is None:
                self.first_failure = {"instance": list(instance or ()), "lhs": _fmt(lhs), "rhs": _fmt(rhs)}

    def to_dict(self) -> dict:
        return {"checked": self.checked, "failed": self.failed, "first_failure": self.first_failure}


def _fmt(x):
    if x is None:
        return None
    if hasattr(x, "coords"):
        x = x.coords
    if isinstance(x, (tuple, list)):
        return [fmt_q(a) for a in x]
    if hasattr(x, "to_strings"):
        return x.to_strings()
    return fmt_q(x)


ORACLE_CHECKS = ("nabla", "curvature", "jacobi_operator", "ricci_operator", "ricci_tensor",
                 "nabla_ric", "endo_J", "endo_B")
IDENTITY_CHECKS = ("curvature_skew_xy", "curvature_skew_zw", "curvature_pair_symmetry",
                   "first_bianchi", "torsion_free", "metric_compatible", "ricci_symmetric",
                   "trace_identity", "scalar_curvature")


def oracle_equivalence(A: MetricTwoStepAlgebra) -> dict[str, CheckCount]:
    O = KoszulOracle(A)
    E = [A.basis_element(i) for i in range(A.dim)]
    N = len(E)
    out = {name: CheckCount() for name in ORACLE_CHECKS}
    for i, X in enumerate(E):
        a, b = G.ricci_operator(A, X), O.ricci_operator(X)
        out["ricci_operator"].record(a == b, (i,), a, b)
        for j, Y in enumerate(E):
            a, b = G.nabla(A, X, Y), O.nabla(X, Y)
            out["nabla"].record(a == b, (i, j), a, b)
            a, b = G.jacobi_operator(A, X, Y), O.jacobi_operator(X, Y)
            out["jacobi_operator"].record(a == b, (i, j), a, b)
            a, b = G.ricci_tensor(A, X, Y), O.ricci_tensor(X, Y)
            out["ricci_tensor"].record(a == b, (i, j), a, b)
    for i, j, k in itertools.product(range(N), repeat=3):
        X, Y, Z = E[i], E[j], E[k]
        a, b = G.curvature(A, X, Y, Z), O.curvature(X, Y, Z)
        out["curvature"].record(a == b, (i, j, k), a, b)
        a, b = G.nabla_ric(A, X, Y, Z), O.nabla_ric(X, Y, Z)
        out["nabla_ric"].record(a == b, (i, j, k), a, b)
    a, b = G.endo_J(A), O.endo_J()
    out["endo_J"].record(a == b, (), a, b)
    a, b = G.endo_B(A), O.endo_B()
    out["endo_B"].record(a == b, (), a, b)
    return out


def curvature_identities(A: MetricTwoStepAlgebra) -> dict[str, CheckCount]:
    E = [A.basis_element(i) for i in range(A.dim)]
    N = len(E)
    out = {name: CheckCount() for name in IDENTITY_CHECKS}
    R = [[[G.curvature(A, X, Y, Z).coords for Z in E] for Y in E] for X in E]
    conn = [[G.nabla(A, X, Y).coords for Y in E] for X in E]
    for x, y, z in itertools.product(range(N), repeat=3):
        out["curvature_skew_xy"].record(R[x][y][z] == V.neg(R[y][x][z]), (x, y, z), R[x][y][z], R[y][x][z])
        s = V.add(V.add(R[x][y][z], R[y][z][x]), R[z][x][y])
        out["first_bianchi"].record(V.is_zero(s), (x, y, z), s, V.zero(N))
        lhs = conn[x][y][z] + conn[x][z][y]
        out["metric_compatible"].record(lhs == 0, (x, y, z), lhs, Q(0))
        for w in range(N):
            r = R[x][y][z][w]
            out["curvature_skew_zw"].record(r == -R[x][y][w][z], (x, y, z, w), r, -R[x][y][w][z])
            out["curvature_pair_symmetry"].record(r == R[z][w][x][y], (x, y, z, w), r, R[z][w][x][y])
    for x, y in itertools.product(range(N), repeat=2):
        torsion = V.sub(conn[x][y], conn[y][x])
        br = A.bracket(E[x], E[y]).coords
        out["torsion_free"].record(torsion == br, (x, y), torsion, br)
        a, b = G.ricci_tensor(A, E[x], E[y]), G.ricci_tensor(A, E[y], E[x])
        out["ricci_symmetric"].record(a == b, (x, y), a, b)
    trJ, trB = G.endo_J(A).trace(), G.endo_B(A).trace()
    out["trace_identity"].record(trJ == -trB, (), trJ, -trB)
    scal = G.scalar_curvature(A)
    out["scalar_curvature"].record(scal == -trB / 4, (), scal, -trB / 4)
    return out


def check_algebra(A: MetricTwoStepAlgebra) -> dict[str, CheckCount]:
    return {**oracle_equivalence(A), **curvature_identities(A)}


def summarize(checks: dict[str, CheckCount]) -> dict:
    return {
        "identities_checked": sum(c.checked for c in checks.values()),
        "failures": sum(c.failed for c in checks.values()),
        "by_check": {name: c.to_dict() for name, c in checks.items()},
    }
