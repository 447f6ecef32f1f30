"""Acceptance gate: one test and one PASS/FAIL line per criterion.

Run with pytest (lines appear in the terminal summary) or directly with
``python tests/test_acceptance.py``.
"""

import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from nilgeo import catalog
from nilgeo import geometry as G
from nilgeo.abelian import coordinate_abelian_census, nonisomorphism_evidence
from nilgeo.checks import check_algebra, summarize
from nilgeo.classify import (
    NRStructure,
    Obstruction,
    has_parallel_ricci,
    is_type_A,
    naturally_reductive_structure,
    nabla_ric_witness,
    scalar_invariants,
)
from nilgeo.exact import IntegerLattice, Matrix, Poly, Q
from nilgeo.exact import vectors as V
from nilgeo.homogeneous import verify_homogeneous_structure
from nilgeo.isospectral import ESTABLISHED, NilmanifoldData, gordon_wilson, symbolic_charpoly
from nilgeo.oracles import type_a_polynomial

from helpers import direct_type_a_poly, gate, rand_vec

X_I, X_J, X_K, Y_I, Y_J, Y_K = range(6)
Z_I, Z_J, Z_K = range(3)

# Frozen printed data. Matrices are coefficient tables: entry (a, b) is
# (k, sign) meaning sign * c_{k+1}, or None for zero.
PRINTED_J = [
    [None, (2, 1), (1, -1), None, None, None],
    [(2, -1), None, (0, 1), None, None, None],
    [(1, 1), (0, -1), None, None, None, None],
    [None, None, None, None, (2, 1), (1, -1)],
    [None, None, None, (2, -1), None, (0, 1)],
    [None, None, None, (1, 1), (0, -1), None],
]
PRINTED_JPRIME = [
    [None, None, None, None, (2, -1), (1, 1)],
    [None, None, None, (2, 1), None, (0, -1)],
    [None, None, None, (1, -1), (0, 1), None],
    [None, (2, -1), (1, 1), None, None, None],
    [(2, 1), None, (0, -1), None, None, None],
    [(1, -1), (0, 1), None, None, None, None],
]
PRINTED_BRACKETS_J = {
    (X_I, X_J): (1, Z_K), (X_I, X_K): (-1, Z_J), (X_J, X_K): (1, Z_I),
    (Y_I, Y_J): (1, Z_K), (Y_I, Y_K): (-1, Z_J), (Y_J, Y_K): (1, Z_I),
}
PRINTED_BRACKETS_JPRIME = {
    (X_I, Y_J): (-1, Z_K), (X_I, Y_K): (1, Z_J), (X_J, Y_K): (-1, Z_I),
    (Y_I, X_J): (1, Z_K), (Y_I, X_K): (-1, Z_J), (Y_J, X_K): (1, Z_I),
}
PRINTED_J_SQUARED = {
    Z_I: (0, -1, -1, 0, -1, -1),
    Z_J: (-1, 0, -1, -1, 0, -1),
    Z_K: (-1, -1, 0, -1, -1, 0),
}
# printed central bracket on z: T~(Z_i, Z_j) = -Z_k and cyclic
PRINTED_T = {(Z_I, Z_J): (-1, Z_K), (Z_J, Z_K): (-1, Z_I), (Z_K, Z_I): (-1, Z_J)}


def _matrix_mismatches(A, printed):
    bad = []
    for k in range(3):
        for a in range(6):
            for b in range(6):
                entry = printed[a][b]
                want = 0 if entry is None or entry[0] != k else entry[1]
                if A.j_maps[k][a, b] != want:
                    bad.append((k, a, b))
    return bad


def _bracket_mismatches(A, printed):
    bad = []
    table = A.structure_constants()
    for a in range(6):
        for b in range(6):
            if (a, b) in printed:
                sign, z = printed[(a, b)]
            elif (b, a) in printed:
                sign, z = printed[(b, a)]
                sign = -sign
            else:
                if any(table[a][b]):
                    bad.append((A.v_labels[a], A.v_labels[b]))
                continue
            if table[a][b] != V.scale(sign, V.unit(3, z)):
                bad.append((A.v_labels[a], A.v_labels[b]))
    return sorted(set(tuple(sorted(p)) for p in bad))


def test_criterion_01_catalog_fidelity():
    nj, njp = catalog.paper_nj(), catalog.paper_njprime()
    problems = []
    for label, A, M in (("j", nj, PRINTED_J), ("j'", njp, PRINTED_JPRIME)):
        if _matrix_mismatches(A, M):
            problems.append(f"{label} matrix")
    for label, A, T in (("n(j)", nj, PRINTED_BRACKETS_J), ("n(j')", njp, PRINTED_BRACKETS_JPRIME)):
        bad = _bracket_mismatches(A, T)
        if bad:
            problems.append(f"{label} bracket table differs at {bad}")
    for A in (nj, njp):
        for k, diag in PRINTED_J_SQUARED.items():
            if A.j_squared(V.unit(3, k)) != Matrix.diag(diag):
                problems.append(f"{A.name} j^2 at z{k + 1}")
    gate(1, "catalog fidelity (matrices, bracket tables, j^2 tables)", not problems, "; ".join(problems))


def test_criterion_02_scalar_invariants():
    got = []
    for A in (catalog.paper_nj(), catalog.paper_njprime()):
        J, B = G.endo_J(A), G.endo_B(A)
        got.append(J == Matrix.scalar(-2, 6) and B == Matrix.scalar(4, 3))
    gate(2, "J = -2 Id_6 and B = 4 Id_3 for both algebras", all(got))


def test_criterion_03_oracle_equivalence():
    algebras = [catalog.paper_nj(), catalog.paper_njprime()]
    rng = random.Random(20240601)
    for seed in range(50):
        algebras.append(catalog.random_algebra(seed, rng.randint(1, 6), rng.randint(1, 3)))
    checked = failed = 0
    for A in algebras:
        s = summarize(check_algebra(A))
        checked += s["identities_checked"]
        failed += s["failures"]
    gate(3, "closed forms agree with the Koszul oracle (n(j), n(j') and 50 random algebras)", failed == 0,
         f"{checked} checks, {failed} failures")


def test_criterion_04_type_a():
    positives = ["paper-nj", "paper-njprime", "h3", "quaternionic-heisenberg"]
    results = {name: is_type_A(catalog.get(name)) for name in positives}
    ce = catalog.type_a_counterexample()
    zero = Poly.const(0, ce.dim)
    oracle_poly = type_a_polynomial(ce)
    direct_poly = direct_type_a_poly(ce)
    ok = (all(results.values()) and not is_type_A(ce)
          and oracle_poly != zero and direct_poly != zero
          and all(type_a_polynomial(catalog.get(n)) == Poly.const(0, catalog.get(n).dim) for n in positives))
    gate(4, "Type A true on n(j), n(j'), h3, quaternionic; false on the counterexample", ok,
         f"counterexample polynomial has {len(oracle_poly.terms)} terms")


def test_criterion_05_parallel_ricci():
    negatives = [catalog.paper_nj(), catalog.paper_njprime(), catalog.quaternionic_heisenberg()]
    negatives += [catalog.heisenberg(k) for k in (1, 2, 3, 4)]
    positives = [catalog.abelian(n, m) for n, m in ((1, 1), (3, 2), (4, 3))]
    ok = not any(has_parallel_ricci(A) for A in negatives) and all(has_parallel_ricci(A) for A in positives)
    agree = []
    pool = negatives + positives + [catalog.paper_nj().scaled(3)]
    for A in pool:
        inv = scalar_invariants(A)
        if inv.both:
            general = nabla_ric_witness(A) is None
            agree.append(general == (inv.D == 2 * inv.C))
    gate(5, "parallel Ricci: false on the pair and generalized Heisenberg, true on abelian; "
         "general path matches D = 2C", ok and all(agree), f"{len(agree)} shortcut comparisons")


def test_criterion_06_naturally_reductive():
    nj, njp = catalog.paper_nj(), catalog.paper_njprime()
    s = naturally_reductive_structure(nj)
    structure_ok = isinstance(s, NRStructure) and s.recheck(nj) and all(s.flags.values())
    triples = 9 ** 3
    as_ok = structure_ok and all(c.passed and c.checked >= triples for c in s.report.checks.values())
    printed_ok = False
    sign_detail = ""
    if isinstance(s, NRStructure):
        printed_ok = all(tuple(s.central_bracket[a][b]) == V.scale(sign, V.unit(3, z))
                         for (a, b), (sign, z) in PRINTED_T.items())
        got = s.central_bracket[Z_I][Z_J]
        sign_detail = f"solved T~(Z_i,Z_j) = {[str(x) for x in got]}"
    # the printed bracket itself, assembled and verified on every basis tuple
    printed_table = [[[Q(0)] * 3 for _ in range(3)] for _ in range(3)]
    for (a, b), (sign, z) in PRINTED_T.items():
        printed_table[a][b][z] = Q(sign)
        printed_table[b][a][z] = Q(-sign)
    printed_report = verify_homogeneous_structure(nj, central_bracket=printed_table)
    o = naturally_reductive_structure(njp)
    obstruction_ok = (isinstance(o, Obstruction) and o.obstruction == "CommutatorOutsideImage"
                      and o.recheck(njp) and not o.residual.is_zero())
    detail = (f"structure={structure_ok}, AS on 9^3 triples={as_ok}, printed T~ matches={printed_ok}, "
              f"printed T~ passes AS={printed_report.passed}, {sign_detail}, "
              f"n(j') obstruction rechecked={obstruction_ok}")
    gate(6, "NR structure on n(j) with T~(Z_i,Z_j) = -Z_k; n(j') CommutatorOutsideImage",
         structure_ok and as_ok and printed_ok and obstruction_ok, detail)


def test_criterion_07_isospectral():
    DA = NilmanifoldData.with_defaults(catalog.paper_nj())
    DB = NilmanifoldData.with_defaults(catalog.paper_njprime())
    verdict = gordon_wilson(DA, DB)
    c1, c2, c3 = Poly.variables(3)
    s = c1 ** 2 + c2 ** 2 + c3 ** 2
    zero = Poly.const(0, 3)
    closed = [zero, zero, s * s, zero, 2 * s, zero, Poly.const(1, 3)]

    def as_poly(cp):
        return [c if isinstance(c, Poly) else Poly.const(c, 3) for c in cp]

    charpoly_ok = as_poly(symbolic_charpoly(DA.algebra)) == closed == as_poly(symbolic_charpoly(DB.algebra))
    strata = verdict.criterion_iii.details.get("strata", [])
    strata_ok = len(strata) == 3 and all(st["status"] == "equal" for st in strata)
    dual_ok = DA.lattice_L.dual() == IntegerLattice.diagonal([2, 2, 2])
    gate(7, "criteria (i)-(iii) establish the pair; charpoly t^2 (t^2 + |c|^2)^2; kernels equal on 3 strata; "
         "L* = (2Z)^3", verdict.overall == ESTABLISHED and charpoly_ok and strata_ok and dual_ok)


def test_criterion_08_abelian_census():
    nj, njp = catalog.paper_nj(), catalog.paper_njprime()
    counts = (coordinate_abelian_census(nj, 2).count, coordinate_abelian_census(nj, 3).count,
              coordinate_abelian_census(njp, 3).count)
    ev = nonisomorphism_evidence(nj, njp)
    gate(8, "census w=2 on n(j) = 9, w=3 on n(j) = 0 and on n(j') = 2; evidence distinguishes",
         counts == (9, 0, 2) and ev.distinguished, f"counts={counts}")


def _case(seed, k):
    rng = random.Random(seed)
    n, m = rng.randint(1, 6), rng.randint(1, 3)
    A = catalog.random_algebra(seed, n, m)
    return A, [A.element(rand_vec(rng, n, 3), rand_vec(rng, m, 3)) for _ in range(k)]


def test_criterion_09_property_suites():
    failures = {"curvature": 0, "connection": 0, "ricci": 0, "traces": 0}
    for seed in range(100):
        A, (X, Y, Z, W) = _case(10_000 + seed, 4)
        R = lambda a, b, c, d: G.curvature(A, a, b, c).dot(d)
        bianchi = V.add(V.add(G.curvature(A, X, Y, Z).coords, G.curvature(A, Y, Z, X).coords),
                        G.curvature(A, Z, X, Y).coords)
        if (R(X, Y, Z, W) != -R(Y, X, Z, W) or R(X, Y, Z, W) != -R(X, Y, W, Z)
                or R(X, Y, Z, W) != R(Z, W, X, Y) or not V.is_zero(bianchi)):
            failures["curvature"] += 1
    for seed in range(100):
        A, (X, Y, Z) = _case(20_000 + seed, 3)
        torsion = V.sub(G.nabla(A, X, Y).coords, G.nabla(A, Y, X).coords)
        metric = G.nabla(A, X, Y).dot(Z) + Y.dot(G.nabla(A, X, Z))
        if torsion != A.bracket(X, Y).coords or metric != 0:
            failures["connection"] += 1
    for seed in range(100):
        A, (X, Y) = _case(30_000 + seed, 2)
        if G.ricci_tensor(A, X, Y) != G.ricci_tensor(A, Y, X):
            failures["ricci"] += 1
    for seed in range(100):
        A, _ = _case(40_000 + seed, 0)
        trB = G.endo_B(A).trace()
        if G.endo_J(A).trace() != -trB or G.scalar_curvature(A) != -trB / 4:
            failures["traces"] += 1
    gate(9, "property suites, 100 seeded cases each", not any(failures.values()), str(failures))


def test_criterion_10_spectral_equality_note():
    gate(10, "Laplace spectra are not computed; isospectrality is covered by criterion 7", True, "note only")


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
