"""Closed forms against the Koszul oracle, plus seeded property suites of
100 random (algebra, vectors) cases each."""

import random

import pytest

from nilgeo import catalog
from nilgeo import geometry as G
from nilgeo.checks import check_algebra, summarize
from nilgeo.exact import Matrix, Q
from nilgeo.exact import vectors as V
from nilgeo.oracles import KoszulOracle

from helpers import rand_vec

CASES = 100


def random_case(seed: int, k: int):
    """A seeded random algebra with n <= 6, m <= 3 and ``k`` random elements."""
    rng = random.Random(seed)
    n, m = rng.randint(1, 6), rng.randint(1, 3)
    A = catalog.random_algebra(seed, n, m)
    elems = [A.element(rand_vec(rng, n, 3), rand_vec(rng, m, 3)) for _ in range(k)]
    return A, elems


def inner(X, Y):
    return X.dot(Y)


# -- closed forms vs oracle ----------------------------------------------------

@pytest.mark.parametrize("name", ["paper-nj", "paper-njprime", "h3", "quaternionic-heisenberg",
                                  "type-a-counterexample", "abelian-3-2"])
def test_basis_sweep_has_no_failures(name):
    report = summarize(check_algebra(catalog.get(name)))
    assert report["failures"] == 0
    assert report["identities_checked"] > 0


@pytest.mark.parametrize("seed", range(CASES))
def test_closed_forms_match_oracle_on_random_vectors(seed):
    A, (X, Y, Z) = random_case(seed, 3)
    O = KoszulOracle(A)
    assert G.nabla(A, X, Y) == O.nabla(X, Y)
    assert G.curvature(A, X, Y, Z) == O.curvature(X, Y, Z)
    assert G.ricci_tensor(A, X, Y) == O.ricci_tensor(X, Y)
    assert G.nabla_ric(A, X, Y, Z) == O.nabla_ric(X, Y, Z)


def test_endomorphisms_match_oracle():
    for seed in range(20):
        A = catalog.random_algebra(seed, 5, 3)
        O = KoszulOracle(A)
        assert G.endo_J(A) == O.endo_J()
        assert G.endo_B(A) == O.endo_B()


# -- property suites -----------------------------------------------------------

@pytest.mark.parametrize("seed", range(CASES))
def test_curvature_symmetries_and_bianchi(seed):
    A, (X, Y, Z, W) = random_case(1000 + seed, 4)

    def R4(a, b, c, d):
        return inner(G.curvature(A, a, b, c), d)

    assert R4(X, Y, Z, W) == -R4(Y, X, Z, W)
    assert R4(X, Y, Z, W) == -R4(X, Y, W, Z)
    assert R4(X, Y, Z, W) == R4(Z, W, X, Y)
    bianchi = [G.curvature(A, X, Y, Z), G.curvature(A, Y, Z, X), G.curvature(A, Z, X, Y)]
    total = V.add(V.add(bianchi[0].coords, bianchi[1].coords), bianchi[2].coords)
    assert V.is_zero(total)


@pytest.mark.parametrize("seed", range(CASES))
def test_torsion_free_and_metric(seed):
    A, (X, Y, Z) = random_case(2000 + seed, 3)
    torsion = V.sub(G.nabla(A, X, Y).coords, G.nabla(A, Y, X).coords)
    assert torsion == A.bracket(X, Y).coords
    assert inner(G.nabla(A, X, Y), Z) + inner(Y, G.nabla(A, X, Z)) == 0


@pytest.mark.parametrize("seed", range(CASES))
def test_ricci_symmetric(seed):
    A, (X, Y) = random_case(3000 + seed, 2)
    assert G.ricci_tensor(A, X, Y) == G.ricci_tensor(A, Y, X)


@pytest.mark.parametrize("seed", range(CASES))
def test_trace_and_scalar_identities(seed):
    A, _ = random_case(4000 + seed, 0)
    trB = G.endo_B(A).trace()
    assert G.endo_J(A).trace() == -trB
    assert G.scalar_curvature(A) == -trB / 4


@pytest.mark.parametrize("seed", range(30))
def test_ricci_closed_form_against_j_and_b(seed):
    # ric = 1/2 <J x, y> on v, 1/4 <B Z, W> on z, zero across
    A, (X, Y) = random_case(5000 + seed, 2)
    J, B = G.endo_J(A), G.endo_B(A)
    expected = (V.dot(J.vecmul(X.v), Y.v) / 2) + (V.dot(B.vecmul(X.z), Y.z) / 4)
    assert G.ricci_tensor(A, X, Y) == expected


def test_ricci_scales_quadratically():
    A = catalog.random_algebra(4, 4, 2)
    B = A.scaled(3)
    E = [A.basis_element(i) for i in range(A.dim)]
    for X in E:
        for Y in E:
            assert G.ricci_tensor(B, X, Y) == 9 * G.ricci_tensor(A, X, Y)


def test_abelian_is_flat():
    A = catalog.abelian(3, 2)
    E = [A.basis_element(i) for i in range(A.dim)]
    assert all(G.curvature(A, X, Y, Z).is_zero() for X in E for Y in E for Z in E)
    assert G.endo_J(A) == Matrix.zeros(3)
    assert G.scalar_curvature(A) == 0


def test_heisenberg_scalar_curvature():
    # B = 2 on the centre of h3
    assert G.scalar_curvature(catalog.heisenberg(1)) == Q(-1, 2)
