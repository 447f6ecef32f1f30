import itertools
import random

import pytest

from nilgeo import catalog
from nilgeo.abelian import coordinate_abelian_census, is_abelian_subspace, nonisomorphism_evidence
from nilgeo.algebra import from_j_maps
from nilgeo.exact import Matrix, Q


def permuted(A, perm):
    """Relabel the v-basis by ``perm``; also flips the sign of v_0."""
    n = A.n
    sign = [Q(-1) if i == 0 else Q(1) for i in range(n)]
    mats = []
    for P in A.j_maps:
        mats.append(Matrix([[sign[perm[a]] * sign[perm[b]] * P[perm[a], perm[b]] for b in range(n)]
                            for a in range(n)]))
    return from_j_maps(n, A.m, mats)


@pytest.mark.parametrize("w,count", [(1, 6), (2, 9), (3, 0)])
def test_census_nj(w, count):
    assert coordinate_abelian_census(catalog.paper_nj(), w).count == count


def test_census_njprime():
    report = coordinate_abelian_census(catalog.paper_njprime(), 3)
    assert report.count == 2
    assert report.to_dict()["subsets"] == [["X_i", "X_j", "X_k"], ["Y_i", "Y_j", "Y_k"]]


def test_census_matches_direct_subspace_check():
    A = catalog.paper_njprime()
    for subset in itertools.combinations(range(6), 3):
        vecs = [A.basis_element(i) for i in subset] + [A.basis_element(6 + k) for k in range(3)]
        assert is_abelian_subspace(A, vecs) == (subset in coordinate_abelian_census(A, 3).subsets)


def test_rejected_subsets_carry_a_witness():
    A = catalog.paper_nj()
    report = coordinate_abelian_census(A, 3)
    for subset, (a, b) in report.rejected.items():
        assert a in subset and b in subset
        assert any(A.structure_constants()[a][b])


@pytest.mark.parametrize("seed", range(10))
def test_census_invariant_under_relabelling(seed):
    rng = random.Random(seed)
    A = catalog.random_algebra(seed, 5, 1, 1)
    perm = list(range(5))
    rng.shuffle(perm)
    B = permuted(A, perm)
    for w in range(6):
        assert coordinate_abelian_census(A, w).count == coordinate_abelian_census(B, w).count


def test_census_range_check():
    with pytest.raises(ValueError):
        coordinate_abelian_census(catalog.heisenberg(1), 3)


def test_evidence_distinguishes_pair():
    ev = nonisomorphism_evidence(catalog.paper_nj(), catalog.paper_njprime())
    assert ev.distinguished
    assert 3 in ev.distinguishing
    assert not ev.proof_flag
    assert ev.summary.startswith("evidence")


def test_evidence_for_identical_algebras():
    A = catalog.paper_nj()
    ev = nonisomorphism_evidence(A, A)
    assert not ev.distinguished
    assert ev.summary == "no coordinate-level distinction"


def test_centre_is_central():
    A = catalog.paper_nj()
    Z = A.element(z=(1, 2, 3))
    for i in range(A.dim):
        assert A.bracket(Z, A.basis_element(i)).is_zero()
