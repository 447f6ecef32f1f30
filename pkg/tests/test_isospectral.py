import pytest

from nilgeo import catalog
from nilgeo.algebra import DimensionError, from_j_maps
from nilgeo.exact import IntegerLattice, Matrix, Poly, Q, charpoly
from nilgeo.isospectral import (
    ESTABLISHED,
    FAIL,
    INCONCLUSIVE,
    NOT_ESTABLISHED,
    PASS,
    NilmanifoldData,
    criterion_bracket_lattice,
    criterion_eigenvalues,
    criterion_kernel_lattices,
    dual_sample,
    gordon_wilson,
    symbolic_charpoly,
    symbolic_kernel_equality,
)

from helpers import cofactor_charpoly


@pytest.fixture(scope="module")
def pair():
    return (NilmanifoldData.with_defaults(catalog.paper_nj()),
            NilmanifoldData.with_defaults(catalog.paper_njprime()))


def test_default_lattices():
    D = NilmanifoldData.with_defaults(catalog.paper_nj())
    assert D.lattice_M == IntegerLattice.standard(6)
    assert D.lattice_L == IntegerLattice.diagonal([Q(1, 2)] * 3)
    assert NilmanifoldData.with_defaults(catalog.heisenberg(1)).lattice_L == IntegerLattice.standard(1)


def test_symbolic_charpoly_matches_cofactor_oracle():
    for A in (catalog.paper_nj(), catalog.paper_njprime()):
        got = [c if isinstance(c, Poly) else Poly.const(c, 3) for c in symbolic_charpoly(A)]
        assert got == cofactor_charpoly(A.j_of(Poly.variables(3)), 3)


def test_symbolic_charpoly_closed_form():
    # t^2 (t^2 + c1^2 + c2^2 + c3^2)^2
    c1, c2, c3 = Poly.variables(3)
    s = c1 ** 2 + c2 ** 2 + c3 ** 2
    expected = [Poly.const(0, 3), Poly.const(0, 3), s * s, Poly.const(0, 3), 2 * s, Poly.const(0, 3),
                Poly.const(1, 3)]
    got = [c if isinstance(c, Poly) else Poly.const(c, 3) for c in symbolic_charpoly(catalog.paper_nj())]
    assert got == expected


def test_gordon_wilson_nj_pair(pair):
    verdict = gordon_wilson(*pair)
    assert verdict.overall == ESTABLISHED
    strata = verdict.criterion_iii.details["strata"]
    assert [s["status"] for s in strata] == ["equal"] * 3
    assert verdict.criterion_iii.details["dual_basis"] == [["2", "0", "0"], ["0", "2", "0"], ["0", "0", "2"]]


def test_sampled_mode_on_nj_pair(pair):
    res = criterion_kernel_lattices(*pair, mode="sampled", bound=8)
    assert res.status == PASS
    assert res.details["samples"] == 7 ** 3 - 1


def test_kernel_equality_strata_dimensions():
    equal, strata = symbolic_kernel_equality(catalog.paper_nj(), catalog.paper_njprime())
    assert equal
    for s in strata:
        assert s["rank_a"] == s["rank_b"] == 4
        assert len(s["kernel_basis"]) == 2


def test_criterion_i_fails_for_scaled_heisenberg():
    res = criterion_eigenvalues(catalog.heisenberg(1), catalog.heisenberg(1).scaled(2))
    assert res.status == FAIL
    assert res.witness is not None


def test_criterion_i_against_numeric_charpolys():
    A, B = catalog.paper_nj(), catalog.paper_njprime()
    for Z in [(1, 0, 0), (1, 2, 3), (Q(1, 2), -1, 4)]:
        Z = tuple(Q(x) for x in Z)
        assert charpoly(A.j_of(Z)) == charpoly(B.j_of(Z))


def test_criterion_ii_fails_on_coarse_l(pair):
    D = NilmanifoldData.with_defaults(catalog.paper_nj(), L_scale=[2, 2, 2])
    res = criterion_bracket_lattice(D)
    assert res.status == FAIL
    assert res.witness["pair"] == [0, 1]


def test_criterion_ii_holds_for_default(pair):
    assert criterion_bracket_lattice(*pair).status == PASS


def test_different_lattices_are_inconclusive():
    D1 = NilmanifoldData.with_defaults(catalog.paper_nj())
    D2 = NilmanifoldData.with_defaults(catalog.paper_njprime(), M_scale=[2] * 6)
    assert criterion_kernel_lattices(D1, D2).status == INCONCLUSIVE
    assert gordon_wilson(D1, D2).overall == NOT_ESTABLISHED


def test_self_pair_is_established():
    D = NilmanifoldData.with_defaults(catalog.paper_nj())
    assert gordon_wilson(D, D).overall == ESTABLISHED


def test_kernel_difference_detected():
    # rot(1,2) vs rot(2,3): same spectrum, kernels e3 vs e1
    A = from_j_maps(3, 1, [Matrix([[0, 1, 0], [-1, 0, 0], [0, 0, 0]])])
    B = from_j_maps(3, 1, [Matrix([[0, 0, 0], [0, 0, 1], [0, -1, 0]])])
    assert criterion_eigenvalues(A, B).status == PASS
    equal, strata = symbolic_kernel_equality(A, B)
    assert equal is False
    assert strata[0]["status"] == "different"
    DA, DB = NilmanifoldData.with_defaults(A), NilmanifoldData.with_defaults(B)
    res = criterion_kernel_lattices(DA, DB, bound=4)
    assert res.details["fallback"] == "kernels differ"
    # both kernel lattices are Z e_i, so the spectra still agree
    assert res.status == PASS


def test_undecided_stratum_falls_back_to_sampling():
    rot12 = Matrix([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
    rot34 = Matrix([[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
    A, B = from_j_maps(4, 2, [rot12, rot34]), from_j_maps(4, 2, [rot34, rot12])
    equal, strata = symbolic_kernel_equality(A, B)
    assert equal is None
    assert strata[0]["status"] == "undecided"
    res = criterion_kernel_lattices(NilmanifoldData.with_defaults(A), NilmanifoldData.with_defaults(B), bound=4)
    assert res.details["fallback"] == "kernels not proved equal"
    # swapping the blocks is an isometry, so every sampled spectrum agrees
    assert res.status == PASS


def test_dimension_mismatch_raises():
    with pytest.raises(DimensionError):
        symbolic_kernel_equality(catalog.heisenberg(1), catalog.heisenberg(2))


def test_dual_sample_lies_in_dual():
    L = IntegerLattice.diagonal([Q(1, 2)] * 3)
    pts = dual_sample(L, 1)
    assert len(pts) == 26
    assert all(p in L.dual() for p in pts)
