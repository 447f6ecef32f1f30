import random

import pytest

from nilgeo import catalog
from nilgeo.algebra import (
    AntisymmetryError,
    DimensionError,
    NonSkewError,
    from_j_maps,
    from_structure_constants,
    j_of,
    j_squared,
)
from nilgeo.exact import Matrix, Q
from nilgeo.exact import vectors as V

from helpers import rand_vec


def test_bracket_duality_on_random_algebras():
    # <j_Z x, y> = <[x, y], Z>
    rng = random.Random(1)
    for seed in range(30):
        A = catalog.random_algebra(seed, rng.randint(2, 6), rng.randint(1, 3))
        x, y, Z = rand_vec(rng, A.n), rand_vec(rng, A.n), rand_vec(rng, A.m)
        assert V.dot(A.j_apply(Z, x), y) == V.dot(A.bracket_v(x, y), Z)
        assert A.bracket_v(x, y) == V.neg(A.bracket_v(y, x))


def test_j_of_is_linear():
    rng = random.Random(2)
    A = catalog.random_algebra(5, 5, 3)
    Z1, Z2, c = rand_vec(rng, 3), rand_vec(rng, 3), Q(3, 7)
    combo = V.add(Z1, V.scale(c, Z2))
    assert j_of(A, combo) == j_of(A, Z1) + j_of(A, Z2) * c


def test_structure_constant_round_trip():
    for seed in range(10):
        A = catalog.random_algebra(seed, 5, 2)
        table = {(a, b): z for a, b, z in A.nonzero_brackets()}
        B = from_structure_constants(A.n, A.m, table)
        assert B == A
        assert B.structure_constants() == A.structure_constants()


def test_from_structure_constants_accepts_both_orders():
    A = from_structure_constants(2, 1, [(0, 1, (1,)), (1, 0, (-1,))])
    assert A == catalog.heisenberg(1)


def test_from_structure_constants_rejects_inconsistent():
    with pytest.raises(AntisymmetryError):
        from_structure_constants(2, 1, [(0, 1, (1,)), (1, 0, (1,))])
    with pytest.raises(AntisymmetryError):
        from_structure_constants(2, 1, {(0, 0): (1,)})
    with pytest.raises(DimensionError):
        from_structure_constants(2, 1, {(0, 2): (1,)})


def test_non_skew_is_rejected_with_location():
    with pytest.raises(NonSkewError) as info:
        from_j_maps(2, 1, [Matrix([[0, 1], [1, 0]])])
    assert info.value.index == 0
    assert info.value.entry == (0, 1)


def test_wrong_shapes_rejected():
    with pytest.raises(DimensionError):
        from_j_maps(3, 1, [Matrix.zeros(2)])
    with pytest.raises(DimensionError):
        from_j_maps(2, 2, [Matrix.zeros(2)])


def test_j_squared_heisenberg():
    A = catalog.heisenberg(2)
    assert j_squared(A, (Q(3),)) == Matrix.scalar(-9, 4)


def test_j_squared_quaternionic_is_clifford():
    A = catalog.quaternionic_heisenberg()
    Z = (Q(1), Q(2), Q(-2))
    assert j_squared(A, Z) == Matrix.scalar(-9, 4)


def test_row_action_composition():
    # operator j_X o j_Y has matrix P_Y P_X
    rng = random.Random(3)
    A = catalog.random_algebra(9, 4, 2)
    X, Y, x = rand_vec(rng, 2), rand_vec(rng, 2), rand_vec(rng, 4)
    composed = A.j_apply(X, A.j_apply(Y, x))
    assert composed == (A.j_of(Y) @ A.j_of(X)).vecmul(x)
    comm = V.sub(composed, A.j_apply(Y, A.j_apply(X, x)))
    assert comm == A.j_commutator(X, Y).vecmul(x)


def test_random_algebra_is_deterministic():
    assert catalog.random_algebra(7, 4, 2, 3) == catalog.random_algebra(7, 4, 2, 3)
    assert catalog.random_algebra(7, 4, 2, 3) != catalog.random_algebra(8, 4, 2, 3)
    for P in catalog.random_algebra(7, 4, 2, 3).j_maps:
        assert all(abs(x) <= 3 for x in P.flatten())


def test_catalog_lookup():
    assert catalog.get("h3") == catalog.heisenberg(1)
    assert catalog.get("abelian-2-1").j_maps == (Matrix.zeros(2),)
    assert catalog.get("random-3-4-2") == catalog.random_algebra(3, 4, 2)
    with pytest.raises(KeyError):
        catalog.get("no-such-algebra")


def test_scaled():
    A = catalog.heisenberg(1).scaled(2)
    assert A.j_maps[0] == Matrix([[0, 2], [-2, 0]])
