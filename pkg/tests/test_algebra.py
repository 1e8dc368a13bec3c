from fractions import Fraction
from math import factorial

import pytest

from edgesimple import algebra as alg
from edgesimple import linalg
from edgesimple.errors import DegreeExceeds, DegreeOutOfRange, NotInfrequent, NotSimple
from edgesimple.generators import cross, cube, double_cone, prism, pyramid, simplex
from edgesimple.gh import gh_vector
from edgesimple.poly import DiffPoly, MultiPoly
from edgesimple.resolution import standard_resolution
from edgesimple.volume import volume_polynomial


@pytest.fixture(scope="module")
def square():
    return alg.build_algebra(cube(2))


@pytest.fixture(scope="module")
def pyr3():
    R = standard_resolution(pyramid(cube(3)))
    return alg.build_algebra(R.resolved), R


@pytest.fixture(scope="module")
def sqpyr():
    R = standard_resolution(pyramid(cube(2)))
    return alg.build_algebra(R.resolved), R


@pytest.mark.parametrize("p,dims", [
    (cube(2), (1, 2, 1)),
    (cube(3), (1, 3, 3, 1)),
    (prism(simplex(2)), (1, 2, 2, 1)),
    (simplex(1), (1, 1)),
    (simplex(4), (1, 1, 1, 1, 1)),
], ids=lambda x: getattr(x, "label", str(x)))
def test_both_presentations(p, dims):
    A = alg.build_algebra(p)
    assert A.dims == dims
    assert alg.build_face_ring(p, A).dims == dims


def test_nonsimple_rejected():
    with pytest.raises(NotSimple):
        alg.build_algebra(pyramid(cube(2)))


def test_pairing_nonsingular(pyr3):
    A, _ = pyr3
    for k in range(A.d + 1):
        P = A.pairing_matrix(k)
        assert len(P) == A.dim(k) == A.dim(A.d - k)
        assert linalg.rank(P) == A.dim(k)


def test_reduction_respects_relations(square):
    # d_{+x} - d_{-x} acts as zero on Vol, so it is zero in A
    assert square.coords(DiffPoly.linear([1, 0, -1, 0])) == [0, 0]
    a = square.coords(DiffPoly.var(4, 0))
    b = square.coords(DiffPoly.var(4, 2))
    assert a == b


def test_lefschetz_weights():
    assert alg.lefschetz_weights(cube(2)) == DiffPoly.linear([1, 1, 0, 0])
    assert alg.lefschetz_weights(cube(3, centered=True)) == DiffPoly.linear([1] * 6)
    R = standard_resolution(pyramid(cube(2)))
    L = alg.lefschetz_weights(R)
    assert L.terms[tuple(int(j == 5) for j in range(6))] == 1


def test_hard_lefschetz_cube3():
    A = alg.build_algebra(cube(3))
    rows = alg.hard_lefschetz_check(A, alg.lefschetz_weights(cube(3)))
    assert [(r.k, r.rank) for r in rows] == [(0, 1), (1, 3)]
    assert all(r.passed for r in rows)


def test_lefschetz_delta_not_full_rank(sqpyr):
    A, R = sqpyr
    rows = alg.hard_lefschetz_check(A, alg.lefschetz_weights(R))
    assert rows[1].rank == 2 and not rows[1].passed


def test_hodge_riemann_square(square):
    L = alg.lefschetz_weights(cube(2))
    prim = alg.primitive_space(square, L, 1)
    alpha = DiffPoly.linear([1, -1, 0, 0])
    assert prim.dim == 1 and prim.contains(square.coords(alpha))
    assert -(alpha * alpha).apply(square.vol).evaluate([0] * 4) == 2
    assert alg.hodge_riemann_check(square, L, 1).passed


def test_hodge_riemann_degree_zero_is_volume():
    p = cube(3)
    A = alg.build_algebra(p)
    L = alg.lefschetz_weights(p)
    row = alg.hodge_riemann_check(A, L, 0)
    assert row.gram == [[factorial(3) * 1]]
    rows = [alg.hodge_riemann_check(A, L, k) for k in range(2)]
    assert [r.dim for r in rows] == [1, 2]
    assert all(r.passed for r in rows)


def test_primitive_degree_range(square):
    with pytest.raises(DegreeOutOfRange):
        alg.primitive_space(square, alg.lefschetz_weights(cube(2)), 2)


def test_inserted_ideal(pyr3):
    A, R = pyr3
    assert alg.inserted_ideal(A, R, 0).dim == 0
    assert alg.inserted_ideal(A, R, 1).dim == 1
    C = alg.build_algebra(cube(3))
    RC = standard_resolution(cube(3))
    C2 = alg.build_algebra(RC.resolved)
    assert all(alg.inserted_ideal(C2, RC, k).dim == 0 for k in range(1, 4))
    assert C.dims == C2.dims


def test_kernel_theorem(pyr3, sqpyr):
    A, R = pyr3
    rows = alg.theorem_ker_check(A, R)
    assert [(r.k, r.dim_kernel, r.dim_ideal, r.equal) for r in rows] == [(0, 0, 0, True), (1, 1, 1, True)]
    A, R = sqpyr
    assert [(r.k, r.dim_kernel, r.equal) for r in alg.theorem_ker_check(A, R)] == [(0, 0, True)]


def test_kernel_theorem_two_apexes():
    R = standard_resolution(double_cone())
    A = alg.build_algebra(R.resolved)
    rows = alg.theorem_ker_check(A, R)
    assert rows[1].dim_kernel == rows[1].dim_ideal == 2 and rows[1].equal
    assert alg.indep_check(A, R) == [(1, 2, 2)]


def test_kernel_needs_infrequent():
    R = standard_resolution(cross(3))
    A = alg.build_algebra(R.resolved)
    with pytest.raises(NotInfrequent):
        alg.theorem_ker_check(A, R)
    assert alg.theorem_ker_check(A, R, explore=True)


def test_inserted_facets_killed_by_delta(pyr3, sqpyr):
    for A, R in (pyr3, sqpyr):
        assert alg.inserted_annihilates(A, R)


def test_restriction_dimensions(pyr3):
    A, _ = pyr3
    for g, k, dim, h in alg.restriction_dims(A):
        assert dim == h, (g, k)


def test_divisible_by(pyr3):
    A, R = pyr3
    g = R.inserted_facets[0]
    d_g = DiffPoly.var(A.n, g)
    res = alg.divisible_by(A, d_g, g)
    assert res.divisible and res.quotient == DiffPoly.one(A.n)
    L = alg.lefschetz_weights(R)
    ker = linalg.nullspace(A.operator_matrix(L, 1), A.dim(1))
    assert len(ker) == 1
    res = alg.divisible_by(A, ker[0], g, k=1)
    assert res.divisible and res.quotient.order == 0
    other = next(j for j in range(A.n) if j != g)
    assert not alg.divisible_by(A, A.coords(DiffPoly.var(A.n, other)), g, k=1).divisible


def test_embedding_and_tail(pyr3, sqpyr):
    A, R = pyr3
    rep = alg.verify_embedding_and_tail(A, R, gh_vector(R.original))
    assert rep.passed and rep.gh_head == [1, 3, 3] and rep.h_tail == [3, 3, 1]
    A, R = sqpyr
    rep = alg.verify_embedding_and_tail(A, R, gh_vector(R.original))
    assert rep.passed and rep.gh_head == [1, 2] and rep.h_tail == [2, 1]


def test_comm_identity(pyr3):
    A, R = pyr3
    assert alg.comm_identity(A, R, gh_vector(R.original)) == [(0, 1, 1, 0), (1, 4, 3, 1)]


def test_relating_operator_examples():
    vol = volume_polynomial(cube(2))
    d0 = DiffPoly.var(4, 0)
    assert alg.find_relating_operator(d0.apply(vol), vol) == d0
    assert alg.find_relating_operator(vol, vol) == DiffPoly.one(4)
    P = MultiPoly.var(4, 0) ** 2
    assert alg.find_relating_operator(P, vol) is None
    w = alg.annihilator_witness(P, vol)
    assert w is not None and not w.apply(vol) and w.apply(P)


def test_relating_operator_recovers_products():
    p = cube(3)
    vol = volume_polynomial(p)
    beta = DiffPoly.monomial((1, 1, 0, 0, 0, 0))
    found = alg.find_relating_operator(beta.apply(vol), vol)
    assert found is not None and found.apply(vol) == beta.apply(vol)
    assert alg.annihilator_witness(beta.apply(vol), vol) is None


def test_relating_operator_degree():
    vol = volume_polynomial(cube(2))
    with pytest.raises(DegreeExceeds):
        alg.find_relating_operator(vol * vol, vol)
    assert alg.find_relating_operator(MultiPoly.zero(4), vol) == DiffPoly.zero(4)


def test_volume_contract_on_resolutions():
    for p in [pyramid(cube(2)), pyramid(cube(3)), double_cone()]:
        sigma = standard_resolution(p).resolved
        rep = alg.check_volume_contract(sigma)
        assert rep.ok and rep.value == rep.oracle
        assert rep.value > 0
    assert alg.check_volume_contract(cube(3)).value == Fraction(1)
