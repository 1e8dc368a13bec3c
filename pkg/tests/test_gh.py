from fractions import Fraction

import pytest

from edgesimple import gh
from edgesimple.errors import BadRange, NotSimpleInEdges
from edgesimple.generators import cross, cube, pyramid, simplex
from edgesimple.lattice import simplicity_class
from oracles import brute_ih, gh_hand_d3, gh_hand_d4_simple_in_edges


def test_named_values():
    assert gh.gh_vector(cube(3)) == (1, 3, 3, 1)
    assert gh.gh_vector(pyramid(cube(2))) == (1, 2, 2, 1)
    assert gh.gh_vector(pyramid(cube(3))) == (1, 3, 3, 3, 1)


def test_fixture_and_brute_force(zoo, zoo_oracles):
    for p in zoo:
        got = list(gh.gh_vector(p))
        assert got == zoo_oracles[p.label]["gh"], p.label
        assert got == brute_ih([sorted(f) for f in p.facet_vertex_sets], p.n_vertices), p.label


def test_hand_expansions(zoo):
    for p in zoo:
        f = p.lattice.f_vector()
        if p.dim == 3:
            assert list(gh.gh_vector(p)) == gh_hand_d3(f), p.label
        if p.dim == 4 and simplicity_class(p).simple_in_edges:
            assert list(gh.gh_vector(p)) == gh_hand_d4_simple_in_edges(f), p.label


def test_memo_matches_plain(zoo):
    for p in zoo:
        if len(p.lattice) <= 200:
            assert gh.ih_polynomial(p, memo=False) == gh.ih_polynomial(p)


def test_simple_equals_h(zoo):
    for p in zoo:
        if simplicity_class(p).simple:
            assert gh.gh_vector(p) == p.lattice.h_vector()


def test_ig():
    assert gh.ig_polynomial(simplex(3)).coefficients == (1, 0)
    assert gh.ig_polynomial(cube(2)).coefficients == (1, 1)
    assert gh.ig_polynomial(cube(3)).coefficients == (1, 2)
    assert gh.ig_polynomial(simplex(1)).coefficients == (1,)


def test_export():
    assert gh.ih_polynomial(cube(2)).to_json() == {"dim": 2, "coefficients": [1, 2, 1]}


def test_inequality_suite():
    rep = gh.inequality_suite(pyramid(cube(3)))
    assert rep.passed
    assert all(v is True for k, v in rep.clauses.items() if k != "e_simple")
    assert gh.inequality_suite(cube(4)).clauses["e_simple"] is True
    with pytest.raises(NotSimpleInEdges):
        gh.inequality_suite(cross(4))


def test_icosahedron_inequalities(zoo_by_label):
    h = zoo_by_label["icosahedron"].lattice.h_vector()
    assert gh.ineq2(h) and gh.ineq3(h)
    assert gh.inequality_suite(zoo_by_label["icosahedron"]).passed


def test_khovanskii():
    assert gh.khovanskii_bound(4, 1, 2) == 6
    assert gh.khovanskii_bound(5, 1, 2) == 5
    assert gh.average_incidence(cube(4), 1, 2) == 4
    assert gh.khovanskii_bound(7, 1, 2) == Fraction(14, 3)
    for bad in [(3, 1, 2), (4, 2, 2), (4, 0, 1), (6, 2, 1)]:
        with pytest.raises(BadRange):
            gh.khovanskii_bound(*bad)
