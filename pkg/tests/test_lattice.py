import pytest
from hypothesis import given
from hypothesis import strategies as st

from edgesimple.errors import LengthMismatch, NotEulerian, PolytopeError
from edgesimple.generators import cube, double_cone, icosahedron, prism, pyramid, simplex
from edgesimple.geometry import CombPolytope
from edgesimple.lattice import (FaceLattice, SimplicityKind, combinatorially_equivalent, dual_fan,
                                f_from_h, face_sublattice, h_from_f, link_lattice, simplicity_class)
from oracles import brute_h_vector


def test_vectors_match_oracle_fixture(zoo, zoo_oracles):
    for p in zoo:
        ref = zoo_oracles[p.label]
        assert list(p.lattice.f_vector()) == ref["f"], p.label
        assert list(p.lattice.h_vector()) == ref["h"], p.label


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=7))
def test_f_h_inverse(h):
    assert list(h_from_f(f_from_h(h))) == h
    assert list(f_from_h(h_from_f(h))) == h
    assert list(h_from_f(h)) == brute_h_vector(h)


def test_length_mismatch():
    with pytest.raises(LengthMismatch):
        h_from_f([1, 2, 3], d=4)


def test_simplicity_classes(zoo_by_label):
    expect = {
        "cube(3)": SimplicityKind.SIMPLE,
        "pyramid(cube(2))": SimplicityKind.SIMPLE_IN_EDGES,
        "pyramid(cube(3))": SimplicityKind.SIMPLE_IN_EDGES,
        "double_cone": SimplicityKind.SIMPLE_IN_EDGES,
        "icosahedron": SimplicityKind.SIMPLE_IN_EDGES,
        "cross(4)": SimplicityKind.GENERAL,
        "bipyramid(cube(3))": SimplicityKind.GENERAL,
    }
    for label, kind in expect.items():
        assert simplicity_class(zoo_by_label[label]).kind is kind, label
    assert simplicity_class(zoo_by_label["pyramid(cube(3))"]).nonsimple == (8,)
    assert len(simplicity_class(zoo_by_label["double_cone"]).nonsimple) == 2


def test_icosahedron_h():
    assert icosahedron().lattice.h_vector() == (1, -7, 17, 1)


def test_links():
    L = pyramid(cube(3)).lattice
    apex = L.vertex_face(8)
    link = link_lattice(L, apex)
    assert link.f_vector() == cube(3).lattice.f_vector()
    assert link.dim == 3
    edge = L.faces_of_dim(1)[0]
    assert link_lattice(L, edge).dim == 2


def test_face_sublattice():
    L = cube(3).lattice
    facet = L.facets[0]
    assert face_sublattice(L, facet).f_vector() == (4, 4, 1)
    assert face_sublattice(L, L.bottom).dim == -1


def test_lattice_is_graded_and_eulerian(zoo):
    for p in zoo:
        L = p.lattice
        assert L.dims[L.bottom] == -1 and L.dims[L.top] == p.dim
        assert sum((-1) ** k * x for k, x in enumerate(L.f_vector())) == 1


def test_non_eulerian_rejected():
    # two triangles glued along an edge, passed off as a 2-polytope
    with pytest.raises((NotEulerian, PolytopeError)):
        FaceLattice.from_facets(4, [frozenset({0, 1}), frozenset({1, 2}), frozenset({2, 0}),
                                    frozenset({1, 3}), frozenset({3, 2})], 2)


def test_comb_polytope_validation():
    with pytest.raises(PolytopeError):
        CombPolytope(2, 3, (frozenset({0, 1}), frozenset({0, 1, 2})))
    with pytest.raises(PolytopeError):
        CombPolytope(2, 3, (frozenset({0, 1}), frozenset({1, 2})))


def test_combinatorial_equivalence():
    assert combinatorially_equivalent(prism(cube(2)), cube(3))
    assert not combinatorially_equivalent(prism(simplex(2)), cube(3))


def test_dual_fan_simplicial_iff_simple(zoo):
    for p in zoo:
        if isinstance(p, CombPolytope):
            continue
        fan = dual_fan(p)
        assert fan.simplicial == simplicity_class(p).simple, p.label
        assert len(fan.maximal_cones()) == p.n_vertices


def test_double_cone_is_infrequent_shape():
    p = double_cone()
    assert p.lattice.f_vector() == (28, 60, 44, 12, 1)
