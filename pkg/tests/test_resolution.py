from fractions import Fraction

import pytest

from edgesimple.errors import NotAVertex, NotSimpleInEdges
from edgesimple.generators import bipyramid, cross, cube, double_cone, prism, pyramid, simplex
from edgesimple.lattice import combinatorially_equivalent, simplicity_class
from edgesimple.resolution import cut_vertex, is_infrequent, standard_resolution, verify_hcalc


def test_cut_simplex_vertex_gives_prism():
    p = cut_vertex(simplex(3), 0)
    assert p.lattice.f_vector() == (6, 9, 5, 1)
    assert combinatorially_equivalent(p, prism(simplex(2)))


def test_cut_bad_index():
    with pytest.raises(NotAVertex):
        cut_vertex(cube(2), 9)


def test_square_pyramid_resolution():
    R = standard_resolution(pyramid(cube(2)))
    assert combinatorially_equivalent(R.resolved, cube(3))
    assert R.inserted == {4: 5}
    apex = pyramid(cube(2)).vertices[4]
    n = R.resolved.facets[5].normal
    assert R.delta_supports[5] == sum(a * b for a, b in zip(n, apex))
    assert R.delta_supports[5] > R.resolved.facets[5].support
    assert R.facet_map == (0, 1, 2, 3, 4)


def test_delta_supports_of_old_facets_are_unchanged():
    for p in [pyramid(cube(2)), pyramid(cube(3)), double_cone()]:
        R = standard_resolution(p)
        for j in R.facet_map:
            assert R.delta_supports[j] == R.resolved.facets[j].support
        for j in R.inserted_facets:
            assert R.delta_supports[j] > R.resolved.facets[j].support


def test_resolutions_are_simple():
    for p in [pyramid(cube(2)), pyramid(cube(3)), double_cone(), cross(3), bipyramid(cube(2))]:
        assert simplicity_class(standard_resolution(p).resolved).simple


def test_hcalc_residual_zero():
    for p in [pyramid(cube(2)), pyramid(cube(3)), double_cone(), cross(3), cube(3)]:
        rep = verify_hcalc(standard_resolution(p))
        assert rep.ok, (p.label, rep.residual)


def test_pyramid_cube3_resolution_vectors():
    R = standard_resolution(pyramid(cube(3)))
    assert R.resolved.lattice.h_vector() == (1, 4, 6, 4, 1)
    assert verify_hcalc(R).h_inserted == [(1, 3, 3, 1, 0)]


def test_general_input_rejected():
    with pytest.raises(NotSimpleInEdges):
        standard_resolution(cross(4))
    with pytest.raises(NotSimpleInEdges):
        standard_resolution(bipyramid(cube(3)))


def test_infrequency():
    assert is_infrequent(pyramid(cube(3)))
    assert is_infrequent(double_cone())
    assert is_infrequent(cube(3))
    w = is_infrequent(cross(3))
    assert not w
    assert len(w.vertices) == 2 and set(w.vertices) <= w.facet


def test_resolution_json():
    data = standard_resolution(pyramid(cube(2))).to_json()
    assert data["inserted"] == {"4": 5}
    assert data["delta_supports"][5] == "1"
    assert Fraction(data["sigma"]["vertices"][0][0]) == 0
