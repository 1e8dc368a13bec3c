from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from edgesimple.algebra import check_volume_contract
from edgesimple.errors import NotSimple
from edgesimple.generators import cube, pyramid, simplex
from edgesimple.poly import DiffPoly, MultiPoly
from edgesimple.volume import support_vector, translate_supports, volume_polynomial
from oracles import shoelace, square_vertices

pos = st.builds(Fraction, st.integers(1, 20), st.integers(1, 7))
anyrat = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 7))


def test_square_polynomial():
    H = [MultiPoly.var(4, i) for i in range(4)]
    assert volume_polynomial(cube(2)) == (H[0] + H[2]) * (H[1] + H[3])


def test_segment():
    assert volume_polynomial(simplex(1)) == MultiPoly.linear([1, 1])


@given(anyrat, anyrat, pos, pos)
def test_square_against_shoelace(a, b, w, h):
    H = [a, b, w - a, h - b]
    vol = volume_polynomial(cube(2))
    assert vol.evaluate(H) == shoelace(square_vertices(H))


def test_translation_invariance_square():
    vol = volume_polynomial(cube(2))
    assert not DiffPoly.linear([1, 0, -1, 0]).apply(vol)


@given(st.lists(anyrat, min_size=3, max_size=3))
def test_translation_keeps_value(shift):
    p = cube(3)
    vol = volume_polynomial(p)
    assert vol.evaluate(translate_supports(p, shift)) == vol.evaluate(support_vector(p))


def test_degree():
    assert volume_polynomial(cube(3)).degree == 3


def test_nonsimple_rejected():
    with pytest.raises(NotSimple):
        volume_polynomial(pyramid(cube(2)))


@pytest.mark.parametrize("p", [simplex(2), cube(3), cube(3, centered=True), simplex(4)], ids=lambda p: p.label)
def test_contract(p):
    assert check_volume_contract(p).ok
