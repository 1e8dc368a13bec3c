"""Generator zoo of exact test polytopes."""
from __future__ import annotations

from fractions import Fraction
from itertools import product

from .errors import PolytopeError, UnsupportedDim
from .geometry import MAX_DIM, CombPolytope, Polytope, facets_from_vertices, polytope_from_halfspaces, require_geometry


def _check_dim(d: int, low: int = 1) -> None:
    if not low <= d <= MAX_DIM:
        raise UnsupportedDim(f"dimension {d} outside {low}..{MAX_DIM}")


def simplex(d: int) -> Polytope:
    _check_dim(d)
    pts = [[0] * d] + [[int(i == j) for j in range(d)] for i in range(d)]
    return facets_from_vertices(pts, d, label=f"simplex({d})")


def cube(d: int, centered: bool = False) -> Polytope:
    """[0,1]^d, or [-1,1]^d when centered."""
    _check_dim(d)
    lo = -1 if centered else 0
    normals, supports = [], []
    for i in range(d):
        e = [int(i == j) for j in range(d)]
        normals += [e, [-x for x in e]]
        supports += [1, -lo]
    label = f"cube({d})" + (" centered" if centered else "")
    p = polytope_from_halfspaces(normals, supports, label=label)
    # re-run the hull so facet order matches every other generator
    return facets_from_vertices(sorted(p.vertices), d, label=label)


def cross(d: int) -> Polytope:
    _check_dim(d)
    pts = []
    for i in range(d):
        for s in (1, -1):
            pts.append([s * int(i == j) for j in range(d)])
    return facets_from_vertices(pts, d, label=f"cross({d})")


def _centroid(p: Polytope) -> list[Fraction]:
    n = len(p.vertices)
    return [sum(v[i] for v in p.vertices) / n for i in range(p.dim)]


def pyramid(base: Polytope) -> Polytope:
    base = require_geometry(base)
    _check_dim(base.dim + 1, 2)
    pts = [list(v) + [0] for v in base.vertices] + [_centroid(base) + [1]]
    return facets_from_vertices(pts, base.dim + 1, label=f"pyramid({base.label})")


def bipyramid(base: Polytope) -> Polytope:
    base = require_geometry(base)
    _check_dim(base.dim + 1, 2)
    c = _centroid(base)
    pts = [list(v) + [0] for v in base.vertices] + [c + [1], c + [-1]]
    return facets_from_vertices(pts, base.dim + 1, label=f"bipyramid({base.label})")


def prism(base: Polytope) -> Polytope:
    base = require_geometry(base)
    _check_dim(base.dim + 1, 2)
    pts = [list(v) + [h] for h in (0, 1) for v in base.vertices]
    return facets_from_vertices(pts, base.dim + 1, label=f"prism({base.label})")


def icosahedron() -> CombPolytope:
    """Combinatorial icosahedron: top 0, upper ring 1-5, lower ring 6-10, bottom 11."""
    up = [1 + i for i in range(5)]
    lo = [6 + i for i in range(5)]
    facets = []
    for i in range(5):
        j = (i + 1) % 5
        facets += [
            (0, up[i], up[j]),
            (up[i], up[j], lo[i]),
            (up[j], lo[i], lo[j]),
            (11, lo[i], lo[j]),
        ]
    return CombPolytope(3, 12, tuple(frozenset(f) for f in facets), label="icosahedron")


# skew applied to the upper cone; generic enough that the equator is simple
_SKEW = ((1, Fraction(1, 3), 0), (0, 1, Fraction(1, 4)), (Fraction(1, 5), 0, 1))


def double_cone(height: int = 3) -> Polytope:
    """Two cube cones glued along a generic equator (d = 4).

    The lower cone has apex 0 and cross-sections t*[-1,1]^3; the upper cone
    has apex height*e4 and cross-sections over a skewed cube.  Both apexes
    have a 3-cube as link, every other vertex is simple and no facet holds
    both apexes.
    """
    normals, supports = [], []
    for i in range(3):
        for s in (1, -1):
            e = [s * int(i == j) for j in range(3)]
            normals.append(e + [-1])
            supports.append(0)
    for row in _SKEW:
        for s in (1, -1):
            normals.append([s * x for x in row] + [1])
            supports.append(height)
    return polytope_from_halfspaces(normals, supports, label="double_cone")


GENERATORS = {
    "simplex": simplex,
    "cube": cube,
    "cross": cross,
    "pyramid": pyramid,
    "bipyramid": bipyramid,
    "prism": prism,
    "icosahedron": icosahedron,
    "double_cone": double_cone,
}


def generate(name: str, *args, **kwargs):
    try:
        fn = GENERATORS[name]
    except KeyError:
        raise PolytopeError(f"unknown generator {name!r}") from None
    return fn(*args, **kwargs)


def builtin_zoo() -> list:
    """Geometric members up to dimension 4 plus the icosahedron."""
    square = cube(2)
    triangle = simplex(2)
    c3 = cube(3)
    zoo = [simplex(d) for d in range(1, 5)]
    zoo += [cube(d) for d in range(2, 5)]
    zoo += [
        prism(triangle), prism(square), cross(3), cross(4),
        pyramid(square), pyramid(c3), pyramid(cross(3)),
        bipyramid(square), bipyramid(c3), double_cone(),
        icosahedron(),
    ]
    return zoo
