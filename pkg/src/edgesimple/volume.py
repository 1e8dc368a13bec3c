"""Volume of a simple polytope as a polynomial in its support numbers.

At a simple vertex v with facets I the position is linear in (H_i)_{i in I}.
Pick a direction c and write c = sum gamma_i n_i over the normals at v; then
<c, v(H)> = sum gamma_i H_i, and Lawrence's signed decomposition gives

    Vol(H) = 1/d! * sum_v (sum_{i in I_v} gamma_i H_i)^d / (|det N_I| prod gamma_i)

as an exact identity on the whole chamber of analogous polytopes.  The
direction c must give nonzero gamma at every vertex.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial, prod

from . import linalg
from .errors import NotSimple
from .geometry import Polytope, dot, require_geometry
from .lattice import simplicity_class
from .poly import DiffPoly, MultiPoly


def _vertex_coefficients(p: Polytope, c: list[Fraction]):
    rows = []
    for v, fs in enumerate(p.vertex_facets):
        I = sorted(fs)
        N = [list(p.facets[i].normal) for i in I]
        gamma = linalg.solve(linalg.transpose(N), c)
        if gamma is None or any(g == 0 for g in gamma):
            return None
        rows.append((I, gamma, abs(linalg.det(N))))
    return rows


def lawrence_direction(p: Polytope) -> tuple[list[Fraction], list]:
    """First c = (1, N, N^2, ...) with all vertex coefficients nonzero."""
    d = p.dim
    N = 2
    while True:
        c = [Fraction(N) ** i for i in range(d)]
        rows = _vertex_coefficients(p, c)
        if rows is not None:
            return c, rows
        N += 1


def require_simple(p) -> Polytope:
    p = require_geometry(p)
    if not simplicity_class(p).simple:
        raise NotSimple(f"{p.label or 'polytope'} is not simple")
    return p


def volume_polynomial(sigma: Polytope) -> MultiPoly:
    sigma = require_simple(sigma)
    d, n = sigma.dim, len(sigma.facets)
    _, rows = lawrence_direction(sigma)
    total = MultiPoly.zero(n)
    for I, gamma, detN in rows:
        coefs = [Fraction(0)] * n
        for i, g in zip(I, gamma):
            coefs[i] = g
        lin = MultiPoly.linear(coefs)
        weight = Fraction(1, factorial(d)) / (detN * prod(gamma))
        total = total + (lin ** d).scale(weight)
    return total


def support_vector(p: Polytope) -> list[Fraction]:
    return [f.support for f in p.facets]


def translation_operators(sigma: Polytope) -> list[DiffPoly]:
    """L_a for the d coordinate points a = e_i: sum_G <n_G, e_i> d_G."""
    return [DiffPoly.linear([f.normal[i] for f in sigma.facets]) for i in range(sigma.dim)]


def translate_supports(p: Polytope, shift) -> list[Fraction]:
    """Support numbers of p + shift."""
    return [f.support + dot(f.normal, shift) for f in p.facets]
