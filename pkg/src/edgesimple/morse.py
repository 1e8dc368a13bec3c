"""Morse theory on simple polytopes: indices, census and separatrix operators.

For a general linear function l the index of a vertex is the number of edges
going down from it.  The separatrix of v is the face spanned by those edges;
its operator is the product of d_G over the facets containing it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .algebra import GradedAlgebra
from .errors import DegreeMismatch, NotGeneral, VerificationError
from .geometry import Polytope, dot, require_geometry
from .lattice import simplicity_class
from .poly import DiffPoly


@dataclass(frozen=True)
class GeneralFunctional:
    coefficients: tuple[Fraction, ...]

    def __call__(self, point: Sequence) -> Fraction:
        return dot(self.coefficients, point)

    def __neg__(self) -> "GeneralFunctional":
        return GeneralFunctional(tuple(-c for c in self.coefficients))


def is_general(p: Polytope, l: GeneralFunctional) -> bool:
    values = [l(v) for v in p.vertices]
    return len(set(values)) == len(values)


def general_linear_function(p: Polytope) -> GeneralFunctional:
    """First l_N = (1, N, ..., N^{d-1}), N = 2, 3, ..., injective on vertices."""
    p = require_geometry(p)
    N = 2
    while True:
        l = GeneralFunctional(tuple(Fraction(N) ** i for i in range(p.dim)))
        if is_general(p, l):
            return l
        N += 1


def functional_family(p: Polytope, count: int) -> list[GeneralFunctional]:
    """Deterministic general functionals with varied signs and orderings.

    Seed s picks N = 2 + s // 2^d, a sign pattern from the low bits of s and a
    cyclic shift of the powers N^1 .. N^d; candidates that tie two vertices
    are skipped.
    """
    p = require_geometry(p)
    d = p.dim
    out: list[GeneralFunctional] = []
    s = 0
    while len(out) < count:
        N = 2 + s // (1 << d)
        coefs = []
        for i in range(d):
            sign = -1 if (s >> i) & 1 else 1
            coefs.append(sign * Fraction(N) ** ((i + s) % d + 1))
        l = GeneralFunctional(tuple(coefs))
        if is_general(p, l) and l not in out:
            out.append(l)
        s += 1
    return out


def down_neighbors(p: Polytope, l: GeneralFunctional, v: int) -> list[int]:
    lv = l(p.vertices[v])
    out = []
    for u in p.lattice.neighbors(v):
        lu = l(p.vertices[u])
        if lu == lv:
            raise NotGeneral(f"l is constant on the edge {v}-{u}")
        if lu < lv:
            out.append(u)
    return out


def vertex_index(p: Polytope, l: GeneralFunctional, v: int) -> int:
    return len(down_neighbors(p, l, v))


def index_census(p: Polytope, l: GeneralFunctional) -> dict[int, list[int]]:
    """Vertices grouped by Morse index; sizes equal h for simple p."""
    p = require_geometry(p)
    census: dict[int, list[int]] = {k: [] for k in range(p.dim + 1)}
    for v in range(p.n_vertices):
        census[vertex_index(p, l, v)].append(v)
    if simplicity_class(p).simple:
        sizes = tuple(len(census[k]) for k in range(p.dim + 1))
        if sizes != tuple(p.lattice.h_vector()):
            raise VerificationError(f"index census {sizes} differs from h")
    return census


def census_sizes(census: dict[int, list[int]]) -> tuple[int, ...]:
    return tuple(len(census[k]) for k in sorted(census))


def census_to_json(p: Polytope, l: GeneralFunctional, census: dict[int, list[int]]) -> list[dict]:
    return [{"vertex": v, "index": k} for k in sorted(census) for v in census[k]]


@dataclass(frozen=True)
class SeparatrixRecord:
    vertex: int
    morse_index: int
    face: frozenset
    facets: tuple[int, ...]
    operator: DiffPoly

    def to_json(self) -> dict:
        exps = next(iter(self.operator.terms))
        return {
            "vertex": self.vertex,
            "index": self.morse_index,
            "face_vertices": sorted(self.face),
            "operator_exps": list(exps),
        }


@dataclass
class SeparatrixBasis:
    functional: GeneralFunctional
    records: list[SeparatrixRecord]
    coords: dict[int, list[Fraction]]   # vertex -> coordinates in A^{d-k}

    def by_order(self, order: int) -> list[SeparatrixRecord]:
        return [r for r in self.records if r.operator.order == order]

    def to_json(self) -> list[dict]:
        return [r.to_json() for r in self.records]


def separatrix(p: Polytope, l: GeneralFunctional, v: int) -> SeparatrixRecord:
    L = p.lattice
    down = down_neighbors(p, l, v)
    fi = L.closure([v] + down)
    facets = tuple(j for j, inc in enumerate(p.incidence) if L.faces[fi] <= inc)
    n = len(p.facets)
    exps = tuple(int(j in facets) for j in range(n))
    return SeparatrixRecord(v, len(down), L.faces[fi], facets, DiffPoly.monomial(exps))


def separatrix_basis(p: Polytope, l: GeneralFunctional, A: GradedAlgebra) -> SeparatrixBasis:
    """Separatrix operators, checked independent in every degree of A."""
    p = require_geometry(p)
    records = [separatrix(p, l, v) for v in range(p.n_vertices)]
    coords = {r.vertex: A.coords(r.operator) for r in records}
    for order in range(p.dim + 1):
        vecs = [coords[r.vertex] for r in records if r.operator.order == order]
        if len(vecs) != A.dim(order) or (vecs and linalg.rank(vecs) != len(vecs)):
            raise VerificationError(f"separatrix operators of order {order} are not a basis")
    return SeparatrixBasis(l, records, coords)


@dataclass
class Decomposition:
    coefficients: dict[int, Fraction]   # vertex -> coefficient of its separatrix
    highest: int | None


def separatrix_decomposition(p: Polytope, basis: SeparatrixBasis, A: GradedAlgebra,
                             alpha: DiffPoly, order: int | None = None) -> Decomposition:
    """Exact expansion of alpha in the separatrix operators of its degree."""
    if not alpha:
        return Decomposition({}, None)
    if not alpha.is_homogeneous():
        raise DegreeMismatch("alpha must be homogeneous")
    k = alpha.order
    if order is not None and order != k:
        raise DegreeMismatch(f"alpha has order {k}, expected {order}")
    recs = basis.by_order(k)
    M = linalg.transpose([basis.coords[r.vertex] for r in recs], A.dim(k))
    x = linalg.solve(M, A.coords(alpha))
    if x is None:
        raise VerificationError("separatrix operators do not span this degree")
    coefs = {r.vertex: c for r, c in zip(recs, x) if c}
    l = basis.functional
    top = {r.vertex: max(l(p.vertices[u]) for u in r.face) for r in recs}
    highest = max(coefs, key=top.__getitem__, default=None)
    return Decomposition(coefs, highest)


def biased_functional(p: Polytope, facet: int) -> GeneralFunctional:
    """A general functional for which the vertices of a facet lie below all others."""
    p = require_geometry(p)
    g = general_linear_function(p)
    n = p.facets[facet].normal
    H = p.facets[facet].support
    off = [dot(n, v) for v in p.vertices if dot(n, v) != H]
    if not off:
        return g
    gap = min(H - x for x in off)
    vals = [g(v) for v in p.vertices]
    M = (max(vals) - min(vals)) / gap + 1
    while True:
        l = GeneralFunctional(tuple(c - M * a for c, a in zip(g.coefficients, n)))
        if is_general(p, l):
            return l
        M += 1


def reversal_check(p: Polytope, l: GeneralFunctional) -> bool:
    """Negating l sends index k to d - k at every vertex."""
    d = p.dim
    return all(vertex_index(p, -l, v) == d - vertex_index(p, l, v) for v in range(p.n_vertices))

