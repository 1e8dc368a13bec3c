"""Exact rational polytopes.

A :class:`Polytope` carries its V-representation together with every facet
functional in canonical scale (primitive integer outer normal) and the exact
vertex-facet incidence.  :class:`CombPolytope` holds incidence only and is
accepted by the lattice-level operations.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import factorial, gcd, lcm
from typing import Sequence

from . import linalg
from .errors import NoGeometry, NonExtremePoint, NotFullDimensional, PolytopeError, UnsupportedDim

MAX_DIM = 6

Point = tuple  # tuple[Fraction, ...]


def primitive(vec: Sequence) -> tuple[int, ...]:
    """Clear denominators and divide out the content, keeping direction."""
    ints = linalg.integer_row(vec)
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(x // g for x in ints)


def dot(a: Sequence, b: Sequence):
    return sum((x * y for x, y in zip(a, b)), 0)


def _int_det(M: list[list[int]]) -> int:
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    if n == 3:
        a, b, c = M
        return (a[0] * (b[1] * c[2] - b[2] * c[1])
                - a[1] * (b[0] * c[2] - b[2] * c[0])
                + a[2] * (b[0] * c[1] - b[1] * c[0]))
    A = [row[:] for row in M]
    sign, prev = 1, 1
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c]), None)
        if p is None:
            return 0
        if p != c:
            A[c], A[p] = A[p], A[c]
            sign = -sign
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                A[i][j] = (A[c][c] * A[i][j] - A[i][c] * A[c][j]) // prev
            A[i][c] = 0
        prev = A[c][c]
    return sign * A[n - 1][n - 1]


def _normal_through(points: list[tuple[int, ...]]) -> tuple[int, ...]:
    """Integer normal of the hyperplane through d points of Z^d (zero if degenerate)."""
    p0 = points[0]
    rows = [[x - y for x, y in zip(p, p0)] for p in points[1:]]
    d = len(p0)
    return tuple((-1) ** i * _int_det([r[:i] + r[i + 1:] for r in rows]) for i in range(d))


def affine_rank(points: Sequence[Sequence]) -> int:
    pts = list(points)
    if not pts:
        return -1
    p0 = pts[0]
    rows = [[Fraction(x) - Fraction(y) for x, y in zip(p, p0)] for p in pts[1:]]
    return linalg.rank(rows) if rows else 0


@dataclass(frozen=True)
class FacetData:
    normal: tuple[int, ...]
    support: Fraction


@dataclass(frozen=True, eq=False)
class Polytope:
    dim: int
    vertices: tuple[Point, ...]
    facets: tuple[FacetData, ...]
    incidence: tuple[frozenset, ...]
    label: str = ""

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def facet_vertex_sets(self) -> tuple[frozenset, ...]:
        return self.incidence

    @property
    def normals(self) -> list[tuple[int, ...]]:
        return [f.normal for f in self.facets]

    @property
    def supports(self) -> list[Fraction]:
        return [f.support for f in self.facets]

    @cached_property
    def vertex_facets(self) -> tuple[frozenset, ...]:
        out = [set() for _ in self.vertices]
        for j, inc in enumerate(self.incidence):
            for v in inc:
                out[v].add(j)
        return tuple(frozenset(s) for s in out)

    @cached_property
    def lattice(self):
        from .lattice import face_lattice

        return face_lattice(self)

    def vertex_index(self, point: Sequence) -> int:
        pt = tuple(Fraction(x) for x in point)
        try:
            return self.vertices.index(pt)
        except ValueError:
            return -1

    def support_of(self, normal: Sequence) -> Fraction:
        """max of <normal, x> over the polytope."""
        return max(dot(normal, v) for v in self.vertices)

    def with_label(self, label: str) -> "Polytope":
        return Polytope(self.dim, self.vertices, self.facets, self.incidence, label)


@dataclass(frozen=True, eq=False)
class CombPolytope:
    dim: int
    n_vertices: int
    facet_vertex_sets: tuple[frozenset, ...]
    label: str = ""

    def __post_init__(self):
        counts = [0] * self.n_vertices
        for f in self.facet_vertex_sets:
            for v in f:
                if not 0 <= v < self.n_vertices:
                    raise PolytopeError(f"facet refers to unknown vertex {v}")
                counts[v] += 1
        if self.dim >= 1 and any(c < self.dim for c in counts):
            raise PolytopeError("every vertex must lie in at least dim facets")
        fs = self.facet_vertex_sets
        for a, b in combinations(range(len(fs)), 2):
            if fs[a] <= fs[b] or fs[b] <= fs[a]:
                raise PolytopeError(f"facet {a} and facet {b} are nested")

    @cached_property
    def vertex_facets(self) -> tuple[frozenset, ...]:
        out = [set() for _ in range(self.n_vertices)]
        for j, inc in enumerate(self.facet_vertex_sets):
            for v in inc:
                out[v].add(j)
        return tuple(frozenset(s) for s in out)

    @cached_property
    def lattice(self):
        from .lattice import face_lattice

        return face_lattice(self)


def require_geometry(p) -> Polytope:
    if not isinstance(p, Polytope):
        raise NoGeometry(f"{getattr(p, 'label', 'input')!s} has no coordinates")
    return p


def _facet_sort_key(normal: tuple[int, ...]):
    lead = next(i for i, x in enumerate(normal) if x)
    return (normal[lead] < 0, lead, tuple(-x for x in normal))


def assemble(vertices: Sequence[Sequence], facets: Sequence[tuple[Sequence, Fraction]], label: str = "") -> Polytope:
    """Build and validate a polytope from vertices and (normal, support) pairs.

    Normals are brought to canonical scale here; facet order is preserved.
    """
    verts = tuple(tuple(Fraction(x) for x in v) for v in vertices)
    d = len(verts[0])
    fdata, inc = [], []
    for normal, support in facets:
        prim = primitive(normal)
        scale = Fraction(prim[next(i for i, x in enumerate(prim) if x)]) / Fraction(
            normal[next(i for i, x in enumerate(normal) if x)]
        )
        fdata.append(FacetData(prim, Fraction(support) * scale))
        inc.append(frozenset(i for i, v in enumerate(verts) if dot(prim, v) == fdata[-1].support))
    p = Polytope(d, verts, tuple(fdata), tuple(inc), label)
    validate(p)
    return p


def validate(p: Polytope) -> None:
    d = p.dim
    if not 1 <= d <= MAX_DIM:
        raise UnsupportedDim(f"dimension {d} outside 1..{MAX_DIM}")
    if len(set(p.vertices)) != len(p.vertices):
        raise PolytopeError("duplicate vertices")
    if affine_rank(p.vertices) != d:
        raise NotFullDimensional("vertices do not affinely span the ambient space")
    normals = set()
    for j, (fd, inc) in enumerate(zip(p.facets, p.incidence)):
        if fd.normal in normals:
            raise PolytopeError(f"facet {j} repeats a normal")
        normals.add(fd.normal)
        for i, v in enumerate(p.vertices):
            val = dot(fd.normal, v)
            if val > fd.support:
                raise PolytopeError(f"vertex {i} violates facet {j}")
            if (val == fd.support) != (i in inc):
                raise PolytopeError(f"incidence of facet {j} is inconsistent")
        if affine_rank([p.vertices[i] for i in inc]) != d - 1:
            raise PolytopeError(f"facet {j} does not span a hyperplane")
    for i, fs in enumerate(p.vertex_facets):
        if not fs or linalg.rank([list(p.facets[j].normal) for j in fs]) != d:
            raise NonExtremePoint(i)


def facets_from_vertices(points: Sequence[Sequence], d: int, label: str = "") -> Polytope:
    """Exact convex hull of rational points by exhaustive hyperplane search.

    Every input point must be a vertex; see :func:`convex_hull` to discard
    the others first.
    """
    if not 1 <= d <= MAX_DIM:
        raise UnsupportedDim(f"dimension {d} outside 1..{MAX_DIM}")
    pts = [tuple(Fraction(x) for x in p) for p in points]
    if any(len(p) != d for p in pts):
        raise PolytopeError("point dimension mismatch")
    first_seen: dict = {}
    for i, p in enumerate(pts):
        if p in first_seen:
            raise NonExtremePoint(i, f"input point {i} duplicates point {first_seen[p]}")
        first_seen[p] = i
    if len(pts) < d + 1 or affine_rank(pts) < d:
        raise NotFullDimensional("points do not affinely span the ambient space")
    den = 1
    for p in pts:
        for x in p:
            den = lcm(den, x.denominator)
    ipts = [tuple(int(x * den) for x in p) for p in pts]
    m = len(pts)

    found: dict[tuple[int, ...], int] = {}
    if d == 1:
        xs = [p[0] for p in ipts]
        found[(1,)] = 1 << xs.index(max(xs))
        found[(-1,)] = 1 << xs.index(min(xs))
    else:
        masks: list[int] = []
        for combo in combinations(range(m), d):
            cmask = 0
            for i in combo:
                cmask |= 1 << i
            if any(cmask & fm == cmask for fm in masks):
                continue
            normal = _normal_through([ipts[i] for i in combo])
            if not any(normal):
                continue
            b = dot(normal, ipts[combo[0]])
            pos = neg = False
            mask = 0
            for i, q in enumerate(ipts):
                s = dot(normal, q) - b
                if s > 0:
                    pos = True
                elif s < 0:
                    neg = True
                else:
                    mask |= 1 << i
                if pos and neg:
                    break
            if pos and neg:
                continue
            if pos:
                normal = tuple(-x for x in normal)
            masks.append(mask)
            found[primitive(normal)] = mask

    facet_masks = sorted(found.items(), key=lambda kv: _facet_sort_key(kv[0]))
    incidence = [frozenset(i for i in range(m) if mask >> i & 1) for _, mask in facet_masks]
    # a point is a vertex iff the facets through it meet in that point alone
    for i in range(m):
        through = [inc for inc in incidence if i in inc]
        common = frozenset.intersection(*through) if through else frozenset(range(m))
        if common != {i}:
            raise NonExtremePoint(i)
    facets = [(normal, max(dot(normal, p) for p in pts)) for normal, _ in facet_masks]
    return assemble(pts, facets, label)


def convex_hull(points: Sequence[Sequence], d: int, label: str = "") -> Polytope:
    """Hull of arbitrary points: repeatedly drop reported non-extreme points."""
    pts = [tuple(Fraction(x) for x in p) for p in points]
    pts = list(dict.fromkeys(pts))
    while True:
        try:
            return facets_from_vertices(pts, d, label)
        except NonExtremePoint as exc:
            del pts[exc.index]


def polytope_from_halfspaces(normals: Sequence[Sequence], supports: Sequence, label: str = "") -> Polytope:
    """Bounded polytope {x : <n_i, x> <= b_i} by exhaustive vertex enumeration."""
    A = [[Fraction(x) for x in n] for n in normals]
    b = [Fraction(x) for x in supports]
    d = len(A[0])
    verts: list[tuple] = []
    seen = set()
    for combo in combinations(range(len(A)), d):
        sub = [A[i] for i in combo]
        if linalg.det(sub) == 0:
            continue
        x = linalg.solve(sub, [b[i] for i in combo])
        x = tuple(x)
        if x in seen:
            continue
        if all(dot(a, x) <= bi for a, bi in zip(A, b)):
            seen.add(x)
            verts.append(x)
    if not verts:
        raise NotFullDimensional("empty halfspace system")
    facets, keys = [], set()
    for a, bi in zip(A, b):
        key = primitive(a)
        on = [v for v in verts if dot(a, v) == bi]
        if key in keys or affine_rank(on) != d - 1:
            continue
        keys.add(key)
        facets.append((a, bi))
    return assemble(verts, facets, label)


def pulling_triangulation(p) -> list[tuple[int, ...]]:
    """Simplices (as vertex-index tuples) of a pulling triangulation."""
    L = p.lattice
    memo: dict[int, list[tuple[int, ...]]] = {}

    def tri(fi: int) -> list[tuple[int, ...]]:
        if fi in memo:
            return memo[fi]
        face, k = L.faces[fi], L.dims[fi]
        if k == 0:
            out = [(next(iter(face)),)]
        else:
            v0 = min(face)
            out = []
            for gi in L.subfaces(fi, k - 1):
                if v0 not in L.faces[gi]:
                    out.extend((v0,) + s for s in tri(gi))
        memo[fi] = out
        return out

    return tri(L.top)


def polytope_volume(p: Polytope) -> Fraction:
    """Euclidean volume from an exact pulling triangulation."""
    p = require_geometry(p)
    total = Fraction(0)
    for simplex in pulling_triangulation(p):
        v0 = p.vertices[simplex[0]]
        rows = [[x - y for x, y in zip(p.vertices[i], v0)] for i in simplex[1:]]
        total += abs(linalg.det(rows))
    return total / factorial(p.dim)
