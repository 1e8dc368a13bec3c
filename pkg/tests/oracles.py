"""Deliberately naive reference implementations used as test oracles.

Nothing here imports the package's linear algebra or lattice code.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import comb


def naive_rank(M) -> int:
    """Plain Gaussian elimination over Fraction."""
    A = [[Fraction(x) for x in row] for row in M]
    if not A:
        return 0
    rows, cols = len(A), len(A[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        for i in range(rows):
            if i != r and A[i][c] != 0:
                f = A[i][c] / A[r][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        r += 1
        if r == rows:
            break
    return r


def leibniz_det(M) -> Fraction:
    n = len(M)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Fraction(-1) ** inv
        for i in range(n):
            term *= Fraction(M[i][perm[i]])
        total += term
    return total


def shoelace(points) -> Fraction:
    """Area of a convex polygon given its vertices in any order."""
    import math

    cx = sum(Fraction(p[0]) for p in points) / len(points)
    cy = sum(Fraction(p[1]) for p in points) / len(points)
    pts = sorted(points, key=lambda p: math.atan2(float(p[1] - cy), float(p[0] - cx)))
    area = Fraction(0)
    for (x1, y1), (x2, y2) in zip(pts, pts[1:] + pts[:1]):
        area += Fraction(x1) * y2 - Fraction(x2) * y1
    return abs(area) / 2


def square_vertices(H):
    """Rectangle with supports H for normals (+x, +y, -x, -y)."""
    a, b, c, e = (Fraction(x) for x in H)
    return [(a, b), (-c, b), (-c, -e), (a, -e)]


# faces and the generalized h-vector, by brute force -------------------------

def brute_faces(facets, n_vertices):
    """All faces as frozensets: intersections of facet subsets, plus top and empty."""
    facets = [frozenset(f) for f in facets]
    faces = {frozenset(range(n_vertices)), frozenset()}
    layer = set(facets)
    while layer:
        faces |= layer
        layer = {a & b for a in layer for b in facets} - faces
    return faces


def face_dims(faces):
    dims = {}
    for f in sorted(faces, key=len):
        below = [dims[g] for g in dims if g < f]
        dims[f] = 1 + max(below) if below else -1
    return dims


def brute_f_vector(facets, n_vertices, d):
    dims = face_dims(brute_faces(facets, n_vertices))
    f = [0] * (d + 1)
    for x in dims.values():
        if x >= 0:
            f[x] += 1
    return f


def brute_h_vector(f):
    d = len(f) - 1
    return [sum((-1) ** (i - k) * comb(i, k) * f[i] for i in range(k, d + 1)) for k in range(d + 1)]


def _poly_add(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _t_minus_1(k):
    out = [1]
    for _ in range(k):
        out = _poly_mul(out, [-1, 1])
    return out


def brute_ih(facets, n_vertices):
    """Link recursion over explicit set families (no memo, no bitmasks)."""
    faces = brute_faces(facets, n_vertices)
    dims = face_dims(faces)
    top = frozenset(range(n_vertices))
    d = dims[top]

    def ih_above(base):
        m = d - dims[base] - 1
        total = [0]
        for g in faces:
            if not base < g:
                continue
            if g == top:
                ig = [1]
            else:
                sub = ih_above(g)
                mm = d - dims[g] - 1
                ig = [sub[k] - (sub[k - 1] if k else 0) for k in range(mm // 2 + 1)]
            total = _poly_add(total, _poly_mul(_t_minus_1(dims[g] - dims[base] - 1), ig))
        total = total + [0] * (m + 1 - len(total))
        assert not any(total[m + 1:])
        return total[: m + 1]

    return ih_above(frozenset())


def gh_hand_d3(f):
    """Any 3-polytope: Gh = (1, f2 - 3, f2 - 3, 1)."""
    return [1, f[2] - 3, f[2] - 3, 1]


def gh_hand_d4_simple_in_edges(f):
    """4-polytope simple in edges: every edge link is a triangle, every 2-face link a segment."""
    return [1, f[3] - 4, f[2] - 3 * f[3] + 6, f[3] - 4, 1]
