"""Cutting off nonsimple vertices and the standard resolution.

Cutting keeps every existing facet (and its canonical normal) in place and
appends the inserted facet, so facet ``j`` of the original polytope is facet
``j`` of the resolution and inserted facets come last, in cut order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NotAVertex, NotSimpleInEdges, VerificationError
from .geometry import Polytope, assemble, dot, primitive, require_geometry
from .jsonio import fmt_rat, polytope_to_json
from .lattice import face_sublattice, lattice_of, simplicity_class


def cut_normal(p: Polytope, v: int) -> tuple[int, ...]:
    """Sum of the canonical normals of the facets at v.

    It lies in the interior of the normal cone of v, so v is its unique
    maximizer on p.
    """
    d = p.dim
    total = [0] * d
    for j in p.vertex_facets[v]:
        total = [a + b for a, b in zip(total, p.facets[j].normal)]
    return primitive(total)


def cut_vertex(p: Polytope, v: int) -> Polytope:
    """p with vertex v cut off halfway to its highest neighbour."""
    p = require_geometry(p)
    if not 0 <= v < p.n_vertices:
        raise NotAVertex(f"{v} is not a vertex index")
    n = cut_normal(p, v)
    apex = p.vertices[v]
    top = dot(n, apex)
    nbrs = p.lattice.neighbors(v)
    level = (top + max(dot(n, p.vertices[u]) for u in nbrs)) / 2
    new_pts = []
    for u in nbrs:
        w = p.vertices[u]
        t = (top - level) / (top - dot(n, w))
        new_pts.append(tuple(a + t * (b - a) for a, b in zip(apex, w)))
    verts = [x for i, x in enumerate(p.vertices) if i != v] + new_pts
    facets = [(f.normal, f.support) for f in p.facets] + [(n, level)]
    return assemble(verts, facets, label=p.label)


@dataclass(frozen=True, eq=False)
class Resolution:
    original: Polytope
    resolved: Polytope
    facet_map: tuple[int, ...]          # original facet -> resolved facet
    inserted: dict                      # original vertex index -> resolved facet
    delta_supports: tuple[Fraction, ...]

    @property
    def inserted_facets(self) -> list[int]:
        return [self.inserted[v] for v in sorted(self.inserted)]

    def to_json(self) -> dict:
        return {
            "sigma": polytope_to_json(self.resolved),
            "facet_map": list(self.facet_map),
            "inserted": {str(v): j for v, j in sorted(self.inserted.items())},
            "delta_supports": [fmt_rat(x) for x in self.delta_supports],
        }


def standard_resolution(delta: Polytope) -> Resolution:
    """Cut every nonsimple vertex, in ascending index order."""
    delta = require_geometry(delta)
    cls = simplicity_class(delta)
    if not cls.simple_in_edges:
        raise NotSimpleInEdges(f"{delta.label or 'polytope'} is not simple in edges")
    sigma = delta
    inserted = {}
    for v in cls.nonsimple:
        idx = sigma.vertex_index(delta.vertices[v])
        sigma = cut_vertex(sigma, idx)
        inserted[v] = len(sigma.facets) - 1
    sigma = sigma.with_label(f"resolution({delta.label})" if cls.nonsimple else delta.label)
    normal_pos = {f.normal: j for j, f in enumerate(sigma.facets)}
    facet_map = tuple(normal_pos[f.normal] for f in delta.facets)
    delta_supports = tuple(delta.support_of(f.normal) for f in sigma.facets)
    if not simplicity_class(sigma).simple:
        raise VerificationError("cutting all nonsimple vertices did not give a simple polytope")
    return Resolution(delta, sigma, facet_map, inserted, delta_supports)


@dataclass(frozen=True)
class Infrequency:
    infrequent: bool
    facet: frozenset | None = None
    vertices: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.infrequent


def is_infrequent(source) -> Infrequency:
    """No facet contains two nonsimple vertices (witness facet on failure)."""
    L = lattice_of(source)
    cls = simplicity_class(L)
    if not cls.simple_in_edges:
        raise NotSimpleInEdges("infrequency is defined for polytopes simple in edges")
    bad = set(cls.nonsimple)
    for fi in L.facets:
        hit = sorted(bad & L.faces[fi])
        if len(hit) > 1:
            return Infrequency(False, L.faces[fi], tuple(hit[:2]))
    return Infrequency(True)


@dataclass
class HcalcReport:
    h_delta: tuple[int, ...]
    h_sigma: tuple[int, ...]
    h_inserted: list[tuple[int, ...]]
    residual: tuple[int, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not any(self.residual)


def verify_hcalc(R: Resolution) -> HcalcReport:
    """h_k(Delta) - (h_k(Sigma) - sum_G h_k(G)) for 0 < k <= d; all zero."""
    d = R.original.dim
    hd = R.original.lattice.h_vector()
    Ls = R.resolved.lattice
    hs = Ls.h_vector()
    hins = []
    for j in R.inserted_facets:
        fi = Ls.index[R.resolved.incidence[j]]
        hins.append(tuple(face_sublattice(Ls, fi).h_vector()) + (0,))
    residual = tuple(hd[k] - (hs[k] - sum(h[k] for h in hins)) for k in range(1, d + 1))
    return HcalcReport(hd, hs, hins, residual)
