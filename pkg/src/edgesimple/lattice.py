"""Face lattices, f/h-vectors, simplicity classes, links and dual fans.

Faces are the closed sets of the vertex-facet incidence: every intersection
of facet vertex-sets, the empty face and the whole polytope.  The same code
serves geometric and combinatorial inputs.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

import networkx as nx

from .errors import InvalidFace, LengthMismatch, NotEulerian
from .geometry import CombPolytope, Polytope, require_geometry


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FaceLattice:
    """Graded Eulerian poset of faces, indexed 0..N-1 by (dim, sorted vertices)."""

    def __init__(self, n_vertices: int, faces: Sequence[frozenset], dims: Sequence[int],
                 source_facets: Sequence[frozenset] | None = None, verify: bool = True):
        order = sorted(range(len(faces)), key=lambda i: (dims[i], sorted(faces[i])))
        self.n_vertices = n_vertices
        self.faces: tuple[frozenset, ...] = tuple(faces[i] for i in order)
        self.dims: tuple[int, ...] = tuple(dims[i] for i in order)
        self.dim = max(self.dims)
        self.index = {f: i for i, f in enumerate(self.faces)}
        self.bottom = 0
        self.top = len(self.faces) - 1
        masks = [sum(1 << v for v in f) for f in self.faces]
        n = len(self.faces)
        self._down = [0] * n
        self._up = [0] * n
        for i in range(n):
            for j in range(n):
                if masks[j] & ~masks[i] == 0:
                    self._down[i] |= 1 << j
                    self._up[j] |= 1 << i
        if source_facets is None:
            source_facets = [self.faces[i] for i in self.faces_of_dim(self.dim - 1)]
        self.source_facets = tuple(source_facets)
        if verify:
            self._verify()

    # construction -------------------------------------------------------
    @classmethod
    def from_facets(cls, n_vertices: int, facet_sets: Sequence[frozenset], dim: int | None = None,
                    verify: bool = True) -> "FaceLattice":
        """Galois closure of the facet vertex-sets."""
        top = frozenset(range(n_vertices))
        facet_sets = [frozenset(f) for f in facet_sets]
        closed = {top, frozenset()}
        frontier = list(dict.fromkeys(facet_sets))
        closed.update(frontier)
        while frontier:
            nxt = []
            for face in frontier:
                for g in facet_sets:
                    h = face & g
                    if h not in closed:
                        closed.add(h)
                        nxt.append(h)
            frontier = nxt
        faces = sorted(closed, key=lambda f: (len(f), sorted(f)))
        masks = [sum(1 << v for v in f) for f in faces]
        dims: list[int] = []
        for i, mi in enumerate(masks):
            below = [dims[j] for j in range(i) if masks[j] & ~mi == 0 and masks[j] != mi]
            dims.append(1 + max(below) if below else -1)
        lat = cls(n_vertices, faces, dims, source_facets=facet_sets, verify=verify)
        if dim is not None and lat.dim != dim:
            raise NotEulerian(f"incidence closes to rank {lat.dim}, expected dimension {dim}")
        return lat

    @classmethod
    def empty(cls) -> "FaceLattice":
        return cls(0, [frozenset()], [-1], source_facets=())

    def _verify(self) -> None:
        n = len(self.faces)
        if self.dims[self.bottom] != -1 or self.faces[self.top] != frozenset(range(self.n_vertices)):
            raise NotEulerian("lattice lacks the expected bottom or top")
        for i in range(n):
            for j in self.covers_below(i):
                if self.dims[j] != self.dims[i] - 1:
                    raise NotEulerian(f"not graded at face {sorted(self.faces[i])}")
        even = sum(1 << i for i in range(n) if self.dims[i] % 2 == 0)
        for x in range(n):
            for y in _bits(self._up[x]):
                if y == x:
                    continue
                interval = self._up[x] & self._down[y]
                ev = (interval & even).bit_count()
                if 2 * ev != interval.bit_count():
                    raise NotEulerian(
                        f"interval [{sorted(self.faces[x])}, {sorted(self.faces[y])}] is not Eulerian"
                    )

    # queries ------------------------------------------------------------
    def __len__(self) -> int:
        return len(self.faces)

    def __repr__(self) -> str:
        return f"FaceLattice(dim={self.dim}, f={self.f_vector()})"

    def faces_of_dim(self, k: int) -> list[int]:
        return [i for i, d in enumerate(self.dims) if d == k]

    def face_index(self, face) -> int:
        if isinstance(face, int):
            if not 0 <= face < len(self.faces):
                raise InvalidFace(f"no face with index {face}")
            return face
        try:
            return self.index[frozenset(face)]
        except KeyError:
            raise InvalidFace(f"{sorted(face)} is not a face") from None

    def below(self, i: int) -> list[int]:
        return list(_bits(self._down[i]))

    def above(self, i: int) -> list[int]:
        return list(_bits(self._up[i]))

    def covers_below(self, i: int) -> list[int]:
        proper = self._down[i] & ~(1 << i)
        return [j for j in _bits(proper) if (self._up[j] & proper) == 1 << j]

    def subfaces(self, i: int, k: int) -> list[int]:
        return [j for j in _bits(self._down[i]) if self.dims[j] == k]

    def superfaces(self, i: int, k: int) -> list[int]:
        return [j for j in _bits(self._up[i]) if self.dims[j] == k]

    def leq(self, i: int, j: int) -> bool:
        return bool(self._down[j] >> i & 1)

    def f_vector(self) -> tuple[int, ...]:
        f = [0] * (self.dim + 1)
        for d in self.dims:
            if d >= 0:
                f[d] += 1
        return tuple(f)

    def h_vector(self) -> tuple[int, ...]:
        return h_from_f(self.f_vector())

    def vertex_face(self, v: int) -> int:
        return self.index[frozenset([v])]

    @property
    def facets(self) -> list[int]:
        return self.faces_of_dim(self.dim - 1)

    def facets_containing(self, i: int) -> list[int]:
        return self.superfaces(i, self.dim - 1)

    def edges(self) -> list[tuple[int, int]]:
        return [tuple(sorted(self.faces[i])) for i in self.faces_of_dim(1)]

    def neighbors(self, v: int) -> list[int]:
        return sorted(u for e in self.edges() if v in e for u in e if u != v)

    def closure(self, vertices: Iterable[int]) -> int:
        """Index of the smallest face containing the given vertices."""
        target = frozenset(vertices)
        best = self.top
        for i in _bits(self._up[self.bottom]):
            if target <= self.faces[i] and len(self.faces[i]) < len(self.faces[best]):
                best = i
        return best

    def incidence_graph(self) -> nx.Graph:
        g = nx.Graph()
        facets = self.facets
        g.add_nodes_from((("v", v) for v in range(self.n_vertices)), side=0)
        g.add_nodes_from((("F", i) for i in facets), side=1)
        for i in facets:
            g.add_edges_from((("v", v), ("F", i)) for v in self.faces[i])
        return g


def face_lattice(source) -> FaceLattice:
    """Face lattice of a :class:`Polytope` or :class:`CombPolytope`."""
    if isinstance(source, FaceLattice):
        return source
    if isinstance(source, Polytope):
        return FaceLattice.from_facets(source.n_vertices, source.incidence, source.dim)
    if isinstance(source, CombPolytope):
        return FaceLattice.from_facets(source.n_vertices, source.facet_vertex_sets, source.dim)
    raise TypeError(f"cannot build a face lattice from {type(source).__name__}")


def lattice_of(source) -> FaceLattice:
    if isinstance(source, FaceLattice):
        return source
    return source.lattice


def f_vector(L) -> tuple[int, ...]:
    return lattice_of(L).f_vector()


def h_from_f(f: Sequence[int], d: int | None = None) -> tuple[int, ...]:
    if not f or (d is not None and len(f) != d + 1):
        raise LengthMismatch(f"expected {d + 1 if d is not None else 'nonzero'} entries, got {len(f)}")
    n = len(f)
    return tuple(sum(f[i] * (-1) ** (i - k) * comb(i, k) for i in range(k, n)) for k in range(n))


def f_from_h(h: Sequence[int], d: int | None = None) -> tuple[int, ...]:
    if not h or (d is not None and len(h) != d + 1):
        raise LengthMismatch(f"expected {d + 1 if d is not None else 'nonzero'} entries, got {len(h)}")
    n = len(h)
    return tuple(sum(h[i] * comb(i, k) for i in range(k, n)) for k in range(n))


class SimplicityKind(enum.Enum):
    SIMPLE = "Simple"
    SIMPLE_IN_EDGES = "SimpleInEdges"
    GENERAL = "General"


@dataclass(frozen=True)
class Simplicity:
    kind: SimplicityKind
    nonsimple: tuple[int, ...]

    @property
    def simple(self) -> bool:
        return self.kind is SimplicityKind.SIMPLE

    @property
    def simple_in_edges(self) -> bool:
        return self.kind is not SimplicityKind.GENERAL

    def __str__(self) -> str:
        return self.kind.value


def simplicity_class(source, d: int | None = None) -> Simplicity:
    L = lattice_of(source)
    d = L.dim if d is None else d
    nonsimple = tuple(v for v in range(L.n_vertices)
                      if len(L.facets_containing(L.vertex_face(v))) > d)
    edges_ok = all(len(L.facets_containing(e)) == d - 1 for e in L.faces_of_dim(1))
    if not nonsimple:
        kind = SimplicityKind.SIMPLE
    elif edges_ok:
        kind = SimplicityKind.SIMPLE_IN_EDGES
    else:
        kind = SimplicityKind.GENERAL
    return Simplicity(kind, nonsimple)


def link_lattice(L: FaceLattice, face) -> FaceLattice:
    """Lattice of the link of a nonempty proper face: the interval above it."""
    L = lattice_of(L)
    fi = L.face_index(face)
    if fi == L.bottom or fi == L.top:
        raise InvalidFace("link needs a nonempty proper face")
    k = L.dims[fi]
    atoms = L.superfaces(fi, k + 1)
    atom_pos = {a: n for n, a in enumerate(atoms)}
    facets = [frozenset(atom_pos[a] for a in atoms if L.leq(a, g)) for g in L.facets_containing(fi)]
    link = FaceLattice.from_facets(len(atoms), facets, L.dim - k - 1)
    if len(link) != len(L.above(fi)):
        raise NotEulerian("link does not reproduce the interval above the face")
    return link


def face_sublattice(L: FaceLattice, face) -> FaceLattice:
    """Lattice of a face itself (the interval below it), vertices renumbered."""
    L = lattice_of(L)
    fi = L.face_index(face)
    k = L.dims[fi]
    verts = sorted(L.faces[fi])
    pos = {v: n for n, v in enumerate(verts)}
    if k < 0:
        return FaceLattice.empty()
    if k == 0:
        return FaceLattice.from_facets(1, [frozenset()], 0)
    facets = [frozenset(pos[v] for v in L.faces[g]) for g in L.subfaces(fi, k - 1)]
    return FaceLattice.from_facets(len(verts), facets, k)


def combinatorially_equivalent(a, b) -> bool:
    """Isomorphism of face lattices, tested on vertex-facet incidence graphs."""
    la, lb = lattice_of(a), lattice_of(b)
    if la.f_vector() != lb.f_vector():
        return False
    return nx.is_isomorphic(la.incidence_graph(), lb.incidence_graph(),
                            node_match=lambda x, y: x["side"] == y["side"])


@dataclass(frozen=True)
class NormalFan:
    dim: int
    rays: tuple[tuple[int, ...], ...]
    cones: dict  # face vertex-set -> frozenset of facet (ray) indices
    cone_dims: dict  # face vertex-set -> dimension of its normal cone

    @property
    def simplicial(self) -> bool:
        return all(len(gens) == self.cone_dims[face] for face, gens in self.cones.items())

    def maximal_cones(self) -> list[frozenset]:
        return [g for f, g in self.cones.items() if self.cone_dims[f] == self.dim]


def dual_fan(p: Polytope) -> NormalFan:
    p = require_geometry(p)
    L = p.lattice
    facet_pos = {inc: j for j, inc in enumerate(p.incidence)}
    cones, dims = {}, {}
    for i, face in enumerate(L.faces):
        if i == L.bottom:
            continue
        cones[face] = frozenset(facet_pos[L.faces[g]] for g in L.facets_containing(i))
        dims[face] = p.dim - L.dims[i]
    return NormalFan(p.dim, tuple(p.normals), cones, dims)
