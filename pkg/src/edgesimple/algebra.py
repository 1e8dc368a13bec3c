"""The graded algebra A(Sigma) = Diff / Ann(Vol) and the checks built on it.

Elements of A^k are stored as coordinate vectors in a monomial basis chosen
greedily in graded-lex order.  A differential operator is reduced by applying
it to Vol and reading off pivot coefficients of the result, so two operators
agree in A exactly when they act identically on Vol.  Matrices map column
coordinate vectors (shape ``dim A^{k+r} x dim A^k``).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import linalg
from .errors import DegreeExceeds, DegreeMismatch, DegreeOutOfRange, NotInfrequent, VerificationError
from .geometry import Polytope, polytope_volume
from .lattice import face_sublattice
from .poly import DiffPoly, Exps, MultiPoly, monomials
from .resolution import Resolution, is_infrequent
from .volume import require_simple, support_vector, translation_operators, volume_polynomial


def _unit(n: int, i: int) -> Exps:
    return tuple(int(i == j) for j in range(n))


def _add(a: Exps, b: Exps) -> Exps:
    return tuple(x + y for x, y in zip(a, b))


def face_supported_monomials(sigma: Polytope, k: int) -> list[Exps]:
    """Degree-k monomials whose facets share a vertex, grlex-descending."""
    n = len(sigma.facets)
    out: set[Exps] = set()
    for fs in sigma.vertex_facets:
        idx = sorted(fs)
        for e in monomials(len(idx), k):
            full = [0] * n
            for i, x in zip(idx, e):
                full[i] = x
            out.add(tuple(full))
    return sorted(out, reverse=True)


@dataclass
class LinSubspace:
    """Subspace of A^k spanned by linearly independent coordinate vectors."""

    k: int
    basis: list

    @property
    def dim(self) -> int:
        return len(self.basis)

    @classmethod
    def spanned_by(cls, k: int, vectors: Sequence[Sequence]) -> "LinSubspace":
        vectors = [list(v) for v in vectors if any(v)]
        if not vectors:
            return cls(k, [])
        R, _ = linalg.rref(vectors)
        return cls(k, R)

    def equals(self, other: "LinSubspace") -> bool:
        return self.k == other.k and linalg.same_span(self.basis, other.basis)

    def contains(self, vec: Sequence) -> bool:
        if not any(vec):
            return True
        return linalg.span_rank(self.basis + [list(vec)]) == self.dim


class GradedAlgebra:
    """A(Sigma) for a simple polytope Sigma."""

    def __init__(self, sigma: Polytope, vol: MultiPoly | None = None):
        self.sigma = require_simple(sigma)
        self.d = sigma.dim
        self.n = len(sigma.facets)
        self.vol = vol if vol is not None else volume_polynomial(sigma)
        self._images: dict[Exps, MultiPoly] = {(0,) * self.n: self.vol}
        self._columns: list[dict[Exps, int]] = [dict() for _ in range(self.d + 1)]
        self.basis: list[list[Exps]] = []
        self._pivots: list[list[int]] = []
        self._sinv: list[list[list[Fraction]]] = []
        self._mult: dict[tuple[int, int], list[list[Fraction]]] = {}
        for k in range(self.d + 1):
            self._build_degree(k)

    # images ----------------------------------------------------------------
    def image(self, exps: Exps) -> MultiPoly:
        """d^exps Vol, cached along a chain of lower-order images."""
        got = self._images.get(exps)
        if got is not None:
            return got
        i = next(j for j, x in enumerate(exps) if x)
        parent = tuple(x - (j == i) for j, x in enumerate(exps))
        got = self.image(parent).differentiate(_unit(self.n, i))
        self._images[exps] = got
        return got

    def _vector(self, poly: MultiPoly, k: int) -> dict[int, Fraction]:
        cols = self._columns[k]
        out = {}
        for e, c in poly.terms.items():
            j = cols.setdefault(e, len(cols))
            out[j] = c
        return out

    def _build_degree(self, k: int) -> None:
        ech = linalg.SparseEchelon()
        chosen, rows = [], []
        for m in face_supported_monomials(self.sigma, k):
            vec = self._vector(self.image(m), k)
            if ech.add(vec):
                chosen.append(m)
                rows.append(vec)
        width = len(self._columns[k])
        dense = [[r.get(j, Fraction(0)) for j in range(width)] for r in rows]
        _, pivots = linalg.rref(dense) if dense else ([], [])
        self.basis.append(chosen)
        self._pivots.append(pivots)
        S = [[row[j] for j in pivots] for row in dense]
        self._sinv.append(linalg.inverse(S) if S else [])

    # coordinates -----------------------------------------------------------
    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.basis)

    def dim(self, k: int) -> int:
        return len(self.basis[k]) if 0 <= k <= self.d else 0

    def reduce_image(self, poly: MultiPoly, k: int) -> list[Fraction]:
        """Coordinates of the class whose action on Vol is ``poly``."""
        if not 0 <= k <= self.d:
            return []
        cols = self._columns[k]
        target = [Fraction(0)] * len(self._pivots[k])
        for e, c in poly.terms.items():
            j = cols.get(e)
            if j is None:
                raise VerificationError("polynomial is not in the image of Diff on Vol")
            if j in self._pivots[k]:
                target[self._pivots[k].index(j)] = c
        S = self._sinv[k]
        return [sum((target[i] * S[i][j] for i in range(len(target))), Fraction(0)) for j in range(len(S))]

    def coords(self, op: DiffPoly) -> list[Fraction]:
        """Coordinates of a homogeneous operator in A^{order}."""
        if not op:
            raise DegreeMismatch("the zero operator has no degree; use zero_vector(k)")
        k = op.order
        img = MultiPoly.zero(self.n)
        for e, c in op.terms.items():
            img = img + self.image(e).scale(c)
        return self.reduce_image(img, k)

    def monomial_coords(self, exps: Exps) -> list[Fraction]:
        return self.reduce_image(self.image(exps), sum(exps))

    def zero_vector(self, k: int) -> list[Fraction]:
        return [Fraction(0)] * self.dim(k)

    def element(self, k: int, vec: Sequence) -> DiffPoly:
        """A representative operator of a coordinate vector."""
        return DiffPoly(self.n, {m: c for m, c in zip(self.basis[k], vec)})

    def evaluate(self, op: DiffPoly) -> MultiPoly:
        return op.apply(self.vol)

    # matrices --------------------------------------------------------------
    def mult_matrix(self, gamma: int, k: int) -> list[list[Fraction]]:
        """Multiplication by d_gamma from A^k to A^{k+1}."""
        key = (gamma, k)
        if key not in self._mult:
            e = _unit(self.n, gamma)
            cols = [self.monomial_coords(_add(b, e)) if k < self.d else [] for b in self.basis[k]]
            self._mult[key] = _columns_to_matrix(cols, self.dim(k + 1))
        return self._mult[key]

    def operator_matrix(self, L: DiffPoly, k: int) -> list[list[Fraction]]:
        """Multiplication by an order-1 operator from A^k to A^{k+1}."""
        if L.order != 1:
            raise DegreeMismatch("operator_matrix expects an order-1 operator")
        out = linalg.zeros(self.dim(k + 1), self.dim(k))
        for e, c in L.terms.items():
            M = self.mult_matrix(e.index(1), k)
            out = [[a + c * b for a, b in zip(ra, rb)] for ra, rb in zip(out, M)]
        return out

    def power_matrix(self, L: DiffPoly, k: int, r: int) -> list[list[Fraction]]:
        """Multiplication by L^r from A^k to A^{k+r}."""
        M = linalg.identity(self.dim(k))
        for j in range(r):
            step = self.operator_matrix(L, k + j)
            M = linalg.matmul(step, M) if step else []
            if not M:
                return linalg.zeros(self.dim(k + r), self.dim(k))
        return M

    def pairing_matrix(self, k: int) -> list[list[Fraction]]:
        """P[i][j] = (b_i b'_j)(Vol) for bases of A^k and A^{d-k}."""
        return [[self.image(_add(a, b)).evaluate([0] * self.n) for b in self.basis[self.d - k]]
                for a in self.basis[k]]


def _columns_to_matrix(cols: list[list[Fraction]], nrows: int) -> list[list[Fraction]]:
    if not cols:
        return [[] for _ in range(nrows)]
    return [[col[i] for col in cols] for i in range(nrows)]


def _kernel(M: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    rows = [r for r in M if any(r)]
    return linalg.nullspace(rows, ncols)


def _rank(M: list[list[Fraction]]) -> int:
    rows = [r for r in M if r and any(r)]
    return linalg.rank(rows) if rows else 0


def build_algebra(sigma: Polytope) -> GradedAlgebra:
    A = GradedAlgebra(sigma)
    h = sigma.lattice.h_vector()
    if A.dims != tuple(h):
        raise VerificationError(f"dim A^k = {A.dims} but h = {tuple(h)}")
    for k in range(A.d + 1):
        P = A.pairing_matrix(k)
        if _rank(P) != A.dim(k):
            raise VerificationError(f"Poincare pairing degenerate in degree {k}")
    return A


# face ring -------------------------------------------------------------------

@dataclass(frozen=True)
class FaceRingDims:
    sr_dims: tuple[int, ...]       # Stanley-Reisner part in each degree
    theta_ranks: tuple[int, ...]   # rank of the linear-form relations
    dims: tuple[int, ...]


def build_face_ring(sigma: Polytope, algebra: GradedAlgebra | None = None) -> FaceRingDims:
    """Hilbert function of the face ring modulo the d translation forms."""
    sigma = require_simple(sigma)
    d, n = sigma.dim, len(sigma.facets)
    masks = [sum(1 << j for j in fs) for fs in sigma.vertex_facets]

    def is_face(e: Exps) -> bool:
        s = sum(1 << j for j, x in enumerate(e) if x)
        return any(s & ~m == 0 for m in masks)

    thetas = [[f.normal[i] for f in sigma.facets] for i in range(d)]
    sr, ranks, dims = [], [], []
    prev: list[Exps] = []
    for k in range(d + 1):
        basis = face_supported_monomials(sigma, k)
        pos = {m: j for j, m in enumerate(basis)}
        ech = linalg.SparseEchelon()
        for m in prev:
            for theta in thetas:
                row = {}
                for g, c in enumerate(theta):
                    if c:
                        e = _add(m, _unit(n, g))
                        if is_face(e):
                            row[pos[e]] = row.get(pos[e], 0) + c
                ech.add(row)
        sr.append(len(basis))
        ranks.append(len(ech))
        dims.append(len(basis) - len(ech))
        prev = basis
    out = FaceRingDims(tuple(sr), tuple(ranks), tuple(dims))
    if algebra is not None and out.dims != algebra.dims:
        raise VerificationError(f"face ring dims {out.dims} differ from A dims {algebra.dims}")
    return out


# volume contract -------------------------------------------------------------

@dataclass
class VolumeContract:
    value: Fraction
    oracle: Fraction
    nonface_failures: list = field(default_factory=list)
    translation_failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.value == self.oracle and not self.nonface_failures and not self.translation_failures


def check_volume_contract(sigma: Polytope, vol: MultiPoly | None = None) -> VolumeContract:
    """Value against triangulation, vanishing on empty intersections, L_a Vol = 0."""
    sigma = require_simple(sigma)
    vol = vol if vol is not None else volume_polynomial(sigma)
    n, d = len(sigma.facets), sigma.dim
    out = VolumeContract(vol.evaluate(support_vector(sigma)), polytope_volume(sigma))
    masks = [sum(1 << j for j in fs) for fs in sigma.vertex_facets]
    for r in range(2, d + 1):
        for S in combinations(range(n), r):
            s = sum(1 << j for j in S)
            if any(s & ~m == 0 for m in masks):
                continue
            e = tuple(int(j in S) for j in range(n))
            if vol.differentiate(e):
                out.nonface_failures.append(list(S))
    for i, La in enumerate(translation_operators(sigma)):
        if La.apply(vol):
            out.translation_failures.append(i)
    return out


# Lefschetz operators ---------------------------------------------------------

def lefschetz_weights(source) -> DiffPoly:
    """L_Sigma from a simple polytope, or L_Delta from a resolution."""
    if isinstance(source, Resolution):
        return DiffPoly.linear(source.delta_supports)
    return DiffPoly.linear(support_vector(source))


@dataclass(frozen=True)
class RankRow:
    k: int
    rank: int
    dim_source: int
    dim_target: int

    @property
    def passed(self) -> bool:
        return self.rank == self.dim_source == self.dim_target


def hard_lefschetz_check(A: GradedAlgebra, L: DiffPoly) -> list[RankRow]:
    """Rank of L^{d-2k}: A^k -> A^{d-k} for every k < d/2."""
    rows = []
    for k in range((A.d + 1) // 2):
        M = A.power_matrix(L, k, A.d - 2 * k)
        rows.append(RankRow(k, _rank(M), A.dim(k), A.dim(A.d - k)))
    return rows


def primitive_space(A: GradedAlgebra, L: DiffPoly, k: int) -> LinSubspace:
    if not 0 <= 2 * k <= A.d:
        raise DegreeOutOfRange(f"primitive degree {k} outside 0..{A.d // 2}")
    M = A.power_matrix(L, k, A.d - 2 * k + 1)
    return LinSubspace(k, _kernel(M, A.dim(k)))


@dataclass
class HodgeRiemannRow:
    k: int
    dim: int
    expected_dim: int
    gram: list
    minors: list

    @property
    def passed(self) -> bool:
        return self.dim == self.expected_dim and all(m > 0 for m in self.minors)


def hodge_riemann_check(A: GradedAlgebra, L: DiffPoly, k: int) -> HodgeRiemannRow:
    """Signed form (-1)^k (a b L^{d-2k})(Vol) on the primitive subspace."""
    prim = primitive_space(A, L, k)
    X = linalg.transpose(prim.basis, A.dim(k))
    M = A.power_matrix(L, k, A.d - 2 * k)
    P = A.pairing_matrix(k)
    sign = -1 if k % 2 else 1
    if prim.dim:
        G = linalg.matmul(linalg.transpose(X), linalg.matmul(P, linalg.matmul(M, X)))
        G = [[sign * x for x in row] for row in G]
    else:
        G = []
    expected = A.dim(k) - A.dim(k - 1)
    return HodgeRiemannRow(k, prim.dim, expected, G, linalg.leading_principal_minors(G))


# inserted facets and the kernel theorem --------------------------------------

def _check_pair(A: GradedAlgebra, R: Resolution) -> None:
    if A.sigma is not R.resolved:
        raise VerificationError("algebra was not built on this resolution")


def inserted_ideal(A: GradedAlgebra, R: Resolution, k: int) -> LinSubspace:
    """I^k: span of d_G A^{k-1} over inserted facets G (I^0 = 0)."""
    _check_pair(A, R)
    if not 0 <= k <= A.d:
        raise DegreeOutOfRange(f"degree {k} outside 0..{A.d}")
    if k == 0:
        return LinSubspace(0, [])
    vecs = []
    for g in R.inserted_facets:
        vecs += linalg.transpose(A.mult_matrix(g, k - 1)) if A.dim(k - 1) else []
    return LinSubspace.spanned_by(k, vecs)


def proof_range(d: int) -> range:
    """Degrees k with k < (d-1)/2."""
    return range(d // 2)


@dataclass(frozen=True)
class KerRow:
    k: int
    dim_kernel: int
    dim_ideal: int
    equal: bool

    @property
    def passed(self) -> bool:
        return self.equal


def theorem_ker_check(A: GradedAlgebra, R: Resolution, explore: bool = False) -> list[KerRow]:
    """ker(L_Delta: A^k -> A^{k+1}) against I^k for k < (d-1)/2."""
    _check_pair(A, R)
    if not explore and not is_infrequent(R.original):
        raise NotInfrequent(f"{R.original.label} has a facet with two nonsimple vertices")
    L = lefschetz_weights(R)
    rows = []
    for k in proof_range(A.d):
        ker = LinSubspace(k, _kernel(A.operator_matrix(L, k), A.dim(k)))
        ideal = inserted_ideal(A, R, k)
        rows.append(KerRow(k, ker.dim, ideal.dim, ker.equals(ideal)))
    return rows


def indep_check(A: GradedAlgebra, R: Resolution) -> list[tuple[int, int, int]]:
    """(k, dim I^k, sum over inserted G of h_{k-1}(G)) for 1 <= k < (d-1)/2."""
    hs = _inserted_h(R)
    out = []
    for k in proof_range(A.d):
        if k == 0:
            continue
        expected = sum(h[k - 1] if k - 1 < len(h) else 0 for h in hs)
        out.append((k, inserted_ideal(A, R, k).dim, expected))
    return out


def _inserted_h(R: Resolution) -> list[tuple[int, ...]]:
    Ls = R.resolved.lattice
    return [face_sublattice(Ls, Ls.index[R.resolved.incidence[g]]).h_vector() for g in R.inserted_facets]


def inserted_annihilates(A: GradedAlgebra, R: Resolution) -> bool:
    """L_Delta d_G = 0 in A for every inserted facet G."""
    _check_pair(A, R)
    L = lefschetz_weights(R)
    for g in R.inserted_facets:
        op = L * DiffPoly.var(A.n, g)
        img = A.evaluate(op)
        if img:
            return False
    return True


def restriction_dims(A: GradedAlgebra) -> list[tuple[int, int, int, int]]:
    """(facet, k, dim d_G A^k, h_k(G)) for every facet and degree."""
    Ls = A.sigma.lattice
    out = []
    for g in range(A.n):
        h = face_sublattice(Ls, Ls.index[A.sigma.incidence[g]]).h_vector()
        for k in range(A.d):
            out.append((g, k, _rank(A.mult_matrix(g, k)), h[k]))
    return out


@dataclass
class EmbeddingReport:
    ranks: list          # (k, rank of L_Delta on A^k, dim A^k - dim I^k)
    gh_head: list
    h_tail: list

    @property
    def injective(self) -> bool:
        return all(r == e for _, r, e in self.ranks)

    @property
    def head_monotone(self) -> bool:
        return all(a <= b for a, b in zip(self.gh_head, self.gh_head[1:]))

    @property
    def tail_monotone(self) -> bool:
        return all(a >= b for a, b in zip(self.h_tail, self.h_tail[1:]))

    @property
    def passed(self) -> bool:
        return self.injective and self.head_monotone and self.tail_monotone


def verify_embedding_and_tail(A: GradedAlgebra, R: Resolution, gh: Sequence[int]) -> EmbeddingReport:
    """Injectivity of L_Delta off I^k, Gh_0 <= .. <= Gh_[d/2], h_ceil(d/2) >= .. >= h_d."""
    _check_pair(A, R)
    if not is_infrequent(R.original):
        raise NotInfrequent(f"{R.original.label} has a facet with two nonsimple vertices")
    L = lefschetz_weights(R)
    d = A.d
    ranks = []
    for k in proof_range(d):
        ranks.append((k, _rank(A.operator_matrix(L, k)), A.dim(k) - inserted_ideal(A, R, k).dim))
    h = R.original.lattice.h_vector()
    return EmbeddingReport(ranks, list(gh[: d // 2 + 1]), list(h[(d + 1) // 2:]))


def comm_identity(A: GradedAlgebra, R: Resolution, gh: Sequence[int]) -> list[tuple[int, int, int, int]]:
    """(k, h_k(Sigma), Gh_k(Delta), dim I^k) for k < (d-1)/2."""
    _check_pair(A, R)
    return [(k, A.dim(k), gh[k], inserted_ideal(A, R, k).dim) for k in proof_range(A.d)]


@dataclass(frozen=True)
class Division:
    divisible: bool
    quotient: DiffPoly | None


def divisible_by(A: GradedAlgebra, alpha, gamma: int, k: int | None = None) -> Division:
    """Whether alpha lies in d_gamma A^{k-1}; alpha is a DiffPoly or a vector of A^k."""
    if isinstance(alpha, DiffPoly):
        k = alpha.order
        vec = A.coords(alpha)
    else:
        if k is None:
            raise DegreeMismatch("a coordinate vector needs its degree k")
        vec = list(alpha)
    if not any(vec):
        return Division(True, DiffPoly.zero(A.n))
    if k == 0:
        return Division(False, None)
    M = A.mult_matrix(gamma, k - 1)
    x = linalg.solve(M, vec) if A.dim(k - 1) else None
    if x is None:
        return Division(False, None)
    return Division(True, A.element(k - 1, x))


# relating operators ----------------------------------------------------------

def _coefficient_system(ops: list[Exps], Q: MultiPoly, target: MultiPoly | None):
    images = [Q.differentiate(e) for e in ops]
    keys = sorted({t for img in images for t in img.terms} | set(target.terms if target else ()))
    pos = {t: i for i, t in enumerate(keys)}
    M = [[Fraction(0)] * len(ops) for _ in keys]
    for j, img in enumerate(images):
        for t, c in img.terms.items():
            M[pos[t]][j] = c
    b = [Fraction(0)] * len(keys)
    if target is not None:
        for t, c in target.terms.items():
            b[pos[t]] = c
    return M, b


def find_relating_operator(P: MultiPoly, Q: MultiPoly) -> DiffPoly | None:
    """beta with beta Q = P, or None when no such operator exists."""
    if not Q:
        raise ValueError("Q must be nonzero")
    if P and P.degree > Q.degree:
        raise DegreeExceeds(f"deg P = {P.degree} exceeds deg Q = {Q.degree}")
    n = Q.nvars
    if not P:
        return DiffPoly.zero(n)
    r = Q.degree - P.degree
    ops = list(monomials(n, r))
    M, b = _coefficient_system(ops, Q, P)
    x = linalg.solve(M, b)
    if x is None:
        return None
    return DiffPoly(n, {e: c for e, c in zip(ops, x)})


def annihilator_witness(P: MultiPoly, Q: MultiPoly) -> DiffPoly | None:
    """An operator killing Q but not P, of the lowest possible order."""
    if not Q:
        raise ValueError("Q must be nonzero")
    n = Q.nvars
    top = P.degree if P else 0
    for j in range(1, top + 1):
        ops = list(monomials(n, j))
        M, _ = _coefficient_system(ops, Q, None)
        for vec in _kernel(M, len(ops)):
            gamma = DiffPoly(n, {e: c for e, c in zip(ops, vec)})
            if gamma.apply(P):
                return gamma
    return None
