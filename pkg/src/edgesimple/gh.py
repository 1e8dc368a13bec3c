"""Generalized h-vector via the link recursion, inequality suites, Khovanskii bound.

For a face F of a d-polytope the link of F is the interval above F, a polytope
of dimension d - dim F - 1.  The recursion

    IH(t) = sum over nonempty faces F of (t-1)^{dim F} * IG(link F)(t)

includes the top face (whose link is empty, IG = 1) and leaves out the empty
face.  IG keeps the first differences of IH up to the middle degree.
Polynomials in t are integer coefficient lists, lowest degree first.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .errors import BadRange, NotSimpleInEdges, VerificationError
from .lattice import FaceLattice, _bits, lattice_of, link_lattice, simplicity_class

Poly = list  # list[int], coefficient of t^i at index i


def _padd(a: Poly, b: Poly) -> Poly:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return out


def _pmul(a: Poly, b: Poly) -> Poly:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _tminus1_pow(k: int) -> Poly:
    return [comb(k, i) * (-1) ** (k - i) for i in range(k + 1)]


def _trim(a: Poly, length: int) -> Poly:
    a = list(a) + [0] * max(0, length - len(a))
    if any(a[length:]):
        raise VerificationError("polynomial exceeds its expected degree")
    return a[:length]


def _ig_from_ih(ih: Poly, m: int) -> Poly:
    """Truncated first differences; IG of the empty polytope (m = -1) is 1."""
    if m < 0:
        return [1]
    return [ih[k] - (ih[k - 1] if k else 0) for k in range(m // 2 + 1)]


@dataclass(frozen=True)
class GhPolynomial:
    dim: int
    coefficients: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    @property
    def symmetric(self) -> bool:
        return self.coefficients == self.coefficients[::-1]

    def to_json(self) -> dict:
        return {"dim": self.dim, "coefficients": list(self.coefficients)}


def _ih_memo(L: FaceLattice) -> Poly:
    memo: dict[frozenset, Poly] = {}

    def ih_above(fi: int) -> Poly:
        key = L.faces[fi]
        if key in memo:
            return memo[key]
        base = L.dims[fi]
        m = L.dim - base - 1
        total: Poly = [0]
        for g in _bits(L._up[fi] & ~(1 << fi)):
            if g == L.top:
                ig = [1]
            else:
                ig = _ig_from_ih(ih_above(g), L.dim - L.dims[g] - 1)
            total = _padd(total, _pmul(_tminus1_pow(L.dims[g] - base - 1), ig))
        memo[key] = _trim(total, m + 1)
        return memo[key]

    return ih_above(L.bottom)


def _ih_plain(L: FaceLattice) -> Poly:
    """Same recursion on explicitly built link lattices, no sharing."""
    total: Poly = [0]
    for fi in range(len(L.faces)):
        if fi == L.bottom:
            continue
        if fi == L.top:
            ig = [1]
        else:
            link = link_lattice(L, fi)
            ig = _ig_from_ih(_ih_plain(link), link.dim)
        total = _padd(total, _pmul(_tminus1_pow(L.dims[fi]), ig))
    return _trim(total, L.dim + 1)


def ih_polynomial(source, memo: bool = True) -> GhPolynomial:
    L = lattice_of(source)
    if L.dim < 0:
        return GhPolynomial(-1, (1,))
    coefs = tuple(_ih_memo(L) if memo else _ih_plain(L))
    out = GhPolynomial(L.dim, coefs)
    if not out.symmetric or coefs[0] != 1:
        raise VerificationError(f"Gh = {coefs} is not palindromic with constant term 1")
    return out


def ig_polynomial(source) -> GhPolynomial:
    L = lattice_of(source)
    if L.dim < 0:
        return GhPolynomial(-1, (1,))
    return GhPolynomial(L.dim, tuple(_ig_from_ih(list(ih_polynomial(L).coefficients), L.dim)))


def gh_vector(source) -> tuple[int, ...]:
    return ih_polynomial(source).coefficients


# inequalities ----------------------------------------------------------------

def ineq2(h) -> bool:
    """h_k >= 0 for k >= d/2."""
    d = len(h) - 1
    return all(h[k] >= 0 for k in range(d + 1) if 2 * k >= d)


def ineq3(h) -> bool:
    """h_k <= h_{d-k} for k <= d/2."""
    d = len(h) - 1
    return all(h[k] <= h[d - k] for k in range(d + 1) if 2 * k <= d)


@dataclass
class InequalityReport:
    clauses: dict = field(default_factory=dict)  # name -> True / False / None (not applicable)

    @property
    def passed(self) -> bool:
        return all(v is not False for v in self.clauses.values())


def inequality_suite(P, gh=None, h=None) -> InequalityReport:
    """Clauses (a)-(f) for a polytope simple in edges."""
    from .resolution import is_infrequent

    L = lattice_of(P)
    cls = simplicity_class(L)
    if not cls.simple_in_edges:
        raise NotSimpleInEdges("the inequality suite needs a polytope simple in edges")
    gh = tuple(gh if gh is not None else gh_vector(L))
    h = tuple(h if h is not None else L.h_vector())
    d = L.dim
    rep = InequalityReport()
    rep.clauses["a_symmetry"] = gh == gh[::-1]
    rep.clauses["b_upper_half"] = all(gh[k] == h[k] for k in range(d + 1) if 2 * k > d)
    rep.clauses["c_ineq2"] = ineq2(h)
    rep.clauses["d_ineq3"] = ineq3(h)
    rep.clauses["e_simple"] = (gh == h) if cls.simple else None
    if is_infrequent(L):
        head = gh[: d // 2 + 1]
        rep.clauses["f_head_monotone"] = all(a <= b for a, b in zip(head, head[1:]))
    else:
        rep.clauses["f_head_monotone"] = None
    return rep


# Khovanskii ------------------------------------------------------------------

def _check_range(d: int, k: int, l: int) -> None:
    if not (1 <= k < l and 2 * l <= d):
        raise BadRange(f"need 1 <= k < l <= d/2, got d={d}, k={k}, l={l}")


def khovanskii_bound(d: int, k: int, l: int) -> Fraction:
    """Upper bound on the average number of k-faces of an l-face."""
    _check_range(d, k, l)
    lo, hi = d // 2, (d + 1) // 2
    return Fraction(comb(d - k, d - l) * (comb(lo, k) + comb(hi, k)), comb(lo, l) + comb(hi, l))


def average_incidence(P, k: int, l: int) -> Fraction:
    L = lattice_of(P)
    _check_range(L.dim, k, l)
    if not simplicity_class(L).simple_in_edges:
        raise NotSimpleInEdges("average incidence bound needs a polytope simple in edges")
    f = L.f_vector()
    return Fraction(f[k] * comb(L.dim - k, L.dim - l), f[l])
