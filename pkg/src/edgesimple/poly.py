"""Sparse multivariate polynomials with rational coefficients.

:class:`MultiPoly` lives in the support-number variables ``H_0 .. H_{n-1}``;
:class:`DiffPoly` is the same data read as a constant-coefficient differential
operator in ``d_0 .. d_{n-1}``.  Exponent vectors are plain tuples.
"""
from __future__ import annotations

from fractions import Fraction
from math import prod
from typing import Iterable, Iterator

from .errors import DegreeMismatch
from .jsonio import fmt_rat, parse_rat

Exps = tuple


def _add_exps(a: Exps, b: Exps) -> Exps:
    return tuple(x + y for x, y in zip(a, b))


def _falling(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= n - i
    return out


def monomials(n: int, k: int) -> Iterator[Exps]:
    """All exponent vectors of total degree k in n variables, grlex-descending."""
    if n == 0:
        if k == 0:
            yield ()
        return
    for first in range(k, -1, -1):
        for rest in monomials(n - 1, k - first):
            yield (first,) + rest


def sub_exponents(e: Exps, k: int) -> Iterator[Exps]:
    """All a <= e componentwise with |a| = k."""
    n = len(e)

    def rec(i: int, left: int, acc: list) -> Iterator[Exps]:
        if i == n:
            if left == 0:
                yield tuple(acc)
            return
        if left > sum(e[i:]):
            return
        for a in range(min(e[i], left), -1, -1):
            acc.append(a)
            yield from rec(i + 1, left - a, acc)
            acc.pop()

    yield from rec(0, k, [])


class _Sparse:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        self.terms: dict[Exps, Fraction] = {}
        for e, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                if len(e) != nvars:
                    raise ValueError("exponent length does not match variable count")
                self.terms[tuple(e)] = c

    # construction -------------------------------------------------------
    @classmethod
    def zero(cls, nvars: int):
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int):
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def var(cls, nvars: int, i: int, coef=1):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): coef})

    @classmethod
    def monomial(cls, exps: Exps, coef=1):
        return cls(len(exps), {tuple(exps): coef})

    @classmethod
    def linear(cls, coefs: Iterable):
        coefs = list(coefs)
        n = len(coefs)
        return cls(n, {tuple(int(i == j) for j in range(n)): c for i, c in enumerate(coefs)})

    # arithmetic ---------------------------------------------------------
    def _new(self, terms):
        return type(self)(self.nvars, terms)

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return self._new(out)

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        return self._new({e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, _Sparse):
            return self.scale(other)
        out: dict[Exps, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add_exps(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return self._new(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = self.one(self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, _Sparse) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"{type(self).__name__}({self.nvars}, {len(self.terms)} terms)"

    # structure ----------------------------------------------------------
    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    @property
    def degree(self) -> int:
        """Degree of a homogeneous polynomial (0 for the zero polynomial)."""
        degs = self.degrees()
        if len(degs) > 1:
            raise DegreeMismatch(f"not homogeneous: degrees {sorted(degs)}")
        return degs.pop() if degs else 0

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "terms": [{"exps": list(e), "coef": fmt_rat(c)} for e, c in sorted(self.terms.items(), reverse=True)],
        }

    @classmethod
    def from_json(cls, data: dict, nvars: int | None = None):
        terms = {tuple(t["exps"]): parse_rat(t["coef"]) for t in data["terms"]}
        if nvars is None:
            if not terms:
                raise ValueError("cannot infer variable count of an empty polynomial")
            nvars = len(next(iter(terms)))
        return cls(nvars, terms)


class MultiPoly(_Sparse):
    """Polynomial in the support numbers."""

    __slots__ = ()

    def evaluate(self, point) -> Fraction:
        point = [Fraction(x) for x in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            total += c * prod((point[i] ** k for i, k in enumerate(e) if k), start=Fraction(1))
        return total

    def differentiate(self, exps: Exps) -> "MultiPoly":
        """Apply the monomial operator d^exps."""
        out: dict[Exps, Fraction] = {}
        for e, c in self.terms.items():
            if all(x >= a for x, a in zip(e, exps)):
                coef = c * prod(_falling(x, a) for x, a in zip(e, exps))
                ne = tuple(x - a for x, a in zip(e, exps))
                out[ne] = out.get(ne, 0) + coef
        return MultiPoly(self.nvars, out)


class DiffPoly(_Sparse):
    """Constant-coefficient differential operator in the d/dH_i."""

    __slots__ = ()

    @property
    def order(self) -> int:
        return self.degree

    def apply(self, poly: MultiPoly) -> MultiPoly:
        out = MultiPoly(poly.nvars)
        for e, c in self.terms.items():
            out = out + poly.differentiate(e).scale(c)
        return out
