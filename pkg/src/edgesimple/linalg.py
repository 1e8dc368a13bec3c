"""Exact linear algebra over the rationals.

Dense matrices are lists of rows.  Elimination is fraction-free: every row is
scaled to integers first and Bareiss' update ``(p*a - b*c) // prev`` keeps
entries equal to minors of the input, so each division is exact.  Sparse rank
and span-membership work goes through :class:`SparseEchelon`.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Matrix = list  # list[list[Fraction | int]]


def integer_row(row: Iterable) -> list[int]:
    """Scale a rational row by the lcm of its denominators."""
    row = [Fraction(x) for x in row]
    den = 1
    for x in row:
        den = lcm(den, x.denominator)
    return [int(x * den) for x in row]


def bareiss(M: Sequence[Sequence]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form.

    Returns the integer echelon matrix and the list of pivot columns.
    """
    A = [integer_row(r) for r in M]
    m = len(A)
    n = len(A[0]) if m else 0
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if A[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            A[r], A[p] = A[p], A[r]
        piv = A[r][c]
        row_r = A[r]
        for i in range(r + 1, m):
            row_i = A[i]
            a = row_i[c]
            for j in range(c, n):
                q, rem = divmod(piv * row_i[j] - a * row_r[j], prev)
                assert rem == 0, "Bareiss division must be exact"
                row_i[j] = q
        prev = piv
        pivots.append(c)
        r += 1
    return A, pivots


def rank(M: Sequence[Sequence]) -> int:
    if not M or not M[0]:
        return 0
    return len(bareiss(M)[1])


def det(M: Sequence[Sequence]) -> Fraction:
    n = len(M)
    if n == 0:
        return Fraction(1)
    rows = [[Fraction(x) for x in r] for r in M]
    scale = Fraction(1)
    ints = []
    for r in rows:
        den = 1
        for x in r:
            den = lcm(den, x.denominator)
        scale /= den
        ints.append([int(x * den) for x in r])
    # track row swaps for the sign
    A = ints
    sign = 1
    prev = 1
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            A[c], A[p] = A[p], A[c]
            sign = -sign
        piv = A[c][c]
        for i in range(c + 1, n):
            a = A[i][c]
            for j in range(c, n):
                A[i][j] = (piv * A[i][j] - a * A[c][j]) // prev
        prev = piv
    return sign * A[n - 1][n - 1] * scale


def rref(M: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form (nonzero rows only) and pivot columns."""
    E, pivots = bareiss(M)
    R = [[Fraction(x) for x in E[i]] for i in range(len(pivots))]
    for i, c in enumerate(pivots):
        p = R[i][c]
        R[i] = [x / p for x in R[i]]
    for i in range(len(pivots) - 1, -1, -1):
        c = pivots[i]
        for k in range(i):
            a = R[k][c]
            if a:
                R[k] = [x - a * y for x, y in zip(R[k], R[i])]
    return R, pivots


def nullspace(M: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of {x : Mx = 0}, one vector per free column."""
    if ncols is None:
        ncols = len(M[0]) if M else 0
    if not M:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    R, pivots = rref(M)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -R[i][f]
        basis.append(v)
    return basis


def solve(M: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """One solution of Mx = b, or None when the system is inconsistent."""
    m = len(M)
    n = len(M[0]) if m else 0
    aug = [list(M[i]) + [b[i]] for i in range(m)]
    if m == 0:
        return [Fraction(0)] * n
    R, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = R[i][n]
    return x


def inverse(M: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(M)
    aug = [list(M[i]) + [int(i == j) for j in range(n)] for i in range(n)]
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in R]


def transpose(M: Sequence[Sequence], nrows: int | None = None) -> list[list]:
    if not M:
        return [[] for _ in range(nrows or 0)]
    return [list(col) for col in zip(*M)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence], inner: int | None = None) -> list[list]:
    """A @ B.  ``inner`` resolves the shape when A has zero columns."""
    if not A:
        return []
    ncols = len(B[0]) if B else 0
    Bt = transpose(B) if B else [[] for _ in range(ncols)]
    return [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in Bt] for row in A]


def matvec(A: Sequence[Sequence], x: Sequence) -> list[Fraction]:
    return [sum((a * b for a, b in zip(row, x)), Fraction(0)) for row in A]


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(m: int, n: int) -> list[list[Fraction]]:
    return [[Fraction(0)] * n for _ in range(m)]


def span_rank(vectors: Sequence[Sequence]) -> int:
    """Rank of a list of (column) vectors, given as rows."""
    return rank(list(vectors)) if vectors else 0


def same_span(U: Sequence[Sequence], V: Sequence[Sequence]) -> bool:
    """Equality of two subspaces given by spanning vectors (mutual rank test)."""
    ru, rv = span_rank(U), span_rank(V)
    return ru == rv == span_rank(list(U) + list(V))


def leading_principal_minors(G: Sequence[Sequence]) -> list[Fraction]:
    return [det([row[:k] for row in G[:k]]) for k in range(1, len(G) + 1)]


class SparseEchelon:
    """Incremental echelon basis of integer row vectors stored as dicts.

    Rows are keyed by their leading (smallest) column.  ``add`` returns whether
    the new vector enlarged the span, which makes the insertion order a greedy
    basis selection.
    """

    def __init__(self) -> None:
        self._rows: dict[int, dict[int, int]] = {}

    def __len__(self) -> int:
        return len(self._rows)

    @staticmethod
    def _normalize(row: dict) -> dict[int, int]:
        row = {k: Fraction(v) for k, v in row.items() if v}
        if not row:
            return {}
        den = 1
        for v in row.values():
            den = lcm(den, v.denominator)
        out = {k: int(v * den) for k, v in row.items()}
        g = 0
        for v in out.values():
            g = gcd(g, v)
        return {k: v // g for k, v in out.items()}

    def reduce(self, row: dict) -> dict[int, int]:
        row = self._normalize(row)
        while row:
            c = min(row)
            piv = self._rows.get(c)
            if piv is None:
                break
            a, p = row[c], piv[c]
            new = {k: p * v for k, v in row.items()}
            for k, v in piv.items():
                nv = new.get(k, 0) - a * v
                if nv:
                    new[k] = nv
                else:
                    new.pop(k, None)
            g = 0
            for v in new.values():
                g = gcd(g, v)
            row = {k: v // g for k, v in new.items()} if g > 1 else new
        return row

    def add(self, row: dict) -> bool:
        r = self.reduce(row)
        if not r:
            return False
        self._rows[min(r)] = r
        return True

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)
