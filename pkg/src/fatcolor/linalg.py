"""Exact dense linear algebra over Q and Z[t] for the spectral checks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence


@dataclass(frozen=True)
class RationalMatrix:
    rows: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def of(cls, rows: Sequence[Sequence]) -> "RationalMatrix":
        rows = tuple(tuple(Fraction(x) for x in r) for r in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        return cls(rows)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls.of([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        return RationalMatrix(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows))
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return self + other.scale(-1)

    def scale(self, c) -> "RationalMatrix":
        c = Fraction(c)
        return RationalMatrix(tuple(tuple(c * a for a in r) for r in self.rows))

    def apply(self, x: Sequence) -> list[Fraction]:
        return [sum((a * Fraction(b) for a, b in zip(r, x)), Fraction(0)) for r in self.rows]

    def integer_rows(self) -> list[list[int]]:
        """Rows scaled by their denominator lcm; same row space, integer entries."""
        out = []
        for r in self.rows:
            den = lcm(*(a.denominator for a in r)) if r else 1
            out.append([int(a * den) for a in r])
        return out


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank by fraction-free (Bareiss) elimination; all divisions are exact."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank, prev = 0, 1
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for i in range(rank + 1, nrows):
            a = m[i][col]
            row_i, row_r = m[i], m[rank]
            for j in range(col + 1, ncols):
                row_i[j] = (p * row_i[j] - a * row_r[j]) // prev
            row_i[col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def integer_det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by Bareiss elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if m[i][k]), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        p = m[k][k]
        for i in range(k + 1, n):
            row_i, row_k = m[i], m[k]
            a = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (p * row_i[j] - a * row_k[j]) // prev
        prev = p
    return sign * m[n - 1][n - 1] if n else 1


def kernel_dimension(mat: RationalMatrix) -> int:
    rows, cols = mat.shape
    return cols - integer_rank(mat.integer_rows())


# -- polynomials -------------------------------------------------------------


def _trim(c: list) -> tuple:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntegerPolynomial:
    """Integer coefficients in ascending degree; ``()`` is the zero polynomial."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if self.coefficients and self.coefficients[-1] == 0:
            object.__setattr__(self, "coefficients", _trim(list(self.coefficients)))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntegerPolynomial":
        return IntegerPolynomial(tuple(i * c for i, c in enumerate(self.coefficients) if i))

    def primitive(self) -> "IntegerPolynomial":
        g = 0
        for c in self.coefficients:
            g = gcd(g, c)
        if g == 0:
            return self
        if self.coefficients[-1] < 0:
            g = -g
        return IntegerPolynomial(tuple(c // g for c in self.coefficients))


def interpolate(xs: Sequence[int], ys: Sequence[int]) -> IntegerPolynomial:
    """Exact interpolation through ``(xs[i], ys[i])``; the result must be integral."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    # Newton divided differences, then expand to monomial basis
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        # poly = poly * (t - xs[i]) + coef[i]
        shifted = [Fraction(0)] + poly[:-1]
        poly = [s - xs[i] * p for s, p in zip(shifted, poly)]
        poly[0] += coef[i]
    if any(c.denominator != 1 for c in poly):
        raise ArithmeticError("interpolated polynomial is not integral")
    return IntegerPolynomial(tuple(int(c) for c in poly))


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and any(a):
        shift = len(a) - len(b)
        f = a[-1] / lead
        q[shift] = f
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        a = list(_trim(a))
    return q, list(_trim(a))


def _to_int_poly(c: Sequence[Fraction]) -> IntegerPolynomial:
    c = list(_trim([Fraction(x) for x in c]))
    if not c:
        return IntegerPolynomial(())
    den = lcm(*(x.denominator for x in c))
    return IntegerPolynomial(tuple(int(x * den) for x in c)).primitive()


def poly_gcd(p: IntegerPolynomial, q: IntegerPolynomial) -> IntegerPolynomial:
    """Primitive gcd over Q with positive leading coefficient."""
    a = [Fraction(x) for x in p.coefficients]
    b = [Fraction(x) for x in q.coefficients]
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, list(_to_int_poly(r).coefficients)
        b = [Fraction(x) for x in b]
    return _to_int_poly(a)


def poly_quotient(p: IntegerPolynomial, q: IntegerPolynomial) -> IntegerPolynomial:
    quot, rem = _poly_divmod([Fraction(x) for x in p.coefficients],
                             [Fraction(x) for x in q.coefficients])
    if rem:
        raise ArithmeticError("division is not exact")
    return _to_int_poly(quot)


def _deriv(a: list[Fraction]) -> list[Fraction]:
    return [i * c for i, c in enumerate(a)][1:]


def _qgcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    return [c / a[-1] for c in a]


def _exact_div(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    q, r = _poly_divmod(a, b)
    if r:
        raise ArithmeticError("division is not exact")
    return list(_trim(q))


def squarefree_decomposition(p: IntegerPolynomial) -> list[IntegerPolynomial]:
    """Yun's algorithm: ``factors[i]`` collects the roots of multiplicity ``i + 1``.

    Intermediate quotients stay over Q without rescaling, since the
    ``c - b'`` step relies on ``b`` and ``c`` sharing one scale.
    """
    if p.degree < 1:
        return []
    f = [Fraction(x) for x in p.coefficients]
    a = _qgcd(f, _deriv(f))
    b = _exact_div(f, a)
    c = _exact_div(_deriv(f), a)
    d = _qsub(c, _deriv(b))
    out = []
    while len(b) > 1:
        g = _qgcd(b, d) if d else [c_ / b[-1] for c_ in b]
        out.append(_to_int_poly(g))
        b = _exact_div(b, g)
        c = _exact_div(d, g) if d else []
        d = _qsub(c, _deriv(b))
    while out and out[-1].degree < 1:
        out.pop()
    return out


def _qsub(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    n = max(len(p), len(q))
    p = list(p) + [Fraction(0)] * (n - len(p))
    q = list(q) + [Fraction(0)] * (n - len(q))
    return list(_trim([x - y for x, y in zip(p, q)]))


def max_root_multiplicity(p: IntegerPolynomial) -> int:
    return len(squarefree_decomposition(p))
