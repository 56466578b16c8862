"""Exact spectral checks for the normalized Laplacian ``L = I - D^{-1} A``.

Eigenvalue multiplicities are computed over the rationals. For a rational
``lam`` the kernel of ``lam*I - L`` equals the kernel of ``(lam - 1)*D + A``,
because ``lam*I - L = D^{-1}((lam - 1)*D + A)`` and ``D`` is invertible once
every vertex has positive degree. Scaling by the denominator of ``lam`` makes
that matrix integral, so rank is computed by fraction-free elimination.

The maximum multiplicity uses the integer pencil ``p(t) = det(A - t*D)``:
``t`` is a root iff ``1 - t`` is an eigenvalue of ``L``. ``L`` is similar to
the symmetric ``I - D^{-1/2} A D^{-1/2}``, so geometric and algebraic
multiplicities coincide and the largest root multiplicity of ``p`` is the
largest eigenvalue multiplicity.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .coloring import FatColoring
from .graph import Graph, structure_report
from .linalg import (
    IntegerPolynomial,
    RationalMatrix,
    integer_det,
    integer_rank,
    interpolate,
    kernel_dimension,
    squarefree_decomposition,
)


class IsolatedVertex(ValueError):
    def __init__(self, v: int):
        super().__init__(f"vertex {v} is isolated; the normalized Laplacian is undefined")
        self.v = v


class NotRegular(ValueError):
    pass


class SpectralCheckFailed(AssertionError):
    pass


class Matrices(NamedTuple):
    A: RationalMatrix
    D: RationalMatrix
    K: RationalMatrix
    L: RationalMatrix


def _require_no_isolated(g: Graph) -> None:
    for v, d in enumerate(g.degrees):
        if d == 0:
            raise IsolatedVertex(v)


def adjacency_matrix(g: Graph) -> RationalMatrix:
    return RationalMatrix.of([[int(g.has_edge(i, j)) for j in range(g.n)] for i in range(g.n)])


def degree_matrix(g: Graph) -> RationalMatrix:
    return RationalMatrix.of(
        [[g.degrees[i] if i == j else 0 for j in range(g.n)] for i in range(g.n)]
    )


def build_matrices(g: Graph) -> Matrices:
    _require_no_isolated(g)
    a = adjacency_matrix(g)
    d = degree_matrix(g)
    lap = RationalMatrix.of(
        [
            [
                1 if i == j else (-Fraction(1, g.degrees[i]) if g.has_edge(i, j) else 0)
                for j in range(g.n)
            ]
            for i in range(g.n)
        ]
    )
    return Matrices(a, d, d - a, lap)


def _shifted_pencil(g: Graph, lam: Fraction) -> list[list[int]]:
    # q * ((lam - 1) D + A) with lam = p/q
    p, q = lam.numerator, lam.denominator
    diag = p - q
    return [
        [diag * g.degrees[i] if i == j else q * int(g.has_edge(i, j)) for j in range(g.n)]
        for i in range(g.n)
    ]


@lru_cache(maxsize=4096)
def _nl_multiplicity(g: Graph, lam: Fraction) -> int:
    return g.n - integer_rank(_shifted_pencil(g, lam))


def nl_multiplicity(g: Graph, lam) -> int:
    """Geometric multiplicity of ``lam`` as an eigenvalue of ``L`` (0 if not one)."""
    _require_no_isolated(g)
    return _nl_multiplicity(g, Fraction(lam))


@lru_cache(maxsize=1024)
def pencil_polynomial(g: Graph) -> IntegerPolynomial:
    """``det(A - t D)`` by Bareiss determinants at ``t = 0..n`` and exact interpolation."""
    xs = list(range(g.n + 1))
    ys = []
    for t in xs:
        rows = [
            [-t * g.degrees[i] if i == j else int(g.has_edge(i, j)) for j in range(g.n)]
            for i in range(g.n)
        ]
        ys.append(integer_det(rows))
    return interpolate(xs, ys)


def max_nl_multiplicity(g: Graph) -> int:
    _require_no_isolated(g)
    return len(squarefree_decomposition(pencil_polynomial(g)))


def check_fat_spectral(g: Graph, k: int, alpha) -> bool:
    """Necessary condition: ``k*alpha`` is an eigenvalue of ``L`` with multiplicity >= max(1, k-1)."""
    return nl_multiplicity(g, k * Fraction(alpha)) >= max(1, k - 1)


def class_difference_function(fc: FatColoring, i: int, j: int) -> list[int]:
    """+1 on class ``i``, -1 on class ``j``, 0 elsewhere."""
    return [1 if c == i else (-1 if c == j else 0) for c in fc.assignment]


def eigenfunction_check(g: Graph, fc: FatColoring, i: int, j: int) -> bool:
    """Check ``L f = (k*alpha) f`` exactly for the class difference function of ``(i, j)``."""
    if i == j:
        raise ValueError("need two distinct classes")
    _require_no_isolated(g)
    f = class_difference_function(fc, i, j)
    lam = fc.k * fc.alpha
    for v in range(g.n):
        s = sum(f[w] for w in g.adjacency[v])
        if f[v] - Fraction(s, g.degrees[v]) != lam * f[v]:
            return False
    return True


def regular_shadow(g: Graph, k: int, alpha) -> tuple[Fraction, Fraction]:
    """Kirchhoff and adjacency eigenvalues implied by a FAT (k, alpha) on a regular graph.

    Returns ``(d*k*alpha, d*(1 - k*alpha))`` after checking both multiplicities.
    """
    d = structure_report(g).regular_degree
    if d is None:
        raise NotRegular("graph is not regular")
    lam = k * Fraction(alpha)
    kirchhoff, adjacency = d * lam, d * (1 - lam)
    a = adjacency_matrix(g)
    dm = degree_matrix(g)
    ident = RationalMatrix.identity(g.n)
    need = max(1, k - 1)
    mk = kernel_dimension(ident.scale(kirchhoff) - (dm - a))
    ma = kernel_dimension(ident.scale(adjacency) - a)
    if mk < need or ma < need:
        raise SpectralCheckFailed(
            f"multiplicities K:{mk} A:{ma} below {need} for k={k}, alpha={alpha}"
        )
    return kirchhoff, adjacency
