"""FAT colorings: exact verification, class merging and the coarsening order.

All parameters are :class:`fractions.Fraction` values, which are always kept
in lowest terms with a positive denominator.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .graph import Graph

ALPHA_INCONSISTENT = "AlphaInconsistent"
COUNT_MISMATCH = "CountMismatch"
NON_INTEGER_REQUIREMENT = "NonIntegerRequirement"


class ColoringError(ValueError):
    pass


class EmptyClass(ColoringError):
    pass


class NotAPartition(ColoringError):
    pass


class UnequalGroups(ColoringError):
    pass


class MergeMismatch(AssertionError):
    """The merged coloring disagreed with the merging formula on re-verification."""


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational: {text!r}") from None


@dataclass(frozen=True)
class Coloring:
    """Surjective assignment ``vertex -> class`` onto ``0..k-1``."""

    assignment: tuple[int, ...]
    k: int

    def __post_init__(self):
        used = set(self.assignment)
        if used != set(range(self.k)):
            missing = sorted(set(range(self.k)) - used)
            if missing:
                raise EmptyClass(f"classes {missing} are empty")
            raise ColoringError(f"class index outside 0..{self.k - 1}")

    @classmethod
    def from_assignment(cls, assignment: Iterable[int]) -> "Coloring":
        a = tuple(assignment)
        return cls(a, max(a) + 1 if a else 0)

    @classmethod
    def from_classes(cls, n: int, classes: Sequence[Iterable[int]]) -> "Coloring":
        a = [-1] * n
        for i, cls_ in enumerate(classes):
            for v in cls_:
                if not 0 <= v < n:
                    raise NotAPartition(f"vertex {v} out of range")
                if a[v] >= 0:
                    raise NotAPartition(f"vertex {v} appears twice")
                a[v] = i
        if -1 in a:
            raise NotAPartition(f"vertex {a.index(-1)} is uncolored")
        return cls(tuple(a), len(classes))

    @property
    def n(self) -> int:
        return len(self.assignment)

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.assignment):
            out[c].append(v)
        return out


@dataclass(frozen=True)
class FatColoring:
    coloring: Coloring
    alpha: Fraction
    beta: Fraction

    @property
    def k(self) -> int:
        return self.coloring.k

    @property
    def assignment(self) -> tuple[int, ...]:
        return self.coloring.assignment

    def classes(self) -> list[list[int]]:
        return self.coloring.classes()

    def sort_key(self):
        return (self.k, self.alpha, self.coloring.assignment)

    def to_json(self) -> str:
        return json.dumps(coloring_to_dict(self))


@dataclass(frozen=True)
class Rejection:
    vertex: int
    cls: int
    expected: Fraction
    actual: int
    reason: str

    def __str__(self):
        return (
            f"REJECT {self.reason} vertex={self.vertex} class={self.cls} "
            f"expected={format_rational(self.expected)} actual={self.actual}"
        )


def canonicalize(c: Coloring) -> Coloring:
    """Renumber classes by first appearance in vertex order."""
    relabel: dict[int, int] = {}
    out = []
    for x in c.assignment:
        if x not in relabel:
            relabel[x] = len(relabel)
        out.append(relabel[x])
    return Coloring(tuple(out), c.k)


def verify_fat(g: Graph, c: Coloring) -> Union[FatColoring, Rejection]:
    if c.n != g.n:
        raise ColoringError(f"coloring covers {c.n} vertices, graph has {g.n}")
    k, a, degs = c.k, c.assignment, g.degrees
    if k <= 1:
        return FatColoring(c, Fraction(0), Fraction(1))

    counts = [[0] * k for _ in range(g.n)]
    for v in range(g.n):
        row = counts[v]
        for w in g.adjacency[v]:
            row[a[w]] += 1

    alpha = None
    for v in range(g.n):
        if degs[v] > 0:
            i = 1 if a[v] == 0 else 0
            alpha = Fraction(counts[v][i], degs[v])
            break
    if alpha is None:
        return FatColoring(c, Fraction(0), Fraction(1))
    beta = 1 - (k - 1) * alpha

    for v in range(g.n):
        d = degs[v]
        for i in range(k):
            own = i == a[v]
            expected = (beta if own else alpha) * d
            actual = counts[v][i]
            if expected == actual:
                continue
            if expected.denominator != 1:
                reason = NON_INTEGER_REQUIREMENT
            elif own:
                reason = COUNT_MISMATCH
            else:
                reason = ALPHA_INCONSISTENT
            return Rejection(v, i, expected, actual, reason)
    return FatColoring(c, alpha, beta)


def is_proper(fc: FatColoring) -> bool:
    return fc.beta == 0


def is_coarser(c2: Coloring, c1: Coloring) -> bool:
    """True iff every class of ``c2`` is a union of classes of ``c1``."""
    if c1.n != c2.n:
        raise ColoringError("colorings on different vertex sets")
    image: dict[int, int] = {}
    for x1, x2 in zip(c1.assignment, c2.assignment):
        if image.setdefault(x1, x2) != x2:
            return False
    return True


def merge(g: Graph, fc: FatColoring, grouping: Sequence[Iterable[int]]) -> FatColoring:
    """Merge classes of ``fc`` along ``grouping`` (equal-size groups of class indices)."""
    groups = [list(gr) for gr in grouping]
    k = fc.k
    flat = sorted(x for gr in groups for x in gr)
    if flat != list(range(k)) or any(not gr for gr in groups):
        raise NotAPartition(f"grouping {groups} does not partition 0..{k - 1}")
    ell = len(groups)
    size = k // ell
    if k % ell or any(len(gr) != size for gr in groups):
        raise UnequalGroups(f"groups must each hold k/l = {k}/{ell} classes")

    owner = {x: gi for gi, gr in enumerate(groups) for x in gr}
    merged = canonicalize(Coloring(tuple(owner[x] for x in fc.assignment), ell))
    if ell == 1:
        alpha, beta = Fraction(0), Fraction(1)
    else:
        ratio = Fraction(k, ell)
        alpha = ratio * fc.alpha
        beta = fc.beta + (ratio - 1) * fc.alpha

    check = verify_fat(g, merged)
    if isinstance(check, Rejection) or (check.alpha, check.beta) != (alpha, beta):
        raise MergeMismatch(f"merged coloring failed re-verification: {check}")
    return check


# -- JSON ------------------------------------------------------------------


def coloring_to_dict(fc: FatColoring) -> dict:
    canon = canonicalize(fc.coloring)
    return {
        "n": canon.n,
        "k": canon.k,
        "alpha": format_rational(fc.alpha),
        "beta": format_rational(fc.beta),
        "classes": canon.classes(),
    }


def coloring_from_dict(data: dict) -> tuple[Coloring, Optional[Fraction], Optional[Fraction]]:
    """Read a coloring object; returns the coloring and any stated (alpha, beta)."""
    try:
        n = int(data["n"])
        classes = data["classes"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ColoringError(f"malformed coloring object: {exc}") from None
    if not isinstance(classes, list) or any(not isinstance(c, list) for c in classes):
        raise ColoringError("'classes' must be a list of vertex lists")
    if any(not c for c in classes):
        raise EmptyClass("coloring has an empty class")
    c = Coloring.from_classes(n, classes)
    if "k" in data and int(data["k"]) != c.k:
        raise ColoringError(f"'k' is {data['k']} but {c.k} classes given")
    alpha = parse_rational(data["alpha"]) if "alpha" in data else None
    beta = parse_rational(data["beta"]) if "beta" in data else None
    return c, alpha, beta
