"""Brute-force ground truth: every set partition of the vertex set, checked directly."""

from __future__ import annotations

from typing import Iterator, Optional

from .coloring import Coloring, FatColoring, verify_fat
from .graph import Graph

MAX_ORACLE_VERTICES = 12


class TooLarge(ValueError):
    pass


def set_partitions(n: int, k: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Restricted growth strings of length ``n`` (exactly ``k`` blocks if given).

    ``a[0] = 0`` and ``a[i] <= 1 + max(a[:i])``; each string is one set partition
    with blocks numbered by first appearance.
    """
    if n == 0:
        if k in (None, 0):
            yield ()
        return
    a = [0] * n

    def rec(i: int, top: int):
        if i == n:
            if k is None or top + 1 == k:
                yield tuple(a)
            return
        if k is not None and (top + 1) + (n - i) < k:
            return
        hi = top + 1 if k is None else min(top + 1, k - 1)
        for x in range(hi + 1):
            a[i] = x
            yield from rec(i + 1, max(top, x))

    yield from rec(1, 0)


def brute_force_oracle(g: Graph) -> list[FatColoring]:
    if g.n > MAX_ORACLE_VERTICES:
        raise TooLarge(f"oracle limited to {MAX_ORACLE_VERTICES} vertices, got {g.n}")
    found = []
    for rgs in set_partitions(g.n):
        res = verify_fat(g, Coloring.from_assignment(rgs))
        if isinstance(res, FatColoring):
            found.append(res)
    found.sort(key=FatColoring.sort_key)
    return found
