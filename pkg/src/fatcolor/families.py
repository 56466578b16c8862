"""Generators for the named graph families and their known FAT chromatic numbers."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .graph import Graph


class InvalidParams(ValueError):
    pass


KINDS = ("complete", "cycle", "path", "star", "petal", "book", "turan", "kpartite")


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidParams(f"unknown family {self.kind!r}")
        p = self.params
        arity = {"turan": 2, "kpartite": None}.get(self.kind, 1)
        if arity is not None and len(p) != arity:
            raise InvalidParams(f"{self.kind} takes {arity} parameter(s), got {len(p)}")
        if self.kind == "kpartite":
            if not p or any(x < 1 for x in p):
                raise InvalidParams("kpartite sizes must all be >= 1")
        elif self.kind == "turan":
            n, t = p
            if not 1 <= t <= n:
                raise InvalidParams("turan needs 1 <= t <= N")
        elif self.kind == "cycle":
            if p[0] < 3:
                raise InvalidParams("cycle needs N >= 3")
        elif p[0] < 1:
            raise InvalidParams(f"{self.kind} needs parameter >= 1")

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse ``kind:a,b,...`` strings such as ``turan:12,4``."""
        kind, sep, rest = text.strip().partition(":")
        if not sep:
            raise InvalidParams(f"family spec {text!r} lacks ':'")
        try:
            params = tuple(int(x) for x in rest.split(","))
        except ValueError:
            raise InvalidParams(f"non-integer parameter in {text!r}") from None
        return cls(kind.lower(), params)

    def __str__(self):
        return f"{self.kind}:{','.join(map(str, self.params))}"


def Complete(n: int) -> FamilySpec:
    return FamilySpec("complete", (n,))


def Cycle(n: int) -> FamilySpec:
    return FamilySpec("cycle", (n,))


def Path(n: int) -> FamilySpec:
    return FamilySpec("path", (n,))


def Star(n: int) -> FamilySpec:
    return FamilySpec("star", (n,))


def Petal(m: int) -> FamilySpec:
    return FamilySpec("petal", (m,))


def Book(m: int) -> FamilySpec:
    return FamilySpec("book", (m,))


def Turan(n: int, t: int) -> FamilySpec:
    return FamilySpec("turan", (n, t))


def CompleteMultipartite(*sizes: int) -> FamilySpec:
    return FamilySpec("kpartite", tuple(sizes))


def turan_part_sizes(n: int, t: int) -> tuple[int, ...]:
    q, r = divmod(n, t)
    return (q + 1,) * r + (q,) * (t - r)


def part_labels(spec: FamilySpec) -> Optional[tuple[tuple[int, ...], ...]]:
    """Vertex parts for Turán and complete multipartite specs, else ``None``."""
    if spec.kind == "turan":
        sizes = turan_part_sizes(*spec.params)
    elif spec.kind == "kpartite":
        sizes = spec.params
    else:
        return None
    parts, start = [], 0
    for s in sizes:
        parts.append(tuple(range(start, start + s)))
        start += s
    return tuple(parts)


def _multipartite(parts) -> Graph:
    n = sum(len(p) for p in parts)
    owner = {v: i for i, p in enumerate(parts) for v in p}
    return Graph(n, [[w for w in range(n) if owner[w] != owner[v]] for v in range(n)])


def generate(spec: FamilySpec) -> Graph:
    kind, p = spec.kind, spec.params
    if kind == "complete":
        n = p[0]
        return Graph(n, [[w for w in range(n) if w != v] for v in range(n)])
    if kind == "cycle":
        n = p[0]
        return Graph.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "path":
        n = p[0]
        return Graph.from_edge_list(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "star":
        return Graph.from_edge_list(p[0] + 1, [(0, i) for i in range(1, p[0] + 1)])
    if kind == "petal":
        # x = 0, v_i = i, w_i = m + i
        m = p[0]
        edges = [(0, i) for i in range(1, 2 * m + 1)]
        edges += [(i, m + i) for i in range(1, m + 1)]
        return Graph.from_edge_list(2 * m + 1, edges)
    if kind == "book":
        # x = 0, y = 1, v_i = 1 + i, w_i = 1 + m + i
        m = p[0]
        edges = [(0, 1 + i) for i in range(1, m + 1)]
        edges += [(1, 1 + m + i) for i in range(1, m + 1)]
        edges += [(1 + i, 1 + m + i) for i in range(1, m + 1)]
        return Graph.from_edge_list(2 * m + 2, edges)
    return _multipartite(part_labels(spec))


def known_chi_fat(spec: FamilySpec) -> Optional[int]:
    """Closed-form FAT chromatic number where one is known for the family."""
    kind, p = spec.kind, spec.params
    if kind == "complete":
        return p[0]
    if kind == "path":
        return 2 if p[0] >= 2 else 1
    if kind == "star":
        return 2
    if kind == "petal":
        return 3
    if kind == "book":
        return 2 if p[0] % 2 else 3
    if kind == "cycle":
        n = p[0]
        if n % 3 == 0:
            return 3
        return 2 if n % 2 == 0 else 1
    if kind == "turan":
        n, t = p
        if n % t == 0:
            return max(t, n // t)
    return None


def random_tree(n: int, seed: int) -> Graph:
    """Random tree by attaching each vertex ``i >= 1`` to a uniform earlier vertex."""
    if n < 1:
        raise InvalidParams("tree needs n >= 1")
    rng = random.Random(seed)
    return Graph.from_edge_list(n, [(rng.randrange(i), i) for i in range(1, n)])


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi G(n, p) sample."""
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edge_list(n, edges)


def random_regular(d: int, n: int, seed: int) -> Graph:
    """Uniform-ish d-regular sample via the configuration model with rejection."""
    if (d * n) % 2 or d >= n:
        raise InvalidParams("need d*n even and d < n")
    rng = random.Random(seed)
    for _ in range(10_000):
        stubs = [v for v in range(n) for _ in range(d)]
        rng.shuffle(stubs)
        pairs = list(zip(stubs[::2], stubs[1::2]))
        seen = set()
        ok = True
        for u, v in pairs:
            key = (min(u, v), max(u, v))
            if u == v or key in seen:
                ok = False
                break
            seen.add(key)
        if ok:
            return Graph.from_edge_list(n, sorted(seen))
    raise InvalidParams(f"no simple {d}-regular graph sampled on {n} vertices")
