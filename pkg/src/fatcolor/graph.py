"""Simple undirected graphs and the neighbor/edge/volume counts used by FAT colorings."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Optional, Sequence


class GraphError(ValueError):
    pass


class LoopEdge(GraphError):
    def __init__(self, u: int):
        super().__init__(f"loop edge at vertex {u}")
        self.u = u


class DuplicateEdge(GraphError):
    def __init__(self, u: int, v: int):
        super().__init__(f"duplicate edge ({u}, {v})")
        self.u, self.v = u, v


class VertexOutOfRange(GraphError):
    def __init__(self, v: int, n: int):
        super().__init__(f"vertex {v} out of range 0..{n - 1}")
        self.v, self.n = v, n


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adjacency[v]`` is the sorted tuple of neighbors of ``v``.
    """

    __slots__ = ("n", "m", "adjacency", "degrees", "_nbr_sets")

    def __init__(self, n: int, adjacency: Sequence[Iterable[int]]):
        adj = tuple(tuple(sorted(nb)) for nb in adjacency)
        if len(adj) != n:
            raise GraphError(f"adjacency has {len(adj)} rows, expected {n}")
        sets = tuple(frozenset(nb) for nb in adj)
        for v, nb in enumerate(adj):
            if len(sets[v]) != len(nb):
                raise DuplicateEdge(v, nb[0])
            for w in nb:
                if not 0 <= w < n:
                    raise VertexOutOfRange(w, n)
                if w == v:
                    raise LoopEdge(v)
                if v not in sets[w]:
                    raise GraphError(f"adjacency not symmetric at ({v}, {w})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adjacency", adj)
        object.__setattr__(self, "_nbr_sets", sets)
        object.__setattr__(self, "degrees", tuple(len(nb) for nb in adj))
        object.__setattr__(self, "m", sum(self.degrees) // 2)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            for x in (u, v):
                if not 0 <= x < n:
                    raise VertexOutOfRange(x, n)
            if u == v:
                raise LoopEdge(u)
            if v in adj[u]:
                raise DuplicateEdge(u, v)
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, relabelled ``vertices[i] -> i``."""
        index = {v: i for i, v in enumerate(vertices)}
        return Graph(
            len(vertices),
            [[index[w] for w in self.adjacency[v] if w in index] for v in vertices],
        )

    def __eq__(self, other):
        return isinstance(other, Graph) and self.adjacency == other.adjacency

    def __hash__(self):
        return hash(self.adjacency)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph.from_edge_list(n, edges)


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise VertexOutOfRange(v, g.n)


def _as_set(g: Graph, s: Iterable[int]) -> frozenset[int]:
    s = frozenset(s)
    for v in s:
        _check_vertex(g, v)
    return s


def neighbor_count(g: Graph, v: int, s: Iterable[int]) -> int:
    """Number of neighbors of ``v`` inside ``s``."""
    _check_vertex(g, v)
    s = _as_set(g, s)
    return sum(1 for w in g.adjacency[v] if w in s)


def edges_between(g: Graph, s: Iterable[int], t: Iterable[int]) -> int:
    """Edges with one endpoint in ``s`` and the other in ``t``; each edge counted once."""
    s, t = _as_set(g, s), _as_set(g, t)
    count = 0
    for u, v in g.edges():
        if (u in s and v in t) or (v in s and u in t):
            count += 1
    return count


def volume(g: Graph, s: Iterable[int]) -> int:
    return sum(g.degrees[v] for v in _as_set(g, s))


def components(g: Graph) -> list[list[int]]:
    """Connected components as ascending vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    out = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


@dataclass(frozen=True)
class StructureReport:
    is_connected: bool
    component_ids: tuple[int, ...]
    component_count: int
    is_bipartite: bool
    regular_degree: Optional[int]
    min_degree: int
    max_degree: int
    degree_gcd: int


def structure_report(g: Graph) -> StructureReport:
    comps = components(g)
    ids = [0] * g.n
    for i, comp in enumerate(comps):
        for v in comp:
            ids[v] = i

    side = [-1] * g.n
    bipartite = True
    for comp in comps:
        side[comp[0]] = 0
        queue = deque([comp[0]])
        while queue and bipartite:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    bipartite = False
                    break

    degs = g.degrees
    lo = min(degs, default=0)
    hi = max(degs, default=0)
    return StructureReport(
        is_connected=len(comps) <= 1,
        component_ids=tuple(ids),
        component_count=len(comps),
        is_bipartite=bipartite,
        regular_degree=lo if lo == hi and g.n > 0 else None,
        min_degree=lo,
        max_degree=hi,
        degree_gcd=reduce(gcd, degs, 0),
    )
