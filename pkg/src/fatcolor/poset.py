"""The coarsening order on FAT colorings, its Hasse diagram and irreducible elements."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher, categorical_node_match

from .coloring import FatColoring, format_rational, is_coarser
from .graph import Graph
from .solver import SearchBudget, enumerate_all


@dataclass(frozen=True)
class ColoringPoset:
    """FAT colorings of one graph under "coarser than".

    ``coarser_than`` holds ``(i, j)`` when element ``i`` is strictly coarser
    than element ``j``. ``hasse_edges`` holds covering pairs ``(finer, coarser)``.
    ``maximal`` indexes the irreducible elements.
    """

    elements: tuple[FatColoring, ...]
    coarser_than: tuple[tuple[int, int], ...]
    hasse_edges: tuple[tuple[int, int], ...]
    maximal: tuple[int, ...]

    def irreducibles(self) -> list[FatColoring]:
        return [self.elements[i] for i in self.maximal]


def build_poset(elements) -> ColoringPoset:
    elements = tuple(sorted(elements, key=FatColoring.sort_key))
    count = len(elements)
    # below[i]: bitmask of elements strictly coarser than i
    below = [0] * count
    pairs = []
    for i, fine in enumerate(elements):
        for j, coarse in enumerate(elements):
            if coarse.k < fine.k and is_coarser(coarse.coloring, fine.coloring):
                below[i] |= 1 << j
                pairs.append((j, i))
    hasse = []
    for i in range(count):
        reach = 0
        rest = below[i]
        while rest:
            low = rest & -rest
            reach |= below[low.bit_length() - 1]
            rest ^= low
        cover = below[i] & ~reach
        while cover:
            low = cover & -cover
            hasse.append((i, low.bit_length() - 1))
            cover ^= low
    has_finer = set(j for j, _ in pairs)
    maximal = tuple(i for i in range(count) if i not in has_finer)
    return ColoringPoset(elements, tuple(sorted(pairs)), tuple(sorted(hasse)), maximal)


def poset(g: Graph, budget: Optional[SearchBudget] = None) -> ColoringPoset:
    return build_poset(enumerate_all(g, budget))


def irreducibles(g: Graph, budget: Optional[SearchBudget] = None) -> list[FatColoring]:
    return poset(g, budget).irreducibles()


def feasible_report(g: Graph, budget: Optional[SearchBudget] = None) -> list[tuple[int, object]]:
    """Distinct (k, alpha) pairs realized by some FAT coloring, sorted."""
    return sorted({(fc.k, fc.alpha) for fc in enumerate_all(g, budget)})


def to_dot(p: ColoringPoset) -> str:
    lines = ["digraph fat_poset {", "  rankdir=BT;"]
    maximal = set(p.maximal)
    for i, fc in enumerate(p.elements):
        shape = "doublecircle" if i in maximal else "circle"
        lines.append(f'  n{i} [label="k={fc.k}, a={format_rational(fc.alpha)}", shape={shape}];')
    for fine, coarse in p.hasse_edges:
        lines.append(f"  n{fine} -> n{coarse};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- symmetry classes ----------------------------------------------------------


def _decorated(g: Graph, fc: FatColoring) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n), kind="vertex")
    h.add_edges_from(g.edges())
    for i, cls in enumerate(fc.classes()):
        node = ("class", i)
        h.add_node(node, kind="class")
        h.add_edges_from((node, v) for v in cls)
    return h


def automorphism_classes(g: Graph, colorings) -> list[list[FatColoring]]:
    """Group colorings whose partitions are mapped onto each other by an automorphism of ``g``.

    Each coloring becomes ``g`` plus one marker node per class joined to its
    members; two colorings are equivalent iff those decorated graphs are
    isomorphic with markers sent to markers.
    """
    match = categorical_node_match("kind", None)
    groups: list[tuple[FatColoring, nx.Graph, tuple, list]] = []
    for fc in colorings:
        inv = (fc.k, fc.alpha, tuple(sorted(len(c) for c in fc.classes())))
        h = _decorated(g, fc)
        for rep, hrep, inv_rep, members in groups:
            if inv_rep == inv and GraphMatcher(hrep, h, node_match=match).is_isomorphic():
                members.append(fc)
                break
        else:
            groups.append((fc, h, inv, [fc]))
    return [members for _, _, _, members in groups]
