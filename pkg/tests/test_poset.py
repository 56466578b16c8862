from fractions import Fraction

import networkx as nx
import pytest

from fatcolor.coloring import is_coarser, is_proper
from fatcolor.families import Book, Path, Petal, Turan, generate
from fatcolor.poset import automorphism_classes, build_poset, feasible_report, irreducibles, poset, to_dot
from fatcolor.oracle import brute_force_oracle

from conftest import complete, cycle


def test_c6_two_irreducibles():
    found = irreducibles(cycle(6))
    assert [(fc.k, fc.alpha) for fc in found] == [(2, 1), (3, Fraction(1, 2))]
    assert all(is_proper(fc) for fc in found)


def test_c5_single_element():
    p = poset(cycle(5))
    assert len(p.elements) == 1 and p.maximal == (0,) and p.hasse_edges == ()


def test_path_only_bipartition():
    found = irreducibles(generate(Path(4)))
    assert [fc.assignment for fc in found] == [(0, 1, 0, 1)]


def test_c8_regression():
    found = irreducibles(cycle(8))
    assert len(found) == 3
    assert {fc.assignment for fc in found} == {(0, 1, 0, 1, 0, 1, 0, 1), (0, 0, 1, 1, 0, 0, 1, 1), (0, 1, 1, 0, 0, 1, 1, 0)}


def test_turan_counts():
    p = poset(generate(Turan(12, 4)))
    assert len(p.elements) == 221
    assert len(p.maximal) == 217
    assert len(p.hasse_edges) == 222


@pytest.mark.parametrize(
    "g,expected",
    [
        (generate(Turan(12, 4)), [(1, 0), (2, Fraction(2, 3)), (3, Fraction(1, 3)), (4, Fraction(1, 3))]),
        (cycle(6), [(1, 0), (2, 1), (3, Fraction(1, 2))]),
        (complete(2), [(1, 0), (2, 1)]),
    ],
)
def test_feasible_report(g, expected):
    assert feasible_report(g) == expected


@pytest.mark.parametrize("g", [cycle(8), complete(4), generate(Petal(2)), generate(Book(2)), cycle(12)])
def test_hasse_is_transitive_reduction(g):
    p = poset(g)
    order = nx.DiGraph()
    order.add_nodes_from(range(len(p.elements)))
    order.add_edges_from((fine, coarse) for coarse, fine in p.coarser_than)
    assert set(p.hasse_edges) == set(nx.transitive_reduction(order).edges())
    for coarse, fine in p.coarser_than:
        assert is_coarser(p.elements[coarse].coloring, p.elements[fine].coloring)


def test_proper_colorings_are_maximal():
    for g in (cycle(6), cycle(9), complete(4), generate(Turan(9, 3))):
        p = poset(g)
        for i, fc in enumerate(p.elements):
            if is_proper(fc):
                assert i in p.maximal


def test_build_poset_from_oracle_matches():
    g = generate(Petal(2))
    assert build_poset(brute_force_oracle(g)) == poset(g)


def test_dot_format():
    text = to_dot(poset(cycle(6)))
    assert text.startswith("digraph fat_poset {\n  rankdir=BT;\n")
    assert 'n0 [label="k=1, a=0/1", shape=circle];' in text
    assert 'n2 [label="k=3, a=1/2", shape=doublecircle];' in text
    assert "n1 -> n0;" in text and "n2 -> n0;" in text
    assert text.endswith("}\n")


def test_automorphism_classes():
    g = generate(Turan(12, 4))
    groups = automorphism_classes(g, irreducibles(g))
    assert len(groups) == 2
    assert sorted(len(x) for x in groups) == [1, 216]
    assert len(automorphism_classes(cycle(8), irreducibles(cycle(8)))) == 2
