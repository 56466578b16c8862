"""Acceptance suite: one recorded pass/fail line per criterion, printed in the terminal summary."""

import random
import time
from fractions import Fraction
from itertools import combinations

import pytest

from fatcolor.cli import build_parser, run
from fatcolor.coloring import FatColoring, is_proper, merge, verify_fat
from fatcolor.families import Book, Complete, Cycle, Path, Petal, Star, Turan, generate, known_chi_fat, part_labels
from fatcolor.graph import structure_report, volume
from fatcolor.oracle import brute_force_oracle
from fatcolor.poset import automorphism_classes, build_poset, feasible_report, irreducibles
from fatcolor.solver import chi_fat, enumerate_all
from fatcolor.spectral import (
    check_fat_spectral,
    eigenfunction_check,
    max_nl_multiplicity,
    nl_multiplicity,
    regular_shadow,
)

from conftest import complete, cycle, record


@pytest.fixture(scope="module")
def corpus_runs(corpus):
    """(graph, oracle output, solver output) for every corpus graph, plus wall time."""
    start = time.perf_counter()
    runs = [(g, brute_force_oracle(g), enumerate_all(g)) for g in corpus]
    return runs, time.perf_counter() - start


def _family_table():
    rows = [(Complete(n), n) for n in range(2, 7)]
    rows += [(Path(n), 2) for n in range(2, 9)]
    rows += [(Star(n), 2) for n in range(1, 8)]
    rows += [(Petal(m), 3) for m in range(1, 5)]
    rows += [(Book(m), k) for m, k in zip(range(1, 6), (2, 3, 2, 3, 2))]
    rows += [(Cycle(n), known_chi_fat(Cycle(n))) for n in range(3, 16)]
    rows += [(Turan(n, t), max(t, n // t)) for n, t in [(6, 2), (6, 3), (8, 2), (9, 3), (12, 3), (12, 4)]]
    return rows


def test_1_family_table():
    start = time.perf_counter()
    bad = []
    for spec, expected in _family_table():
        got = chi_fat(generate(spec)).k
        if got != expected or known_chi_fat(spec) != expected:
            bad.append(f"{spec}: solver {got}, closed form {known_chi_fat(spec)}, expected {expected}")
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed <= 60
    record("1 family table", ok, f"{len(_family_table())} rows, {elapsed:.1f}s (limit 60s) {'; '.join(bad)}")
    assert not bad, bad
    assert elapsed <= 60


def test_2_oracle_equivalence(corpus_runs):
    runs, elapsed = corpus_runs
    bad = [g.edges() for g, truth, found in runs if truth != found]
    ok = not bad and elapsed <= 600
    record("2 oracle equivalence", ok,
           f"{len(runs)} graphs, {sum(len(t) for _, t, _ in runs)} colorings, {len(bad)} mismatches, {elapsed:.1f}s (limit 600s)")
    assert not bad, bad[:5]
    assert elapsed <= 600


def test_3_spectral_theorems(corpus_runs):
    runs, _ = corpus_runs
    checked, failures = 0, []
    for g, truth, _ in runs:
        if 0 in g.degrees:
            continue
        for fc in truth:
            checked += 1
            if not check_fat_spectral(g, fc.k, fc.alpha):
                failures.append((g.edges(), fc.assignment, "multiplicity"))
            for i, j in combinations(range(fc.k), 2):
                if not eigenfunction_check(g, fc, i, j):
                    failures.append((g.edges(), fc.assignment, (i, j)))
    record("3 spectral theorem suite", not failures, f"{checked} colorings, {len(failures)} failures")
    assert not failures, failures[:5]


def _bound_violations(g, fc: FatColoring, mu):
    rep = structure_report(g)
    k = fc.k
    out = []
    if k > rep.min_degree + 1:
        out.append("k <= delta+1")
    if k > rep.degree_gcd + 1:
        out.append("k <= gcd+1")
    if k >= 2 and k == rep.degree_gcd + 1 and fc.beta != 0:
        out.append("gcd equality forces beta=0")
    if mu is not None and k > mu + 1:
        out.append("k <= mu+1")
    classes = fc.classes()
    if rep.regular_degree is not None:
        if g.n % k:
            out.append("k | n")
        if len({len(c) for c in classes}) != 1:
            out.append("equal sizes")
    if fc.alpha > 0:
        if (2 * g.m) % k:
            out.append("k | 2m")
        if len({volume(g, c) for c in classes}) != 1:
            out.append("equal volumes")
    return out


def test_4_bound_suite(corpus_runs):
    runs, _ = corpus_runs
    failures, checked = [], 0
    for g, _, found in runs:
        if not structure_report(g).is_connected:
            continue
        mu = max_nl_multiplicity(g) if 0 not in g.degrees else None
        for fc in found:
            checked += 1
            failures += [(g.edges(), fc.assignment, v) for v in _bound_violations(g, fc, mu)]
    record("4 bound suite", not failures, f"{checked} colorings on connected graphs, {len(failures)} violations")
    assert not failures, failures[:5]


def _random_grouping(rng, k, ell):
    labels = list(range(k))
    rng.shuffle(labels)
    size = k // ell
    return [labels[i * size:(i + 1) * size] for i in range(ell)]


def test_5_merge_theorem(corpus_runs):
    runs, _ = corpus_runs
    rng = random.Random(20240601)
    merges, failures = 0, []
    for g, _, found in runs:
        for fc in found:
            for ell in (d for d in range(1, fc.k + 1) if fc.k % d == 0):
                ratio = Fraction(fc.k, ell)
                for _ in range(3):
                    grouping = _random_grouping(rng, fc.k, ell)
                    merged = merge(g, fc, grouping)
                    again = verify_fat(g, merged.coloring)
                    merges += 1
                    if (
                        again != merged
                        or merged.k != ell
                        or merged.alpha != (ratio * fc.alpha if ell > 1 else 0)
                        or merged.beta != fc.beta + (ratio - 1) * fc.alpha
                    ):
                        failures.append((g.edges(), fc.assignment, grouping))
    record("5 merge theorem", not failures, f"{merges} merges, {len(failures)} failures")
    assert not failures, failures[:5]


def _turan_shape(fc, parts):
    """'monochromatic' if each part sits in one class, 'balanced' if each part meets every class equally."""
    per_part = [[sum(1 for v in p if fc.assignment[v] == i) for i in range(fc.k)] for p in parts]
    if all(sum(1 for x in row if x) == 1 for row in per_part):
        return "monochromatic"
    if all(len(set(row)) == 1 for row in per_part):
        return "balanced"
    return None


def test_6_turan_structure():
    start = time.perf_counter()
    spec = Turan(12, 4)
    g, parts = generate(spec), part_labels(spec)
    found = enumerate_all(g)
    shapes = [_turan_shape(fc, parts) for fc in found]
    dichotomy = None not in shapes
    irr = irreducibles(g)
    classes = automorphism_classes(g, irr)
    feasible = feasible_report(g)
    expected = [(1, Fraction(0)), (2, Fraction(2, 3)), (3, Fraction(1, 3)), (4, Fraction(1, 3))]
    elapsed = time.perf_counter() - start
    ok = dichotomy and len(classes) == 2 and feasible == expected and elapsed <= 120
    record(
        "6 Turan structure",
        ok,
        f"{len(found)} colorings, {shapes.count('balanced')} balanced, "
        f"{shapes.count('monochromatic')} monochromatic; irreducibles: {len(classes)} up to automorphism "
        f"({len(irr)} up to color permutation); feasible {[(k, str(a)) for k, a in feasible]}; {elapsed:.1f}s (limit 120s)",
    )
    assert dichotomy
    assert len(classes) == 2
    assert len(irr) == 217
    assert feasible == expected
    assert elapsed <= 120


def test_7_irreducibility_counts(corpus_runs):
    runs, _ = corpus_runs
    c6, c5 = len(irreducibles(cycle(6))), len(irreducibles(cycle(5)))
    c8 = len(build_poset(brute_force_oracle(cycle(8))).irreducibles())
    non_maximal = []
    proper = 0
    for g, _, found in runs:
        p = build_poset(found)
        maximal = set(p.maximal)
        for i, fc in enumerate(p.elements):
            if is_proper(fc):
                proper += 1
                if i not in maximal:
                    non_maximal.append((g.edges(), fc.assignment))
    ok = c6 == 2 and c5 == 1 and not non_maximal and c8 >= 2
    record("7 irreducibility counts", ok,
           f"C6={c6} C5={c5}; {proper} proper colorings, {len(non_maximal)} not maximal; C8 regression value {c8}")
    assert (c6, c5) == (2, 1)
    assert not non_maximal, non_maximal[:5]
    assert c8 == 3


def test_8_spectral_units():
    values = (
        nl_multiplicity(complete(4), Fraction(4, 3)),
        nl_multiplicity(cycle(6), Fraction(3, 2)),
        max_nl_multiplicity(complete(4)),
        regular_shadow(cycle(6), 3, Fraction(1, 2)),
    )
    ok = values == (3, 2, 3, (3, -1))
    shadow = tuple(str(x) for x in values[3])
    record("8 spectral unit values", ok, f"multiplicities {values[:3]}, regular shadow {shadow}")
    assert ok


def _cli_bytes(*argv):
    import io

    out, err = io.StringIO(), io.StringIO()
    code = run(build_parser().parse_args(list(argv)), out, err)
    assert code == 0, err.getvalue()
    return out.getvalue().encode()


def test_9_determinism():
    outputs = {}
    for cmd in ("enum", "hasse"):
        outputs[cmd] = {
            _cli_bytes(cmd, "turan:12,4", "--workers", str(w)) for w in (1, 8) for _ in range(3)
        }
    ok = all(len(v) == 1 for v in outputs.values())
    record("9 determinism", ok,
           f"enum {len(outputs['enum'])} distinct output(s), hasse {len(outputs['hasse'])} distinct output(s) over 6 runs each")
    assert ok
