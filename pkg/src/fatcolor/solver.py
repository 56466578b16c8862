"""Exhaustive search for FAT colorings with fixed (k, alpha), and what is built on it.

A FAT k-coloring with alpha > 0 gives every non-isolated vertex
``alpha * deg v > 0`` neighbors in each foreign class. Within a component
with edges every class therefore appears, and the restriction to that
component is again a FAT k-coloring with the same alpha. Isolated vertices
satisfy every equation trivially and may sit in any class. Disconnected
graphs are solved per component and recombined. With alpha = 0 no edge
leaves a class, so the classes are unions of whole components.
"""

from __future__ import annotations

import os
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from math import gcd
from typing import Optional

from .coloring import Coloring, FatColoring, Rejection, canonicalize, verify_fat
from .graph import Graph, components, structure_report
from .oracle import set_partitions
from .spectral import check_fat_spectral, max_nl_multiplicity

DEFAULT_MAX_NODES = 10**7
BUDGET_ENV = "FATCOLOR_BUDGET_NODES"


class DegenerateGraph(ValueError):
    pass


class BudgetExhausted(RuntimeError):
    """Search stopped at the node or time cap.

    ``partial`` holds whatever verified colorings were found; it is incomplete.
    ``lower``/``upper`` are set by :func:`chi_fat`.
    """

    def __init__(self, message, partial=None, lower=None, upper=None):
        super().__init__(message)
        self.partial = list(partial or [])
        self.complete = False
        self.lower = lower
        self.upper = upper


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: Optional[int] = DEFAULT_MAX_NODES
    time_cap: Optional[float] = None
    workers: int = 1

    def __post_init__(self):
        if self.max_nodes is not None and self.max_nodes <= 0:
            raise ValueError("max_nodes must be positive")
        if self.time_cap is not None and self.time_cap <= 0:
            raise ValueError("time_cap must be positive")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")

    @classmethod
    def from_env(cls, **overrides) -> "SearchBudget":
        if BUDGET_ENV in os.environ and "max_nodes" not in overrides:
            overrides["max_nodes"] = int(os.environ[BUDGET_ENV])
        return cls(**overrides)


class _Meter:
    """Node counter shared by all searches under one budget."""

    BATCH = 1024

    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.nodes = 0
        self.started = time.monotonic()
        self._lock = threading.Lock()

    def charge(self, count: int) -> None:
        with self._lock:
            self.nodes += count
            nodes = self.nodes
        b = self.budget
        if b.max_nodes is not None and nodes > b.max_nodes:
            raise BudgetExhausted(f"node budget {b.max_nodes} exhausted")
        if b.time_cap is not None and time.monotonic() - self.started > b.time_cap:
            raise BudgetExhausted(f"time cap {b.time_cap}s exhausted")


def _meter(budget) -> _Meter:
    if isinstance(budget, _Meter):
        return budget
    return _Meter(budget if budget is not None else SearchBudget())


@dataclass(frozen=True)
class ChiFatResult:
    k: int
    witness: FatColoring
    bounds_used: dict = field(default_factory=dict, compare=False)


# -- candidate parameters ----------------------------------------------------


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def candidate_alphas(g: Graph, k: int) -> list[Fraction]:
    """Positive alpha = r/s with s | gcd of degrees and alpha <= 1/(k-1), spectrally filtered."""
    if k < 2:
        raise ValueError("candidate alphas are defined for k >= 2")
    rep = structure_report(g)
    if g.m == 0:
        raise DegenerateGraph("graph has no edges")
    cap = Fraction(1, k - 1)
    out = set()
    for s in _divisors(rep.degree_gcd):
        for r in range(1, s + 1):
            if gcd(r, s) == 1 and Fraction(r, s) <= cap:
                out.add(Fraction(r, s))
    if rep.min_degree > 0:
        out = {a for a in out if check_fat_spectral(g, k, a)}
    return sorted(out, reverse=True)


def _alpha_positive_bounds(g: Graph) -> dict:
    """Upper bounds on k for FAT colorings with alpha > 0."""
    rep = structure_report(g)
    nonisolated = [d for d in g.degrees if d > 0]
    bounds = {
        "min_degree_plus_1": min(nonisolated) + 1,
        "degree_gcd_plus_1": rep.degree_gcd + 1,
    }
    if rep.min_degree > 0:
        bounds["mu_plus_1"] = max_nl_multiplicity(g) + 1
    bounds["upper"] = min(bounds.values())
    return bounds


def _divisibility_filter(g: Graph, k: int) -> Optional[str]:
    rep = structure_report(g)
    if (2 * g.m) % k:
        return "k does not divide 2m"
    if rep.is_connected and rep.regular_degree is not None and g.n % k:
        return "k does not divide n (connected regular)"
    return None


# -- fixed-parameter search --------------------------------------------------


def _search_connected(g: Graph, k: int, alpha: Fraction, meter: _Meter,
                      limit: Optional[int]) -> list[tuple[int, ...]]:
    n, degs = g.n, g.degrees
    beta = 1 - (k - 1) * alpha
    if alpha <= 0 or beta < 0 or n < k:
        return []
    qf, qo = [], []
    for d in degs:
        f, o = alpha * d, beta * d
        if f.denominator != 1 or o.denominator != 1:
            return []
        qf.append(int(f))
        qo.append(int(o))
    if (2 * g.m) % k:
        return []
    vol_cap = 2 * g.m // k
    rep = structure_report(g)
    size_cap = n
    if rep.regular_degree is not None:
        if n % k:
            return []
        size_cap = n // k

    order = sorted(range(n), key=lambda v: (-degs[v], v))
    adj = g.adjacency
    color = [-1] * n
    cnt = [[0] * k for _ in range(n)]
    vol = [0] * k
    size = [0] * k
    results: list[tuple[int, ...]] = []
    pending = [0]

    def vertex_ok(w: int) -> bool:
        row = cnt[w]
        c = color[w]
        if c >= 0:
            for x in range(k):
                if row[x] > (qo[w] if x == c else qf[w]):
                    return False
            return True
        over = -1
        f = qf[w]
        for x in range(k):
            if row[x] > f:
                if over >= 0:
                    return False
                over = x
        if over >= 0:
            return row[over] <= qo[w]
        return min(row) <= qo[w]

    def place(u: int, c: int) -> bool:
        color[u] = c
        vol[c] += degs[u]
        size[c] += 1
        ok = vertex_ok(u)
        for w in adj[u]:
            cnt[w][c] += 1
            if ok and not vertex_ok(w):
                ok = False
        if not ok:
            unplace(u, c)
        return ok

    def unplace(u: int, c: int) -> None:
        for w in adj[u]:
            cnt[w][c] -= 1
        color[u] = -1
        vol[c] -= degs[u]
        size[c] -= 1

    def rec(idx: int, used: int) -> bool:
        if idx == n:
            results.append(tuple(color))
            return limit is not None and len(results) >= limit
        if n - idx < k - used:
            return False
        u = order[idx]
        for c in range(min(used + 1, k)):
            pending[0] += 1
            if pending[0] >= _Meter.BATCH:
                meter.charge(pending[0])
                pending[0] = 0
            if vol[c] + degs[u] > vol_cap or size[c] + 1 > size_cap:
                continue
            if not place(u, c):
                continue
            stop = rec(idx + 1, max(used, c + 1))
            unplace(u, c)
            if stop:
                return True
        return False

    try:
        rec(0, 0)
    except BudgetExhausted as exc:
        exc.partial = list(results)
        raise
    meter.charge(pending[0])
    return results


def _emit(g: Graph, assignments, k: int, alpha: Fraction) -> list[FatColoring]:
    out = {}
    for a in assignments:
        c = canonicalize(Coloring(tuple(a), k))
        res = verify_fat(g, c)
        if isinstance(res, Rejection) or res.alpha != alpha:
            raise AssertionError(f"search emitted an invalid coloring {c.assignment}: {res}")
        out[c.assignment] = res
    return [out[key] for key in sorted(out)]


def solve_fixed(g: Graph, k: int, alpha, budget=None,
                limit: Optional[int] = None) -> list[FatColoring]:
    """All FAT k-colorings of connected ``g`` with parameter exactly ``alpha``.

    Results are canonical and distinct up to color permutation. ``limit`` stops
    the search early after that many solutions.
    """
    meter = _meter(budget)
    alpha = Fraction(alpha)
    try:
        raw = _search_connected(g, k, alpha, meter, limit)
    except BudgetExhausted as exc:
        exc.partial = _emit(g, exc.partial, k, alpha)
        raise
    return _emit(g, raw, k, alpha)


def _solve_positive(g: Graph, k: int, alpha: Fraction, meter: _Meter,
                    limit: Optional[int] = None) -> list[FatColoring]:
    comps = components(g)
    if len(comps) == 1:
        return solve_fixed(g, k, alpha, meter, limit)
    edge_comps = [c for c in comps if len(c) > 1]
    isolated = [c[0] for c in comps if len(c) == 1]
    per_comp = []
    for comp in edge_comps:
        sols = solve_fixed(g.subgraph(comp), k, alpha, meter, 1 if limit else None)
        if not sols:
            return []
        per_comp.append(sols)

    perms = list(permutations(range(k)))
    label_choices = [[(s, None) for s in per_comp[0]]]
    label_choices += [[(s, p) for s in sols for p in perms] for sols in per_comp[1:]]
    found = []
    for combo in product(*label_choices):
        for iso_labels in product(range(k), repeat=len(isolated)):
            a = [0] * g.n
            for comp, (sol, perm) in zip(edge_comps, combo):
                for local, v in enumerate(comp):
                    x = sol.assignment[local]
                    a[v] = x if perm is None else perm[x]
            for v, x in zip(isolated, iso_labels):
                a[v] = x
            found.append(a)
            if limit is not None and len(found) >= limit:
                return _emit(g, found, k, alpha)
        meter.charge(1)
    return _emit(g, found, k, alpha)


def alpha_zero_colorings(g: Graph, k: int) -> list[FatColoring]:
    """FAT k-colorings with alpha = 0: whole components grouped into k nonempty classes."""
    if k < 1:
        return []
    comps = components(g)
    out = []
    for rgs in set_partitions(len(comps), k):
        a = [0] * g.n
        for comp, x in zip(comps, rgs):
            for v in comp:
                a[v] = x
        c = canonicalize(Coloring(tuple(a), k))
        res = verify_fat(g, c)
        if isinstance(res, Rejection) or (k >= 2 and res.alpha != 0):
            raise AssertionError(f"component grouping failed verification: {res}")
        out.append(res)
    out.sort(key=FatColoring.sort_key)
    return out


def _run_tasks(fn, tasks, workers: int):
    if workers <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, tasks))


def _positive_tasks(g: Graph) -> list[tuple[int, Fraction]]:
    if g.m == 0:
        return []
    upper = _alpha_positive_bounds(g)["upper"]
    tasks = []
    for k in range(2, upper + 1):
        if _divisibility_filter(g, k) is None:
            tasks.extend((k, a) for a in candidate_alphas(g, k))
    return tasks


def enumerate_all(g: Graph, budget: Optional[SearchBudget] = None) -> list[FatColoring]:
    """Every FAT coloring of ``g`` up to color permutation, sorted by (k, alpha, assignment)."""
    budget = budget or SearchBudget()
    meter = _meter(budget)
    rep = structure_report(g)
    out = []
    for k in range(1, rep.component_count + 1):
        out.extend(alpha_zero_colorings(g, k))
    if g.n == 0:
        return out

    found: list[list[FatColoring]] = []

    def task(t):
        k, a = t
        return _solve_positive(g, k, a, meter)

    try:
        found = _run_tasks(task, _positive_tasks(g), budget.workers)
    except BudgetExhausted as exc:
        exc.partial = sorted(out + exc.partial, key=FatColoring.sort_key)
        raise
    for sols in found:
        out.extend(sols)
    out.sort(key=FatColoring.sort_key)
    return out


def chi_fat(g: Graph, budget: Optional[SearchBudget] = None) -> ChiFatResult:
    """Largest k admitting a FAT k-coloring, with a witness and the bounds applied."""
    meter = _meter(budget)
    rep = structure_report(g)
    if g.n == 0:
        raise DegenerateGraph("empty graph")
    zero_k = rep.component_count
    zero_witness = alpha_zero_colorings(g, zero_k)[0]
    ledger: dict = {"alpha_zero_k": zero_k, "pruned": {}, "tried": {}}
    if g.m == 0:
        return ChiFatResult(zero_k, zero_witness, ledger)

    ledger.update(_alpha_positive_bounds(g))
    upper = ledger["upper"]
    for k in range(upper, zero_k, -1):
        reason = _divisibility_filter(g, k)
        if reason:
            ledger["pruned"][k] = reason
            continue
        alphas = candidate_alphas(g, k)
        if not alphas:
            ledger["pruned"][k] = "no candidate alpha (gcd/spectral filter)"
            continue
        ledger["tried"][k] = alphas
        for a in alphas:
            try:
                sols = _solve_positive(g, k, a, meter, limit=1)
            except BudgetExhausted as exc:
                exc.lower, exc.upper = zero_k, k
                raise
            if sols:
                return ChiFatResult(k, sols[0], ledger)
    return ChiFatResult(zero_k, zero_witness, ledger)


def colorings_with(g: Graph, k: int, alpha=None,
                   budget: Optional[SearchBudget] = None) -> list[FatColoring]:
    """FAT k-colorings of ``g``, optionally restricted to one alpha."""
    meter = _meter(budget)
    out = []
    if k == 1:
        out = alpha_zero_colorings(g, 1)
    else:
        if alpha is None or Fraction(alpha) == 0:
            out.extend(alpha_zero_colorings(g, k))
        if g.m > 0 and (alpha is None or Fraction(alpha) > 0):
            if alpha is None:
                alphas = candidate_alphas(g, k) if _divisibility_filter(g, k) is None else []
            else:
                alphas = [Fraction(alpha)]
            for a in alphas:
                out.extend(_solve_positive(g, k, a, meter))
    if alpha is not None:
        out = [fc for fc in out if fc.alpha == Fraction(alpha)]
    out.sort(key=FatColoring.sort_key)
    return out
