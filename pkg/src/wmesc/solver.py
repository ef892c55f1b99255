"""Exact branch-and-bound solvers over the intersection graph.

Because chosen subsets must be pairwise disjoint, a feasible selection is
an independent set in the intersection graph, its coverage is the sum of
the chosen subset sizes, and disconnected components can be solved
independently and summed.  The search therefore peels components apart,
commits isolated subsets outright, and otherwise branches on a pivot:
either it joins the selection (its whole closed neighborhood leaves the
problem) or it alone is dropped.

Three layered routines share that skeleton and differ only in how they
pick the pivot: the general solver branches on a maximum-degree node and
hands components of degree <= 3 to the degree-3 solver, which branches on
a degree-3 node next to a minimum-degree node and hands degree <= 2
components to the path/ring solver, which branches on path middles.  The
layering keeps the search tree small; the branch and leaf counters exist
so its growth can be measured.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass
from typing import Iterable

from .graph import (
    IntersectionGraph,
    build_graph,
    _closure,
    _components,
    _max_degree,
    _pivot_deg2,
    _pivot_deg3,
)
from .instance import DEFAULT_WEIGHT_TOL, Instance, Solution, evaluate, lex_prefer


@dataclass
class SolveStats:
    """Search-tree instrumentation for one solve call.

    A leaf is any return that performed no branching: an exhausted alive
    set or a committed isolated subset.  Binary branching alone gives
    leaves == branch_nodes + 1; every split into k components adds k - 1
    further leaves, so leaves >= branch_nodes + 1 on any instance.
    """

    branch_nodes: int = 0
    leaves: int = 0
    max_depth: int = 0
    elapsed: float = 0.0


class SolveTimeout(Exception):
    """Raised when the optional solve deadline expires mid-search."""


_Result = tuple[int, float, tuple[int, ...]]  # covered, weight, chosen
_EMPTY: _Result = (0, 0.0, ())


class _Search:
    """Recursion state: instance arrays, counters, tolerance, deadline."""

    def __init__(
        self,
        inst: Instance,
        graph: IntersectionGraph,
        tol: float,
        stats: SolveStats,
        deadline: float | None,
    ):
        self.adj = graph.neighbor_sets
        self.sizes = tuple(len(s) for s in inst.subsets)
        self.weights = inst.weights
        self.tol = tol
        self.stats = stats
        self.deadline = deadline

    def _enter(self, depth: int) -> None:
        if depth > self.stats.max_depth:
            self.stats.max_depth = depth
        if self.deadline is not None and time.perf_counter() > self.deadline:
            raise SolveTimeout("solve deadline expired")

    def _take(self, x: int) -> _Result:
        # isolated subset: coverage is primary and weights are nonnegative,
        # so including it is always at least as good
        self.stats.leaves += 1
        return (self.sizes[x], self.weights[x], (x,))

    def _merge(self, parts: Iterable[_Result]) -> _Result:
        covered = 0
        weight = 0.0
        chosen: tuple[int, ...] = ()
        for c, w, picks in parts:
            covered += c
            weight += w
            chosen += picks
        return covered, weight, chosen

    def _branch(self, alive, x, depth, recurse) -> _Result:
        self.stats.branch_nodes += 1
        c, w, picks = recurse(alive - _closure(self.adj, alive, x), depth + 1)
        include = (c + self.sizes[x], w + self.weights[x], picks + (x,))
        exclude = recurse(alive - {x}, depth + 1)
        if lex_prefer(exclude[0], exclude[1], include[0], include[1], self.tol):
            return exclude
        return include

    def main(self, alive: frozenset[int], depth: int) -> _Result:
        self._enter(depth)
        if not alive:
            self.stats.leaves += 1
            return _EMPTY
        comps = _components(self.adj, alive)
        if len(comps) > 1:
            return self._merge(self.main(frozenset(c), depth + 1) for c in comps)
        comp = comps[0]
        if len(comp) == 1:
            return self._take(comp[0])
        x, degree = _max_degree(self.adj, alive)
        if degree <= 3:
            return self.deg3(alive, depth)
        return self._branch(alive, x, depth, self.main)

    def deg3(self, alive: frozenset[int], depth: int) -> _Result:
        self._enter(depth)
        if not alive:
            self.stats.leaves += 1
            return _EMPTY
        comps = _components(self.adj, alive)
        if len(comps) > 1:
            return self._merge(self.deg3(frozenset(c), depth + 1) for c in comps)
        comp = comps[0]
        if len(comp) == 1:
            return self._take(comp[0])
        _, degree = _max_degree(self.adj, alive)
        if degree <= 2:
            return self.deg2(alive, depth)
        pivot = _pivot_deg3(self.adj, alive, comp)
        return self._branch(alive, pivot, depth, self.deg3)

    def deg2(self, alive: frozenset[int], depth: int) -> _Result:
        self._enter(depth)
        if not alive:
            self.stats.leaves += 1
            return _EMPTY
        comps = _components(self.adj, alive)
        if len(comps) > 1:
            return self._merge(self.deg2(frozenset(c), depth + 1) for c in comps)
        comp = comps[0]
        if len(comp) == 1:
            return self._take(comp[0])
        pivot = _pivot_deg2(self.adj, alive, comp)
        return self._branch(alive, pivot, depth, self.deg2)


def _ensure_stack(m: int) -> None:
    # exclude-branches shrink the alive set by one, so recursion can reach
    # depth m; each level spends a handful of Python frames
    needed = 8 * m + 256
    if sys.getrecursionlimit() < needed:
        sys.setrecursionlimit(needed)


def _finish(inst: Instance, result: _Result) -> Solution:
    covered, _, chosen = result
    solution = evaluate(inst, tuple(sorted(chosen)))
    assert solution.covered == covered, "search coverage disagrees with evaluation"
    return solution


def solve(
    inst: Instance,
    *,
    tol: float = DEFAULT_WEIGHT_TOL,
    timeout: float | None = None,
) -> tuple[Solution, SolveStats]:
    """Optimal selection (maximum coverage, then minimum weight) plus stats.

    Deterministic: identical inputs give identical solutions and
    identical branch/leaf counters.  ``timeout`` (seconds) aborts the
    search by raising :class:`SolveTimeout`.
    """
    graph = build_graph(inst)
    _ensure_stack(inst.m)
    stats = SolveStats()
    deadline = None if timeout is None else time.perf_counter() + timeout
    search = _Search(inst, graph, tol, stats, deadline)
    start = time.perf_counter()
    result = search.main(frozenset(range(inst.m)), 0)
    stats.elapsed = time.perf_counter() - start
    return _finish(inst, result), stats


def _alive_set(inst: Instance, alive: Iterable[int] | None) -> frozenset[int]:
    if alive is None:
        return frozenset(range(inst.m))
    alive_set = frozenset(alive)
    if any(not 0 <= x < inst.m for x in alive_set):
        raise ValueError(f"alive indices must lie in [0, {inst.m})")
    return alive_set


def solve_deg3(
    inst: Instance,
    alive: Iterable[int] | None = None,
    *,
    tol: float = DEFAULT_WEIGHT_TOL,
) -> Solution:
    """Optimal selection when every alive subset overlaps at most 3 others."""
    graph = build_graph(inst)
    alive_set = _alive_set(inst, alive)
    if any(len(graph.neighbor_sets[x] & alive_set) > 3 for x in alive_set):
        raise ValueError("an alive subset overlaps more than 3 others")
    _ensure_stack(inst.m)
    search = _Search(inst, graph, tol, SolveStats(), None)
    return _finish(inst, search.deg3(alive_set, 0))


def solve_deg2(
    inst: Instance,
    alive: Iterable[int] | None = None,
    *,
    tol: float = DEFAULT_WEIGHT_TOL,
) -> Solution:
    """Optimal selection when every alive subset overlaps at most 2 others."""
    graph = build_graph(inst)
    alive_set = _alive_set(inst, alive)
    if any(len(graph.neighbor_sets[x] & alive_set) > 2 for x in alive_set):
        raise ValueError("an alive subset overlaps more than 2 others")
    _ensure_stack(inst.m)
    search = _Search(inst, graph, tol, SolveStats(), None)
    return _finish(inst, search.deg2(alive_set, 0))
