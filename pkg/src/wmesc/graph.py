"""Set intersection graph plus the degree and pivot queries the solvers use.

One node per subset, an edge wherever two subsets share an element.  A
:class:`SubProblem` is the set of subset indices still in play; every
degree, component, and pivot query is taken relative to it, which stands
in for rebuilding the graph after removals.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .instance import Instance

_AdjSets = Sequence[frozenset[int]]


@dataclass(frozen=True)
class IntersectionGraph:
    """One node per subset index; adjacency lists are sorted tuples."""

    m: int
    adjacency: tuple[tuple[int, ...], ...]

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        """Adjacency as frozensets, for cheap alive-masked queries."""
        return tuple(frozenset(nbrs) for nbrs in self.adjacency)


@dataclass(frozen=True)
class SubProblem:
    """Subset indices still alive during the search."""

    alive: frozenset[int]

    @classmethod
    def full(cls, m: int) -> "SubProblem":
        return cls(frozenset(range(m)))


def build_graph(inst: Instance) -> IntersectionGraph:
    """Build the intersection graph via an element-to-subsets index.

    Cost scales with total subset size plus shared-element pairs, not
    with all m^2 subset pairs.
    """
    by_element: list[list[int]] = [[] for _ in range(inst.n)]
    for i, subset in enumerate(inst.subsets):
        for element in subset:
            by_element[element].append(i)
    neighbors: list[set[int]] = [set() for _ in range(inst.m)]
    for holders in by_element:
        for pos, u in enumerate(holders):
            for v in holders[pos + 1 :]:
                neighbors[u].add(v)
                neighbors[v].add(u)
    return IntersectionGraph(
        m=inst.m, adjacency=tuple(tuple(sorted(nbrs)) for nbrs in neighbors)
    )


def _components(adj: _AdjSets, alive: frozenset[int]) -> list[tuple[int, ...]]:
    seen: set[int] = set()
    comps: list[tuple[int, ...]] = []
    for start in sorted(alive):
        if start in seen:
            continue
        seen.add(start)
        stack = [start]
        comp = [start]
        while stack:
            u = stack.pop()
            for v in adj[u] & alive:
                if v not in seen:
                    seen.add(v)
                    comp.append(v)
                    stack.append(v)
        comp.sort()
        comps.append(tuple(comp))
    return comps


def components(g: IntersectionGraph, sub: SubProblem) -> list[tuple[int, ...]]:
    """Connected components of the alive-induced subgraph.

    Each component is a sorted tuple; components are ordered by their
    smallest member, so the partition is deterministic.
    """
    return _components(g.neighbor_sets, sub.alive)


def neighbor_closure(g: IntersectionGraph, sub: SubProblem, x: int) -> frozenset[int]:
    """``x`` together with its alive neighbors."""
    if x not in sub.alive:
        raise ValueError(f"subset {x} is not alive")
    return _closure(g.neighbor_sets, sub.alive, x)


def _closure(adj: _AdjSets, alive: frozenset[int], x: int) -> frozenset[int]:
    return (adj[x] & alive) | {x}


def max_degree_node(g: IntersectionGraph, sub: SubProblem) -> tuple[int, int]:
    """Smallest alive index of maximum alive-degree, with that degree."""
    if not sub.alive:
        raise ValueError("alive set is empty")
    return _max_degree(g.neighbor_sets, sub.alive)


def _max_degree(adj: _AdjSets, alive: frozenset[int]) -> tuple[int, int]:
    best = -1
    best_degree = -1
    for x in sorted(alive):
        degree = len(adj[x] & alive)
        if degree > best_degree:
            best = x
            best_degree = degree
    return best, best_degree


def select_pivot_deg2(
    g: IntersectionGraph, sub: SubProblem, component: Iterable[int]
) -> int:
    """Branching pivot for a path or ring component (max degree <= 2).

    A path yields its lower-median node, walking from the smaller-index
    endpoint; a ring yields its smallest-index node.
    """
    return _pivot_deg2(g.neighbor_sets, sub.alive, tuple(component))


def _pivot_deg2(adj: _AdjSets, alive: frozenset[int], component: tuple[int, ...]) -> int:
    if len(component) < 2:
        raise ValueError("component must contain at least 2 nodes")
    degree = {v: len(adj[v] & alive) for v in component}
    if max(degree.values()) > 2:
        raise ValueError("component has a node of degree above 2")
    endpoints = sorted(v for v in component if degree[v] == 1)
    if not endpoints:
        return min(component)  # ring
    order = [endpoints[0]]
    prev = -1
    while len(order) < len(component):
        ahead = (adj[order[-1]] & alive) - {prev}
        prev = order[-1]
        order.append(min(ahead))
    return order[(len(order) - 1) // 2]


def select_pivot_deg3(
    g: IntersectionGraph, sub: SubProblem, component: Iterable[int]
) -> int:
    """Branching pivot for a component whose maximum degree is exactly 3.

    Picks the smallest-index degree-3 node adjacent to a minimum-degree
    node; when every node has degree 3, the smallest index wins.  If no
    degree-3 node borders a minimum-degree node, the target degree is
    raised until one does (a connected component with a node of degree
    below 3 always has a degree-3 node bordering some degree <= 2 node).
    """
    return _pivot_deg3(g.neighbor_sets, sub.alive, tuple(component))


def _pivot_deg3(adj: _AdjSets, alive: frozenset[int], component: tuple[int, ...]) -> int:
    nodes = sorted(component)
    degree = {v: len(adj[v] & alive) for v in nodes}
    if max(degree.values()) != 3:
        raise ValueError("component maximum degree must be exactly 3")
    lowest = min(degree.values())
    if lowest == 3:
        return nodes[0]
    for target in range(lowest, 3):
        for v in nodes:
            if degree[v] == 3 and any(degree[u] == target for u in adj[v] & alive):
                return v
    raise AssertionError("no degree-3 pivot found in component")
