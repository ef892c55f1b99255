"""Core data model for weighted mutually exclusive maximum set cover.

An instance is a ground set {0, ..., n-1}, a collection of m nonempty
subsets of it, and a nonnegative weight per subset.  A feasible selection
is a family of pairwise disjoint subsets; selections are ranked by the
number of covered elements first and, on equal coverage, by lower total
weight.

Instances travel in the WMESC v1 text format::

    # lines starting with '#' are comments
    n m
    w k e1 e2 ... ek        (one line per subset)

where ``w`` is a nonnegative decimal weight, ``k`` the subset size, and
``e1 < e2 < ... < ek`` are element ids in [0, n).  Serialization writes
weights with repr precision so that parse(serialize(x)) == x exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

DEFAULT_WEIGHT_TOL = 1e-9


class FormatError(ValueError):
    """Malformed WMESC v1 text; carries the offending 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class OverlapError(ValueError):
    """Two selected subsets share an element, so the selection is infeasible."""

    def __init__(self, first: int, second: int, element: int):
        super().__init__(f"subsets {first} and {second} share element {element}")
        self.first = first
        self.second = second
        self.element = element


@dataclass(frozen=True)
class Instance:
    """Ground set of ``n`` elements plus index-aligned subsets and weights.

    Subsets are strictly increasing tuples of element ids; empty subsets
    are rejected so the solution space stays canonical (an empty subset
    could only ever add weight, never coverage).
    """

    n: int
    subsets: tuple[tuple[int, ...], ...]
    weights: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "subsets", tuple(tuple(s) for s in self.subsets))
        object.__setattr__(self, "weights", tuple(float(w) for w in self.weights))
        if self.n < 0:
            raise ValueError(f"ground-set size must be nonnegative, got {self.n}")
        if len(self.subsets) != len(self.weights):
            raise ValueError(
                f"{len(self.subsets)} subsets but {len(self.weights)} weights"
            )
        for i, subset in enumerate(self.subsets):
            if not subset:
                raise ValueError(f"subset {i} is empty")
            if any(a >= b for a, b in zip(subset, subset[1:])):
                raise ValueError(f"subset {i} is not strictly increasing: {subset}")
            if subset[0] < 0 or subset[-1] >= self.n:
                raise ValueError(
                    f"subset {i} has an element outside [0, {self.n}): {subset}"
                )
        for i, w in enumerate(self.weights):
            if not math.isfinite(w):
                raise ValueError(f"weight {i} is not finite")
            if w < 0:
                raise ValueError(f"weight {i} is negative: {w}")

    @property
    def m(self) -> int:
        """Number of subsets."""
        return len(self.subsets)


@dataclass(frozen=True)
class Solution:
    """A feasible selection: chosen subset indices, coverage, total weight."""

    chosen: tuple[int, ...]
    covered: int
    weight: float


@dataclass(frozen=True)
class PackingInstance:
    """A collection of 3-element sets over an arbitrary orderable label universe."""

    triples: tuple[frozenset, ...]

    def __post_init__(self):
        object.__setattr__(self, "triples", tuple(frozenset(t) for t in self.triples))
        for i, triple in enumerate(self.triples):
            if len(triple) != 3:
                raise ValueError(
                    f"triple {i} has {len(triple)} distinct labels, need exactly 3"
                )


def parse_instance(text: str) -> Instance:
    """Parse WMESC v1 text into a validated :class:`Instance`.

    Raises :class:`FormatError` with the offending line number on any
    malformed header, out-of-range element, unsorted element list,
    negative weight, or wrong number of subset lines.
    """
    data: list[tuple[int, str]] = []
    total_lines = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        total_lines = lineno
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        data.append((lineno, stripped))

    if not data:
        raise FormatError(total_lines + 1, "missing 'n m' header")
    header_line, header = data[0]
    fields = header.split()
    if len(fields) != 2:
        raise FormatError(header_line, f"header must be 'n m', got {header!r}")
    try:
        n, m = int(fields[0]), int(fields[1])
    except ValueError:
        raise FormatError(header_line, f"header must be two integers, got {header!r}")
    if n < 0 or m < 0:
        raise FormatError(header_line, f"n and m must be nonnegative, got {header!r}")

    rows = data[1:]
    if len(rows) > m:
        raise FormatError(rows[m][0], f"expected {m} subset lines, found extra data")
    if len(rows) < m:
        raise FormatError(
            total_lines + 1, f"expected {m} subset lines, found only {len(rows)}"
        )

    subsets: list[tuple[int, ...]] = []
    weights: list[float] = []
    for lineno, line in rows:
        tokens = line.split()
        if len(tokens) < 2:
            raise FormatError(lineno, "subset line needs a weight, a size, and elements")
        try:
            weight = float(tokens[0])
        except ValueError:
            raise FormatError(lineno, f"bad weight {tokens[0]!r}")
        if not math.isfinite(weight):
            raise FormatError(lineno, f"weight must be finite, got {tokens[0]!r}")
        if weight < 0:
            raise FormatError(lineno, f"negative weight {tokens[0]}")
        try:
            size = int(tokens[1])
        except ValueError:
            raise FormatError(lineno, f"bad subset size {tokens[1]!r}")
        if size < 1:
            raise FormatError(lineno, "subset must contain at least one element")
        if len(tokens) - 2 != size:
            raise FormatError(
                lineno, f"declared {size} elements, found {len(tokens) - 2}"
            )
        try:
            elements = tuple(int(t) for t in tokens[2:])
        except ValueError:
            raise FormatError(lineno, "elements must be integers")
        if any(a >= b for a, b in zip(elements, elements[1:])):
            raise FormatError(lineno, "element list must be strictly increasing")
        if elements[0] < 0 or elements[-1] >= n:
            raise FormatError(lineno, f"element out of range [0, {n})")
        subsets.append(elements)
        weights.append(weight)

    return Instance(n=n, subsets=tuple(subsets), weights=tuple(weights))


def serialize_instance(inst: Instance) -> str:
    """Render an instance as WMESC v1 text; exact inverse of parse_instance."""
    lines = [f"{inst.n} {inst.m}"]
    for subset, weight in zip(inst.subsets, inst.weights):
        lines.append(f"{weight!r} {len(subset)} " + " ".join(map(str, subset)))
    return "\n".join(lines) + "\n"


def evaluate(inst: Instance, chosen: Sequence[int]) -> Solution:
    """Score a selection of subset indices against an instance.

    ``chosen`` must be strictly increasing and its subsets pairwise
    disjoint; otherwise ValueError / :class:`OverlapError` is raised.
    """
    picked = tuple(chosen)
    if any(a >= b for a, b in zip(picked, picked[1:])):
        raise ValueError(f"chosen indices must be strictly increasing: {picked}")
    owner: dict[int, int] = {}
    weight = 0.0
    for i in picked:
        if not 0 <= i < inst.m:
            raise ValueError(f"subset index {i} out of range [0, {inst.m})")
        for element in inst.subsets[i]:
            if element in owner:
                raise OverlapError(owner[element], i, element)
            owner[element] = i
        weight += inst.weights[i]
    return Solution(chosen=picked, covered=len(owner), weight=weight)


def lex_prefer(
    covered_a: int, weight_a: float, covered_b: int, weight_b: float, tol: float
) -> bool:
    """Coverage first, then weight lower by more than ``tol``."""
    if covered_a != covered_b:
        return covered_a > covered_b
    return weight_a < weight_b - tol


def better(a: Solution, b: Solution, tol: float = DEFAULT_WEIGHT_TOL) -> bool:
    """True iff ``a`` is strictly preferred to ``b``.

    More coverage always wins; on equal coverage ``a`` must be lighter by
    more than ``tol``.  This is a strict partial order whose incomparable
    pairs are exactly "same coverage, weights within tol".
    """
    return lex_prefer(a.covered, a.weight, b.covered, b.weight, tol)


def reduce_3set_packing(packing: PackingInstance) -> Instance:
    """Rewrite a disjoint-triple packing problem as a unit-weight cover instance.

    Labels are renumbered 0..n-1 in sorted order and each triple becomes
    one subset, in input order.  A maximum selection of the result picks
    exactly as many subsets as the largest packing of disjoint triples.
    """
    if not packing.triples:
        raise ValueError("packing instance must contain at least one triple")
    labels = sorted(set().union(*packing.triples))
    index = {label: i for i, label in enumerate(labels)}
    subsets = tuple(
        tuple(sorted(index[label] for label in triple)) for triple in packing.triples
    )
    return Instance(n=len(labels), subsets=subsets, weights=(1.0,) * len(subsets))
