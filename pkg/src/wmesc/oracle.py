"""Exhaustive reference solvers, independent of the branch-and-bound code.

Selections are enumerated as bitmasks in ascending order and checked for
disjointness directly on element sets (as machine-word bitsets), never
through the intersection graph.  No pruning: these stay simple enough to
be obviously correct, at the price of hard instance-size caps.
"""

from __future__ import annotations

from .instance import Instance, PackingInstance, Solution, lex_prefer

BRUTE_FORCE_LIMIT = 25
PACKING_LIMIT = 20


def _element_bits(sets) -> list[int]:
    masks = []
    for s in sets:
        bits = 0
        for element in s:
            bits |= 1 << element
        masks.append(bits)
    return masks


def brute_force(inst: Instance) -> Solution:
    """Best selection by scanning all 2^m index subsets.

    Ascending bitmask order with strict improvement, so the first
    optimum found is kept on exact ties.
    """
    if inst.m > BRUTE_FORCE_LIMIT:
        raise ValueError(
            f"brute force is capped at {BRUTE_FORCE_LIMIT} subsets, got {inst.m}"
        )
    bits = _element_bits(inst.subsets)
    sizes = [len(s) for s in inst.subsets]
    weights = inst.weights
    best_covered, best_weight, best_mask = 0, 0.0, 0
    for mask in range(1, 1 << inst.m):
        taken = 0
        covered = 0
        weight = 0.0
        rest = mask
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            if bits[i] & taken:
                break
            taken |= bits[i]
            covered += sizes[i]
            weight += weights[i]
            rest ^= low
        else:
            if lex_prefer(covered, weight, best_covered, best_weight, 0.0):
                best_covered, best_weight, best_mask = covered, weight, mask
    chosen = tuple(i for i in range(inst.m) if best_mask >> i & 1)
    return Solution(chosen=chosen, covered=best_covered, weight=best_weight)


def brute_force_packing(packing: PackingInstance) -> int:
    """Maximum number of pairwise-disjoint triples, by scanning all selections."""
    count = len(packing.triples)
    if count > PACKING_LIMIT:
        raise ValueError(f"packing scan is capped at {PACKING_LIMIT} triples, got {count}")
    labels = sorted(set().union(*packing.triples)) if packing.triples else []
    index = {label: i for i, label in enumerate(labels)}
    bits = _element_bits([{index[lab] for lab in t} for t in packing.triples])
    best = 0
    for mask in range(1, 1 << count):
        taken = 0
        picked = 0
        rest = mask
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            if bits[i] & taken:
                break
            taken |= bits[i]
            picked += 1
            rest ^= low
        else:
            if picked > best:
                best = picked
    return best
