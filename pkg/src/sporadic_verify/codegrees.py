"""Codegree sets of simple groups and their covers.

For a nonabelian simple group every nontrivial irreducible character is
faithful, so its codegree is |G| / degree; the trivial character always
contributes 1.  A faithful character of a central extension c.G contributes
c * |G| / degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .arith import divides


@dataclass(frozen=True)
class CodegreeSet:
    """Sorted, duplicate-free codegree values; always contains 1."""

    values: tuple[int, ...]

    def __post_init__(self):
        if list(self.values) != sorted(set(self.values)):
            raise ValueError("values must be sorted and duplicate-free")
        if not self.values or self.values[0] != 1:
            raise ValueError("every codegree set contains 1")

    def __contains__(self, c: int) -> bool:
        return c in set(self.values)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


def codegree_set_simple(order: int, degrees: Iterable[int]) -> CodegreeSet:
    """Codegree set of a nonabelian simple group from its character degrees.

    The degree list is the full character-table multiset, including exactly
    the trivial character's 1; duplicates collapse since d -> order/d is
    injective on the nontrivial degrees.
    """
    degs = sorted(degrees)
    if not degs or degs[0] != 1:
        raise ValueError("degree data must contain the trivial character")
    out = {1}
    for d in degs[1:]:  # drop one occurrence of 1 (the trivial character)
        if d < 1 or not divides(d, order):
            raise ValueError(f"degree {d} does not divide the order {order}")
        out.add(order // d)
    return CodegreeSet(tuple(sorted(out)))


def count_dividing(cod: CodegreeSet, m: int) -> int:
    """Number of codegrees dividing m; the codegree 1 always counts."""
    if m < 1:
        raise ValueError("m must be positive")
    return sum(1 for c in cod if m % c == 0)


def is_subset(a: CodegreeSet, b: CodegreeSet) -> bool:
    return set(a.values) <= set(b.values)


def witness_codegree(cover_order: int, faithful_degree: int) -> int:
    """Codegree of a faithful cover character: cover order / degree."""
    if faithful_degree < 1 or cover_order % faithful_degree:
        raise ValueError(
            f"degree {faithful_degree} does not divide the cover order {cover_order}")
    return cover_order // faithful_degree
