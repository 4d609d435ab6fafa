"""Z/2 chain algebra: boundaries, cycles, stars, vertex gluing, and sweep fillings.

Vertex identifiers are abstract integers; a chain is purely combinatorial.
Simplices are sorted tuples of distinct vertices, duplicates cancel in pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable


@dataclass(frozen=True)
class Chain:
    """Set of p-simplices with symmetric-difference addition."""

    dim: int
    simplices: frozenset

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("chain dimension must be >= 0")
        for s in self.simplices:
            if len(s) != self.dim + 1 or tuple(sorted(set(s))) != s:
                raise ValueError(f"not a sorted {self.dim}-simplex: {s!r}")

    @classmethod
    def from_simplices(cls, dim: int, simplices: Iterable) -> "Chain":
        acc = set()
        for s in simplices:
            s = tuple(sorted(s))
            acc.symmetric_difference_update({s})
        return cls(dim, frozenset(acc))

    def vertices(self) -> set:
        return {v for s in self.simplices for v in s}

    def __len__(self) -> int:
        return len(self.simplices)

    def __add__(self, other: "Chain") -> "Chain":
        return add(self, other)


def add(a: Chain, b: Chain) -> Chain:
    """Symmetric difference; a + a is the empty chain."""
    if a.dim != b.dim:
        raise ValueError(f"cannot add chains of dimension {a.dim} and {b.dim}")
    return Chain(a.dim, a.simplices ^ b.simplices)


def boundary(c: Chain) -> Chain:
    """Sum of the (p-1)-faces of every simplex, mod 2."""
    if c.dim < 1:
        raise ValueError("boundary is undefined for 0-chains here; "
                         "the augmentation lives in the persistence module")
    acc = set()
    for s in c.simplices:
        for face in combinations(s, len(s) - 1):
            acc.symmetric_difference_update({face})
    return Chain(c.dim - 1, frozenset(acc))


def is_cycle(c: Chain) -> bool:
    return len(boundary(c)) == 0


def star(gamma: Chain, x) -> Chain:
    """Sub-chain of the simplices of gamma that contain vertex x."""
    return Chain(gamma.dim, frozenset(s for s in gamma.simplices if x in s))


def _check_glue_args(gamma: Chain, x, y, z):
    if x == y:
        raise ValueError("glue requires two distinct vertices")
    verts = gamma.vertices()
    if x not in verts or y not in verts:
        raise ValueError("both glued vertices must occur in the chain")
    if z in verts:
        raise ValueError(f"replacement vertex {z!r} must be fresh")


def glue(gamma: Chain, x, y, z) -> Chain:
    """Substitute a fresh vertex z for both x and y.

    Simplices containing both x and y collapse a dimension and are discarded;
    coinciding images cancel in pairs. For a p-cycle the result is a p-cycle.
    """
    _check_glue_args(gamma, x, y, z)
    acc = set()
    for s in gamma.simplices:
        if x in s and y in s:
            continue
        if x in s or y in s:
            s = tuple(sorted([v for v in s if v not in (x, y)] + [z]))
        acc.symmetric_difference_update({s})
    return Chain(gamma.dim, frozenset(acc))


def sweep(gamma: Chain, x, y, z) -> Chain:
    """Cone with apex z over the union of the stars of x and y.

    Its boundary equals gamma + glue(gamma, x, y, z), exhibiting the two
    cycles as homologous.
    """
    _check_glue_args(gamma, x, y, z)
    cone = set()
    for s in gamma.simplices:
        if x in s or y in s:
            cone.add(tuple(sorted(s + (z,))))
    return Chain(gamma.dim + 1, frozenset(cone))
