"""Cubical grid partitions, the cell-assignment map, snap complexes, and the
packing-bound constants."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .persistence import StaticComplex
from .simplicial import Filtration

# saturation value for counting bounds (largest int64)
MAX_COUNT = 2**63 - 1

CellId = tuple  # d-tuple of lattice coordinates


class BoundNotApplicableError(ValueError):
    """The packing bound only covers homology dimensions p < d."""


@dataclass(frozen=True)
class GridPartition:
    """Half-open axis-aligned cubes of side epsilon/sqrt(d); every cell has diameter epsilon."""

    epsilon: float
    dim: int
    offset: tuple = None

    def __post_init__(self):
        if self.epsilon <= 0 or self.dim < 1:
            raise ValueError("mesh must be positive and dimension >= 1")
        off = self.offset
        if off is None:
            off = (0.0,) * self.dim
        off = tuple(float(x) for x in off)
        if len(off) != self.dim or not all(math.isfinite(x) for x in off):
            raise ValueError("offset must be a finite d-vector")
        object.__setattr__(self, "offset", off)

    @property
    def side(self) -> float:
        return self.epsilon / math.sqrt(self.dim)


@dataclass(frozen=True)
class SnapComplex:
    """Image of a sublevel complex under the cell-assignment map, plus its witness radius."""

    complex: StaticComplex
    radius: float
    cells: tuple

    def vertex_count(self) -> int:
        return len(self.cells)


def cell_of(point, grid: GridPartition) -> CellId:
    """Lattice coordinates of the half-open cell containing the point."""
    p = np.asarray(point, dtype=float)
    if p.shape != (grid.dim,):
        raise ValueError(f"expected a point of dimension {grid.dim}")
    if not np.all(np.isfinite(p)):
        raise ValueError("point coordinates must be finite")
    side = grid.side
    return tuple(int(math.floor((x - o) / side)) for x, o in zip(p, grid.offset))


def snap_complex(f: Filtration, s: float, grid: GridPartition) -> SnapComplex:
    """Snap the sublevel complex at s along the grid.

    An image simplex is the sorted tuple of distinct cells of its vertices;
    the map is simplicial so the result is face-closed by construction. Built
    from a dimension-capped filtration this is the max_dim-skeleton of the
    full snap complex, which suffices for homology up to dimension max_dim-1.
    """
    if s > f.r_max:
        raise ValueError(f"snap radius {s} exceeds the filtration range {f.r_max}")
    cell_by_vertex = {}
    image = set()
    for simplex, value in f.entries:
        if value > s:
            continue
        cells = set()
        for v in simplex:
            c = cell_by_vertex.get(v)
            if c is None:
                c = cell_of(f.coords[v], grid)
                cell_by_vertex[v] = c
            cells.add(c)
        image.add(tuple(sorted(cells)))
    vertices = tuple(sorted(t[0] for t in image if len(t) == 1))
    return SnapComplex(complex=StaticComplex(frozenset(image)), radius=float(s),
                       cells=vertices)


def bound_constant(epsilon: float, d: int) -> int:
    """Packing constant C(epsilon, d) = (3 + 4 sqrt(d)/epsilon)^d, rounded up."""
    if epsilon <= 0 or d < 1:
        raise ValueError("epsilon must be positive and d >= 1")
    c = (3.0 + 4.0 * math.sqrt(d) / epsilon) ** d
    if c >= MAX_COUNT:
        return MAX_COUNT
    return math.ceil(c)


def theorem_bound(n: int, p: int, epsilon: float, d: int) -> int:
    """Linear bound binom(C(epsilon,d), p) * n on the persistent Betti number.

    Saturates at MAX_COUNT. Only applicable for p < d, where non-zero
    persistent Betti numbers can occur.
    """
    if n < 0 or p < 0:
        raise ValueError("n and p must be non-negative")
    if p >= d:
        raise BoundNotApplicableError(
            f"persistent Betti numbers vanish for p={p} >= d={d}")
    c = bound_constant(epsilon, d)
    return min(math.comb(c, p) * n, MAX_COUNT)
