"""Simplex/filtration representations and the Cech / Vietoris-Rips builders."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

import numpy as np
from scipy.spatial.distance import pdist, squareform

from .geometry import PointCloud, min_enclosing_radius

Simplex = tuple  # strictly increasing tuple of vertex indices

CECH = "cech"
RIPS = "rips"


class SimplexBudgetError(RuntimeError):
    """Raised when a filtration build would exceed the configured simplex budget."""


@dataclass(frozen=True)
class Filtration:
    """Simplices with appearance values, sorted by (value, dimension, vertices).

    The order is a valid reduction order: faces always precede cofaces. The
    source coordinates are kept so snap complexes can map vertices to cells.
    """

    entries: tuple
    flavor: str
    max_dim: int
    r_max: float
    coords: np.ndarray = field(repr=False)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator:
        return iter(self.entries)

    def simplices_at(self, r: float) -> list:
        """Simplices of the sublevel complex at value r (closed threshold)."""
        return [s for s, v in self.entries if v <= r]

    def values(self) -> list:
        return sorted({v for _, v in self.entries})

    def count_simplices(self, p: int, r: float) -> int:
        """f_p of the sublevel complex at r."""
        return sum(1 for s, v in self.entries if len(s) == p + 1 and v <= r)


def build_cech_filtration(cloud: PointCloud, max_dim: int, r_max: float,
                          budget: int | None = None) -> Filtration:
    """All simplices with at most max_dim+1 vertices and enclosing radius <= r_max."""
    return _build(cloud, max_dim, r_max, CECH, budget)


def build_rips_filtration(cloud: PointCloud, max_dim: int, r_max: float,
                          budget: int | None = None) -> Filtration:
    """Rips variant: the simplex value is half its maximum pairwise distance."""
    return _build(cloud, max_dim, r_max, RIPS, budget)


def _build(cloud: PointCloud, max_dim: int, r_max: float, flavor: str,
           budget: int | None) -> Filtration:
    if max_dim < 0:
        raise ValueError("max_dim must be >= 0")
    if r_max <= 0:
        raise ValueError("r_max must be positive")
    coords = cloud.coords
    n = cloud.n
    entries = [((i,), 0.0) for i in range(n)]
    _check_budget(entries, budget)

    if max_dim >= 1 and n >= 2:
        D = squareform(pdist(coords))
        # every simplex is a clique in the half-distance <= r_max graph,
        # so clique expansion over this graph is lossless for both flavors
        nbr_after = [np.flatnonzero(D[i] / 2.0 <= r_max) for i in range(n)]
        nbr_after = [set(int(j) for j in js if j > i) for i, js in enumerate(nbr_after)]

        # frontier: simplex -> (value, candidate extension vertices)
        frontier = {}
        for i in range(n):
            for j in sorted(nbr_after[i]):
                val = float(D[i, j]) / 2.0
                cand = nbr_after[i] & nbr_after[j]
                frontier[(i, j)] = (val, cand)
                entries.append(((i, j), val))
        _check_budget(entries, budget)

        for dim in range(2, max_dim + 1):
            new_frontier = {}
            for simplex, (val, cand) in frontier.items():
                for v in sorted(cand):
                    tau = simplex + (v,)
                    half_diam = max(val, float(max(D[u, v] for u in simplex)) / 2.0)
                    if half_diam > r_max:
                        continue
                    if flavor == RIPS:
                        tau_val = half_diam
                    else:
                        r = min_enclosing_radius(coords[list(tau)])
                        # clamp away float jitter so faces never exceed cofaces
                        facet_vals = (frontier[f][0] for f in _facets(tau)
                                      if f in frontier)
                        tau_val = max(r, max(facet_vals, default=0.0))
                        if tau_val > r_max:
                            continue
                    new_frontier[tau] = (tau_val, cand & nbr_after[v])
                    entries.append((tau, tau_val))
            _check_budget(entries, budget)
            if not new_frontier:
                break
            frontier = new_frontier

    entries.sort(key=lambda e: (e[1], len(e[0]), e[0]))
    return Filtration(entries=tuple(entries), flavor=flavor, max_dim=max_dim,
                      r_max=float(r_max), coords=coords)


def _facets(simplex: Simplex):
    for i in range(len(simplex)):
        yield simplex[:i] + simplex[i + 1:]


def _check_budget(entries, budget):
    if budget is not None and len(entries) > budget:
        raise SimplexBudgetError(
            f"filtration would exceed the simplex budget ({len(entries)} > {budget})")
