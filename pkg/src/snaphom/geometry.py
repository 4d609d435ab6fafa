"""Numerical geometry kernels: distances, smallest enclosing balls, Hausdorff distance.

All radii are compared with an absolute tolerance of ``RADIUS_TOL``; values are
stored as computed, never rounded.
"""

from __future__ import annotations

import random
import sys
from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import cdist, pdist

RADIUS_TOL = 1e-9

# Fixed shuffle seed for the Welzl recursion: identical inputs always produce
# identical support sets, hence bit-identical radii.
_WELZL_SEED = 0x5EB


@dataclass(frozen=True)
class PointCloud:
    """Finite ordered set of points in R^d; row index is a stable identifier."""

    coords: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.coords, dtype=float)
        if arr.ndim != 2:
            raise ValueError("coords must be a 2-d array of shape (n, d)")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError("point cloud must contain at least one point in d >= 1")
        if not np.all(np.isfinite(arr)):
            raise ValueError("point coordinates must be finite")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "coords", arr)

    @property
    def n(self) -> int:
        return self.coords.shape[0]

    @property
    def dim(self) -> int:
        return self.coords.shape[1]


def _as_point_array(points, name: str = "points") -> np.ndarray:
    arr = np.asarray(points, dtype=float)
    if arr.ndim == 1:
        arr = arr[None, :]
    if arr.ndim != 2 or arr.shape[0] == 0:
        raise ValueError(f"{name} must be a non-empty list of points")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite coordinates")
    return arr


def distance(p, q) -> float:
    """Euclidean distance between two points of equal dimension."""
    a = np.asarray(p, dtype=float)
    b = np.asarray(q, dtype=float)
    if a.shape != b.shape or a.ndim != 1:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return float(np.linalg.norm(a - b))


def _circumcenter(S: np.ndarray) -> np.ndarray:
    """Center of the sphere through the rows of S, inside their affine hull.

    Solved in affine-hull coordinates so degenerate (affinely dependent)
    subsets fall back to the least-squares center instead of blowing up.
    """
    U = S[1:] - S[0]
    if U.shape[0] == 0:
        return S[0].copy()
    G = U @ U.T
    b = 0.5 * np.einsum("ij,ij->i", U, U)
    lam, *_ = np.linalg.lstsq(G, b, rcond=None)
    return S[0] + lam @ U


def _boundary_ball(S: np.ndarray, support: list[int]):
    if not support:
        return np.zeros(S.shape[1]), -1.0  # empty ball contains nothing
    pts = S[support]
    c = _circumcenter(pts)
    r2 = float(np.max(np.einsum("ij,ij->i", pts - c, pts - c)))
    return c, r2


def min_enclosing_radius(points) -> float:
    """Radius of the smallest enclosing ball of a non-empty point set.

    Randomized Welzl recursion over support sets of size <= d+1, with a fixed
    shuffle seed for reproducibility. Small inputs (<= 3 points) take exact
    closed-form shortcuts.
    """
    S = _as_point_array(points)
    m, d = S.shape
    if m == 1:
        return 0.0
    if m == 2:
        return 0.5 * float(np.linalg.norm(S[0] - S[1]))
    if m == 3:
        return _radius_of_three(S)
    rng = random.Random(_WELZL_SEED)
    order = list(range(m))
    rng.shuffle(order)
    limit = sys.getrecursionlimit()
    if m + 100 > limit:
        sys.setrecursionlimit(m + 200)
    try:
        _, r2 = _welzl(S, order, m, [], d)
    finally:
        sys.setrecursionlimit(limit)
    return float(np.sqrt(max(r2, 0.0)))


def _radius_of_three(S: np.ndarray) -> float:
    # diametral ball of the longest side if it covers the third point,
    # otherwise the circumscribed ball (works in any ambient dimension)
    best = np.inf
    for i, j, k in ((0, 1, 2), (0, 2, 1), (1, 2, 0)):
        c = 0.5 * (S[i] + S[j])
        r2 = float(np.dot(S[i] - c, S[i] - c))
        if float(np.dot(S[k] - c, S[k] - c)) <= r2 * (1 + 1e-11) + 1e-30:
            best = min(best, r2)
    if not np.isfinite(best):
        c = _circumcenter(S)
        best = float(np.max(np.einsum("ij,ij->i", S - c, S - c)))
    return float(np.sqrt(best))


def _contains(c: np.ndarray, r2: float, p: np.ndarray) -> bool:
    d2 = float(np.dot(p - c, p - c))
    return d2 <= r2 + 1e-11 * (1.0 + r2)


def _welzl(S, order, end, support, d):
    if end == 0 or len(support) == d + 1:
        return _boundary_ball(S, support)
    p = order[end - 1]
    c, r2 = _welzl(S, order, end - 1, support, d)
    if r2 >= 0 and _contains(c, r2, S[p]):
        return c, r2
    return _welzl(S, order, end - 1, support + [p], d)


def rips_radius(points) -> float:
    """Half the maximum pairwise distance; 0 for singletons."""
    S = _as_point_array(points)
    if S.shape[0] == 1:
        return 0.0
    return 0.5 * float(np.max(pdist(S)))


def hausdorff_distance(points_a, points_b) -> float:
    """Symmetric Hausdorff distance: max of the two directed max-min distances."""
    A = _as_point_array(points_a, "first point set")
    B = _as_point_array(points_b, "second point set")
    if A.shape[1] != B.shape[1]:
        raise ValueError("point sets must share a dimension")
    D = cdist(A, B)
    return float(max(np.max(np.min(D, axis=1)), np.max(np.min(D, axis=0))))
