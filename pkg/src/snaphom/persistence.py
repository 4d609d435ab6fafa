"""Persistence via Z/2 boundary-matrix column reduction; Betti number queries.

Reduced homology convention throughout: the augmentation class is discarded, so
a single connected component has beta_0 = 0 (unreduced beta_0 is one higher on
non-empty complexes). Persistent counts use the strict-death convention
``death > t``: a class dying exactly at t does not persist to t, because the
closed complex at t already contains its filling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import _kernels
from .simplicial import Filtration

INF = math.inf

# dense packed reduction guard; desk-scale filtrations stay far below this
_MAX_MATRIX_BYTES = 4_000_000_000


@dataclass(frozen=True)
class PersistenceDiagram:
    """(dimension, birth, death) triples; death may be math.inf."""

    pairs: tuple
    reduced: bool = True


@dataclass(frozen=True)
class StaticComplex:
    """Face-closed set of simplices, no filtration values.

    Vertex labels may be any sortable hashables (grid cells use integer tuples).
    """

    simplices: frozenset

    def validate(self):
        for s in self.simplices:
            if len(s) != len(set(s)) or tuple(sorted(s)) != tuple(s):
                raise ValueError(f"not a sorted simplex: {s!r}")
            if len(s) > 1:
                for face in combinations(s, len(s) - 1):
                    if face not in self.simplices:
                        raise ValueError(f"complex is not face-closed at {s!r}")

    def of_dim(self, p: int) -> list:
        return sorted(s for s in self.simplices if len(s) == p + 1)


def reduce(f: Filtration) -> PersistenceDiagram:
    """Standard column-reduction pairing over the filtration order.

    Zero-length pairs are kept; one essential 0-dimensional class (the first
    vertex in the order) is discarded as the augmentation class.
    """
    entries = f.entries
    n = len(entries)
    if n == 0:
        return PersistenceDiagram(pairs=())
    n_words = max(1, (n + 63) // 64)
    if n * n_words * 8 > _MAX_MATRIX_BYTES:
        raise MemoryError(f"boundary matrix too large for dense reduction ({n} columns)")

    index = {s: i for i, (s, _) in enumerate(entries)}
    col_rows = []
    for s, _ in entries:
        if len(s) == 1:
            col_rows.append(())
        else:
            col_rows.append(tuple(index[s[:i] + s[i + 1:]] for i in range(len(s))))
    packed = _kernels.pack_rows(col_rows, n)
    low = _kernels.reduce_packed(packed)

    pairs = []
    paired = set()
    for j in range(n):
        i = int(low[j])
        if i >= 0:
            dim = len(entries[i][0]) - 1
            pairs.append((dim, entries[i][1], entries[j][1]))
            paired.add(i)
            paired.add(j)
    dropped_augmentation = False
    for j in range(n):
        if j in paired or int(low[j]) >= 0:
            continue
        dim = len(entries[j][0]) - 1
        if dim == 0 and not dropped_augmentation:
            dropped_augmentation = True  # the augmentation class
            continue
        pairs.append((dim, entries[j][1], INF))
    pairs.sort()
    return PersistenceDiagram(pairs=tuple(pairs))


def betti(dgm: PersistenceDiagram, p: int, r: float) -> int:
    """Rank of the p-th (reduced) homology at radius r: pairs with birth <= r < death."""
    return sum(1 for dim, b, d in dgm.pairs if dim == p and b <= r < d)


def persistent_betti(dgm: PersistenceDiagram, p: int, s: float, t: float) -> int:
    """Rank of the map induced by inclusion of the complex at s into the one at t."""
    if s > t:
        raise ValueError(f"persistent Betti requires s <= t, got {s} > {t}")
    return sum(1 for dim, b, d in dgm.pairs if dim == p and b <= s and d > t)


def betti_of_static(k: StaticComplex, p: int) -> int:
    """Reduced Z/2 Betti number: dim ker boundary_p minus rank boundary_{p+1}."""
    if p < 0:
        raise ValueError("homology dimension must be >= 0")
    k.validate()
    f_p = k.of_dim(p)
    if not f_p:
        return 0
    if p == 0:
        rank_p = 1  # augmentation map of a non-empty complex
    else:
        rank_p = _boundary_rank(k.of_dim(p - 1), f_p)
    rank_p1 = _boundary_rank(f_p, k.of_dim(p + 1))
    return len(f_p) - rank_p - rank_p1


def _boundary_rank(faces: list, cofaces: list) -> int:
    """GF(2) rank of the boundary matrix from cofaces to faces."""
    if not cofaces:
        return 0
    face_index = {s: i for i, s in enumerate(faces)}
    rows = []
    for s in cofaces:
        rows.append([face_index[f] for f in combinations(s, len(s) - 1)])
    packed = _kernels.pack_rows(rows, len(faces))
    return int(_kernels.rank_packed(packed))


def sublevel_complex(f: Filtration, r: float) -> StaticComplex:
    """Static complex of all simplices with filtration value <= r."""
    return StaticComplex(frozenset(f.simplices_at(r)))
