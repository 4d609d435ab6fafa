import math

import numpy as np
import pytest

from snaphom.geometry import PointCloud
from snaphom.persistence import (
    INF,
    PersistenceDiagram,
    StaticComplex,
    betti,
    betti_of_static,
    persistent_betti,
    reduce,
    sublevel_complex,
)
from snaphom.simplicial import build_cech_filtration, build_rips_filtration

from oracles import brute_betti

TOL = 1e-9


def three_on_circle_diagram(R=1.05, r_max=1.2):
    pts = [[R * math.cos(a), R * math.sin(a)]
           for a in (0.0, 2 * math.pi / 3, 4 * math.pi / 3)]
    f = build_cech_filtration(PointCloud(pts), 2, r_max)
    return reduce(f)


def test_two_points_reduced_zero_dim():
    f = build_cech_filtration(PointCloud([[0.0, 0.0], [2.0, 0.0]]), 1, 2.0)
    dgm = reduce(f)
    zero = [(b, d) for dim, b, d in dgm.pairs if dim == 0]
    # the other component is the discarded augmentation class
    assert zero == [(0.0, 1.0)]
    assert dgm.reduced


def test_three_on_circle_pair():
    dgm = three_on_circle_diagram()
    ones = [(b, d) for dim, b, d in dgm.pairs if dim == 1]
    assert len(ones) == 1
    b, d = ones[0]
    assert b == pytest.approx(1.05 * math.sqrt(3) / 2, abs=TOL)
    assert d == pytest.approx(1.05, abs=TOL)


def test_square_rips_loop():
    pts = [[0.0, 0.0], [2.0, 0.0], [2.0, 2.0], [0.0, 2.0]]
    f = build_rips_filtration(PointCloud(pts), 2, 1.5)
    dgm = reduce(f)
    # zero-length pairs are retained in the diagram but carry no homology
    ones = [(b, d) for dim, b, d in dgm.pairs if dim == 1 and d > b]
    assert len(ones) == 1
    assert ones[0][0] == pytest.approx(1.0, abs=TOL)
    assert ones[0][1] == pytest.approx(math.sqrt(2.0), abs=TOL)


def test_betti_examples():
    dgm = three_on_circle_diagram()
    assert betti(dgm, 1, 1.0) == 1
    assert betti(dgm, 1, 1.1) == 0   # died at 1.05
    assert betti(dgm, 2, 1.0) == 0
    assert betti(dgm, 1, 0.5) == 0


def test_persistent_betti_examples():
    dgm = three_on_circle_diagram()
    assert persistent_betti(dgm, 1, 1.0, 1.1) == 0
    for r in (0.95, 1.0, 1.05, 1.1):
        assert persistent_betti(dgm, 1, r, r) == betti(dgm, 1, r)
    with pytest.raises(ValueError):
        persistent_betti(dgm, 1, 1.1, 1.0)


def test_persistent_betti_monotonicity():
    dgm = three_on_circle_diagram()
    values = [0.0, 0.9, 0.95, 1.0, 1.05, 1.1, 1.2]
    for p in (0, 1):
        for s in values:
            for t in values:
                if s > t:
                    continue
                pb = persistent_betti(dgm, p, s, t)
                assert pb <= min(betti(dgm, p, s), betti(dgm, p, t))
                if s > values[0]:
                    prev = values[values.index(s) - 1]
                    assert persistent_betti(dgm, p, prev, t) <= pb


def test_zero_length_pairs_never_count():
    dgm = PersistenceDiagram(pairs=((1, 0.5, 0.5), (1, 0.3, 0.7)))
    assert betti(dgm, 1, 0.5) == 1
    assert persistent_betti(dgm, 1, 0.5, 0.5) == 1


def test_betti_of_static_examples():
    hollow = StaticComplex(frozenset({(0,), (1,), (2,), (0, 1), (0, 2), (1, 2)}))
    assert betti_of_static(hollow, 1) == 1
    assert betti_of_static(hollow, 0) == 0

    filled = StaticComplex(hollow.simplices | {(0, 1, 2)})
    assert betti_of_static(filled, 1) == 0

    octa = {(0, 1, 4), (1, 2, 4), (2, 3, 4), (0, 3, 4),
            (0, 1, 5), (1, 2, 5), (2, 3, 5), (0, 3, 5)}
    simplices = set(octa)
    for s in octa:
        simplices.update({(s[0],), (s[1],), (s[2],),
                          (s[0], s[1]), (s[0], s[2]), (s[1], s[2])})
    sphere = StaticComplex(frozenset(simplices))
    assert betti_of_static(sphere, 2) == 1
    assert betti_of_static(sphere, 1) == 0
    assert betti_of_static(sphere, 0) == 0


def test_betti_of_static_requires_face_closure():
    with pytest.raises(ValueError):
        betti_of_static(StaticComplex(frozenset({(0, 1)})), 0)


def test_diagram_matches_static_ranks_on_random_filtrations():
    rng = np.random.default_rng(59)
    for _ in range(12):
        n = int(rng.integers(3, 13))
        d = int(rng.integers(1, 4))
        max_dim = int(rng.integers(1, 4))
        coords = rng.uniform(0, 2.5, size=(n, d))
        build = build_cech_filtration if rng.integers(2) else build_rips_filtration
        f = build(PointCloud(coords), max_dim, 1.2)
        dgm = reduce(f)
        for r in f.values():
            complex_at_r = sublevel_complex(f, r)
            for p in range(max_dim):
                assert betti(dgm, p, r) == betti_of_static(complex_at_r, p)
                assert betti(dgm, p, r) == brute_betti(complex_at_r.simplices, p)


def test_reduce_deterministic():
    rng = np.random.default_rng(8)
    coords = rng.uniform(0, 2, size=(10, 2))
    f = build_cech_filtration(PointCloud(coords), 2, 1.0)
    assert reduce(f).pairs == reduce(f).pairs


def test_infinite_deaths_counted():
    f = build_cech_filtration(PointCloud([[0.0, 0.0], [9.0, 0.0]]), 1, 1.0)
    dgm = reduce(f)
    assert betti(dgm, 0, 1.0) == 1          # two components, reduced count
    assert persistent_betti(dgm, 0, 0.5, 1.0) == 1
    assert any(d == INF for _, _, d in dgm.pairs)
