"""Acceptance suite: one test per criterion, printing a pass/fail line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
status lines and timings.
"""

import math
import time

import numpy as np
import pytest

import snaphom as sh
from snaphom.persistence import sublevel_complex

from oracles import brute_min_enclosing_radius

TOL = 1e-9


def _report(name, ok, started, detail=""):
    status = "PASS" if ok else "FAIL"
    extra = f" ({detail})" if detail else ""
    print(f"[{status}] {name}{extra} [{time.perf_counter() - started:.1f}s]")
    assert ok, f"{name}{extra}"


# ---------------------------------------------------------------------------
# corpus shared by criteria 7 and 8
# ---------------------------------------------------------------------------

def _corpus():
    """>=100 random clouds over d in {2,3}, eps in {0.2, 0.5}, mixed models."""
    instances = []
    seed = 1000
    for d in (2, 3):
        for eps in (0.2, 0.5):
            for k in range(28):
                rng = np.random.default_rng(seed)
                n = int(rng.integers(5, 31))
                if k % 2 == 0:
                    cloud = sh.generate_random("uniform-cube", n, d, seed,
                                               side=3.0 if d == 2 else 3.4)
                else:
                    cloud = sh.generate_random("annulus", n, d, seed,
                                               r_in=1.0, r_out=2.2)
                instances.append((cloud, eps, d))
                seed += 1
    return instances


@pytest.fixture(scope="module")
def corpus():
    return _corpus()


def test_criterion_1_radius_stability_under_hausdorff():
    t0 = time.perf_counter()
    violations = 0
    for d in (1, 2, 3):
        rng = np.random.default_rng(100 + d)
        for _ in range(1000):
            A = rng.uniform(-2, 2, size=(int(rng.integers(1, 8)), d))
            B = rng.uniform(-2, 2, size=(int(rng.integers(1, 8)), d))
            h = sh.hausdorff_distance(A, B)
            if abs(sh.min_enclosing_radius(A) - sh.min_enclosing_radius(B)) > h + TOL:
                violations += 1
            if abs(sh.rips_radius(A) - sh.rips_radius(B)) > h + TOL:
                violations += 1
    _report("criterion 1: radius stability (Cech and Rips), 3000 pairs",
            violations == 0, t0, f"{violations} violations")


def test_criterion_2_miniball_oracle_equivalence():
    t0 = time.perf_counter()
    rng = np.random.default_rng(200)
    worst = 0.0
    for _ in range(500):
        d = int(rng.integers(1, 4))
        pts = rng.uniform(-3, 3, size=(int(rng.integers(1, 9)), d))
        worst = max(worst, abs(sh.min_enclosing_radius(pts)
                               - brute_min_enclosing_radius(pts)))
    _report("criterion 2: miniball vs support-subset enumeration, 500 sets",
            worst <= TOL, t0, f"max deviation {worst:.2e}")


def test_criterion_3_gluing_and_sweep_laws():
    t0 = time.perf_counter()
    from snaphom.chains import Chain, boundary

    rng = np.random.default_rng(300)
    checked = 0
    ok = True
    while checked < 500:
        p = 1 if checked % 2 == 0 else 2
        simplices = set()
        for _ in range(int(rng.integers(2, 7))):
            verts = rng.choice(9, size=p + 2, replace=False)
            simplices.add(tuple(sorted(int(v) for v in verts)))
        gamma = boundary(Chain.from_simplices(p + 1, simplices))
        verts = sorted(gamma.vertices())
        if len(verts) < 2:
            continue
        i, j = rng.choice(len(verts), size=2, replace=False)
        x, y = verts[int(i)], verts[int(j)]
        z = max(verts) + 1
        glued = sh.glue(gamma, x, y, z)
        filling = sh.sweep(gamma, x, y, z)
        if not sh.is_cycle(glued):
            ok = False
        if sh.boundary(filling) != sh.add(gamma, glued):
            ok = False
        checked += 1
    _report("criterion 3: glue keeps cycles and sweep fills, 500 cycles", ok, t0)


def test_criterion_4_persistence_vs_elimination_oracle():
    t0 = time.perf_counter()
    rng = np.random.default_rng(400)
    ok = True
    for _ in range(20):
        n = int(rng.integers(4, 13))
        d = int(rng.integers(1, 4))
        max_dim = int(rng.integers(1, 4))
        cloud = sh.PointCloud(rng.uniform(0, 2.5, size=(n, d)))
        build = sh.build_cech_filtration if rng.integers(2) else sh.build_rips_filtration
        f = build(cloud, max_dim, 1.2)
        dgm = sh.reduce(f)
        for r in f.values():
            complex_at_r = sublevel_complex(f, r)
            for p in range(max_dim):
                if sh.betti(dgm, p, r) != sh.betti_of_static(complex_at_r, p):
                    ok = False
    _report("criterion 4: diagram Betti vs static elimination ranks, 20 filtrations",
            ok, t0)


def test_criterion_5_three_on_circle():
    t0 = time.perf_counter()
    cloud = sh.make_three_on_circle(1.05)
    eps = 0.1
    f = sh.build_cech_filtration(cloud, 2, 1.0 + eps)
    pb = sh.persistent_betti(sh.reduce(f), 1, 1.0, 1.0 + eps)
    q1 = sh.snap_complex(f, 1.0, sh.GridPartition(epsilon=eps, dim=2))
    b1 = sh.betti_of_static(q1.complex, 1)
    _report("criterion 5: three-on-circle gives persistent=0, snap=1",
            pb == 0 and b1 == 1, t0, f"persistent={pb}, snap={b1}")


def test_criterion_6_two_triangles():
    t0 = time.perf_counter()
    eps = 0.2
    cloud, grid = sh.make_two_triangles(eps)
    f = sh.build_cech_filtration(cloud, 2, 1.0 + eps)
    pb = sh.persistent_betti(sh.reduce(f), 1, 1.0, 1.0 + eps)
    b1_q1 = sh.betti_of_static(sh.snap_complex(f, 1.0, grid).complex, 1)
    b1_q1e = sh.betti_of_static(sh.snap_complex(f, 1.0 + eps, grid).complex, 1)
    ok = pb == 1 and b1_q1 == 1 and b1_q1e == 0 and pb > b1_q1e
    _report("criterion 6: two-triangles strict inequality 1 > 0",
            ok, t0, f"persistent={pb}, snap@1={b1_q1}, snap@1+eps={b1_q1e}")


def test_criterion_7_corollary_corpus(corpus):
    t0 = time.perf_counter()
    failures = 0
    count = 0
    for cloud, eps, d in corpus:
        p_max = d - 1
        for flavor in (sh.CECH, sh.RIPS):
            r = sh.run_corollary_check(cloud, eps, p_max, flavor=flavor)
            if not sh.report_passed(r):
                failures += 1
            count += 1
    _report("criterion 7: snap-complex upper bound over the random corpus",
            failures == 0, t0, f"{count} checks, {failures} violations")


def test_criterion_8_theorem_corpus(corpus):
    t0 = time.perf_counter()
    failures = 0
    ratios = []
    for cloud, eps, d in corpus:
        p_max = d - 1
        for flavor in (sh.CECH, sh.RIPS):
            r = sh.run_theorem_check(cloud, eps, p_max, flavor=flavor)
            if not sh.report_passed(r):
                failures += 1
            ratios.extend(r["metrics"]["bound_ratio"].values())
    worst = max(ratios) if ratios else 0.0
    _report("criterion 8: linear packing bound over the random corpus",
            failures == 0, t0, f"max measured/bound ratio {worst:.2e}")


def test_criterion_9_split_experiment():
    t0 = time.perf_counter()
    rng = np.random.default_rng(900)
    failures = 0
    for k in range(50):
        n = int(rng.integers(8, 36))
        cloud = sh.generate_random("uniform-cube", n, 2, 900 + k, side=6.0)
        p = k % 2
        axis = float(rng.uniform(1.0, 5.0))
        r = sh.run_split_experiment(cloud, 0.2, p, axis)
        if not sh.report_passed(r):
            failures += 1
    _report("criterion 9: split simplex-count bound, 50 instances",
            failures == 0, t0, f"{failures} violations")


def test_criterion_10_determinism():
    t0 = time.perf_counter()
    cloud = sh.generate_random("annulus", 16, 2, 77, r_in=1.0, r_out=2.0)
    pairs = [
        (sh.run_corollary_check(cloud, 0.2, 1),
         sh.run_corollary_check(cloud, 0.2, 1)),
        (sh.run_theorem_check(cloud, 0.2, 1),
         sh.run_theorem_check(cloud, 0.2, 1)),
        (sh.run_split_experiment(cloud, 0.2, 1, 0.0),
         sh.run_split_experiment(cloud, 0.2, 1, 0.0)),
    ]
    ok = all(sh.report_to_json(a) == sh.report_to_json(b) for a, b in pairs)
    _report("criterion 10: byte-identical JSON reports for fixed seeds", ok, t0)
