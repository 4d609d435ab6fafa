"""Experiment drivers: point-cloud I/O, named constructions, random models,
the corollary/theorem/split checks, and JSON report assembly.

Reports are plain dicts with a stable schema (experiment, params, metrics,
assertions, optionally durations). For a fixed seed and fixed parameters a
report without timings serializes to byte-identical JSON on every run.
"""

from __future__ import annotations

import csv
import json
import math
import time

import numpy as np

from .geometry import PointCloud
from .persistence import betti_of_static, persistent_betti, reduce
from .simplicial import CECH, RIPS, Filtration, build_cech_filtration, build_rips_filtration
from .snap import BoundNotApplicableError, GridPartition, snap_complex, theorem_bound

DEFAULT_BUDGET = 2_000_000


# ---------------------------------------------------------------------------
# I/O and point-set sources
# ---------------------------------------------------------------------------

def load_points(path, d: int) -> PointCloud:
    """Read a CSV of one point per row; a leading non-numeric header row is skipped."""
    rows = []
    with open(path, newline="") as fh:
        for lineno, record in enumerate(csv.reader(fh), start=1):
            record = [c.strip() for c in record if c.strip() != ""]
            if not record:
                continue
            try:
                vals = [float(c) for c in record]
            except ValueError:
                if lineno == 1:
                    continue  # header
                raise ValueError(f"{path}: row {lineno} is not numeric: {record!r}")
            if len(vals) != d:
                raise ValueError(
                    f"{path}: row {lineno} has {len(vals)} columns, expected {d}")
            if not all(math.isfinite(v) for v in vals):
                raise ValueError(f"{path}: row {lineno} contains a non-finite value")
            rows.append(vals)
    if not rows:
        raise ValueError(f"{path}: no points found")
    return PointCloud(np.asarray(rows))


def save_points(cloud: PointCloud, stream):
    for row in cloud.coords:
        stream.write(",".join(repr(float(x)) for x in row) + "\n")


def make_three_on_circle(radius: float) -> PointCloud:
    """Three points equally spaced on a circle of the given radius, centered at 0."""
    if radius <= 0:
        raise ValueError("radius must be positive")
    angles = [0.0, 2.0 * math.pi / 3.0, 4.0 * math.pi / 3.0]
    pts = [[radius * math.cos(a), radius * math.sin(a)] for a in angles]
    return PointCloud(np.asarray(pts))


def make_two_triangles(epsilon: float):
    """Two isosceles right triangles with circumradius 1+epsilon facing each other
    across a narrow gap, plus a grid aligned so each near vertex pair shares a cell.

    The hexagon through the six points is a 1-cycle that persists from radius 1
    to 1+epsilon, while its image in the snap complex at 1+epsilon is filled.
    Requires 0 < epsilon <= sqrt(2) - 1 so the hexagon already exists at radius 1.
    """
    if not (0.0 < epsilon <= math.sqrt(2.0) - 1.0 + 1e-12):
        raise ValueError("epsilon must lie in (0, sqrt(2) - 1]")
    h = 1.0 + epsilon
    side = epsilon / math.sqrt(2.0)  # grid cell side in d = 2
    w = 0.5 * side                   # gap between the triangles, below one cell side
    pts = [
        [0.0, h], [0.0, -h], [-h, 0.0],      # left triangle, hypotenuse vertical
        [w, h], [w, -h], [w + h, 0.0],       # mirrored right triangle
    ]
    # center a cell on the top near pair; the bottom pair then also shares a cell
    offset = (w / 2.0 - side / 2.0, h - side / 2.0)
    grid = GridPartition(epsilon=epsilon, dim=2, offset=offset)
    return PointCloud(np.asarray(pts)), grid


def generate_random(model: str, n: int, d: int, seed: int, **params) -> PointCloud:
    """Deterministic random cloud; models: uniform-cube(side), annulus(r_in, r_out)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if d < 1:
        raise ValueError("d must be >= 1")
    rng = np.random.default_rng(seed)
    if model == "uniform-cube":
        side = float(params.pop("side", 4.0))
        coords = rng.uniform(0.0, side, size=(n, d))
    elif model == "annulus":
        r_in = float(params.pop("r_in", 1.5))
        r_out = float(params.pop("r_out", 2.5))
        if not (0.0 <= r_in < r_out):
            raise ValueError("annulus requires 0 <= r_in < r_out")
        dirs = rng.normal(size=(n, d))
        dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
        u = rng.uniform(size=n)
        radii = (u * (r_out**d - r_in**d) + r_in**d) ** (1.0 / d)
        coords = dirs * radii[:, None]
    else:
        raise ValueError(f"unknown model {model!r}")
    if params:
        raise ValueError(f"unused parameters for model {model!r}: {sorted(params)}")
    return PointCloud(coords)


# ---------------------------------------------------------------------------
# experiment drivers
# ---------------------------------------------------------------------------

def _build(cloud: PointCloud, flavor: str, max_dim: int, r_max: float,
           budget) -> Filtration:
    if flavor == CECH:
        return build_cech_filtration(cloud, max_dim, r_max, budget=budget)
    if flavor == RIPS:
        return build_rips_filtration(cloud, max_dim, r_max, budget=budget)
    raise ValueError(f"unknown flavor {flavor!r}")


def run_corollary_check(cloud: PointCloud, epsilon: float, p_max: int,
                        flavor: str = CECH, grid_offsets=None,
                        budget: int = DEFAULT_BUDGET,
                        include_timings: bool = False) -> dict:
    """Check persistent beta_p(C_1, C_{1+eps}) <= beta_p(Q_1) for each p and offset."""
    t0 = time.perf_counter()
    d = cloud.dim
    if grid_offsets is None:
        grid_offsets = [(0.0,) * d]
    grid_offsets = [tuple(float(x) for x in off) for off in grid_offsets]

    f = _build(cloud, flavor, p_max + 1, 1.0 + epsilon, budget)
    dgm = reduce(f)
    lhs = {p: persistent_betti(dgm, p, 1.0, 1.0 + epsilon) for p in range(p_max + 1)}

    snap_betti = {}
    assertions = []
    for k, off in enumerate(grid_offsets):
        grid = GridPartition(epsilon=epsilon, dim=d, offset=off)
        q1 = snap_complex(f, 1.0, grid)
        per_p = {}
        for p in range(p_max + 1):
            rhs = betti_of_static(q1.complex, p)
            per_p[str(p)] = rhs
            assertions.append({
                "name": f"snap-upper-bound[p={p},offset={k}]",
                "lhs": lhs[p], "rhs": rhs, "pass": lhs[p] <= rhs,
            })
        snap_betti[f"offset_{k}"] = per_p

    report = {
        "experiment": "corollary-check",
        "params": {
            "n": cloud.n, "d": d, "epsilon": epsilon, "p_max": p_max,
            "flavor": flavor, "grid_offsets": [list(o) for o in grid_offsets],
        },
        "metrics": {
            "persistent_betti": {str(p): v for p, v in lhs.items()},
            "snap_betti": snap_betti,
            "simplex_count": len(f),
        },
        "assertions": assertions,
    }
    if include_timings:
        report["durations"] = {"total_s": time.perf_counter() - t0}
    return report


def run_theorem_check(cloud: PointCloud, epsilon: float, p_max: int,
                      flavor: str = CECH, budget: int = DEFAULT_BUDGET,
                      include_timings: bool = False) -> dict:
    """Check the linear packing bound for every applicable p; report bound ratios."""
    t0 = time.perf_counter()
    d = cloud.dim
    f = _build(cloud, flavor, p_max + 1, 1.0 + epsilon, budget)
    dgm = reduce(f)

    assertions = []
    measured = {}
    ratios = {}
    for p in range(p_max + 1):
        lhs = persistent_betti(dgm, p, 1.0, 1.0 + epsilon)
        measured[str(p)] = lhs
        try:
            bound = theorem_bound(cloud.n, p, epsilon, d)
        except BoundNotApplicableError:
            assertions.append({
                "name": f"linear-bound[p={p}]", "lhs": lhs, "rhs": None,
                "pass": True, "not_applicable": True,
            })
            continue
        ratios[str(p)] = lhs / bound
        assertions.append({
            "name": f"linear-bound[p={p}]", "lhs": lhs, "rhs": bound,
            "pass": lhs <= bound,
        })

    report = {
        "experiment": "theorem-check",
        "params": {"n": cloud.n, "d": d, "epsilon": epsilon, "p_max": p_max,
                   "flavor": flavor},
        "metrics": {
            "persistent_betti": measured,
            "bound_ratio": ratios,
            "simplex_count": len(f),
        },
        "assertions": assertions,
    }
    if include_timings:
        report["durations"] = {"total_s": time.perf_counter() - t0}
    return report


def run_split_experiment(cloud: PointCloud, epsilon: float, p: int,
                         axis_value: float, budget: int = DEFAULT_BUDGET,
                         include_timings: bool = False) -> dict:
    """Split by the first coordinate and compare persistent Betti additivity.

    The known simplex-count bound on the defect is asserted; the conjectured
    linear-in-|M| bound is only measured (ratio), never asserted.
    """
    t0 = time.perf_counter()
    if cloud.dim < 1:
        raise ValueError("need at least one coordinate to split on")
    xs = cloud.coords[:, 0]
    left = cloud.coords[xs < axis_value]
    right = cloud.coords[xs >= axis_value]
    strip = cloud.coords[np.abs(xs - axis_value) <= 2.0 * (1.0 + epsilon)]

    def pb(coords) -> int:
        if coords.shape[0] == 0:
            return 0
        f = build_cech_filtration(PointCloud(coords), p + 1, 1.0 + epsilon,
                                  budget=budget)
        return persistent_betti(reduce(f), p, 1.0, 1.0 + epsilon)

    b_full = pb(cloud.coords)
    b_left = pb(left)
    b_right = pb(right)
    difference = abs(b_full - b_left - b_right)

    m = int(strip.shape[0])
    if m > 0:
        fm = build_cech_filtration(PointCloud(strip), p + 1, 1.0 + epsilon,
                                   budget=budget)
        naive_bound = fm.count_simplices(p, 1.0) + fm.count_simplices(p + 1, 1.0 + epsilon)
    else:
        naive_bound = 0
    crude_bound = 2 * m ** (p + 2)

    report = {
        "experiment": "split",
        "params": {"n": cloud.n, "d": cloud.dim, "epsilon": epsilon, "p": p,
                   "axis_value": axis_value},
        "metrics": {
            "betti_full": b_full,
            "betti_left": b_left,
            "betti_right": b_right,
            "m_count": m,
            "difference": difference,
            "naive_bound": naive_bound,
            "crude_bound": crude_bound,
            "difference_per_strip_point": (difference / m) if m > 0 else None,
        },
        "assertions": [{
            "name": "split-simplex-bound",
            "lhs": difference, "rhs": naive_bound, "pass": difference <= naive_bound,
        }],
    }
    if include_timings:
        report["durations"] = {"total_s": time.perf_counter() - t0}
    return report


# ---------------------------------------------------------------------------
# report helpers
# ---------------------------------------------------------------------------

def report_passed(report: dict) -> bool:
    return all(a["pass"] for a in report.get("assertions", []))


def report_to_json(report: dict) -> str:
    return json.dumps(report, indent=2)
