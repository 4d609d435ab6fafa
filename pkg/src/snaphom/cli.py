"""Command-line interface: persistence diagrams and the desk-scale experiments.

Every verb emits a single JSON document (stdout or --out) and exits nonzero iff
any recorded assertion fails. --verbose adds a human-readable table on stderr.
"""

from __future__ import annotations

import math
import sys

import click

from . import harness
from .geometry import PointCloud
from .persistence import reduce as reduce_filtration
from .simplicial import CECH, RIPS

_FLAVORS = click.Choice([CECH, RIPS])


def _load_cloud(points, construct, model, n, dim, seed, epsilon, radius, scale,
                side, r_in, r_out):
    """Resolve the point source; returns (cloud, grid-or-None)."""
    sources = sum(x is not None for x in (points, construct, model))
    if sources != 1:
        raise click.UsageError("provide exactly one of POINTS, --construct, --model")
    grid = None
    if points is not None:
        cloud = harness.load_points(points, dim)
    elif construct == "three-on-circle":
        cloud = harness.make_three_on_circle(radius)
    elif construct == "two-triangles":
        cloud, grid = harness.make_two_triangles(epsilon)
    else:
        params = {}
        if model == "uniform-cube":
            params["side"] = side
        else:
            params["r_in"], params["r_out"] = r_in, r_out
        cloud = harness.generate_random(model, n, dim, seed, **params)
    if scale != 1.0:
        cloud = PointCloud(cloud.coords * scale)
        grid = None  # a construction's grid alignment does not survive rescaling
    return cloud, grid


def _emit(report, out, verbose):
    text = harness.report_to_json(report)
    if out is not None:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)
    if verbose:
        for a in report.get("assertions", []):
            status = "n/a " if a.get("not_applicable") else ("pass" if a["pass"] else "FAIL")
            click.echo(f"  {status}  {a['name']}: lhs={a['lhs']} rhs={a['rhs']}",
                       err=True)
    if not harness.report_passed(report):
        sys.exit(1)


def _common_source_options(fn):
    for deco in reversed([
        click.argument("points", required=False, type=click.Path(exists=True)),
        click.option("--construct", type=click.Choice(["three-on-circle", "two-triangles"]),
                     help="Use a named construction instead of a points file."),
        click.option("--model", type=click.Choice(["uniform-cube", "annulus"]),
                     help="Sample a random cloud instead of a points file."),
        click.option("--n", type=int, default=20, show_default=True),
        click.option("--dim", type=int, default=2, show_default=True,
                     help="Ambient dimension d."),
        click.option("--seed", type=int, default=0, show_default=True),
        click.option("--radius", type=float, default=1.05, show_default=True,
                     help="Circle radius for --construct three-on-circle."),
        click.option("--side", type=float, default=4.0, show_default=True),
        click.option("--r-in", type=float, default=1.5, show_default=True),
        click.option("--r-out", type=float, default=2.5, show_default=True),
        click.option("--scale", type=float, default=1.0, show_default=True,
                     help="Multiply coordinates to normalize to the unit-radius convention."),
    ]):
        fn = deco(fn)
    return fn


@click.group()
def main():
    """Cech/Rips persistence and snap-complex experiments."""


@main.command()
@_common_source_options
@click.option("--epsilon", type=float, default=0.2, show_default=True)
@click.option("--p-max", type=int, default=1, show_default=True)
@click.option("--flavor", type=_FLAVORS, default=CECH, show_default=True)
@click.option("--r-max", type=float, default=None,
              help="Filtration range; default 1+epsilon.")
@click.option("--budget", type=int, default=harness.DEFAULT_BUDGET, show_default=True)
@click.option("--out", type=click.Path(), default=None)
@click.option("--verbose", is_flag=True)
def compute(points, construct, model, n, dim, seed, radius, side, r_in, r_out,
            scale, epsilon, p_max, flavor, r_max, budget, out, verbose):
    """Persistence diagram of a point cloud."""
    cloud, _ = _load_cloud(points, construct, model, n, dim, seed, epsilon,
                           radius, scale, side, r_in, r_out)
    if r_max is None:
        r_max = 1.0 + epsilon
    f = harness._build(cloud, flavor, p_max + 1, r_max, budget)
    dgm = reduce_filtration(f)
    report = {
        "experiment": "compute",
        "params": {"n": cloud.n, "d": cloud.dim, "flavor": flavor,
                   "p_max": p_max, "r_max": r_max},
        "metrics": {
            "simplex_count": len(f),
            "pairs": [
                {"dim": d_, "birth": b, "death": (None if math.isinf(d2) else d2)}
                for d_, b, d2 in dgm.pairs
            ],
        },
        "assertions": [],
    }
    _emit(report, out, verbose)


@main.command("corollary-check")
@_common_source_options
@click.option("--epsilon", type=float, default=0.2, show_default=True)
@click.option("--p-max", type=int, default=1, show_default=True)
@click.option("--flavor", type=_FLAVORS, default=CECH, show_default=True)
@click.option("--grid-offset", type=str, default=None,
              help="Comma-separated offset vector for the grid partition.")
@click.option("--budget", type=int, default=harness.DEFAULT_BUDGET, show_default=True)
@click.option("--timings", is_flag=True, help="Include wall-clock durations in the report.")
@click.option("--out", type=click.Path(), default=None)
@click.option("--verbose", is_flag=True)
def corollary_check(points, construct, model, n, dim, seed, radius, side, r_in,
                    r_out, scale, epsilon, p_max, flavor, grid_offset, budget,
                    timings, out, verbose):
    """Check persistent beta_p(C_1, C_{1+eps}) <= beta_p(Q_1)."""
    cloud, grid = _load_cloud(points, construct, model, n, dim, seed, epsilon,
                              radius, scale, side, r_in, r_out)
    offsets = None
    if grid_offset is not None:
        offsets = [tuple(float(x) for x in grid_offset.split(","))]
    elif grid is not None:
        offsets = [grid.offset]
    report = harness.run_corollary_check(cloud, epsilon, p_max, flavor=flavor,
                                         grid_offsets=offsets, budget=budget,
                                         include_timings=timings)
    _emit(report, out, verbose)


@main.command("theorem-check")
@_common_source_options
@click.option("--epsilon", type=float, default=0.2, show_default=True)
@click.option("--p-max", type=int, default=1, show_default=True)
@click.option("--flavor", type=_FLAVORS, default=CECH, show_default=True)
@click.option("--budget", type=int, default=harness.DEFAULT_BUDGET, show_default=True)
@click.option("--timings", is_flag=True)
@click.option("--out", type=click.Path(), default=None)
@click.option("--verbose", is_flag=True)
def theorem_check(points, construct, model, n, dim, seed, radius, side, r_in,
                  r_out, scale, epsilon, p_max, flavor, budget, timings, out,
                  verbose):
    """Check the linear packing bound on persistent Betti numbers."""
    cloud, _ = _load_cloud(points, construct, model, n, dim, seed, epsilon,
                           radius, scale, side, r_in, r_out)
    report = harness.run_theorem_check(cloud, epsilon, p_max, flavor=flavor,
                                       budget=budget, include_timings=timings)
    _emit(report, out, verbose)


@main.command()
@_common_source_options
@click.option("--epsilon", type=float, default=0.2, show_default=True)
@click.option("--p", type=int, default=1, show_default=True)
@click.option("--axis-value", type=float, default=0.0, show_default=True,
              help="First-coordinate position of the splitting hyperplane.")
@click.option("--budget", type=int, default=harness.DEFAULT_BUDGET, show_default=True)
@click.option("--timings", is_flag=True)
@click.option("--out", type=click.Path(), default=None)
@click.option("--verbose", is_flag=True)
def split(points, construct, model, n, dim, seed, radius, side, r_in, r_out,
          scale, epsilon, p, axis_value, budget, timings, out, verbose):
    """Measure persistent-Betti additivity across a splitting hyperplane."""
    cloud, _ = _load_cloud(points, construct, model, n, dim, seed, epsilon,
                           radius, scale, side, r_in, r_out)
    report = harness.run_split_experiment(cloud, epsilon, p, axis_value,
                                          budget=budget, include_timings=timings)
    _emit(report, out, verbose)


@main.command()
@click.argument("name", type=click.Choice(["three-on-circle", "two-triangles"]))
@click.option("--epsilon", type=float, default=0.2, show_default=True)
@click.option("--radius", type=float, default=1.05, show_default=True)
@click.option("--out", type=click.Path(), default=None)
@click.option("--verbose", is_flag=True)
def construct(name, epsilon, radius, out, verbose):
    """Emit a named construction as CSV."""
    if name == "three-on-circle":
        cloud = harness.make_three_on_circle(radius)
        grid = None
    else:
        cloud, grid = harness.make_two_triangles(epsilon)
    stream = open(out, "w") if out is not None else sys.stdout
    try:
        harness.save_points(cloud, stream)
    finally:
        if out is not None:
            stream.close()
    if verbose and grid is not None:
        click.echo(f"  grid offset: {grid.offset}", err=True)


@main.command()
@click.option("--model", type=click.Choice(["uniform-cube", "annulus"]),
              default="uniform-cube", show_default=True)
@click.option("--n", type=int, default=20, show_default=True)
@click.option("--dim", type=int, default=2, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--side", type=float, default=4.0, show_default=True)
@click.option("--r-in", type=float, default=1.5, show_default=True)
@click.option("--r-out", type=float, default=2.5, show_default=True)
@click.option("--out", type=click.Path(), default=None)
def generate(model, n, dim, seed, side, r_in, r_out, out):
    """Emit a random point cloud as CSV."""
    params = {"side": side} if model == "uniform-cube" else {"r_in": r_in, "r_out": r_out}
    cloud = harness.generate_random(model, n, dim, seed, **params)
    stream = open(out, "w") if out is not None else sys.stdout
    try:
        harness.save_points(cloud, stream)
    finally:
        if out is not None:
            stream.close()


if __name__ == "__main__":
    main()
