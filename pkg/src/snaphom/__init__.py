"""Cech/Rips filtrations, Z/2 persistence, and snap complexes over grid partitions."""

from .geometry import (
    PointCloud,
    distance,
    hausdorff_distance,
    min_enclosing_radius,
    rips_radius,
)
from .simplicial import (
    CECH,
    RIPS,
    Filtration,
    SimplexBudgetError,
    build_cech_filtration,
    build_rips_filtration,
)
from .chains import Chain, add, boundary, glue, is_cycle, star, sweep
from .persistence import (
    PersistenceDiagram,
    StaticComplex,
    betti,
    betti_of_static,
    persistent_betti,
    reduce,
    sublevel_complex,
)
from .snap import (
    BoundNotApplicableError,
    GridPartition,
    SnapComplex,
    bound_constant,
    cell_of,
    snap_complex,
    theorem_bound,
)
from .harness import (
    DEFAULT_BUDGET,
    generate_random,
    load_points,
    make_three_on_circle,
    make_two_triangles,
    report_passed,
    report_to_json,
    run_corollary_check,
    run_split_experiment,
    run_theorem_check,
)

__version__ = "0.1.0"
