"""Chemical reaction optimization with adaptive collision.

Thin python surface over the C++ core: benchmark construction and
evaluation, single optimization runs, and the statistics used to compare
algorithm variants.
"""

from ._core import (
    ZERO_THRESHOLD,
    AlgorithmConfig,
    BenchmarkSpec,
    BoundaryScheme,
    RunRecord,
    SampleSummary,
    Variant,
    coll_rate,
    derive_run_seed,
    evaluate,
    generate_spec,
    load_spec,
    optimum_point,
    penalty_u,
    run,
    save_spec,
    significant_95,
    summarize,
    t_statistic,
    transform,
)

__all__ = [
    "ZERO_THRESHOLD",
    "AlgorithmConfig",
    "BenchmarkSpec",
    "BoundaryScheme",
    "RunRecord",
    "SampleSummary",
    "Variant",
    "coll_rate",
    "derive_run_seed",
    "evaluate",
    "generate_spec",
    "load_spec",
    "optimum_point",
    "penalty_u",
    "run",
    "save_spec",
    "significant_95",
    "summarize",
    "t_statistic",
    "transform",
]

__version__ = "0.1.0"
