"""Strip-stability experiment on critical site percolation (C++ core)."""

from ._stripperc import (
    Domain,
    SampleStats,
    TrialResult,
    brute_distance,
    build_domain,
    dp_distance,
    fit_power_law,
    median,
    path_distance,
    render_svg,
    resample_rows,
    run_grid,
    run_sample,
    run_trial,
    run_trials,
    seed_for_trial,
    simplify,
    trial_paths,
    wh_next,
)

__all__ = [
    "Domain",
    "SampleStats",
    "TrialResult",
    "brute_distance",
    "build_domain",
    "dp_distance",
    "fit_power_law",
    "median",
    "path_distance",
    "render_svg",
    "resample_rows",
    "run_grid",
    "run_sample",
    "run_trial",
    "run_trials",
    "seed_for_trial",
    "simplify",
    "trial_paths",
    "wh_next",
]
