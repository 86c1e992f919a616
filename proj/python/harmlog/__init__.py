"""Harmonic numbers and logarithms estimated by counting running-maximum updates."""

from ._core import (
    DerivedEstimate,
    ExperimentRow,
    HarmonicEstimate,
    LnEstimate,
    RandomStream,
    bias_bound,
    cli,
    count_records,
    count_records_stream,
    csv_header,
    default_parallelism,
    epsilon_bounds,
    estimate_harmonic,
    estimate_ln,
    estimate_ln_for_argument,
    estimate_ln_rational,
    estimate_log_base,
    euler_gamma,
    exact_harmonic,
    exact_harmonic_rational,
    experiment_csv,
    harmonic_to_ln,
    oracle_mean_records,
    record_count_histogram,
    run_experiment,
)

__all__ = [
    "DerivedEstimate",
    "ExperimentRow",
    "HarmonicEstimate",
    "LnEstimate",
    "RandomStream",
    "bias_bound",
    "cli",
    "count_records",
    "count_records_stream",
    "csv_header",
    "default_parallelism",
    "epsilon_bounds",
    "estimate_harmonic",
    "estimate_ln",
    "estimate_ln_for_argument",
    "estimate_ln_rational",
    "estimate_log_base",
    "euler_gamma",
    "exact_harmonic",
    "exact_harmonic_rational",
    "experiment_csv",
    "harmonic_to_ln",
    "oracle_mean_records",
    "record_count_histogram",
    "run_experiment",
]
