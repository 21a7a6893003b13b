"""Heat kernels on hyperbolic space and checks of Li-Yau type gradient estimates."""

import json

from ._core import (
    AlphaEval,
    CheckOutcome,
    DomainError,
    HyperPoint,
    KernelEval,
    NumericalAccuracyError,
    SolutionSample,
    UsageError,
    VerificationFailure,
    alpha_profile,
    check_estimate,
    distance,
    estimate_names,
    general_h_bound,
    harnack_factor,
    kernel,
    random_point,
    sharp_h3_bound,
    z_derivative,
    z_function,
    z_second_derivative,
)
from . import _core

__all__ = [
    "AlphaEval",
    "CheckOutcome",
    "DomainError",
    "HyperPoint",
    "KernelEval",
    "NumericalAccuracyError",
    "SolutionSample",
    "UsageError",
    "VerificationFailure",
    "alpha_profile",
    "check_estimate",
    "comparison_csv",
    "concavity_scan",
    "distance",
    "estimate_names",
    "general_h_bound",
    "grid_scan",
    "harnack_factor",
    "harnack_suite",
    "kernel",
    "random_point",
    "series_report",
    "sharp_h3_bound",
    "superposition_suite",
    "z_derivative",
    "z_function",
    "z_second_derivative",
]


def grid_scan(name, dims=(3,), tol=1e-8, **params):
    """Scan the default grid; returns the report as a dict."""
    return json.loads(_core.grid_scan_json(name, list(dims), tol, **params))


def superposition_suite(name, dim, trials=1000, seed=0, tol=1e-8, **params):
    return json.loads(_core.superposition_suite_json(name, dim, trials, seed, tol, **params))


def harnack_suite(dim, trials=1000, seed=0, tol=1e-8):
    return json.loads(_core.harnack_suite_json(dim, trials, seed, tol))


def series_report(which, order=400):
    """Exact coefficient report; big integers are returned as strings."""
    return json.loads(_core.series_json(which, order))


def concavity_scan(t_values=(0.1, 1.0, 10.0), s_grid_size=200):
    return json.loads(_core.concavity_json(list(t_values), s_grid_size))


def comparison_csv(dims=(3,)):
    return _core.comparison_csv(list(dims))
