"""Kernel-parameterised conformable fractional derivative and integral."""

import json

from ._gcfrac import (
    ConfigError,
    DomainError,
    FracOrder,
    Function,
    HypothesisError,
    Kernel,
    KernelError,
    LimitEstimate,
    MeanValueWitness,
    NumericConfig,
    ParseError,
    QuadConfig,
    QuadratureError,
    QuadratureResult,
    TheoremReport,
    check_D_of_I,
    check_I_of_D,
    d_alpha_at_start,
    d_alpha_closed,
    d_alpha_limit,
    i_alpha,
    integral_mean_value,
    integration_by_parts_residual,
    mvt_find_c,
    rolle_find_c,
    run_cli,
    special_table,
)


def verify(*args):
    """Runs the verification suite and returns (exit_code, parsed JSON report)."""
    code, out, err = run_cli(["verify", "--format", "json", *args])
    if not out:
        raise ValueError(err.strip())
    return code, json.loads(out)


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
