"""Exact computational algebra for G-spin models.

Thin wrapper over the C++ core: finite groups, the quantum double D(G),
local field algebras on lattice windows, crossed products and the
basic-construction verification suites.
"""

import json

from _gspin import (  # noqa: F401
    ConfigError,
    ExprError,
    FiniteGroup,
    GroupError,
    __version__,
    build_group,
    dump_algebra,
    eval_expression,
    validate_group,
    verify_quantum_double,
)
from _gspin import run_suite as _run_suite


def run_suite(group="cyclic:2", win_lo=0.5, win_hi=2.0, suites=("all",),
              tol=1e-8, samples=500, seed=1, max_cases=2_000_000,
              stable_timing=False):
    """Run verification suites and return the parsed report.

    Returns a dict with keys ``exit_code``, ``meta`` and ``checks``.
    """
    code, payload = _run_suite(group, win_lo, win_hi, list(suites), tol,
                               samples, seed, max_cases, stable_timing)
    report = json.loads(payload)
    report["exit_code"] = code
    return report


__all__ = [
    "ConfigError",
    "ExprError",
    "FiniteGroup",
    "GroupError",
    "build_group",
    "dump_algebra",
    "eval_expression",
    "run_suite",
    "validate_group",
    "verify_quantum_double",
    "__version__",
]
