"""Polar decompositions and generalized inverses of adjointable operator
matrices over block matrix algebras, with an exact function backend for
diagonal multiplication operators and a graded backend for families with
growing norms.

Problems are plain dicts mirroring the CLI file format; reports come back
as dicts with ``verdicts``, ``residuals``, ``payload`` and optional
``certificate`` keys.
"""

import json as _json

from . import _core

COMMANDS = (
    "polar",
    "pinv",
    "btransform",
    "inv-btransform",
    "verify-thm31",
    "check-complemented",
    "closed-range",
    "classify",
    "graded-report",
    "selftest",
)


def analyze(command, problem=None, *, tol=1e-8, rank_tol=1e-10, seed=42, components=None):
    """Run one analysis command; ``problem`` is a dict (or None for selftest)."""
    problem_json = _json.dumps(problem) if problem is not None else None
    report = _json.loads(
        _core.analyze(command, problem_json, tol, rank_tol, seed, components)
    )
    if report.get("error") in ("ParseError", "SchemaError", "UnsupportedCommandForBackend"):
        raise ValueError(f"{report['error']}: {report.get('error_detail', '')}")
    return report


def selftest(seed=42, trials=40, tol=1e-8):
    """Randomized invariant suites; returns (passed, failed)."""
    return _core.selftest(seed, trials, tol)


def polar(problem, **kw):
    return analyze("polar", problem, **kw)


def pinv(problem, **kw):
    return analyze("pinv", problem, **kw)


def verify_thm31(problem, **kw):
    return analyze("verify-thm31", problem, **kw)


def btransform(problem, **kw):
    return analyze("btransform", problem, **kw)


def check_complemented(problem, **kw):
    return analyze("check-complemented", problem, **kw)


def closed_range(problem, **kw):
    return analyze("closed-range", problem, **kw)
