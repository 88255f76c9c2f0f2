"""Exact q-series engine for the bounded Goellnitz identities."""

import json as _json

from ._qgollnitz import (
    Poly,
    __version__,
    boundary_value,
    check_key,
    check_theorem1,
    closed_form_diag,
    count_G,
    count_P,
    gollnitz_B,
    gollnitz_C,
    identities,
    lhs_g,
    qbinom,
    qmultinom,
    rhs_p,
    _sweep_json,
)


def sweep(identity, ranges=None, order=None, jobs=1, timing=True):
    """Run a verification sweep and return the report as a dict.

    `ranges` maps parameter names to (lo, hi) pairs or single integers.
    """
    normalized = {}
    for name, value in (ranges or {}).items():
        lo, hi = (value, value) if isinstance(value, int) else value
        normalized[name] = (int(lo), int(hi))
    return _json.loads(_sweep_json(identity, normalized, order, jobs, timing))


__all__ = [
    "Poly",
    "__version__",
    "boundary_value",
    "check_key",
    "check_theorem1",
    "closed_form_diag",
    "count_G",
    "count_P",
    "gollnitz_B",
    "gollnitz_C",
    "identities",
    "lhs_g",
    "qbinom",
    "qmultinom",
    "rhs_p",
    "sweep",
]
