"""Exact q-binomial congruence kernel (C++ core)."""

import json as _json

from ._qcongruence import *  # noqa: F401,F403
from ._qcongruence import run_suite as _run_suite


def suite(level="quick", jobs=1):
    """Run the verification grid; returns the parsed list of report objects."""
    return _json.loads(_run_suite(level, jobs))
