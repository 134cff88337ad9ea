"""Subordinators built from the lower incomplete gamma function.

Thin wrapper over the compiled core: exact compound-Poisson samplers for the
plain / tempered / jump-floor families, the special-function kernel behind
them, fractional-operator checks, and the Monte Carlo verification suites.
"""

import json as _json

from igsub._core import *  # noqa: F401,F403
from igsub._core import __version__, run_suite_json, suite_names  # noqa: F401


def verify(name, master_seed=20260809, threads=1, tolerance_scale=1.0, paths_override=0):
    """Run a named verification suite and return the report as a dict."""
    return _json.loads(
        run_suite_json(name, master_seed, threads, tolerance_scale, paths_override)
    )
