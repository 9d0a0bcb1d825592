"""MIMO capacity, antenna subset selection and bound verification.

Channel matrices are complex numpy arrays of shape (n_r, n_t). Antenna
indices are 1-based throughout, matching the CLI and the JSON reports.
"""

import json

from ._core import *  # noqa: F401,F403
from ._core import Method, _identity_json, _tight_json, _verify_json

__all__ = [name for name in dir() if not name.startswith("_")] + [
    "verify",
    "identity",
    "tight",
]


def verify(theorem, trials, max_n=6, powers=(0.01, 1.0, 100.0), seed=0,
           method="exhaustive"):
    """Monte-Carlo bound check; returns the report document as a dict."""
    m = Method.GREEDY if method == "greedy" else Method.EXHAUSTIVE
    return json.loads(_verify_json(theorem, trials, max_n, list(powers), seed, m))


def identity(n, k="all", trials=200, seed=0, tol=1e-8):
    k_value = 0 if k == "all" else int(k)
    return json.loads(_identity_json(n, k_value, trials, seed, tol))


def tight(case, n_t, n_r, k_t, k_r, power):
    return json.loads(_tight_json(case, n_t, n_r, k_t, k_r, power))
