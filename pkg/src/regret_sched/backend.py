"""Backend selection for the hot kernels.

The compiled extension (_core, Cython) is preferred when it imported
successfully and all values are comfortably inside int64 range; otherwise
the pure-Python twin (_purepy) runs with exact big integers. The
environment variable REGRET_SCHED_BACKEND=compiled|purepy forces a choice.
"""

from __future__ import annotations

import os
from array import array

from . import _purepy

try:
    from . import _core
except ImportError:  # extension not built
    _core = None

# Conservative: the largest intermediate is bounded by n * max_mult * max_hi
# plus slack inside the assignment duals.
_INT64_GUARD = 1 << 59


def available_backends() -> list[str]:
    names = ["purepy"]
    if _core is not None:
        names.insert(0, "compiled")
    return names


def default_backend() -> str:
    forced = os.environ.get("REGRET_SCHED_BACKEND")
    if forced:
        if forced not in ("compiled", "purepy"):
            raise ValueError(f"unknown backend {forced!r}")
        if forced == "compiled" and _core is None:
            raise RuntimeError("compiled backend requested but not built")
        return forced
    return "compiled" if _core is not None else "purepy"


def _fits_int64(hi, n: int) -> bool:
    top = max(hi, default=0)
    return n * n * max(top, 1) < _INT64_GUARD


def _q(seq) -> array:
    return array("q", seq)


def min_assignment(lo, width, mult, m):
    """(A*, positions): min-cost job-to-slot assignment, 1-based positions."""
    n = len(lo)
    hi = [a + b for a, b in zip(lo, width)]
    if default_backend() == "compiled" and _fits_int64(hi, n):
        return _core.min_assignment(_q(lo), _q(width), _q(mult), m)
    return _purepy.min_assignment(lo, width, mult, m)


def profile_regrets(lo, width, hi, m, profiles):
    """Max-regret value for each multiplier profile in `profiles`."""
    n = len(lo)
    profiles = list(profiles)
    if default_backend() == "compiled" and _fits_int64(hi, n):
        flat = array("q", bytes(8 * n * len(profiles)))
        pos = 0
        for prof in profiles:
            flat[pos : pos + n] = _q(prof)
            pos += n
        out = array("q", bytes(8 * len(profiles)))
        _core.profile_regrets(_q(lo), _q(width), _q(hi), m, flat, out)
        return list(out)
    return _purepy.profile_regrets(lo, width, hi, m, profiles)


def oracle_best(lo, hi, m, mult):
    """(best regret, scenario) over all extreme scenarios."""
    n = len(lo)
    if default_backend() == "compiled" and _fits_int64(hi, n):
        return _core.oracle_best(_q(lo), _q(hi), m, _q(mult))
    return _purepy.oracle_best(lo, hi, m, mult)
