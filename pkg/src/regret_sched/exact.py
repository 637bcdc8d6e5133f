"""Exhaustive robust-optimal solver for small instances.

The search enumerates multiplier profiles, not raw schedules: the maximum
regret depends only on the job-to-multiplier map, so schedules differing
by machine relabeling or within-column permutation collapse to one node.
For each feasible load vector (nonincreasing partition of n into at most m
parts; only the balanced one when balanced_only is set) the profile
multiset is fixed, and all distinct assignments of it to jobs are scored
through the regret kernel.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import factorial

from . import backend, regret
from .model import (
    Instance,
    RegretReport,
    Schedule,
    ValidationError,
    validate_instance,
)

_BATCH = 8192


@dataclass(frozen=True)
class SearchConfig:
    balanced_only: bool = False
    node_cap: int | None = None
    time_cap: float | None = None

    def __post_init__(self):
        if self.node_cap is not None and self.node_cap < 1:
            raise ValidationError("node_cap must be positive")
        if self.time_cap is not None and self.time_cap <= 0:
            raise ValidationError("time_cap must be positive")


@dataclass(frozen=True)
class ExactResult:
    schedule: Schedule
    report: RegretReport
    optimal: bool  # False when a cap stopped the search (incumbent only)
    profiles_visited: int


def load_vectors(n: int, m: int, balanced_only: bool = False):
    """Nonincreasing machine-load vectors summing to n, padded to m parts."""
    if balanced_only:
        if n % m != 0:
            raise ValidationError("balanced_only requires m | n")
        yield (n // m,) * m
        return

    def parts(remaining: int, max_part: int, slots: int):
        if slots == 1:
            if remaining <= max_part:
                yield (remaining,)
            return
        lower = -(-remaining // slots)  # ceil: keep nonincreasing feasible
        for first in range(min(remaining, max_part), lower - 1, -1):
            for rest in parts(remaining - first, first, slots - 1):
                yield (first,) + rest

    yield from parts(n, n, m)


def profile_multiset(loads) -> list[int]:
    """Multiplier multiset for a load vector: value k appears once per
    machine with at least k jobs."""
    out = []
    for k in range(1, max(loads) + 1):
        out.extend([k] * sum(1 for load in loads if load >= k))
    return out


def multiset_permutations(items):
    """Distinct permutations of a multiset, in lexicographic order."""
    items = sorted(items)
    n = len(items)

    def rec(prefix, remaining):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        prev = None
        for idx, v in enumerate(remaining):
            if v == prev:
                continue
            prev = v
            yield from rec(prefix + [v], remaining[:idx] + remaining[idx + 1 :])

    yield from rec([], items)


def count_search_space(inst: Instance, cfg: SearchConfig | None = None) -> int:
    """Number of multiplier profiles the search will visit."""
    cfg = cfg or SearchConfig()
    validate_instance(inst)
    total = 0
    for loads in load_vectors(inst.n, inst.machines, cfg.balanced_only):
        ms = profile_multiset(loads)
        count = factorial(len(ms))
        for k in set(ms):
            count //= factorial(ms.count(k))
        total += count
    return total


def _materialize(profile, loads, m: int) -> Schedule:
    """Build a schedule realizing the multiplier profile on `loads`.

    For each multiplier k (ascending), jobs carrying k (ascending index)
    are placed on the machines with capacity >= k (ascending index); a job
    with multiplier k on a machine of load L runs at position L - k.
    """
    loads = sorted(loads, reverse=True)[:m]
    rows = [[-1] * load for load in loads if load > 0]
    by_mult: dict[int, list[int]] = {}
    for job, k in enumerate(profile):
        by_mult.setdefault(k, []).append(job)
    for k, jobs in by_mult.items():
        machines = [j for j, load in enumerate(loads) if load >= k]
        for job, j in zip(jobs, machines):
            rows[j][loads[j] - k] = job
    while len(rows) < m:
        rows.append([])
    return Schedule(tuple(tuple(row) for row in rows))


def solve_exact(inst: Instance, cfg: SearchConfig | None = None) -> ExactResult:
    """Minimize the maximum regret by exhaustive profile search.

    Ties between optimal profiles go to the lexicographically smallest
    profile. When node_cap or time_cap stops the search early, the best
    incumbent is returned with optimal=False.
    """
    cfg = cfg or SearchConfig()
    validate_instance(inst)
    regret._check_nonnegative(inst)
    lo = [iv.lo for iv in inst.jobs]
    width = [iv.width for iv in inst.jobs]
    hi = [iv.hi for iv in inst.jobs]
    m = inst.machines

    deadline = time.monotonic() + cfg.time_cap if cfg.time_cap else None
    best: tuple[int, tuple[int, ...]] | None = None
    best_loads = None
    visited = 0
    capped = False

    for loads in load_vectors(inst.n, m, cfg.balanced_only):
        gen = multiset_permutations(profile_multiset(loads))
        while not capped:
            batch = []
            for profile in gen:
                batch.append(profile)
                if len(batch) >= _BATCH:
                    break
            if not batch:
                break
            values = backend.profile_regrets(lo, width, hi, m, batch)
            for profile, z in zip(batch, values):
                visited += 1
                if best is None or (z, profile) < best:
                    best = (z, profile)
                    best_loads = loads
                if cfg.node_cap is not None and visited >= cfg.node_cap:
                    capped = True
                    break
            if deadline is not None and time.monotonic() > deadline:
                capped = True
        if capped:
            break

    assert best is not None and best_loads is not None
    schedule = _materialize(best[1], best_loads, m)
    report = regret.max_regret(inst, schedule)
    if report.max_regret != best[0]:
        raise RuntimeError(
            f"materialized schedule regret {report.max_regret} != "
            f"search value {best[0]}"
        )
    return ExactResult(schedule, report, not capped, visited)
