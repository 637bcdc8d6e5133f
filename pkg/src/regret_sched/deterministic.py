"""Deterministic P||sum Ci: shortest-processing-time-first solver."""

from __future__ import annotations

from .model import Scenario, Schedule, ValidationError


def spt_schedule(sc: Scenario, m: int) -> Schedule:
    """Optimal schedule for fixed durations by the SPT rule.

    Jobs are sorted by nondecreasing duration (ties by ascending job index)
    and each is appended to a machine with minimum current load (ties by
    lowest machine index).
    """
    if m < 1:
        raise ValidationError(f"machine count must be >= 1, got {m}")
    for i, p in enumerate(sc.durations):
        if p < 0:
            raise ValidationError(f"job {i}: negative duration {p}")
    order = sorted(range(len(sc.durations)), key=lambda i: (sc.durations[i], i))
    rows: list[list[int]] = [[] for _ in range(m)]
    loads = [0] * m
    for job in order:
        j = loads.index(min(loads))
        rows[j].append(job)
        loads[j] += sc.durations[job]
    return Schedule(tuple(tuple(row) for row in rows))


def optimal_flow_time(sc: Scenario, m: int) -> int:
    """Minimum total completion time over all schedules.

    Computed without materializing a schedule: sorting durations in
    nonincreasing order, the r-th largest (1-based) ends up with multiplier
    ceil(r/m) in an SPT schedule.
    """
    if m < 1:
        raise ValidationError(f"machine count must be >= 1, got {m}")
    desc = sorted(sc.durations, reverse=True)
    total = 0
    for r, p in enumerate(desc):
        if p < 0:
            raise ValidationError(f"negative duration {p}")
        total += (r // m + 1) * p
    return total
