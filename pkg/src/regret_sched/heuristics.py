"""Inexact solvers for instances beyond exhaustive reach.

Both certify their output a posteriori through the exact regret evaluator,
so the returned report is always trustworthy even though the schedule may
be suboptimal.
"""

from __future__ import annotations

from . import regret
from .model import (
    Instance,
    RegretReport,
    Schedule,
    validate_instance,
    validate_schedule,
)


def midpoint_heuristic(inst: Instance) -> tuple[Schedule, RegretReport]:
    """SPT on the midpoint scenario.

    Sorting by lo + hi (doubled midpoints) keeps everything integral; the
    order is all SPT needs. The midpoint-scenario optimum is a classic
    factor-2 approximation for the minmax regret objective.
    """
    validate_instance(inst)
    key = [(iv.lo + iv.hi) for iv in inst.jobs]
    order = sorted(range(inst.n), key=lambda i: (key[i], i))
    rows: list[list[int]] = [[] for _ in range(inst.machines)]
    loads = [0] * inst.machines
    for job in order:
        j = loads.index(min(loads))
        rows[j].append(job)
        loads[j] += key[job]
    sched = Schedule(tuple(tuple(row) for row in rows))
    return sched, regret.max_regret(inst, sched)


def _moves(s: Schedule):
    """Candidate neighbors in fixed order: single-job relocations first,
    then pairwise position swaps, ascending indices throughout."""
    rows = [list(row) for row in s.machines]
    pos = {}
    for j, row in enumerate(rows):
        for idx, job in enumerate(row):
            pos[job] = (j, idx)
    n = sum(len(row) for row in rows)
    for job in range(n):
        j_from, idx_from = pos[job]
        for j_to in range(len(rows)):
            limit = len(rows[j_to]) if j_to != j_from else len(rows[j_to]) - 1
            for idx_to in range(limit + 1):
                if j_to == j_from and idx_to == idx_from:
                    continue
                new_rows = [list(row) for row in rows]
                new_rows[j_from].pop(idx_from)
                new_rows[j_to].insert(idx_to, job)
                yield Schedule(tuple(tuple(row) for row in new_rows))
    for a in range(n):
        for b in range(a + 1, n):
            (ja, ia), (jb, ib) = pos[a], pos[b]
            new_rows = [list(row) for row in rows]
            new_rows[ja][ia], new_rows[jb][ib] = b, a
            yield Schedule(tuple(tuple(row) for row in new_rows))


def local_search(
    inst: Instance, start: Schedule, seed: int = 0
) -> tuple[Schedule, RegretReport]:
    """Descend from `start` taking the first strictly improving move each
    round; stops at a local minimum.

    The neighborhood order is fixed, so the result is deterministic; the
    seed is accepted for interface stability but does not influence the
    descent.
    """
    del seed
    validate_instance(inst)
    validate_schedule(start, inst.n)
    current = start
    report = regret.max_regret(inst, current)
    improved = True
    while improved:
        improved = False
        for candidate in _moves(current):
            cand_report = regret.max_regret(inst, candidate)
            if cand_report.max_regret < report.max_regret:
                current, report = candidate, cand_report
                improved = True
                break
    return current, report
