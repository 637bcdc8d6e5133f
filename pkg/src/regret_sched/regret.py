"""Maximum regret of a fixed schedule.

The polynomial route reduces the inner maximization to a minimum-cost
assignment of jobs to position slots; machines being identical, the slot
cost depends only on the position k, never on the machine:

    cost(i, k) = k*lo[i] + (hi[i] - lo[i]) * min(mult[i], k)

where mult[i] is job i's multiplier in the evaluated schedule. The maximum
regret is sum_i mult[i]*hi[i] minus the optimal assignment cost, the
worst-case alternative is decoded from the optimal assignment, and the
worst-case scenario pushes each job to the endpoint favoring the evaluated
schedule.

An exponential oracle (all extreme scenarios) backs this up for testing.
"""

from __future__ import annotations

from . import backend
from .deterministic import spt_schedule
from .model import (
    Instance,
    RegretReport,
    Scenario,
    Schedule,
    ValidationError,
    multipliers,
    validate_instance,
    validate_schedule,
)

DEFAULT_ORACLE_CAP = 16


def slot_cost(inst: Instance, mult: dict[int, int], job: int, k: int) -> int:
    """Cost of placing `job` at position k (counted from last) in an
    alternative schedule, given the evaluated schedule's multipliers."""
    iv = inst.jobs[job]
    return k * iv.lo + iv.width * min(mult[job], k)


def _check_nonnegative(inst: Instance) -> None:
    for i, iv in enumerate(inst.jobs):
        if iv.lo < 0:
            raise ValidationError(
                f"job {i}: negative lower bound {iv.lo}; shift the instance "
                "to nonnegative bounds first (single-machine normalization)"
            )


def _mult_list(inst: Instance, s: Schedule) -> list[int]:
    mult = multipliers(s)
    return [mult[i] for i in range(inst.n)]


def decode_alternative(ks: list[int], m: int) -> Schedule:
    """Materialize a schedule from assigned positions.

    Jobs are ranked by (position, index) and dealt across machines so that
    per-machine positions are contiguous 1..L; the renumbered position of
    the rank-r job (0-based) is r//m + 1 <= ks, so with costs nondecreasing
    in k the dealt schedule is still an optimal assignment.
    """
    order = sorted(range(len(ks)), key=lambda i: (ks[i], i))
    rows: list[list[int]] = [[] for _ in range(m)]
    for r, job in enumerate(order):
        rows[r % m].append(job)  # appended in increasing multiplier
    return Schedule(tuple(tuple(reversed(row)) for row in rows))


def max_regret(inst: Instance, s: Schedule) -> RegretReport:
    """Maximum regret of schedule s with a certifying scenario/alternative."""
    validate_instance(inst)
    validate_schedule(s, inst.n)
    _check_nonnegative(inst)
    mult = _mult_list(inst, s)
    lo = [iv.lo for iv in inst.jobs]
    width = [iv.width for iv in inst.jobs]
    hi = [iv.hi for iv in inst.jobs]
    a_star, ks = backend.min_assignment(lo, width, mult, inst.machines)
    z = sum(mu * h for mu, h in zip(mult, hi)) - a_star
    alt = decode_alternative(ks, inst.machines)
    scenario = worst_case_scenario(inst, s, alt)
    return RegretReport(z, scenario, alt)


def worst_case_scenario(inst: Instance, s: Schedule, alt: Schedule) -> Scenario:
    """Scenario maximizing F(s, S) - F(alt, S): each job at its upper bound
    when its multiplier in s is at least its multiplier in alt, else lower."""
    mult_s = multipliers(s)
    mult_alt = multipliers(alt)
    durations = []
    for i, iv in enumerate(inst.jobs):
        durations.append(iv.hi if mult_s[i] - mult_alt[i] >= 0 else iv.lo)
    return Scenario(tuple(durations))


def regret_against(inst: Instance, s: Schedule, alt: Schedule) -> int:
    """Largest regret of s relative to the fixed alternative alt."""
    mult_s = multipliers(s)
    mult_alt = multipliers(alt)
    sc = worst_case_scenario(inst, s, alt)
    return sum(
        (mult_s[i] - mult_alt[i]) * p for i, p in enumerate(sc.durations)
    )


def oracle_max_regret(
    inst: Instance, s: Schedule, cap: int = DEFAULT_ORACLE_CAP
) -> RegretReport:
    """Brute-force maximum regret over all 2^n extreme scenarios.

    Independent of the assignment route; intended as a test oracle.
    """
    validate_instance(inst)
    validate_schedule(s, inst.n)
    _check_nonnegative(inst)
    if inst.n > cap:
        raise ValidationError(f"oracle cap exceeded: n={inst.n} > {cap}")
    mult = _mult_list(inst, s)
    lo = [iv.lo for iv in inst.jobs]
    hi = [iv.hi for iv in inst.jobs]
    best, sc = backend.oracle_best(lo, hi, inst.machines, mult)
    scenario = Scenario(tuple(sc))
    alt = spt_schedule(scenario, inst.machines)
    return RegretReport(best, scenario, alt)
