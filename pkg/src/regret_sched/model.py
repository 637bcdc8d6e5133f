"""Core domain types: instances, scenarios, schedules, and flow time.

All quantities are exact integers. Job indices are 0-based everywhere.
Schedules store per-machine job sequences in processing order (first-to-run
first); the "position counted from the last" multiplier used by the flow-time
objective is derived, never stored.
"""

from __future__ import annotations

import json
from dataclasses import dataclass


class ValidationError(ValueError):
    """An input violated a model invariant."""


@dataclass(frozen=True)
class JobInterval:
    """Closed integer interval [lo, hi] of possible processing times."""

    lo: int
    hi: int

    @property
    def width(self) -> int:
        return self.hi - self.lo


@dataclass(frozen=True)
class Instance:
    """m identical machines and n jobs with uncertain processing times."""

    machines: int
    jobs: tuple[JobInterval, ...]

    @property
    def n(self) -> int:
        return len(self.jobs)

    def jobs_per_machine(self) -> int | None:
        """n/m when the job count divides evenly, else None."""
        if self.n % self.machines == 0:
            return self.n // self.machines
        return None


@dataclass(frozen=True)
class Scenario:
    """One concrete processing-time vector, indexed like Instance.jobs."""

    durations: tuple[int, ...]


@dataclass(frozen=True)
class Schedule:
    """Per-machine job sequences; together they partition {0..n-1}."""

    machines: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return sum(len(row) for row in self.machines)

    @property
    def m(self) -> int:
        return len(self.machines)


@dataclass(frozen=True)
class RegretReport:
    """Maximum regret of a schedule with its certificate.

    worst_scenario attains the maximum; worst_alternative is an optimal
    schedule under that scenario, so
    max_regret = flow_time(evaluated, worst_scenario)
               - flow_time(worst_alternative, worst_scenario).
    """

    max_regret: int
    worst_scenario: Scenario
    worst_alternative: Schedule


def validate_instance(inst: Instance) -> Instance:
    """Return inst unchanged, or raise ValidationError on the first violation."""
    if inst.machines < 1:
        raise ValidationError(f"machine count must be >= 1, got {inst.machines}")
    if inst.n < 1:
        raise ValidationError("instance must contain at least one job")
    for i, job in enumerate(inst.jobs):
        if not isinstance(job.lo, int) or not isinstance(job.hi, int):
            raise ValidationError(f"job {i}: bounds must be integers")
        if job.lo < 0:
            raise ValidationError(f"job {i}: lower bound {job.lo} is negative")
        if job.lo > job.hi:
            raise ValidationError(f"job {i}: lo {job.lo} > hi {job.hi}")
    return inst


def validate_scenario(inst: Instance, sc: Scenario) -> Scenario:
    if len(sc.durations) != inst.n:
        raise ValidationError(
            f"scenario has {len(sc.durations)} durations for {inst.n} jobs"
        )
    for i, (p, job) in enumerate(zip(sc.durations, inst.jobs)):
        if not job.lo <= p <= job.hi:
            raise ValidationError(
                f"job {i}: duration {p} outside [{job.lo}, {job.hi}]"
            )
    return sc


def validate_schedule(s: Schedule, n: int | None = None) -> Schedule:
    """Check that the machine rows partition {0..n-1}."""
    seen: set[int] = set()
    total = 0
    for row in s.machines:
        for job in row:
            if job in seen:
                raise ValidationError(f"job {job} appears more than once")
            seen.add(job)
            total += 1
    if n is None:
        n = total
    if s.m < 1:
        raise ValidationError("schedule must have at least one machine")
    if seen != set(range(n)):
        raise ValidationError(f"schedule does not cover jobs 0..{n - 1} exactly")
    return s


def multipliers(s: Schedule) -> dict[int, int]:
    """Map each job to its flow-time multiplier.

    A job at 0-based position idx on a machine holding L jobs contributes
    (L - idx) times its duration: it delays itself and everything after it.
    """
    mult: dict[int, int] = {}
    for row in s.machines:
        length = len(row)
        for idx, job in enumerate(row):
            mult[job] = length - idx
    return mult


def flow_time(s: Schedule, sc: Scenario) -> int:
    """Total completion time of schedule s under scenario sc."""
    total = 0
    durations = sc.durations
    for row in s.machines:
        length = len(row)
        for idx, job in enumerate(row):
            total += (length - idx) * durations[job]
    return total


def load_vector(s: Schedule) -> tuple[int, ...]:
    """Machine loads (job counts), sorted nonincreasing."""
    return tuple(sorted((len(row) for row in s.machines), reverse=True))


def is_balanced(s: Schedule) -> bool:
    loads = load_vector(s)
    return loads[0] == loads[-1]


# --- JSON serialization ---------------------------------------------------
#
# Field names are part of the file format contract; unknown fields are
# rejected rather than ignored.


def _require_keys(d: dict, expected: set[str], what: str) -> None:
    if not isinstance(d, dict):
        raise ValidationError(f"{what}: expected a JSON object")
    if set(d) != expected:
        raise ValidationError(
            f"{what}: expected fields {sorted(expected)}, got {sorted(d)}"
        )


def instance_to_dict(inst: Instance) -> dict:
    return {
        "machines": inst.machines,
        "jobs": [{"lo": j.lo, "hi": j.hi} for j in inst.jobs],
    }


def instance_from_dict(d: dict) -> Instance:
    _require_keys(d, {"machines", "jobs"}, "instance")
    jobs = []
    for entry in d["jobs"]:
        _require_keys(entry, {"lo", "hi"}, "job interval")
        jobs.append(JobInterval(entry["lo"], entry["hi"]))
    return validate_instance(Instance(d["machines"], tuple(jobs)))


def scenario_to_dict(sc: Scenario) -> dict:
    return {"durations": list(sc.durations)}


def scenario_from_dict(d: dict) -> Scenario:
    _require_keys(d, {"durations"}, "scenario")
    return Scenario(tuple(d["durations"]))


def schedule_to_dict(s: Schedule) -> dict:
    return {"machines": [list(row) for row in s.machines]}


def schedule_from_dict(d: dict) -> Schedule:
    _require_keys(d, {"machines"}, "schedule")
    return validate_schedule(Schedule(tuple(tuple(row) for row in d["machines"])))


def _load_json(path) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _dump_json(d: dict, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(d, fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_instance(path) -> Instance:
    return instance_from_dict(_load_json(path))


def save_instance(inst: Instance, path) -> None:
    _dump_json(instance_to_dict(inst), path)


def load_scenario(path) -> Scenario:
    return scenario_from_dict(_load_json(path))


def save_scenario(sc: Scenario, path) -> None:
    _dump_json(scenario_to_dict(sc), path)


def load_schedule(path) -> Schedule:
    return schedule_from_dict(_load_json(path))


def save_schedule(s: Schedule, path) -> None:
    _dump_json(schedule_to_dict(s), path)
