"""Randomized verification suites.

Each suite replays a structural claim against independent brute force on
seeded random inputs and reports counterexamples verbatim. The CLI `verify`
command and the acceptance test module are both thin wrappers around these
functions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations, product

from . import regret, structure
from .deterministic import optimal_flow_time
from .exact import solve_exact
from .generate import (
    SplitMix64,
    gen_random_balanced_schedule,
    gen_random_instance,
    gen_random_schedule,
    gen_random_scenario,
)
from .heuristics import local_search, midpoint_heuristic
from .model import (
    Instance,
    JobInterval,
    Scenario,
    Schedule,
    instance_to_dict,
    is_balanced,
    multipliers,
    schedule_to_dict,
)
from .reductions import (
    FourPPInstance,
    PartitionInstance,
    decide_3partition,
    decide_4pp,
    gen_4pp_from_3partition,
    verify_threshold,
)
from .single_machine import (
    EqualMidpointInstance,
    balanced_partition,
    optimal_single_machine,
    optimal_value,
    to_instance,
)


@dataclass
class SuiteResult:
    name: str
    trials: int
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "suite": self.name,
            "trials": self.trials,
            "passed": self.passed,
            "failures": self.failures,
        }


def _shift_lo(inst: Instance, delta: int) -> Instance:
    return Instance(
        inst.machines,
        tuple(JobInterval(iv.lo + delta, iv.hi + delta) for iv in inst.jobs),
    )


def _random_small(rng: SplitMix64) -> tuple[Instance, Schedule]:
    n = rng.between(1, 7)
    m = rng.between(1, 3)
    inst = gen_random_instance(rng.next_u64(), n, m, max_width=20, max_lo=20)
    sched = gen_random_schedule(rng, n, m)
    return inst, sched


def suite_oracle(trials: int = 500, seed: int = 1) -> SuiteResult:
    """max_regret (assignment route) == oracle_max_regret (2^n scan)."""
    result = SuiteResult("oracle", trials)
    rng = SplitMix64(seed)
    for _ in range(trials):
        inst, sched = _random_small(rng)
        fast = regret.max_regret(inst, sched)
        slow = regret.oracle_max_regret(inst, sched)
        if fast.max_regret != slow.max_regret:
            result.failures.append(
                {
                    "instance": instance_to_dict(inst),
                    "schedule": schedule_to_dict(sched),
                    "assignment_value": fast.max_regret,
                    "oracle_value": slow.max_regret,
                }
            )
    return result


@lru_cache(maxsize=None)
def _min_machine_flow(durations: tuple[int, ...]) -> int:
    """Minimum flow time of one machine over every processing order."""
    if not durations:
        return 0
    best = None
    length = len(durations)
    for order in permutations(durations):
        value = sum((length - idx) * p for idx, p in enumerate(order))
        if best is None or value < best:
            best = value
    return best


def brute_force_min_flow(sc: Scenario, m: int) -> int:
    """Minimum flow time over all schedules: every job-to-machine
    assignment, every per-machine order (orders decouple across machines)."""
    best = None
    durations = sc.durations
    for assign in product(range(m), repeat=len(durations)):
        value = 0
        for j in range(m):
            on_j = tuple(sorted(p for p, a in zip(durations, assign) if a == j))
            value += _min_machine_flow(on_j)
        if best is None or value < best:
            best = value
    return best


def suite_spt(trials: int = 500, seed: int = 2) -> SuiteResult:
    """SPT value == brute-force minimum over all schedules."""
    result = SuiteResult("spt", trials)
    rng = SplitMix64(seed)
    for _ in range(trials):
        n = rng.between(1, 7)
        m = rng.between(1, 3)
        sc = Scenario(tuple(rng.between(0, 20) for _ in range(n)))
        fast = optimal_flow_time(sc, m)
        slow = brute_force_min_flow(sc, m)
        if fast != slow:
            result.failures.append(
                {"scenario": list(sc.durations), "m": m, "spt": fast, "brute": slow}
            )
    return result


def _random_equal_midpoint(rng: SplitMix64, n: int) -> EqualMidpointInstance:
    widths = tuple(rng.between(0, 10) for _ in range(n))
    c = max(widths) + rng.between(0, 5)  # keeps all lower bounds >= 0
    return EqualMidpointInstance(c, widths)


def suite_single_machine(trials: int = 400, seed: int = 3) -> SuiteResult:
    """Closed-form single-machine optimum == exhaustive search; the emitted
    uniform schedule achieves it; balanced partition matches enumeration."""
    result = SuiteResult("single-machine", trials)
    rng = SplitMix64(seed)
    for t in range(trials):
        n = (2, 3, 4, 5, 6, 7)[t % 6]
        emi = _random_equal_midpoint(rng, n)
        inst = to_instance(emi)
        value = optimal_value(emi)
        exact_value = solve_exact(inst).report.max_regret
        entry = {
            "instance": instance_to_dict(inst),
            "closed_form": value,
            "exact": exact_value,
        }
        if exact_value != value:
            result.failures.append(entry)
            continue
        try:
            _, achieved = optimal_single_machine(emi)
        except RuntimeError as err:
            entry["uniform_error"] = str(err)
            result.failures.append(entry)
            continue
        if n % 2 == 1:
            small = sorted(emi.half_widths)[:-1]
            part = balanced_partition(small)
            best_gap = min(
                abs(2 * sum(comb) - sum(small))
                for comb in combinations(small, len(small) // 2)
            )
            if part.gap != best_gap:
                entry["partition_gap"] = part.gap
                entry["enumerated_gap"] = best_gap
                result.failures.append(entry)
    return result


def all_schedules(n: int, m: int):
    """Every schedule: each job-to-machine assignment with every
    per-machine processing order."""
    for assign in product(range(m), repeat=n):
        buckets = [[job for job in range(n) if assign[job] == j] for j in range(m)]
        for orders in product(*(permutations(b) for b in buckets)):
            yield Schedule(tuple(orders))


def suite_balance(trials: int = 100, seed: int = 4) -> SuiteResult:
    """Every schedule attaining the exact optimum is balanced (m | n).

    Instances have strictly positive lower bounds; a job that can take
    duration zero contributes nothing through its multiplier and can make
    an unbalanced schedule tie the optimum.
    """
    result = SuiteResult("balance", trials)
    rng = SplitMix64(seed)
    for t in range(trials):
        n = (4, 6)[t % 2]
        inst = _shift_lo(
            gen_random_instance(rng.next_u64(), n, 2, max_width=20, max_lo=19), 1
        )
        cache: dict[tuple[int, ...], int] = {}

        def z_of(s: Schedule) -> int:
            mult = multipliers(s)
            key = tuple(mult[i] for i in range(n))
            if key not in cache:
                cache[key] = regret.max_regret(inst, s).max_regret
            return cache[key]

        best = None
        offenders = []
        for s in all_schedules(n, 2):
            z = z_of(s)
            if best is None or z < best:
                best = z
                offenders = []
            if z == best and not is_balanced(s):
                offenders.append(s)
        # offenders collected before a later, better value are stale
        offenders = [s for s in offenders if z_of(s) == best]
        if offenders:
            result.failures.append(
                {
                    "instance": instance_to_dict(inst),
                    "optimum": best,
                    "unbalanced_optimal": schedule_to_dict(offenders[0]),
                }
            )
    return result


def suite_column_swap(trials: int = 1000, seed: int = 5) -> SuiteResult:
    """Column swaps in balanced schedules preserve the maximum regret."""
    result = SuiteResult("column-swap", trials)
    rng = SplitMix64(seed)
    for _ in range(trials):
        m = rng.between(1, 3)
        n0 = rng.between(1, max(1, 6 // m))
        n = m * n0
        inst = gen_random_instance(rng.next_u64(), n, m, max_width=20, max_lo=20)
        sched = gen_random_balanced_schedule(rng, n, m)
        col = rng.below(n0)
        j1 = rng.below(m)
        j2 = rng.below(m)
        swapped = structure.column_swap(sched, col, j1, j2)
        z1 = regret.max_regret(inst, sched).max_regret
        z2 = regret.max_regret(inst, swapped).max_regret
        if z1 != z2:
            result.failures.append(
                {
                    "instance": instance_to_dict(inst),
                    "schedule": schedule_to_dict(sched),
                    "swap": [col, j1, j2],
                    "before": z1,
                    "after": z2,
                }
            )
    return result


def grid_pair() -> tuple[Schedule, Schedule]:
    """The 4x4 worked example: pi column-major, sigma row-major, 0-based."""
    pi = Schedule(tuple(tuple(r + 4 * c for c in range(4)) for r in range(4)))
    sigma = Schedule(tuple(tuple(4 * r + c for c in range(4)) for r in range(4)))
    return pi, sigma


def _column_multisets(s: Schedule) -> list[tuple[int, ...]]:
    n0 = len(s.machines[0])
    return [
        tuple(sorted(row[x] for row in s.machines)) for x in range(n0)
    ]


def _check_aligned(pi, sigma, pi2, sigma2, inst=None) -> list[str]:
    problems = []
    if _column_multisets(pi) != _column_multisets(pi2):
        problems.append("pi column multisets changed")
    if _column_multisets(sigma) != _column_multisets(sigma2):
        problems.append("sigma column multisets changed")
    for j in range(pi2.m):
        if sorted(pi2.machines[j]) != sorted(sigma2.machines[j]):
            problems.append(f"machine {j} job sets differ between pi' and sigma'")
    if inst is not None:
        z = regret.max_regret(inst, pi).max_regret
        z2 = regret.max_regret(inst, pi2).max_regret
        if z != z2:
            problems.append(f"regret changed: {z} -> {z2}")
    return problems


def suite_alignment(trials: int = 200, seed: int = 6) -> SuiteResult:
    """Canonicalization only permutes within columns and aligns machines."""
    result = SuiteResult("alignment", trials + 1)
    pi, sigma = grid_pair()
    grid_inst = gen_random_instance(0, 16, 4, max_width=20, max_lo=20)
    problems = _check_aligned(pi, sigma, *structure.canonicalize(pi, sigma), grid_inst)
    if problems:
        result.failures.append({"case": "grid4x4", "problems": problems})
    rng = SplitMix64(seed)
    for _ in range(trials):
        m = rng.between(1, 4)
        n0 = rng.between(1, 4)
        n = m * n0
        inst = gen_random_instance(rng.next_u64(), n, m, max_width=20, max_lo=20)
        pi = gen_random_balanced_schedule(rng, n, m)
        sigma = gen_random_balanced_schedule(rng, n, m)
        problems = _check_aligned(pi, sigma, *structure.canonicalize(pi, sigma), inst)
        if problems:
            result.failures.append(
                {
                    "instance": instance_to_dict(inst),
                    "pi": schedule_to_dict(pi),
                    "sigma": schedule_to_dict(sigma),
                    "problems": problems,
                }
            )
    return result


def enumerate_3partition_instances(m: int, max_b: int):
    """All valid 3-PARTITION instances with the given m and B <= max_b,
    values as nondecreasing multisets."""
    for b in range(2, max_b + 1):
        low = b // 4 + 1
        high = (b - 1) // 2 if b % 2 == 0 else b // 2
        candidates = range(low, high + 1)
        for values in combinations_with_replacement_sorted(candidates, 3 * m, m * b):
            try:
                yield PartitionInstance(m, b, values).validate()
            except Exception:
                continue


def combinations_with_replacement_sorted(candidates, count, target):
    """Nondecreasing tuples of `count` values from candidates summing to
    target."""
    candidates = list(candidates)

    def rec(start, remaining, acc, acc_sum):
        if remaining == 0:
            if acc_sum == target:
                yield tuple(acc)
            return
        for idx in range(start, len(candidates)):
            v = candidates[idx]
            if acc_sum + v * remaining > target:
                break
            yield from rec(idx, remaining - 1, acc + [v], acc_sum + v)

    yield from rec(0, count, [], 0)


def random_3partition_instance(rng: SplitMix64, m: int, max_value: int) -> PartitionInstance:
    """Rejection-sample a valid instance with values <= max_value."""
    while True:
        b = rng.between(8, min(2 * max_value - 2, 40))
        low = b // 4 + 1
        high = min((b - 1) // 2 if b % 2 == 0 else b // 2, max_value)
        if high < low:
            continue
        values = tuple(sorted(rng.between(low, high) for _ in range(3 * m)))
        if sum(values) == m * b:
            return PartitionInstance(m, b, values).validate()


def suite_partition_chain(trials: int = 50, seed: int = 7, max_b: int = 20) -> SuiteResult:
    """decide_3partition(x) == decide_4pp(gen_4pp_from_3partition(x))."""
    result = SuiteResult("partition-chain", 0)

    def check(inst: PartitionInstance):
        result.trials += 1
        three = decide_3partition(inst)
        four = decide_4pp(gen_4pp_from_3partition(inst))
        if (three is not None) != (four is not None):
            result.failures.append(
                {
                    "m": inst.m,
                    "B": inst.B,
                    "values": list(inst.values),
                    "three_partition": three is not None,
                    "four_pp": four is not None,
                }
            )

    check(PartitionInstance(1, 10, (3, 3, 4)))
    check(PartitionInstance(2, 16, (5, 5, 5, 5, 5, 7)))
    for inst in enumerate_3partition_instances(1, max_b):
        check(inst)
    rng = SplitMix64(seed)
    for _ in range(trials):
        check(random_3partition_instance(rng, 2, 20))
    return result


THRESHOLD_BUILTINS = (
    (1, 1, 1, 1, 2, 2, 2, 2),
    (2, 2, 2, 2, 2, 2, 2, 2),
    (1, 1, 1, 1, 1, 1, 1, 3),
)


def suite_threshold(trials: int = 0, seed: int = 0) -> SuiteResult:
    """Reduction threshold equivalence on the built-in m' = 2 instances."""
    del trials, seed  # fixed casework
    result = SuiteResult("threshold", len(THRESHOLD_BUILTINS))
    for values in THRESHOLD_BUILTINS:
        report = verify_threshold(FourPPInstance(values))
        if not report.passed:
            result.failures.append(
                {
                    "values": list(values),
                    "four_pp_yes": report.four_pp_yes,
                    "z_star": report.z_star,
                    "threshold": report.reduction.threshold,
                    "threshold_floor": report.reduction.threshold_floor,
                }
            )
    return result


def suite_heuristics(trials: int = 500, seed: int = 1) -> SuiteResult:
    """Midpoint heuristic within factor 2 of the optimum; local search
    never worse than its start. Replays the oracle suite's instances."""
    result = SuiteResult("heuristics", trials)
    rng = SplitMix64(seed)
    for _ in range(trials):
        inst, _ = _random_small(rng)
        sched, report = midpoint_heuristic(inst)
        z_star = solve_exact(inst).report.max_regret
        entry = {
            "instance": instance_to_dict(inst),
            "midpoint_regret": report.max_regret,
            "optimum": z_star,
        }
        if report.max_regret > 2 * z_star:
            result.failures.append(entry)
            continue
        _, ls_report = local_search(inst, sched)
        if ls_report.max_regret > report.max_regret:
            entry["local_search_regret"] = ls_report.max_regret
            result.failures.append(entry)
    return result


SUITES = {
    "oracle": suite_oracle,
    "spt": suite_spt,
    "single-machine": suite_single_machine,
    "balance": suite_balance,
    "column-swap": suite_column_swap,
    "alignment": suite_alignment,
    "partition-chain": suite_partition_chain,
    "threshold": suite_threshold,
    "heuristics": suite_heuristics,
}


def run_suite(name: str, trials: int | None = None, seed: int | None = None) -> SuiteResult:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    kwargs = {}
    if trials is not None:
        kwargs["trials"] = trials
    if seed is not None:
        kwargs["seed"] = seed
    return SUITES[name](**kwargs)
