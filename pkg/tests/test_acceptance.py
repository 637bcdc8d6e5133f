"""Acceptance gate: one test and one printed PASS/FAIL line per criterion.

Every comparison is exact integer equality. Verdict lines are printed to
the captured stdout (visible in failure reports) and collected for the
end-of-run summary that conftest emits outside capture.
"""

from itertools import combinations

import _acceptance_log

from regret_sched.exact import solve_exact
from regret_sched.generate import SplitMix64
from regret_sched.single_machine import (
    balanced_partition,
    optimal_single_machine,
    to_instance,
)
from regret_sched.verification import (
    _random_equal_midpoint,
    suite_alignment,
    suite_balance,
    suite_column_swap,
    suite_heuristics,
    suite_oracle,
    suite_partition_chain,
    suite_spt,
    suite_threshold,
)


def verdict(num: int, name: str, ok: bool) -> None:
    line = f"criterion {num:2d} ({name}): {'PASS' if ok else 'FAIL'}"
    print(line)
    _acceptance_log.lines.append(line)


def test_criterion_01_regret_oracle_equivalence():
    result = suite_oracle(trials=500, seed=1)
    verdict(1, "assignment regret equals scenario-scan oracle, 500 trials", result.passed)
    assert result.passed, result.failures[:3]


def test_criterion_02_spt_optimality():
    result = suite_spt(trials=500, seed=2)
    verdict(2, "SPT equals brute-force minimum flow time, 500 trials", result.passed)
    assert result.passed, result.failures[:3]


def test_criterion_03_equal_midpoint_even_case():
    rng = SplitMix64(31)
    failures = []
    for t in range(200):
        n = (2, 4, 6)[t % 3]
        emi = _random_equal_midpoint(rng, n)
        target = (n // 2) * sum(emi.half_widths)
        z_star = solve_exact(to_instance(emi)).report.max_regret
        try:
            _, achieved = optimal_single_machine(emi)
        except RuntimeError as err:
            failures.append((emi, str(err)))
            continue
        if not z_star == achieved == target:
            failures.append((emi, z_star, achieved, target))
    verdict(3, "even-size equal-midpoint closed form, 200 trials", not failures)
    assert not failures, failures[:3]


def test_criterion_04_equal_midpoint_odd_case():
    rng = SplitMix64(32)
    failures = []
    for t in range(200):
        n = (3, 5, 7)[t % 3]
        emi = _random_equal_midpoint(rng, n)
        widths = sorted(emi.half_widths)
        small = widths[:-1]
        part = balanced_partition(small)
        target = (n // 2) * sum(widths) + part.max_sum
        z_star = solve_exact(to_instance(emi)).report.max_regret
        best_gap = min(
            abs(2 * sum(comb) - sum(small))
            for comb in combinations(small, len(small) // 2)
        )
        try:
            _, achieved = optimal_single_machine(emi)
        except RuntimeError as err:
            failures.append((emi, str(err)))
            continue
        if not (z_star == achieved == target and part.gap == best_gap):
            failures.append((emi, z_star, achieved, target, part.gap, best_gap))
    verdict(4, "odd-size closed form with balanced partition, 200 trials", not failures)
    assert not failures, failures[:3]


def test_criterion_05_optima_are_balanced():
    result = suite_balance(trials=100, seed=4)
    verdict(5, "every exact optimum is a balanced schedule, 100 trials", result.passed)
    assert result.passed, result.failures[:3]


def test_criterion_06_column_swaps_preserve_regret():
    result = suite_column_swap(trials=1000, seed=5)
    verdict(6, "column swaps preserve max regret, 1000 trials", result.passed)
    assert result.passed, result.failures[:3]


def test_criterion_07_canonical_alignment():
    result = suite_alignment(trials=200, seed=6)
    verdict(
        7,
        "canonical alignment: 4x4 grid pair plus 200 random pairs",
        result.passed,
    )
    assert result.passed, result.failures[:3]


def test_criterion_08_partition_reduction_chain():
    result = suite_partition_chain(trials=50, seed=7, max_b=20)
    verdict(
        8,
        "3-partition and pair-partition deciders agree through the generator",
        result.passed,
    )
    assert result.passed, result.failures[:3]


def test_criterion_09_threshold_reduction():
    result = suite_threshold()
    verdict(
        9,
        "scheduling-reduction threshold matches the exact optimum on builtins",
        result.passed,
    )
    assert result.passed, result.failures[:3]


def test_criterion_10_heuristic_sanity():
    result = suite_heuristics(trials=500, seed=1)
    verdict(
        10,
        "midpoint heuristic within factor 2; local search never regresses",
        result.passed,
    )
    assert result.passed, result.failures[:3]
