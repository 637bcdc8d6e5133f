"""Optimal robust solver for equal-midpoint single-machine instances.

When all intervals share a midpoint c, written [c - p_i, c + p_i], the
optimal maximum regret has a closed form: k * sum(p_i) for n = 2k jobs,
and k * sum(p_i) + max{P1, P2} for n = 2k + 1 jobs, where (P1, P2) is an
optimal balanced partition of the 2k smallest half-widths. An optimal
order is "uniform": the wider the interval, the closer to the middle.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import regret
from .model import Instance, JobInterval, Schedule, ValidationError


@dataclass(frozen=True)
class EqualMidpointInstance:
    """Single-machine instance with intervals [midpoint - p, midpoint + p]."""

    midpoint: int
    half_widths: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.half_widths)

    def interval(self, i: int) -> tuple[int, int]:
        p = self.half_widths[i]
        return self.midpoint - p, self.midpoint + p


@dataclass(frozen=True)
class BalancedPartitionResult:
    """Two disjoint k-subsets with minimal sum difference."""

    subset_a: tuple[int, ...]
    subset_b: tuple[int, ...]
    sum_a: int
    sum_b: int

    @property
    def gap(self) -> int:
        return abs(self.sum_a - self.sum_b)

    @property
    def max_sum(self) -> int:
        return max(self.sum_a, self.sum_b)


def detect_equal_midpoints(inst: Instance) -> EqualMidpointInstance:
    """Recognize a single-machine equal-midpoint instance.

    Succeeds iff lo_i + hi_i is the same even number 2c for every job.
    """
    if inst.machines != 1:
        raise ValidationError("equal-midpoint analysis requires m = 1")
    doubled = {iv.lo + iv.hi for iv in inst.jobs}
    if len(doubled) != 1:
        raise ValidationError(f"unequal midpoints: {sorted(d / 2 for d in doubled)}")
    two_c = doubled.pop()
    if two_c % 2 != 0:
        raise ValidationError(f"non-integer midpoint {two_c}/2")
    c = two_c // 2
    return EqualMidpointInstance(c, tuple(iv.hi - c for iv in inst.jobs))


def shift(inst: EqualMidpointInstance, delta: int) -> EqualMidpointInstance:
    """Add delta to both interval bounds; the optimal regret is invariant."""
    return EqualMidpointInstance(inst.midpoint + delta, inst.half_widths)


def to_instance(inst: EqualMidpointInstance) -> Instance:
    """Materialize as a plain instance; bounds may be negative."""
    return Instance(
        1, tuple(JobInterval(*inst.interval(i)) for i in range(inst.n))
    )


def balanced_partition(values) -> BalancedPartitionResult:
    """Split 2k values into two k-subsets with minimal sum difference.

    Dynamic program over (items seen, chosen count, achievable sum) with
    backtracking pointers; indices in the result refer to `values`.
    """
    values = list(values)
    if len(values) % 2 != 0:
        raise ValidationError("balanced partition needs an even count")
    for v in values:
        if v < 0:
            raise ValidationError(f"negative value {v}")
    k = len(values) // 2
    total = sum(values)
    if k == 0:
        return BalancedPartitionResult((), (), 0, 0)
    # chosen[j][s] = item index that first reached (count j, sum s), -1 if
    # unreached; item indices strictly decrease along a backtrack chain.
    chosen = [[-1] * (total + 1) for _ in range(k + 1)]
    reached = [[False] * (total + 1) for _ in range(k + 1)]
    reached[0][0] = True
    for i, v in enumerate(values):
        for j in range(min(i, k - 1), -1, -1):
            row_from = reached[j]
            row_to = reached[j + 1]
            for s in range(total - v, -1, -1):
                if row_from[s] and not row_to[s + v]:
                    row_to[s + v] = True
                    chosen[j + 1][s + v] = i
    best_s = min(
        (s for s in range(total + 1) if reached[k][s]),
        key=lambda s: (abs(2 * s - total), s),
    )
    subset_a = []
    j, s = k, best_s
    while j > 0:
        i = chosen[j][s]
        subset_a.append(i)
        s -= values[i]
        j -= 1
    subset_a.sort()
    in_a = set(subset_a)
    subset_b = tuple(i for i in range(len(values)) if i not in in_a)
    return BalancedPartitionResult(
        tuple(subset_a), subset_b, best_s, total - best_s
    )


def _width_order(inst: EqualMidpointInstance) -> list[int]:
    return sorted(range(inst.n), key=lambda i: (inst.half_widths[i], i))


def uniform_schedule(inst: EqualMidpointInstance) -> Schedule:
    """A uniform order: interval widths increase toward the middle.

    Odd n = 2k+1: the widest job sits exactly in the middle and the 2k
    smallest widths are split by balanced partition, one subset per side.
    Even n = 2k: consecutive sorted widths are paired and the pairs placed
    symmetrically outside-in, positions (j, n-1-j) holding the (2j+1)-th
    and (2j+2)-th smallest; an arbitrary half-split uniform order does not
    always reach the closed-form optimum, this pairing does.
    """
    order = _width_order(inst)
    widths = inst.half_widths
    n = inst.n
    k = n // 2
    if n % 2 == 1:
        middle = order[-1]
        rest = order[:-1]
        part = balanced_partition([widths[i] for i in rest])
        left = sorted(
            (rest[i] for i in part.subset_a), key=lambda i: (widths[i], i)
        )
        right = sorted(
            (rest[i] for i in part.subset_b),
            key=lambda i: (widths[i], i),
            reverse=True,
        )
        seq = left + [middle] + right
    else:
        left = [order[2 * j] for j in range(k)]
        right = [order[2 * j + 1] for j in range(k - 1, -1, -1)]
        seq = left + right
    return Schedule((tuple(seq),))


def optimal_value(inst: EqualMidpointInstance) -> int:
    """Closed-form optimal maximum regret."""
    k = inst.n // 2
    total = sum(inst.half_widths)
    if inst.n % 2 == 0:
        return k * total
    rest = _width_order(inst)[:-1]
    part = balanced_partition([inst.half_widths[i] for i in rest])
    return k * total + part.max_sum


def optimal_single_machine(inst: EqualMidpointInstance) -> tuple[Schedule, int]:
    """Optimal robust schedule and its maximum regret.

    The emitted uniform schedule is re-evaluated through the regret module
    (after shifting bounds to be nonnegative) and must match the closed
    form; a mismatch is a bug, not a data error.
    """
    value = optimal_value(inst)
    sched = uniform_schedule(inst)
    min_lo = inst.midpoint - max(inst.half_widths, default=0)
    evaluable = shift(inst, -min_lo) if min_lo < 0 else inst
    achieved = regret.max_regret(to_instance(evaluable), sched).max_regret
    if achieved != value:
        raise RuntimeError(
            f"uniform schedule regret {achieved} != closed form {value}"
        )
    return sched, value
