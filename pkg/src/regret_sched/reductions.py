"""Hardness-reduction machinery at desk scale.

3-PARTITION instances are reduced to 4-PARTITION-INTO-PAIRS (4-PP), and
4-PP instances to interval minmax regret scheduling with a sharp regret
threshold. Exhaustive deciders for both partition problems validate the
generators empirically on small inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .exact import ExactResult, SearchConfig, solve_exact
from .model import Instance, JobInterval, ValidationError


@dataclass(frozen=True)
class PartitionInstance:
    """3-PARTITION input: 3m positive integers summing to m*B, each
    strictly between B/4 and B/2."""

    m: int
    B: int
    values: tuple[int, ...]

    def validate(self) -> "PartitionInstance":
        if self.m < 1 or self.B < 1:
            raise ValidationError("m and B must be positive")
        if len(self.values) != 3 * self.m:
            raise ValidationError(
                f"expected {3 * self.m} values, got {len(self.values)}"
            )
        total = sum(self.values)
        if total != self.m * self.B:
            raise ValidationError(
                f"values sum to {total}, expected m*B = {self.m * self.B}"
            )
        for a in self.values:
            if not (4 * a > self.B and 2 * a < self.B):
                raise ValidationError(
                    f"value {a} outside the open range (B/4, B/2) for B={self.B}"
                )
        return self


@dataclass(frozen=True)
class FourPPInstance:
    """4-PP input: 4*m_prime positive integers."""

    values: tuple[int, ...]

    @property
    def m_prime(self) -> int:
        return len(self.values) // 4

    def validate(self) -> "FourPPInstance":
        if not self.values or len(self.values) % 4 != 0:
            raise ValidationError(
                f"value count {len(self.values)} not a positive multiple of 4"
            )
        for a in self.values:
            if a < 1:
                raise ValidationError(f"value {a} is not positive")
        return self


@dataclass(frozen=True)
class PairingWitness:
    """Quadruplets plus a fixed-point-free involution pairing equal sums.

    pairing[i] = f(i) over quadruplet indices.
    """

    quadruplets: tuple[tuple[int, ...], ...]
    pairing: tuple[int, ...]

    def validate(self, inst: FourPPInstance) -> "PairingWitness":
        flat = [i for quad in self.quadruplets for i in quad]
        if sorted(flat) != list(range(len(inst.values))):
            raise ValidationError("quadruplets do not partition the index set")
        if any(len(q) != 4 for q in self.quadruplets):
            raise ValidationError("blocks must have exactly 4 elements")
        sums = [sum(inst.values[i] for i in quad) for quad in self.quadruplets]
        f = self.pairing
        if len(f) != len(self.quadruplets):
            raise ValidationError("pairing length mismatch")
        for i, fi in enumerate(f):
            if fi == i or f[fi] != i:
                raise ValidationError("pairing is not a fixed-point-free involution")
            if sums[i] != sums[fi]:
                raise ValidationError(
                    f"paired quadruplets have sums {sums[i]} != {sums[fi]}"
                )
        return self


def decide_3partition(inst: PartitionInstance):
    """Exhaustive decider; returns the m triplets on yes, None on no.

    Each recursion anchors on the lowest remaining index, so every
    partition is enumerated once in canonical order.
    """
    inst.validate()
    values = inst.values
    B = inst.B

    def rec(remaining: tuple[int, ...], acc):
        if not remaining:
            return acc
        first = remaining[0]
        rest = remaining[1:]
        for x, y in combinations(range(len(rest)), 2):
            if values[first] + values[rest[x]] + values[rest[y]] == B:
                nxt = tuple(
                    idx for pos, idx in enumerate(rest) if pos not in (x, y)
                )
                found = rec(nxt, acc + [(first, rest[x], rest[y])])
                if found is not None:
                    return found
        return None

    triplets = rec(tuple(range(len(values))), [])
    return tuple(triplets) if triplets is not None else None


def decide_4pp(inst: FourPPInstance):
    """Exhaustive decider; returns a PairingWitness on yes, None on no.

    Enumerates disjoint pairs of equal-sum quadruplets ("pair blocks") and
    searches an exact cover of the index set by such blocks, always
    branching on the lowest uncovered index.
    """
    inst.validate()
    values = inst.values
    n = len(values)
    if inst.m_prime % 2 != 0:
        return None  # a fixed-point-free involution needs an even block count
    if sum(values) % 2 != 0:
        return None

    by_sum: dict[int, list[tuple[int, tuple[int, ...]]]] = {}
    for quad in combinations(range(n), 4):
        mask = 0
        for i in quad:
            mask |= 1 << i
        by_sum.setdefault(sum(values[i] for i in quad), []).append((mask, quad))

    blocks = []  # (mask8, quad_a, quad_b)
    for group in by_sum.values():
        for (ma, qa), (mb, qb) in combinations(group, 2):
            if ma & mb == 0:
                blocks.append((ma | mb, qa, qb))

    full = (1 << n) - 1

    def rec(covered: int, acc):
        if covered == full:
            return acc
        uncovered = ~covered & full
        low_bit = uncovered & -uncovered
        for mask, qa, qb in blocks:
            if mask & low_bit and mask & covered == 0:
                found = rec(covered | mask, acc + [(qa, qb)])
                if found is not None:
                    return found
        return None

    chosen = rec(0, [])
    if chosen is None:
        return None
    quadruplets = []
    pairing = []
    for qa, qb in chosen:
        idx = len(quadruplets)
        quadruplets.extend([qa, qb])
        pairing.extend([idx + 1, idx])
    witness = PairingWitness(tuple(quadruplets), tuple(pairing))
    return witness.validate(inst)


def gen_4pp_from_3partition(inst: PartitionInstance) -> FourPPInstance:
    """Reduce 3-PARTITION to 4-PP.

    Output: the 3m original values, one sentinel 5^(j+1)*B per triplet
    slot j = 1..m, and four copies of (5^(j+1)+1)*B/4 per slot. The
    division needs 4 | (5^(j+1)+1)*B, which holds for even B; odd-B
    instances are pre-scaled by 2, which preserves the answer and the
    strict (B/4, B/2) bounds.
    """
    inst.validate()
    m, B, values = inst.m, inst.B, inst.values
    if B % 2 != 0:
        B *= 2
        values = tuple(2 * a for a in values)
    out = list(values)
    for j in range(1, m + 1):
        out.append(5 ** (j + 1) * B)
    for j in range(1, m + 1):
        out.extend([(5 ** (j + 1) + 1) * B // 4] * 4)
    return FourPPInstance(tuple(out)).validate()


@dataclass(frozen=True)
class SchedulingReduction:
    """Scheduling instance generated from a 4-PP instance.

    A yes-instance of 4-PP corresponds exactly to optimal maximum regret
    hitting `threshold` = 4mB + 9C/2; when C is odd the threshold is not
    an integer (threshold is None), the 4-PP answer is necessarily no, and
    the optimum strictly exceeds `threshold_floor`.
    """

    instance: Instance
    m: int
    B: int
    C: int
    threshold: int | None
    threshold_floor: int


def gen_sched_from_4pp(inst: FourPPInstance) -> SchedulingReduction:
    """Reduce 4-PP to interval minmax regret scheduling.

    m = m'/2 machines; one job [B - a, B + a] per input value and m wide
    jobs [0, 2B], with B one more than the sum of the four largest values
    (the minimal choice the construction allows).
    """
    inst.validate()
    if inst.m_prime % 2 != 0:
        raise ValidationError("reduction requires an even number of quadruplets")
    values = inst.values
    B = 1 + sum(sorted(values, reverse=True)[:4])
    m = inst.m_prime // 2
    jobs = [JobInterval(B - a, B + a) for a in values]
    jobs.extend([JobInterval(0, 2 * B)] * m)
    C = sum(values)
    num = 8 * m * B + 9 * C
    return SchedulingReduction(
        instance=Instance(m, tuple(jobs)),
        m=m,
        B=B,
        C=C,
        threshold=num // 2 if C % 2 == 0 else None,
        threshold_floor=num // 2,
    )


@dataclass(frozen=True)
class ThresholdReport:
    reduction: SchedulingReduction
    witness: PairingWitness | None
    exact: ExactResult

    @property
    def four_pp_yes(self) -> bool:
        return self.witness is not None

    @property
    def z_star(self) -> int:
        return self.exact.report.max_regret

    @property
    def passed(self) -> bool:
        if not self.exact.optimal:
            return False
        if self.four_pp_yes:
            return self.z_star == self.reduction.threshold
        return self.z_star > self.reduction.threshold_floor


def verify_threshold(
    inst: FourPPInstance, max_jobs: int = 10
) -> ThresholdReport:
    """Check the reduction equivalence on one 4-PP instance.

    Decides 4-PP by brute force, solves the generated scheduling instance
    exactly, and compares the optimum against the threshold. Exact solving
    is exponential, so the generated instance must stay small (m' = 2
    yields 9 jobs on one machine).
    """
    reduction = gen_sched_from_4pp(inst)
    if reduction.instance.n > max_jobs:
        raise ValidationError(
            f"generated instance has {reduction.instance.n} jobs; "
            f"exact verification capped at {max_jobs}"
        )
    witness = decide_4pp(inst)
    exact = solve_exact(reduction.instance, SearchConfig())
    return ThresholdReport(reduction, witness, exact)
