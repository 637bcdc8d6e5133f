"""Seeded, platform-independent random generation.

The generator is SplitMix64 (Steele, Lea & Flood's mixing constants): a
64-bit counter advanced by an odd constant and finalized with xor-shift
multiplications. The same seed produces the same byte-for-byte sequence on
every platform, which keeps golden files and verification suites stable.
"""

from __future__ import annotations

from .model import Instance, JobInterval, Scenario, Schedule

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound); unbiased via rejection."""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound

    def between(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] inclusive."""
        return lo + self.below(hi - lo + 1)

    def shuffle(self, items: list) -> list:
        """In-place Fisher-Yates; returns items."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
        return items


def gen_random_instance(
    seed: int, n: int, m: int, max_width: int, max_lo: int
) -> Instance:
    """Deterministic instance: lo uniform in [0, max_lo], width uniform in
    [0, max_width]."""
    if n < 1 or m < 1 or max_width < 0 or max_lo < 0:
        raise ValueError("parameters must be positive (bounds nonnegative)")
    rng = SplitMix64(seed)
    jobs = []
    for _ in range(n):
        lo = rng.between(0, max_lo)
        width = rng.between(0, max_width)
        jobs.append(JobInterval(lo, lo + width))
    return Instance(m, tuple(jobs))


def gen_random_schedule(rng: SplitMix64, n: int, m: int) -> Schedule:
    """Random schedule: shuffled jobs dealt to uniformly random machines."""
    jobs = rng.shuffle(list(range(n)))
    rows: list[list[int]] = [[] for _ in range(m)]
    for job in jobs:
        rows[rng.below(m)].append(job)
    return Schedule(tuple(tuple(row) for row in rows))


def gen_random_balanced_schedule(rng: SplitMix64, n: int, m: int) -> Schedule:
    """Random balanced schedule (requires m | n)."""
    if n % m != 0:
        raise ValueError("balanced schedule requires m | n")
    jobs = rng.shuffle(list(range(n)))
    n0 = n // m
    rows = [tuple(jobs[j * n0 : (j + 1) * n0]) for j in range(m)]
    return Schedule(tuple(rows))


def gen_random_scenario(rng: SplitMix64, inst: Instance) -> Scenario:
    return Scenario(
        tuple(rng.between(iv.lo, iv.hi) for iv in inst.jobs)
    )
