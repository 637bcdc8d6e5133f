import pytest

from regret_sched import regret
from regret_sched.exact import (
    ExactResult,
    SearchConfig,
    count_search_space,
    load_vectors,
    multiset_permutations,
    profile_multiset,
    solve_exact,
)
from regret_sched.generate import SplitMix64, gen_random_instance
from regret_sched.model import (
    Instance,
    JobInterval,
    ValidationError,
    is_balanced,
    multipliers,
)
from regret_sched.verification import all_schedules


def inst_of(m, jobs):
    return Instance(m, tuple(JobInterval(lo, hi) for lo, hi in jobs))


class TestSolveExact:
    def test_two_symmetric_jobs_one_machine(self):
        result = solve_exact(inst_of(1, [(0, 2), (0, 2)]))
        assert result.report.max_regret == 2
        assert result.optimal

    def test_two_symmetric_jobs_two_machines(self):
        result = solve_exact(inst_of(2, [(0, 2), (0, 2)]))
        assert result.report.max_regret == 0

    def test_three_jobs_wide_in_middle(self):
        result = solve_exact(inst_of(1, [(1, 3), (1, 3), (0, 4)]))
        assert result.report.max_regret == 5
        assert result.schedule.machines[0][1] == 2  # the width-2 job

    def test_double_brute_force(self):
        """Exact optimum equals the minimum of the scenario-scan oracle
        over every explicitly enumerated schedule."""
        rng = SplitMix64(501)
        for _ in range(25):
            n = rng.between(1, 5)
            m = rng.between(1, 2)
            inst = gen_random_instance(rng.next_u64(), n, m, 15, 15)
            result = solve_exact(inst)
            brute = min(
                regret.oracle_max_regret(inst, s).max_regret
                for s in all_schedules(n, m)
            )
            assert result.report.max_regret == brute

    def test_balanced_profile_attains_optimum(self):
        rng = SplitMix64(502)
        for _ in range(15):
            n = 2 * rng.between(1, 3)
            inst = gen_random_instance(rng.next_u64(), n, 2, 15, 15)
            full = solve_exact(inst)
            balanced = solve_exact(inst, SearchConfig(balanced_only=True))
            assert balanced.report.max_regret == full.report.max_regret

    def test_identical_profiles_identical_regret(self):
        rng = SplitMix64(503)
        inst = gen_random_instance(7, 4, 2, 15, 15)
        seen = {}
        for s in all_schedules(4, 2):
            mult = multipliers(s)
            key = tuple(mult[i] for i in range(4))
            z = regret.max_regret(inst, s).max_regret
            assert seen.setdefault(key, z) == z

    def test_node_cap_reports_incumbent(self):
        result = solve_exact(
            inst_of(1, [(0, 2), (0, 2), (0, 2)]), SearchConfig(node_cap=2)
        )
        assert isinstance(result, ExactResult)
        assert not result.optimal
        assert result.profiles_visited == 2
        # incumbent still carries a valid certificate
        assert result.report.max_regret >= 0

    def test_balanced_only_requires_divisibility(self):
        with pytest.raises(ValidationError, match="m \\| n"):
            solve_exact(inst_of(2, [(0, 1)] * 3), SearchConfig(balanced_only=True))

    def test_bad_caps_rejected(self):
        with pytest.raises(ValidationError):
            SearchConfig(node_cap=0)
        with pytest.raises(ValidationError):
            SearchConfig(time_cap=0)


class TestCountSearchSpace:
    def test_balanced_multinomial(self):
        inst = inst_of(2, [(0, 1)] * 4)
        assert count_search_space(inst, SearchConfig(balanced_only=True)) == 6

    def test_two_jobs_one_machine(self):
        assert count_search_space(inst_of(1, [(0, 1)] * 2)) == 2

    def test_nine_jobs_one_machine(self):
        assert count_search_space(inst_of(1, [(0, 1)] * 9)) == 362880

    def test_matches_visited(self):
        rng = SplitMix64(504)
        for _ in range(10):
            n = rng.between(1, 5)
            m = rng.between(1, 3)
            inst = gen_random_instance(rng.next_u64(), n, m, 10, 10)
            result = solve_exact(inst)
            assert result.profiles_visited == count_search_space(inst)


class TestEnumeration:
    def test_load_vectors_nonincreasing(self):
        vectors = list(load_vectors(5, 3))
        assert all(v == tuple(sorted(v, reverse=True)) for v in vectors)
        assert all(sum(v) == 5 for v in vectors)
        assert len(vectors) == len(set(vectors))
        assert (5, 0, 0) in vectors and (2, 2, 1) in vectors

    def test_profile_multiset(self):
        assert sorted(profile_multiset((2, 2))) == [1, 1, 2, 2]
        assert sorted(profile_multiset((3, 1))) == [1, 1, 2, 3]

    def test_multiset_permutations_distinct_and_sorted(self):
        perms = list(multiset_permutations([1, 1, 2]))
        assert perms == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
