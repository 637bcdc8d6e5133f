from regret_sched.exact import solve_exact
from regret_sched.generate import SplitMix64, gen_random_instance
from regret_sched.heuristics import local_search, midpoint_heuristic
from regret_sched.model import Instance, JobInterval, Schedule


def inst_of(m, jobs):
    return Instance(m, tuple(JobInterval(lo, hi) for lo, hi in jobs))


class TestMidpointHeuristic:
    def test_tied_midpoints_two_jobs(self):
        inst = inst_of(1, [(1, 3), (0, 4)])
        _, report = midpoint_heuristic(inst)
        assert report.max_regret == 3  # equals the optimum here

    def test_degenerate_intervals_zero_regret(self):
        inst = inst_of(2, [(2, 2), (1, 1), (3, 3)])
        _, report = midpoint_heuristic(inst)
        assert report.max_regret == 0

    def test_one_job_per_machine(self):
        inst = inst_of(2, [(0, 2), (0, 2)])
        sched, report = midpoint_heuristic(inst)
        assert report.max_regret == 0
        assert sorted(len(r) for r in sched.machines) == [1, 1]

    def test_within_factor_two_of_optimum(self):
        rng = SplitMix64(601)
        for _ in range(30):
            n = rng.between(1, 6)
            m = rng.between(1, 3)
            inst = gen_random_instance(rng.next_u64(), n, m, 20, 20)
            _, report = midpoint_heuristic(inst)
            z_star = solve_exact(inst).report.max_regret
            assert report.max_regret <= 2 * z_star


class TestLocalSearch:
    def test_optimum_is_fixed_point(self):
        inst = inst_of(1, [(1, 3), (1, 3), (0, 4)])
        opt = solve_exact(inst).schedule
        sched, report = local_search(inst, opt)
        assert sched == opt
        assert report.max_regret == 5

    def test_descends_from_bad_start(self):
        inst = inst_of(1, [(1, 3), (1, 3), (0, 4)])
        start = Schedule(((2, 0, 1),))  # width-2 job first
        _, report = local_search(inst, start)
        assert report.max_regret == 5

    def test_never_worse_than_start(self):
        rng = SplitMix64(602)
        for _ in range(20):
            n = rng.between(1, 5)
            m = rng.between(1, 3)
            inst = gen_random_instance(rng.next_u64(), n, m, 20, 20)
            start, start_report = midpoint_heuristic(inst)
            _, report = local_search(inst, start)
            assert report.max_regret <= start_report.max_regret
            assert report.max_regret >= solve_exact(inst).report.max_regret

    def test_seed_does_not_change_result(self):
        inst = inst_of(2, [(0, 5), (1, 4), (2, 3), (0, 9)])
        start, _ = midpoint_heuristic(inst)
        a = local_search(inst, start, seed=0)
        b = local_search(inst, start, seed=123)
        assert a == b
