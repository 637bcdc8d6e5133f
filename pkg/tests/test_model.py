import pytest
from hypothesis import given, strategies as st

from regret_sched.model import (
    Instance,
    JobInterval,
    Scenario,
    Schedule,
    ValidationError,
    flow_time,
    instance_from_dict,
    instance_to_dict,
    is_balanced,
    load_vector,
    multipliers,
    scenario_from_dict,
    scenario_to_dict,
    schedule_from_dict,
    schedule_to_dict,
    validate_instance,
    validate_schedule,
)


def grid_pi():
    # 4 machines, 4 jobs each; machine r runs jobs r, r+4, r+8, r+12
    return Schedule(tuple(tuple(r + 4 * c for c in range(4)) for r in range(4)))


def simulate_completion_sum(s, sc):
    """Jobs run back-to-back from time zero; sum of completion times."""
    total = 0
    for row in s.machines:
        t = 0
        for job in row:
            t += sc.durations[job]
            total += t
    return total


class TestValidation:
    def test_minimal_instance_ok(self):
        inst = Instance(1, (JobInterval(0, 2),))
        assert validate_instance(inst) is inst

    def test_inverted_bounds(self):
        with pytest.raises(ValidationError, match="lo 3 > hi 2"):
            validate_instance(Instance(1, (JobInterval(3, 2),)))

    def test_no_machines(self):
        with pytest.raises(ValidationError, match="machine count"):
            validate_instance(Instance(0, (JobInterval(0, 2),)))

    def test_negative_lo(self):
        with pytest.raises(ValidationError, match="negative"):
            validate_instance(Instance(1, (JobInterval(-1, 2),)))

    def test_no_jobs(self):
        with pytest.raises(ValidationError, match="at least one job"):
            validate_instance(Instance(2, ()))

    def test_schedule_partition(self):
        validate_schedule(Schedule(((0, 1), (2,))))
        with pytest.raises(ValidationError, match="more than once"):
            validate_schedule(Schedule(((0, 1), (1,))))
        with pytest.raises(ValidationError, match="exactly"):
            validate_schedule(Schedule(((0, 3),)))

    def test_jobs_per_machine_predicate(self):
        assert Instance(2, (JobInterval(0, 1),) * 4).jobs_per_machine() == 2
        assert Instance(2, (JobInterval(0, 1),) * 3).jobs_per_machine() is None


class TestMultipliers:
    def test_two_machines(self):
        assert multipliers(Schedule(((0, 1), (2,)))) == {0: 2, 1: 1, 2: 1}

    def test_single_job(self):
        assert multipliers(Schedule(((5,),))) == {5: 1}

    def test_grid_columns(self):
        mult = multipliers(grid_pi())
        for r in range(4):
            for c in range(4):
                assert mult[r + 4 * c] == 4 - c

    def test_multiplier_slot_bijection(self):
        s = Schedule(((3, 0), (2, 4, 1), (5,)))
        mult = multipliers(s)
        expected = sum(
            k for row in s.machines for k in range(1, len(row) + 1)
        )
        assert sum(mult.values()) == expected


class TestFlowTime:
    def test_direct_sum(self):
        s = Schedule(((0, 1), (2,)))
        assert flow_time(s, Scenario((3, 1, 2))) == 9

    def test_hand_evaluation(self):
        s = Schedule(((1, 0), (2,)))
        assert flow_time(s, Scenario((3, 1, 2))) == 7

    def test_zero_scenario(self):
        s = Schedule(((2, 0), (1,)))
        assert flow_time(s, Scenario((0, 0, 0))) == 0

    @given(st.data())
    def test_matches_completion_simulation(self, data):
        n = data.draw(st.integers(1, 8))
        m = data.draw(st.integers(1, 3))
        jobs = list(range(n))
        perm = data.draw(st.permutations(jobs))
        cuts = sorted(data.draw(st.lists(st.integers(0, n), min_size=m - 1, max_size=m - 1)))
        rows, prev = [], 0
        for cut in cuts + [n]:
            rows.append(tuple(perm[prev:cut]))
            prev = cut
        s = Schedule(tuple(rows))
        sc = Scenario(tuple(data.draw(st.integers(0, 50)) for _ in range(n)))
        assert flow_time(s, sc) == simulate_completion_sum(s, sc)


class TestLoadVector:
    def test_unbalanced(self):
        s = Schedule(((0, 1), (2,)))
        assert load_vector(s) == (2, 1)
        assert not is_balanced(s)

    def test_balanced(self):
        s = Schedule(((0, 1), (2, 3)))
        assert load_vector(s) == (2, 2)
        assert is_balanced(s)

    def test_grid(self):
        assert load_vector(grid_pi()) == (4, 4, 4, 4)


class TestSerialization:
    def test_instance_roundtrip(self):
        inst = Instance(2, (JobInterval(0, 3), JobInterval(2, 2)))
        assert instance_from_dict(instance_to_dict(inst)) == inst

    def test_scenario_roundtrip(self):
        sc = Scenario((4, 0, 7))
        assert scenario_from_dict(scenario_to_dict(sc)) == sc

    def test_schedule_roundtrip(self):
        s = Schedule(((1, 0), (2,)))
        assert schedule_from_dict(schedule_to_dict(s)) == s

    def test_unknown_field_rejected(self):
        d = instance_to_dict(Instance(1, (JobInterval(0, 2),)))
        d["extra"] = 1
        with pytest.raises(ValidationError, match="expected fields"):
            instance_from_dict(d)

    def test_unknown_job_field_rejected(self):
        with pytest.raises(ValidationError):
            instance_from_dict(
                {"machines": 1, "jobs": [{"lo": 0, "hi": 2, "mid": 1}]}
            )

    def test_missing_field_rejected(self):
        with pytest.raises(ValidationError):
            schedule_from_dict({})
