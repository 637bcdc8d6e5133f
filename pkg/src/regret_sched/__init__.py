"""Interval minmax regret scheduling on parallel identical machines."""

from .model import (
    Instance,
    JobInterval,
    RegretReport,
    Scenario,
    Schedule,
    ValidationError,
    flow_time,
    is_balanced,
    load_vector,
    multipliers,
    validate_instance,
    validate_schedule,
)
from .deterministic import optimal_flow_time, spt_schedule
from .regret import max_regret, oracle_max_regret, regret_against, worst_case_scenario
from .structure import canonicalize, column_swap, rebalance
from .single_machine import (
    BalancedPartitionResult,
    EqualMidpointInstance,
    balanced_partition,
    detect_equal_midpoints,
    optimal_single_machine,
    uniform_schedule,
)
from .exact import ExactResult, SearchConfig, count_search_space, solve_exact
from .heuristics import local_search, midpoint_heuristic
from .reductions import (
    FourPPInstance,
    PartitionInstance,
    decide_3partition,
    decide_4pp,
    gen_4pp_from_3partition,
    gen_sched_from_4pp,
    verify_threshold,
)

__version__ = "0.1.0"

__all__ = [
    "Instance",
    "JobInterval",
    "RegretReport",
    "Scenario",
    "Schedule",
    "ValidationError",
    "flow_time",
    "is_balanced",
    "load_vector",
    "multipliers",
    "validate_instance",
    "validate_schedule",
    "optimal_flow_time",
    "spt_schedule",
    "max_regret",
    "oracle_max_regret",
    "regret_against",
    "worst_case_scenario",
    "canonicalize",
    "column_swap",
    "rebalance",
    "BalancedPartitionResult",
    "EqualMidpointInstance",
    "balanced_partition",
    "detect_equal_midpoints",
    "optimal_single_machine",
    "uniform_schedule",
    "ExactResult",
    "SearchConfig",
    "count_search_space",
    "solve_exact",
    "local_search",
    "midpoint_heuristic",
    "FourPPInstance",
    "PartitionInstance",
    "decide_3partition",
    "decide_4pp",
    "gen_4pp_from_3partition",
    "gen_sched_from_4pp",
    "verify_threshold",
    "__version__",
]
