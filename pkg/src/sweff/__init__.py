"""Exact efficiency analysis of lotteries over social-choice alternatives.

The ladder of notions checked here, from weakest to strongest: ex post
efficiency, SD-efficiency, and SW-efficiency (no other lottery maximizes
utilitarian welfare under a strictly larger set of consistent utility
profiles).
"""

from .assignment import (
    AssignmentInstance,
    DiscreteAssignment,
    corollary_check,
    enumerate_assignments,
    lift_profile,
    parse_instance,
    verify_no_pareto_indifference,
)
from .lp import LinearProgram, LpOutcome, Status, solve, verify_feasible
from .model import (
    Lottery,
    ParseError,
    PreconditionError,
    PreferenceProfile,
    ProfileError,
    UtilityProfile,
    WeakOrder,
    is_consistent,
    parse_lottery,
    parse_profile,
)
from .pareto import (
    ParetoRelation,
    dominated_set,
    has_pareto_indifferent_pair,
    pareto_compare,
    pareto_optimal_set,
)
from .sd import sd_dominates, sd_efficient, sd_weakly_prefers, upper_contour_prob
from .sw import (
    EfficiencyReport,
    WelfareCone,
    build_cone,
    cone_contained,
    efficiency_report,
    ex_post_efficient,
    grid_utilities,
    is_degenerate,
    is_interesting,
    maximizes_welfare,
    separating_utilities,
    sw_dominates,
    sw_efficient,
    sw_efficient_by_enumeration,
    sw_efficient_no_indifference,
    welfare,
)

__version__ = "0.1.0"

__all__ = [
    "AssignmentInstance",
    "DiscreteAssignment",
    "EfficiencyReport",
    "LinearProgram",
    "Lottery",
    "LpOutcome",
    "ParetoRelation",
    "ParseError",
    "PreconditionError",
    "PreferenceProfile",
    "ProfileError",
    "Status",
    "UtilityProfile",
    "WeakOrder",
    "WelfareCone",
    "build_cone",
    "cone_contained",
    "corollary_check",
    "dominated_set",
    "efficiency_report",
    "enumerate_assignments",
    "ex_post_efficient",
    "grid_utilities",
    "has_pareto_indifferent_pair",
    "is_consistent",
    "is_degenerate",
    "is_interesting",
    "lift_profile",
    "maximizes_welfare",
    "pareto_compare",
    "pareto_optimal_set",
    "parse_instance",
    "parse_lottery",
    "parse_profile",
    "sd_dominates",
    "sd_efficient",
    "sd_weakly_prefers",
    "separating_utilities",
    "solve",
    "sw_dominates",
    "sw_efficient",
    "sw_efficient_by_enumeration",
    "sw_efficient_no_indifference",
    "upper_contour_prob",
    "verify_feasible",
    "verify_no_pareto_indifference",
    "welfare",
]
