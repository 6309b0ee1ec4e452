"""Pareto comparisons between deterministic alternatives."""

from __future__ import annotations

import enum
from itertools import combinations

from .model import PreferenceProfile


class ParetoRelation(enum.Enum):
    FIRST_DOMINATES = "first-dominates"
    SECOND_DOMINATES = "second-dominates"
    PARETO_INDIFFERENT = "pareto-indifferent"
    INCOMPARABLE = "incomparable"


def pareto_compare(a: int, b: int, profile: PreferenceProfile) -> ParetoRelation:
    if a == b:
        raise ValueError("pareto_compare needs two distinct alternatives")
    some_a = some_b = False
    for order in profile.orders:
        if order.strictly_prefers(a, b):
            some_a = True
        elif order.strictly_prefers(b, a):
            some_b = True
    if some_a and some_b:
        return ParetoRelation.INCOMPARABLE
    if some_a:
        return ParetoRelation.FIRST_DOMINATES
    if some_b:
        return ParetoRelation.SECOND_DOMINATES
    return ParetoRelation.PARETO_INDIFFERENT


def pareto_dominates(a: int, b: int, profile: PreferenceProfile) -> bool:
    return a != b and pareto_compare(a, b, profile) is ParetoRelation.FIRST_DOMINATES


def pareto_optimal_set(profile: PreferenceProfile) -> frozenset[int]:
    return frozenset(
        a for a in profile.alternatives
        if not any(pareto_dominates(b, a, profile) for b in profile.alternatives)
    )


def dominated_set(a: int, profile: PreferenceProfile) -> frozenset[int]:
    """Alternatives that at least one agent ranks strictly below ``a``.

    This is wider than the set of alternatives Pareto dominated by ``a``.
    """
    return frozenset(
        b for b in profile.alternatives
        if any(order.strictly_prefers(a, b) for order in profile.orders)
    )


def has_pareto_indifferent_pair(profile: PreferenceProfile) -> bool:
    return any(
        pareto_compare(a, b, profile) is ParetoRelation.PARETO_INDIFFERENT
        for a, b in combinations(profile.alternatives, 2)
    )
