"""Random assignment as a special case of voting.

Each discrete assignment (a bijection agents -> objects) is one alternative,
and an agent ranks assignments only by the object it receives in them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator

from .corpus import weak_orders
from .model import Lottery, PreconditionError, PreferenceProfile, ProfileError, WeakOrder, parse_profile
from .pareto import has_pareto_indifferent_pair
from .sw import OracleDisagreement, ex_post_efficient, is_degenerate, sw_efficient

DEFAULT_ASSIGNMENT_CAP = 6


@dataclass(frozen=True)
class AssignmentInstance:
    """``n`` agents with preferences over ``n`` objects; ``preferences.names`` are the objects."""

    preferences: PreferenceProfile

    def __post_init__(self):
        if self.preferences.n != self.preferences.m:
            raise ProfileError(
                f"assignment needs as many objects as agents, got {self.preferences.n} agents "
                f"and {self.preferences.m} objects"
            )

    @property
    def n(self) -> int:
        return self.preferences.n

    def object_name(self, o: int) -> str:
        return self.preferences.name(o)

    def is_strict(self) -> bool:
        return all(order.is_strict() for order in self.preferences.orders)


def parse_instance(text: str) -> AssignmentInstance:
    return AssignmentInstance(parse_profile(text))


@dataclass(frozen=True)
class DiscreteAssignment:
    """``objects[i]`` is the object held by agent ``i``."""

    objects: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.objects) != list(range(len(self.objects))):
            raise ProfileError("an assignment must give each object to exactly one agent")


def enumerate_assignments(instance: AssignmentInstance, cap: int = DEFAULT_ASSIGNMENT_CAP) -> list[DiscreteAssignment]:
    """All ``n!`` assignments in lexicographic order."""
    if instance.n > cap:
        raise PreconditionError(f"{instance.n} agents exceed the assignment cap {cap}")
    return [DiscreteAssignment(perm) for perm in permutations(range(instance.n))]


def assignment_name(instance: AssignmentInstance, assignment: DiscreteAssignment) -> str:
    return ",".join(instance.object_name(o) for o in assignment.objects)


def lift_profile(instance: AssignmentInstance, cap: int = DEFAULT_ASSIGNMENT_CAP) -> PreferenceProfile:
    """Voting profile over the enumerated assignments.

    Alternatives are named by the objects agents 1..n receive, comma
    separated (``o2,o1`` gives agent 1 object o2).
    """
    assignments = enumerate_assignments(instance, cap)
    orders = tuple(
        WeakOrder.from_ranks([order.rank(a.objects[i]) for a in assignments])
        for i, order in enumerate(instance.preferences.orders)
    )
    names = tuple(assignment_name(instance, a) for a in assignments)
    return PreferenceProfile(orders, names, instance.preferences.agents)


def _require_strict(instance: AssignmentInstance) -> None:
    if not instance.is_strict():
        raise PreconditionError("object preferences must be strict")


def verify_no_pareto_indifference(instance: AssignmentInstance) -> bool:
    _require_strict(instance)
    return not has_pareto_indifferent_pair(lift_profile(instance))


def corollary_check(instance: AssignmentInstance, p: Lottery) -> bool:
    """SW-efficiency of a lottery over assignments, cross-checked against
    'degenerate on a Pareto-optimal assignment'."""
    _require_strict(instance)
    lifted = lift_profile(instance)
    if p.m != lifted.m:
        raise ProfileError(f"lottery covers {p.m} alternatives, there are {lifted.m} assignments")
    verdict = sw_efficient(p, lifted)
    if verdict != (is_degenerate(p) and ex_post_efficient(p, lifted)):
        raise OracleDisagreement("SW-efficiency over strict assignments is not 'degenerate and ex post efficient'")
    return verdict


def strict_instances(n: int) -> Iterator[AssignmentInstance]:
    """All ``(n!)^n`` instances with strict object preferences."""
    strict = [o for o in weak_orders(n) if o.is_strict()]
    names = tuple(f"o{k + 1}" for k in range(n))
    for orders in product(strict, repeat=n):
        yield AssignmentInstance(PreferenceProfile(orders, names))
