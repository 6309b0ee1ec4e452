from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest

from sweff.assignment import (
    DiscreteAssignment,
    corollary_check,
    enumerate_assignments,
    lift_profile,
    parse_instance,
    strict_instances,
    verify_no_pareto_indifference,
)
from sweff.model import Lottery, PreconditionError, ProfileError, parse_lottery
from sweff.pareto import ParetoRelation, pareto_compare, pareto_optimal_set
from sweff.sw import sw_efficient, sw_efficient_by_enumeration

SAME = parse_instance("1: o1 > o2\n2: o1 > o2")
OPPOSED = parse_instance("1: o1 > o2\n2: o2 > o1")


@pytest.mark.parametrize("n", [1, 2, 3])
def test_enumerate_counts(n):
    instance = next(strict_instances(n))
    assignments = enumerate_assignments(instance)
    assert len(assignments) == factorial(n)
    assert [a.objects for a in assignments] == sorted(a.objects for a in assignments)


def test_enumeration_cap():
    with pytest.raises(PreconditionError):
        enumerate_assignments(next(strict_instances(3)), cap=2)


def test_instance_must_be_square():
    with pytest.raises(ProfileError):
        parse_instance("1: o1 > o2 > o3\n2: o3 > o2 > o1")
    with pytest.raises(ProfileError):
        DiscreteAssignment((0, 0))


def test_lift_same_preferences_is_opposed_profile():
    lifted = lift_profile(SAME)
    assert lifted.names == ("o1,o2", "o2,o1")
    assert lifted.orders[0].strictly_prefers(0, 1)
    assert lifted.orders[1].strictly_prefers(1, 0)
    assert pareto_compare(0, 1, lifted) is ParetoRelation.INCOMPARABLE


def test_lift_opposed_preferences_has_dominant_assignment():
    lifted = lift_profile(OPPOSED)
    assert pareto_compare(0, 1, lifted) is ParetoRelation.FIRST_DOMINATES


def test_lift_single_agent():
    lifted = lift_profile(parse_instance("1: x"))
    assert (lifted.n, lifted.m) == (1, 1)


def test_lift_tier_sizes():
    for instance in strict_instances(3):
        for order in lift_profile(instance).orders:
            assert [len(t) for t in order.tiers] == [2, 2, 2]


def test_lift_preserves_object_order():
    for instance in list(strict_instances(3))[::17]:
        lifted = lift_profile(instance)
        assignments = enumerate_assignments(instance)
        for i, order in enumerate(instance.preferences.orders):
            for (k, mk), (l, ml) in permutations(enumerate(assignments), 2):
                assert order.strictly_prefers(mk.objects[i], ml.objects[i]) == lifted.orders[i].strictly_prefers(k, l)


def test_weak_object_preferences_lift_to_indifferent_assignments():
    instance = parse_instance("1: o1 ~ o2\n2: o1 ~ o2")
    lifted = lift_profile(instance)
    assert pareto_compare(0, 1, lifted) is ParetoRelation.PARETO_INDIFFERENT
    # the general characterization still applies
    assert sw_efficient(Lottery((Fraction(1, 2), Fraction(1, 2))), lifted)
    with pytest.raises(PreconditionError):
        verify_no_pareto_indifference(instance)
    with pytest.raises(PreconditionError):
        corollary_check(instance, Lottery((1, 0)))


@pytest.mark.parametrize("n, count", [(2, 4), (3, 216)])
def test_no_pareto_indifference_exhaustive(n, count):
    instances = list(strict_instances(n))
    assert len(instances) == count
    assert all(verify_no_pareto_indifference(inst) for inst in instances)


def test_degenerate_characterization_examples():
    half = Lottery((Fraction(1, 2), Fraction(1, 2)))
    assert not corollary_check(SAME, half)
    lifted = lift_profile(SAME)
    for a in pareto_optimal_set(lifted):
        assert corollary_check(SAME, Lottery.degenerate(a, 2))


def test_mixing_two_pareto_optimal_assignments_n3():
    instance = parse_instance("1: o1 > o2 > o3\n2: o1 > o2 > o3\n3: o1 > o2 > o3")
    lifted = lift_profile(instance)
    assert len(pareto_optimal_set(lifted)) == 6
    p = parse_lottery("o1,o2,o3:1/2 o2,o1,o3:1/2", lifted)
    assert not corollary_check(instance, p)
    assert sw_efficient_by_enumeration(p, lifted)[0] is False


def test_assignment_lottery_wrong_size():
    with pytest.raises(ProfileError):
        corollary_check(SAME, Lottery((1, 0, 0)))
