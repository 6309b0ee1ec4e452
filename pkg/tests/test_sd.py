from fractions import Fraction

from hypothesis import given, settings

from sweff.corpus import mesh_lotteries
from sweff.lp import Status, solve
from sweff.model import Lottery, parse_lottery
from sweff.pareto import pareto_optimal_set
from sweff.sd import sd_compare, sd_dominates, sd_efficiency_lp, sd_efficient, sd_weakly_prefers, upper_contour_prob
from sweff.sw import grid_utilities

from .strategies import profile_and_lotteries

HALF = Fraction(1, 2)


def test_upper_contour_examples(p1, p3):
    p = Lottery((HALF, HALF))
    assert upper_contour_prob(p, 0, 0, p1) == HALF
    assert upper_contour_prob(p, 0, 1, p1) == 1
    assert upper_contour_prob(Lottery((HALF, HALF, 0)), 0, 1, p3) == 1


def test_weak_preference_examples(p1, p2):
    p = Lottery((Fraction(1, 3), Fraction(2, 3)))
    assert sd_weakly_prefers(0, p, p, p1)
    assert sd_weakly_prefers(0, Lottery((1, 0)), Lottery((HALF, HALF)), p2)
    assert not sd_weakly_prefers(0, Lottery((HALF, HALF)), Lottery((1, 0)), p2)


def test_dominance_examples(p1, p2):
    assert sd_dominates(Lottery((1, 0)), Lottery((HALF, HALF)), p2)
    assert not sd_dominates(Lottery((1, 0)), Lottery((HALF, HALF)), p1)
    assert not sd_dominates(Lottery((HALF, HALF)), Lottery((HALF, HALF)), p2)


def test_compare_flags(p1):
    cmp = sd_compare(Lottery((1, 0)), Lottery((HALF, HALF)), p1)
    assert cmp.weakly_prefers_first == (True, False)
    assert cmp.weakly_prefers_second == (False, True)


def test_efficiency_examples(p1, p2):
    # only q with q(a) >= 1/2 and q(b) >= 1/2 is p itself
    assert sd_efficient(Lottery((HALF, HALF)), p1) == (True, None)
    ok, witness = sd_efficient(parse_lottery("a:1/2 b:1/2", p2), p2)
    assert not ok and sd_dominates(witness, Lottery((HALF, HALF)), p2)
    assert sd_efficient(Lottery((1, 0)), p2) == (True, None)


def test_efficiency_lp_is_never_unbounded(p1, p2, p3):
    for profile in (p1, p2, p3):
        for q in mesh_lotteries(profile.m):
            assert solve(sd_efficiency_lp(q, profile)).status is Status.OPTIMAL


@settings(deadline=None)
@given(profile_and_lotteries(k=3, max_m=4))
def test_weak_preference_reflexive_and_transitive(case):
    profile, p, q, r = case
    for i in range(profile.n):
        assert sd_weakly_prefers(i, p, p, profile)
        if sd_weakly_prefers(i, p, q, profile) and sd_weakly_prefers(i, q, r, profile):
            assert sd_weakly_prefers(i, p, r, profile)


def _agent_expected_utility(row, lottery):
    return sum(pr * v for pr, v in zip(lottery.probs, row))


@settings(deadline=None, max_examples=60)
@given(profile_and_lotteries(k=2, max_n=2, max_m=3))
def test_dominance_implies_expected_utility_dominance(case):
    profile, q, p = case
    if not sd_dominates(q, p, profile):
        return
    for u in grid_utilities(profile, 3):
        for i in range(profile.n):
            assert _agent_expected_utility(u[i], q) >= _agent_expected_utility(u[i], p)


@settings(deadline=None, max_examples=80)
@given(profile_and_lotteries(k=1, max_m=4))
def test_witness_coherence(case):
    profile, p = case
    ok, witness = sd_efficient(p, profile)
    assert (witness is None) == ok
    if not ok:
        assert sd_dominates(witness, p, profile)


@settings(deadline=None, max_examples=40)
@given(profile_and_lotteries(k=1, max_m=3))
def test_efficient_verdict_survives_mesh(case):
    profile, p = case
    ok, _ = sd_efficient(p, profile)
    if ok:
        assert not any(sd_dominates(q, p, profile) for q in mesh_lotteries(profile.m))


@settings(deadline=None, max_examples=60)
@given(profile_and_lotteries(k=1, max_m=4))
def test_degenerate_on_pareto_optimal_is_efficient(case):
    profile, _ = case
    for a in pareto_optimal_set(profile):
        assert sd_efficient(Lottery.degenerate(a, profile.m), profile)[0]
