"""Stochastic-dominance comparisons between lotteries and the SD-efficiency test."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lp import EQ, Constraint, LinearProgram, Status, solve
from .model import Lottery, PreferenceProfile


@dataclass(frozen=True)
class SdComparison:
    weakly_prefers_first: tuple[bool, ...]
    weakly_prefers_second: tuple[bool, ...]


def upper_contour_prob(p: Lottery, i: int, y: int, profile: PreferenceProfile) -> Fraction:
    """Probability that ``p`` selects something agent ``i`` likes at least as much as ``y``."""
    if not 0 <= i < profile.n:
        raise IndexError(f"agent index {i} out of range")
    if not 0 <= y < profile.m:
        raise IndexError(f"alternative index {y} out of range")
    ranks = profile.orders[i].ranks
    ry = ranks[y]
    return sum((p[x] for x in profile.alternatives if ranks[x] >= ry), Fraction(0))


def sd_weakly_prefers(i: int, p: Lottery, q: Lottery, profile: PreferenceProfile) -> bool:
    return all(
        upper_contour_prob(p, i, y, profile) >= upper_contour_prob(q, i, y, profile)
        for y in profile.alternatives
    )


def sd_compare(p: Lottery, q: Lottery, profile: PreferenceProfile) -> SdComparison:
    return SdComparison(
        tuple(sd_weakly_prefers(i, p, q, profile) for i in range(profile.n)),
        tuple(sd_weakly_prefers(i, q, p, profile) for i in range(profile.n)),
    )


def sd_dominates(q: Lottery, p: Lottery, profile: PreferenceProfile) -> bool:
    """Every agent weakly SD-prefers ``q`` and at least one agent does not weakly prefer ``p``."""
    cmp = sd_compare(q, p, profile)
    return all(cmp.weakly_prefers_first) and not all(cmp.weakly_prefers_second)


def sd_efficiency_lp(p: Lottery, profile: PreferenceProfile) -> LinearProgram:
    """Slack-maximization program whose optimum is 0 exactly when ``p`` is SD-efficient.

    Variables are ``q(0..m-1)`` followed by one slack per (agent, alternative),
    agent-major.
    """
    n, m = profile.n, profile.m
    nvars = m + n * m
    constraints = [Constraint((1,) * m + (0,) * (n * m), EQ, 1)]
    for i, order in enumerate(profile.orders):
        ranks = order.ranks
        for y in profile.alternatives:
            row = [0] * nvars
            for x in profile.alternatives:
                if ranks[x] >= ranks[y]:
                    row[x] = 1
            row[m + i * m + y] = -1
            constraints.append(Constraint(tuple(row), EQ, upper_contour_prob(p, i, y, profile)))
    objective = (0,) * m + (1,) * (n * m)
    return LinearProgram(objective, tuple(constraints))


def sd_efficient(p: Lottery, profile: PreferenceProfile) -> tuple[bool, Lottery | None]:
    """Return ``(True, None)`` if ``p`` is SD-efficient, else ``(False, q)`` with ``q`` SD-dominating ``p``."""
    if p.m != profile.m:
        raise ValueError("lottery and profile disagree on the number of alternatives")
    outcome = solve(sd_efficiency_lp(p, profile))
    # p itself is feasible and the slacks are bounded by 1
    assert outcome.status is Status.OPTIMAL, outcome.status
    if outcome.value == 0:
        return True, None
    witness = Lottery(outcome.point[: profile.m])
    if not sd_dominates(witness, p, profile):
        raise AssertionError("SD-efficiency LP returned a witness that does not dominate")
    return False, witness
