"""SW-efficiency and SW-dominance of lotteries.

Two independent routes are provided:

* :func:`sw_efficient` applies the closed-form characterizations (ex post
  efficient and uninteresting; ex post efficient and degenerate when no two
  alternatives are Pareto indifferent).
* :func:`sw_efficient_by_enumeration` decides dominance directly. The set of
  consistent utility profiles at which a lottery maximizes utilitarian welfare
  depends only on its support and is a polyhedral cone (:class:`WelfareCone`),
  so "q SW-dominates p" becomes a strict containment of two cones, which is
  settled by a handful of exact LPs.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from typing import Iterable, Iterator

from .lp import GE, Constraint, LinearProgram, Status, solve
from .model import (
    Lottery,
    PreconditionError,
    PreferenceProfile,
    UtilityProfile,
    check_dimensions,
    is_consistent,
)
from .pareto import dominated_set, has_pareto_indifferent_pair, pareto_optimal_set
from .sd import sd_efficient

DEFAULT_ENUMERATION_CAP = 12


def is_degenerate(p: Lottery) -> bool:
    return len(p.support) == 1


def is_interesting(p: Lottery, profile: PreferenceProfile) -> bool:
    """Whether two support alternatives are strictly ranked in opposite directions by two agents."""
    support = sorted(p.support)
    for a, b in combinations(support, 2):
        a_up = b_up = False
        for order in profile.orders:
            if order.strictly_prefers(a, b):
                a_up = True
            elif order.strictly_prefers(b, a):
                b_up = True
            if a_up and b_up:
                return True
    return False


def ex_post_efficient(p: Lottery, profile: PreferenceProfile) -> bool:
    return p.support <= pareto_optimal_set(profile)


def sw_efficient(p: Lottery, profile: PreferenceProfile) -> bool:
    """Characterization: SW-efficient iff ex post efficient and not interesting."""
    return ex_post_efficient(p, profile) and not is_interesting(p, profile)


def sw_efficient_no_indifference(p: Lottery, profile: PreferenceProfile) -> bool:
    """Characterization for profiles without Pareto-indifferent alternatives:
    SW-efficient iff ex post efficient and degenerate."""
    if has_pareto_indifferent_pair(profile):
        raise PreconditionError("profile contains a Pareto-indifferent pair of alternatives")
    return ex_post_efficient(p, profile) and is_degenerate(p)


def welfare(u: UtilityProfile, p: Lottery) -> Fraction:
    if u.m != p.m:
        raise ValueError(f"utility profile covers {u.m} alternatives, lottery {p.m}")
    return sum((p[x] * row[x] for row in u.u for x in range(u.m) if p[x]), Fraction(0))


def welfare_argmax(u: UtilityProfile) -> frozenset[int]:
    sums = u.column_sums()
    best = max(sums)
    return frozenset(x for x, s in enumerate(sums) if s == best)


def maximizes_welfare(u: UtilityProfile, p: Lottery, profile: PreferenceProfile) -> bool:
    """Whether no lottery (equivalently, no alternative) gives more expected welfare than ``p``."""
    if not is_consistent(u, profile):
        raise PreconditionError("utility profile is not consistent with the preference profile")
    return welfare(u, p) == max(u.column_sums())


def separating_utilities(a: int, profile: PreferenceProfile) -> UtilityProfile:
    """Consistent utilities under which ``a`` beats every member of ``dominated_set(a)`` in welfare.

    ``u[i][x] = [x >=_i a] + rank_i(x) / (n*m)``. The indicator gives a unit
    gain from every agent who strictly prefers ``a``; the rank term keeps
    the profile consistent and costs at most ``(m-1)/m`` in total, so the
    welfare margin is at least ``1/m``.
    """
    if a not in pareto_optimal_set(profile):
        raise PreconditionError(f"alternative {profile.name(a)} is not Pareto optimal")
    dominated = dominated_set(a, profile)
    if not dominated:
        raise PreconditionError(f"no agent strictly prefers {profile.name(a)} to anything")
    scale = Fraction(1, profile.n * profile.m)
    u = UtilityProfile(tuple(
        tuple(int(order.weakly_prefers(x, a)) + order.rank(x) * scale for x in profile.alternatives)
        for order in profile.orders
    ))
    sums = u.column_sums()
    if not is_consistent(u, profile) or any(sums[a] <= sums[b] for b in dominated):
        raise AssertionError("separating utility construction failed its own check")
    return u


def separation_margins(a: int, u: UtilityProfile, profile: PreferenceProfile) -> dict[int, Fraction]:
    sums = u.column_sums()
    return {b: sums[a] - sums[b] for b in sorted(dominated_set(a, profile))}


@dataclass(frozen=True)
class WelfareCone:
    """Consistent utility profiles at which every alternative in ``support`` maximizes welfare.

    Utility variables are flattened agent-major: ``u[i][x]`` is coordinate
    ``i*m + x``. ``consistency`` holds triples ``(i, x, y)`` standing for
    ``u[i][x] - u[i][y] >= 0``; ``maximization`` holds pairs ``(a, b)``
    standing for ``sum_i u[i][a] - sum_i u[i][b] >= 0``.
    """

    profile: PreferenceProfile
    support: frozenset[int]
    consistency: tuple[tuple[int, int, int], ...] = field(init=False, repr=False, compare=False)
    maximization: tuple[tuple[int, int], ...] = field(init=False, repr=False, compare=False)
    _violation: dict = field(init=False, repr=False, compare=False, hash=False)
    _constraints: list = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        support = frozenset(self.support)
        object.__setattr__(self, "support", support)
        if not support:
            raise ValueError("a welfare cone needs a nonempty support")
        prof = self.profile
        if not support <= set(prof.alternatives):
            raise ValueError("support contains unknown alternatives")
        consistency = tuple(
            (i, x, y)
            for i, order in enumerate(prof.orders)
            for x in prof.alternatives
            for y in prof.alternatives
            if x != y and order.weakly_prefers(x, y)
        )
        maximization = tuple((a, b) for a in sorted(support) for b in prof.alternatives if a != b)
        object.__setattr__(self, "consistency", consistency)
        object.__setattr__(self, "maximization", maximization)
        object.__setattr__(self, "_violation", {})
        object.__setattr__(self, "_constraints", [])

    @property
    def dimension(self) -> int:
        return self.profile.n * self.profile.m

    def _sum_difference(self, a: int, b: int) -> tuple[int, ...]:
        """Coefficients of ``sum_i u[i][a] - sum_i u[i][b]``."""
        m = self.profile.m
        row = [0] * self.dimension
        for i in range(self.profile.n):
            row[i * m + a] += 1
            row[i * m + b] -= 1
        return tuple(row)

    def halfspaces(self) -> list[tuple[int, ...]]:
        """Every defining inequality as a coefficient vector ``h`` meaning ``h @ u >= 0``."""
        m = self.profile.m
        rows = []
        for i, x, y in self.consistency:
            row = [0] * self.dimension
            row[i * m + x] = 1
            row[i * m + y] = -1
            rows.append(tuple(row))
        rows.extend(self._sum_difference(a, b) for a, b in self.maximization)
        return rows

    def contains(self, u: UtilityProfile) -> bool:
        check_dimensions(u, self.profile)
        flat = [v for row in u.u for v in row]
        return all(sum(c * v for c, v in zip(h, flat) if c) >= 0 for h in self.halfspaces())

    def max_violation(self, a: int, b: int) -> Fraction:
        """Largest value of ``sum_i u[i][b] - sum_i u[i][a]`` over the cone within ``[0,1]^(n*m)``.

        Positive exactly when some profile in the cone has ``b`` strictly
        ahead of ``a``; by homogeneity the box loses nothing.
        """
        key = (a, b)
        cached = self._violation.get(key)
        if cached is None:
            if not self._constraints:
                self._constraints.extend(Constraint(h, GE, 0) for h in self.halfspaces())
            lp = LinearProgram(
                self._sum_difference(b, a),
                tuple(self._constraints),
                ((Fraction(0), Fraction(1)),) * self.dimension,
            )
            outcome = solve(lp)
            if outcome.status is not Status.OPTIMAL:
                raise AssertionError(f"welfare-cone LP ended {outcome.status.value}")
            cached = self._violation[key] = outcome.value
        return cached


@functools.lru_cache(maxsize=8192)
def build_cone(support: frozenset[int], profile: PreferenceProfile) -> WelfareCone:
    return WelfareCone(profile, frozenset(support))


def cone_contained(inner: WelfareCone, outer: WelfareCone) -> bool:
    """Whether every utility profile in ``inner`` satisfies every maximization halfspace of ``outer``."""
    if inner.profile.n != outer.profile.n or inner.profile.m != outer.profile.m:
        raise ValueError("cones over different dimensions")
    return all(inner.max_violation(a, b) <= 0 for a, b in outer.maximization)


def _strictly_larger(outer: WelfareCone, inner: WelfareCone) -> bool:
    """Some profile in ``outer`` violates a maximization halfspace of ``inner``."""
    return any(outer.max_violation(a, b) > 0 for a, b in inner.maximization)


def support_dominates(q_support: Iterable[int], p_support: Iterable[int], profile: PreferenceProfile) -> bool:
    inner = build_cone(frozenset(p_support), profile)
    outer = build_cone(frozenset(q_support), profile)
    return cone_contained(inner, outer) and _strictly_larger(outer, inner)


def sw_dominates(q: Lottery, p: Lottery, profile: PreferenceProfile) -> bool:
    """Whether ``q`` maximizes welfare wherever ``p`` does, and somewhere ``p`` does not."""
    return support_dominates(q.support, p.support, profile)


def sw_efficient_by_enumeration(
    p: Lottery, profile: PreferenceProfile, cap: int = DEFAULT_ENUMERATION_CAP
) -> tuple[bool, frozenset[int] | None]:
    """Search every support for a lottery that SW-dominates ``p``.

    Supports are scanned by size, then lexicographically; the first
    dominating one is returned. Its uniform lottery is a dominating lottery.
    """
    if profile.m > cap:
        raise PreconditionError(f"{profile.m} alternatives exceed the enumeration cap {cap}")
    own = p.support
    for size in range(1, profile.m + 1):
        for s in combinations(profile.alternatives, size):
            s = frozenset(s)
            # equal supports give equal cones
            if s != own and support_dominates(s, own, profile):
                return False, s
    return True, None


def grid_utilities(profile: PreferenceProfile, levels: int) -> Iterator[UtilityProfile]:
    """Every consistent utility profile with entries in ``0..levels-1``."""
    if levels < 1:
        raise ValueError("need at least one utility level")
    per_agent = []
    for order in profile.orders:
        k = len(order.tiers)
        rows = []
        # non-decreasing tier levels, worst tier first
        for lv in combinations_with_replacement(range(levels), k):
            rows.append(tuple(Fraction(lv[order.rank(x)]) for x in profile.alternatives))
        per_agent.append(rows)
    for rows in product(*per_agent):
        yield UtilityProfile(rows)


@dataclass(frozen=True)
class EfficiencyReport:
    ex_post: bool
    interesting: bool
    degenerate: bool
    sd_efficient: bool
    sw_efficient: bool
    sw_by_enumeration: bool | None = None
    sd_witness: Lottery | None = None
    dominating_support: frozenset[int] | None = None
    separating: dict[int, UtilityProfile] = field(default_factory=dict)


class OracleDisagreement(AssertionError):
    """The characterization and the enumeration procedure returned different answers."""


def efficiency_report(
    p: Lottery, profile: PreferenceProfile, cap: int = DEFAULT_ENUMERATION_CAP
) -> EfficiencyReport:
    """Run every efficiency test on ``p``; enumeration is skipped above ``cap`` alternatives.

    When ``p`` is interesting the report carries, for each support alternative
    ``a`` that is Pareto optimal with a nonempty ``dominated_set(a)`` reaching
    into the support, the separating utility profile certifying that ``a``
    beats ``p``.
    """
    ex_post = ex_post_efficient(p, profile)
    interesting = is_interesting(p, profile)
    sd_ok, sd_witness = sd_efficient(p, profile)
    sw_ok = sw_efficient(p, profile)
    by_enum = dominating = None
    if profile.m <= cap:
        by_enum, dominating = sw_efficient_by_enumeration(p, profile, cap)
        if by_enum != sw_ok:
            raise OracleDisagreement(
                f"characterization says {sw_ok}, enumeration says {by_enum} "
                f"for lottery {p.format(profile)} on profile\n{profile.serialize()}"
            )
    separating = {}
    if interesting and ex_post:
        for a in sorted(p.support):
            if dominated_set(a, profile) & p.support:
                separating[a] = separating_utilities(a, profile)
    report = EfficiencyReport(
        ex_post, interesting, is_degenerate(p), sd_ok, sw_ok, by_enum, sd_witness, dominating, separating
    )
    if (report.sw_efficient and not report.sd_efficient) or (report.sd_efficient and not report.ex_post):
        raise OracleDisagreement("efficiency chain sw => sd => ex post violated")
    return report
