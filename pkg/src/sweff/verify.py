"""Exhaustive property checks over small corpora.

Every check is a named :class:`PropertyResult` that counts the cases it saw
and keeps the first counterexample. :func:`run_verification` drives the
checks over all weak-order profiles up to given bounds, and optionally over
all strict assignment instances.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .assignment import (
    corollary_check,
    lift_profile,
    strict_instances,
    verify_no_pareto_indifference,
)
from .corpus import all_profiles, mesh_lotteries, nonempty_supports, sample_lotteries
from .model import Lottery, PreferenceProfile, is_consistent
from .pareto import dominated_set, has_pareto_indifferent_pair, pareto_optimal_set
from .sd import sd_dominates, sd_efficient
from .sw import (
    build_cone,
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
    welfare_argmax,
)

log = logging.getLogger(__name__)

CHARACTERIZATION = "characterization-vs-enumeration"
EFFICIENCY_CHAIN = "sw-sd-ex-post-chain"
SEPARATION = "separating-utilities"
NO_INDIFFERENCE_CHARACTERIZATION = "no-indifference-characterization"
INTERESTING_REJECTED = "interesting-rejected"
UNINTERESTING_ACCEPTED = "uninteresting-ex-post-accepted"
NONDEGENERATE_NOT_EX_POST = "nondegenerate-not-ex-post"
SD_WITNESS = "sd-witness-dominates"
SD_MESH = "sd-mesh-falsifier"
SUPPORT_SUFFICIENCY = "support-sufficiency"
GRID_SOUNDNESS = "grid-soundness"
CONE_MEMBERSHIP = "cone-membership"
NO_INDIFFERENCE = "assignment-no-pareto-indifference"
ASSIGNMENT_CHARACTERIZATION = "assignment-degenerate-characterization"


@dataclass
class PropertyResult:
    name: str
    checked: int = 0
    failures: int = 0
    counterexample: str | None = None

    def record(self, ok: bool, describe) -> None:
        self.checked += 1
        if not ok:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = describe()
                log.warning("%s violated: %s", self.name, self.counterexample)

    @property
    def passed(self) -> bool:
        return self.failures == 0


@dataclass
class Verification:
    results: dict[str, PropertyResult] = field(default_factory=dict)
    profiles: dict[tuple[int, int], int] = field(default_factory=dict)
    instances: dict[int, int] = field(default_factory=dict)
    seed: int = 0
    seconds: float = 0.0

    def __getitem__(self, name: str) -> PropertyResult:
        if name not in self.results:
            self.results[name] = PropertyResult(name)
        return self.results[name]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results.values())

    def summary(self) -> str:
        lines = []
        for (n, m), count in sorted(self.profiles.items()):
            lines.append(f"profiles n={n} m={m}: {count}")
        for n, count in sorted(self.instances.items()):
            lines.append(f"strict assignment instances n={n}: {count}")
        for r in self.results.values():
            status = "PASS" if r.passed else "FAIL"
            lines.append(f"{status} {r.name}: {r.checked} checked, {r.failures} failed")
            if r.counterexample:
                lines.append(f"    first counterexample: {r.counterexample}")
        lines.append(f"seed {self.seed}, {self.seconds:.1f}s")
        return "\n".join(lines)


def _case(profile: PreferenceProfile, p: Lottery | None = None, extra: str = "") -> str:
    text = profile.serialize().strip().replace("\n", "; ")
    if p is not None:
        text += f" | lottery {p.format(profile)}"
    return text + (f" | {extra}" if extra else "")


def check_lotteries(profile: PreferenceProfile, lotteries: list[Lottery], ver: Verification,
                    mesh: list[Lottery] | None = None) -> None:
    """Characterizations against the enumeration oracle and the SD certificate checks."""
    no_indiff = not has_pareto_indifferent_pair(profile)
    for p in lotteries:
        ex_post = ex_post_efficient(p, profile)
        interesting = is_interesting(p, profile)
        degenerate = is_degenerate(p)
        sw = sw_efficient(p, profile)
        oracle, dominator = sw_efficient_by_enumeration(p, profile)
        sd, witness = sd_efficient(p, profile)

        ver[CHARACTERIZATION].record(sw == oracle, lambda: _case(profile, p, f"characterization {sw}, enumeration {oracle}"))
        ver[EFFICIENCY_CHAIN].record(
            (not sw or sd) and (not oracle or sd) and (not sd or ex_post),
            lambda: _case(profile, p, f"sw={sw} oracle={oracle} sd={sd} ex_post={ex_post}"),
        )
        if interesting:
            ver[INTERESTING_REJECTED].record(not oracle, lambda: _case(profile, p))
        elif ex_post:
            ver[UNINTERESTING_ACCEPTED].record(oracle, lambda: _case(profile, p, f"dominated by support {sorted(dominator or ())}"))
        if no_indiff:
            thm2 = sw_efficient_no_indifference(p, profile)
            ver[NO_INDIFFERENCE_CHARACTERIZATION].record(thm2 == sw, lambda: _case(profile, p))
            if not interesting and not degenerate:
                ver[NONDEGENERATE_NOT_EX_POST].record(not ex_post, lambda: _case(profile, p))
        if sd:
            if mesh is not None:
                beaten = next((q for q in mesh if sd_dominates(q, p, profile)), None)
                ver[SD_MESH].record(beaten is None, lambda: _case(profile, p, f"dominated by {beaten.format(profile)}"))
        else:
            ver[SD_WITNESS].record(
                witness is not None and sd_dominates(witness, p, profile),
                lambda: _case(profile, p, f"witness {witness}"),
            )


def check_separation(profile: PreferenceProfile, ver: Verification) -> None:
    margin = Fraction(1, profile.m)
    for a in sorted(pareto_optimal_set(profile)):
        dominated = dominated_set(a, profile)
        if not dominated:
            continue
        u = separating_utilities(a, profile)
        sums = u.column_sums()
        ok = is_consistent(u, profile) and all(sums[a] - sums[b] >= margin for b in dominated)
        ver[SEPARATION].record(ok, lambda: _case(profile, extra=f"alternative {profile.name(a)}, utilities {u.u}"))


def check_grid(profile: PreferenceProfile, lotteries: list[Lottery], levels: int, ver: Verification) -> None:
    """Support sufficiency, grid soundness of SW-dominance, and cone membership on a utility grid."""
    grid = list(grid_utilities(profile, levels))
    argmaxes = [welfare_argmax(u) for u in grid]
    for p in lotteries:
        support = p.support
        for u, best in zip(grid, argmaxes):
            ok = maximizes_welfare(u, p, profile) == (support <= best)
            ver[SUPPORT_SUFFICIENCY].record(ok, lambda: _case(profile, p, f"utilities {u.u}"))
    for s in nonempty_supports(profile.m):
        cone = build_cone(s, profile)
        for u, best in zip(grid, argmaxes):
            ver[CONE_MEMBERSHIP].record(cone.contains(u) == (s <= best), lambda: _case(profile, extra=f"support {sorted(s)}, utilities {u.u}"))
    for s in nonempty_supports(profile.m):
        q = Lottery.uniform(s, profile.m)
        for p in lotteries:
            if not sw_dominates(q, p, profile):
                continue
            for u in grid:
                ok = not maximizes_welfare(u, p, profile) or maximizes_welfare(u, q, profile)
                ver[GRID_SOUNDNESS].record(ok, lambda: _case(profile, p, f"dominator {q.format(profile)}, utilities {u.u}"))


def check_assignments(n: int, per_support: int, seed: int, ver: Verification) -> None:
    """Strict instances with ``n`` agents: no Pareto-indifferent assignments, and the degenerate-lottery
    characterization agrees with the enumeration oracle on the lifted profile."""
    count = 0
    for instance in strict_instances(n):
        count += 1
        lifted = lift_profile(instance)
        ver[NO_INDIFFERENCE].record(verify_no_pareto_indifference(instance), lambda: _case(lifted))
        for p in sample_lotteries(lifted, per_support, seed):
            verdict = corollary_check(instance, p)
            oracle, _ = sw_efficient_by_enumeration(p, lifted)
            expected = is_degenerate(p) and ex_post_efficient(p, lifted)
            ver[ASSIGNMENT_CHARACTERIZATION].record(verdict == oracle == expected, lambda: _case(lifted, p, f"characterization {verdict}, oracle {oracle}"))
            sd, witness = sd_efficient(p, lifted)
            ex_post = ex_post_efficient(p, lifted)
            ver[EFFICIENCY_CHAIN].record(
                (not verdict or sd) and (not sd or ex_post),
                lambda: _case(lifted, p, f"sw={verdict} sd={sd} ex_post={ex_post}"),
            )
            if not sd:
                ver[SD_WITNESS].record(
                    witness is not None and sd_dominates(witness, p, lifted),
                    lambda: _case(lifted, p, f"witness {witness}"),
                )
    ver.instances[n] = count


def run_verification(
    n_max: int = 3,
    m_max: int = 3,
    per_support: int = 2,
    grid_levels: int = 3,
    grid_n_max: int = 2,
    seed: int = 0,
    assignment_n: tuple[int, ...] = (),
    profiles: bool = True,
) -> Verification:
    """Run the property suites over every profile with at most ``n_max`` agents and ``m_max`` alternatives.

    The SD mesh falsifier runs for ``m <= 3`` only, and the grid suites for
    ``n <= grid_n_max``.
    """
    ver = Verification(seed=seed)
    start = time.perf_counter()
    if profiles:
        for m in range(1, m_max + 1):
            mesh = mesh_lotteries(m) if m <= 3 else None
            for n in range(1, n_max + 1):
                count = 0
                for profile in all_profiles(n, m):
                    count += 1
                    lotteries = list(sample_lotteries(profile, per_support, seed))
                    check_lotteries(profile, lotteries, ver, mesh)
                    check_separation(profile, ver)
                    if grid_levels and n <= grid_n_max:
                        check_grid(profile, lotteries, grid_levels, ver)
                ver.profiles[(n, m)] = count
                log.info("n=%d m=%d: %d profiles", n, m, count)
    for n in assignment_n:
        check_assignments(n, per_support, seed, ver)
    ver.seconds = time.perf_counter() - start
    return ver
