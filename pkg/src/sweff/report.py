"""Self-contained analysis reports and their JSON form.

Rationals are serialized as ``"p/q"`` strings (``"1"`` for integers) so a
report round-trips without losing exactness. Every witness a report carries
can be re-checked against the profile and lottery echoed in it with
:func:`verify_report`.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .model import (
    Lottery,
    PreferenceProfile,
    UtilityProfile,
    WeakOrder,
    is_consistent,
    parse_profile,
    parse_rational,
)
from .sd import sd_dominates
from .sw import (
    DEFAULT_ENUMERATION_CAP,
    EfficiencyReport,
    efficiency_report,
    separation_margins,
    support_dominates,
    welfare,
)

SCHEMA = "sweff.report/1"


@dataclass
class AnalysisReport:
    profile: PreferenceProfile
    lottery: Lottery
    efficiency: EfficiencyReport
    consistency: str = "weak"
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP
    seconds: float = 0.0
    notes: list[str] = field(default_factory=list)


def analyze(profile: PreferenceProfile, lottery: Lottery, cap: int = DEFAULT_ENUMERATION_CAP,
            strict_consistency: bool = False) -> AnalysisReport:
    start = time.perf_counter()
    eff = efficiency_report(lottery, profile, cap)
    report = AnalysisReport(
        profile, lottery, eff,
        consistency="strict" if strict_consistency else "weak",
        enumeration_cap=cap,
    )
    if eff.sw_by_enumeration is None:
        report.notes.append(f"enumeration skipped: {profile.m} alternatives exceed cap {cap}")
    if strict_consistency:
        for a, u in eff.separating.items():
            if not is_consistent(u, profile, strict=True):
                report.notes.append(f"separating utilities for {profile.name(a)} are not strictly consistent")
    report.seconds = time.perf_counter() - start
    return report


def _fmt(q: Fraction) -> str:
    return str(Fraction(q))


def _lottery_dict(p: Lottery, profile: PreferenceProfile) -> dict[str, str]:
    return {profile.name(x): _fmt(v) for x, v in enumerate(p.probs) if v}


def _lottery_from_dict(data: dict[str, str], profile: PreferenceProfile) -> Lottery:
    return Lottery.from_dict({profile.index(k): parse_rational(v) for k, v in data.items()}, profile.m)


def to_dict(report: AnalysisReport) -> dict:
    prof, eff = report.profile, report.efficiency
    separating = {}
    for a, u in eff.separating.items():
        separating[prof.name(a)] = {
            "utilities": [[_fmt(v) for v in row] for row in u.u],
            "margins": {prof.name(b): _fmt(d) for b, d in separation_margins(a, u, prof).items()},
        }
    return {
        "schema": SCHEMA,
        "profile": prof.serialize(),
        "alternatives": [prof.name(x) for x in prof.alternatives],
        "lottery": _lottery_dict(report.lottery, prof),
        "efficiency": {
            "ex_post": eff.ex_post,
            "interesting": eff.interesting,
            "degenerate": eff.degenerate,
            "sd_efficient": eff.sd_efficient,
            "sw_efficient": eff.sw_efficient,
            "sw_by_enumeration": eff.sw_by_enumeration,
        },
        "witnesses": {
            "sd_dominating_lottery": None if eff.sd_witness is None else _lottery_dict(eff.sd_witness, prof),
            "sw_dominating_support": None if eff.dominating_support is None
            else [prof.name(x) for x in sorted(eff.dominating_support)],
            "separating_utilities": separating,
        },
        "conventions": {"consistency": report.consistency, "enumeration_cap": report.enumeration_cap},
        "timing": {"seconds": round(report.seconds, 6)},
        "notes": list(report.notes),
    }


def _reindex(prof: PreferenceProfile, names: list[str]) -> PreferenceProfile:
    """Renumber alternatives so index order follows ``names``; utility columns in a report use that order."""
    if sorted(names) != sorted(prof.name(x) for x in prof.alternatives):
        raise ValueError("report alternatives do not match its profile")
    new = {prof.index(name): k for k, name in enumerate(names)}
    orders = tuple(WeakOrder(tuple(frozenset(new[x] for x in t) for t in o.tiers)) for o in prof.orders)
    return PreferenceProfile(orders, tuple(names), prof.agents)


def from_dict(data: dict) -> AnalysisReport:
    if data.get("schema") != SCHEMA:
        raise ValueError(f"unsupported report schema {data.get('schema')!r}")
    prof = _reindex(parse_profile(data["profile"]), data["alternatives"])
    e, w = data["efficiency"], data["witnesses"]
    support = w["sw_dominating_support"]
    eff = EfficiencyReport(
        ex_post=e["ex_post"],
        interesting=e["interesting"],
        degenerate=e["degenerate"],
        sd_efficient=e["sd_efficient"],
        sw_efficient=e["sw_efficient"],
        sw_by_enumeration=e["sw_by_enumeration"],
        sd_witness=None if w["sd_dominating_lottery"] is None else _lottery_from_dict(w["sd_dominating_lottery"], prof),
        dominating_support=None if support is None else frozenset(prof.index(x) for x in support),
        separating={
            prof.index(a): UtilityProfile(tuple(tuple(parse_rational(v) for v in row) for row in s["utilities"]))
            for a, s in w["separating_utilities"].items()
        },
    )
    return AnalysisReport(
        prof,
        _lottery_from_dict(data["lottery"], prof),
        eff,
        consistency=data["conventions"]["consistency"],
        enumeration_cap=data["conventions"]["enumeration_cap"],
        seconds=data["timing"]["seconds"],
        notes=list(data.get("notes", [])),
    )


def verify_report(report: AnalysisReport) -> list[str]:
    """Re-check every witness against the echoed instance; returns the problems found."""
    prof, p, eff = report.profile, report.lottery, report.efficiency
    problems = []
    if eff.sd_witness is not None and not sd_dominates(eff.sd_witness, p, prof):
        problems.append("SD witness does not SD-dominate the lottery")
    if eff.sd_efficient == (eff.sd_witness is not None):
        problems.append("SD verdict and SD witness disagree")
    if eff.dominating_support is not None and not support_dominates(eff.dominating_support, p.support, prof):
        problems.append("dominating support does not SW-dominate the lottery")
    for a, u in eff.separating.items():
        sums = u.column_sums()
        if not is_consistent(u, prof):
            problems.append(f"separating utilities for {prof.name(a)} are inconsistent")
        if sums[a] <= welfare(u, p):
            problems.append(f"separating utilities for {prof.name(a)} do not put it ahead of the lottery")
    if (eff.sw_efficient and not eff.sd_efficient) or (eff.sd_efficient and not eff.ex_post):
        problems.append("efficiency chain sw => sd => ex post violated")
    return problems


def format_text(report: AnalysisReport) -> str:
    prof, eff = report.profile, report.efficiency
    yes = {True: "yes", False: "no", None: "skipped"}
    lines = [
        f"lottery: {report.lottery.format(prof)}",
        f"ex post efficient: {yes[eff.ex_post]}",
        f"interesting: {yes[eff.interesting]}",
        f"degenerate: {yes[eff.degenerate]}",
        f"SD-efficient: {yes[eff.sd_efficient]}",
    ]
    if eff.sd_witness is not None:
        lines.append(f"  SD-dominating lottery: {eff.sd_witness.format(prof)}")
    lines.append(f"SW-efficient (characterization): {yes[eff.sw_efficient]}")
    lines.append(f"SW-efficient (enumeration): {yes[eff.sw_by_enumeration]}")
    if eff.dominating_support is not None:
        names = ", ".join(prof.name(x) for x in sorted(eff.dominating_support))
        lines.append(f"  SW-dominating support: {{{names}}}")
    for a, u in eff.separating.items():
        lines.append(f"  utilities separating {prof.name(a)}: {format_utilities(u)}")
    lines.append(f"consistency convention: {report.consistency}")
    lines.extend(f"note: {n}" for n in report.notes)
    return "\n".join(lines)


def format_utilities(u: UtilityProfile) -> str:
    return "[" + ", ".join("[" + ", ".join(str(v) for v in row) + "]" for row in u.u) + "]"
