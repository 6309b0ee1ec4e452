"""Acceptance suite: exhaustive checks over every weak-order profile with at most
three agents and three alternatives, plus every strict assignment instance with
two or three agents.

Each criterion prints one PASS/FAIL line. Run directly with
``python3 -m tests.test_acceptance`` or through pytest (add ``-s`` to see the lines).
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

import pytest

from sweff import verify as V
from sweff.verify import Verification, run_verification

PROFILE_COUNTS = {
    (1, 1): 1, (1, 2): 3, (1, 3): 13,
    (2, 1): 1, (2, 2): 9, (2, 3): 169,
    (3, 1): 1, (3, 2): 27, (3, 3): 2197,
}
INSTANCE_COUNTS = {2: 4, 3: 216}
CORPUS_SECONDS = 600
ASSIGNMENT_SECONDS = 300


@dataclass
class Outcome:
    number: int
    title: str
    ok: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} criterion {self.number}: {self.title} ({self.detail})"


def _clean(ver: Verification, *names: str) -> tuple[bool, str]:
    parts, ok = [], True
    for name in names:
        r = ver[name]
        ok &= r.checked > 0 and r.failures == 0
        parts.append(f"{name} {r.checked} checked/{r.failures} failed")
        if r.counterexample:
            parts.append(f"first counterexample: {r.counterexample}")
    return ok, "; ".join(parts)


def evaluate(corpus: Verification, assignments: Verification) -> list[Outcome]:
    out = []

    ok, detail = _clean(corpus, V.CHARACTERIZATION, V.INTERESTING_REJECTED, V.UNINTERESTING_ACCEPTED)
    ok &= corpus.profiles == PROFILE_COUNTS and corpus.seconds < CORPUS_SECONDS
    out.append(Outcome(1, "characterization equals enumeration oracle", ok,
                       f"{sum(corpus.profiles.values())} profiles, {corpus.seconds:.0f}s; {detail}"))

    ok, detail = _clean(corpus, V.EFFICIENCY_CHAIN)
    out.append(Outcome(2, "sw => sd => ex post", ok, detail))

    ok, detail = _clean(corpus, V.SEPARATION)
    out.append(Outcome(3, "separating utilities with margin 1/m", ok, detail))

    ok, detail = _clean(corpus, V.NO_INDIFFERENCE_CHARACTERIZATION)
    out.append(Outcome(4, "without Pareto indifference: ex post and degenerate", ok, detail))

    ok, detail = _clean(corpus, V.NONDEGENERATE_NOT_EX_POST)
    out.append(Outcome(5, "uninteresting non-degenerate lotteries are not ex post", ok, detail))

    ok, detail = _clean(assignments, V.NO_INDIFFERENCE, V.ASSIGNMENT_CHARACTERIZATION, V.EFFICIENCY_CHAIN)
    ok &= assignments.instances == INSTANCE_COUNTS and assignments.seconds < ASSIGNMENT_SECONDS
    ok &= assignments[V.NO_INDIFFERENCE].checked == sum(INSTANCE_COUNTS.values())
    out.append(Outcome(6, "assignments: degenerate on Pareto-optimal assignments", ok,
                       f"{assignments.instances} instances, {assignments.seconds:.0f}s; {detail}"))

    ok1, d1 = _clean(corpus, V.SD_WITNESS, V.SD_MESH)
    ok2, d2 = _clean(assignments, V.SD_WITNESS)
    out.append(Outcome(7, "SD certificates sound", ok1 and ok2, f"profiles: {d1}; assignments: {d2}"))

    ok, detail = _clean(corpus, V.SUPPORT_SUFFICIENCY, V.GRID_SOUNDNESS, V.CONE_MEMBERSHIP)
    out.append(Outcome(8, "support sufficiency and grid soundness, L = 3", ok, detail))
    return out


def compute() -> list[Outcome]:
    corpus = run_verification(n_max=3, m_max=3, per_support=2, grid_levels=3, grid_n_max=2, seed=0)
    assignments = run_verification(per_support=2, seed=0, assignment_n=(2, 3), profiles=False)
    return evaluate(corpus, assignments)


@pytest.fixture(scope="module")
def outcomes():
    return {o.number: o for o in compute()}


@pytest.mark.parametrize("number", range(1, 9))
def test_criterion(outcomes, number, capsys):
    outcome = outcomes[number]
    with capsys.disabled():
        print("\n" + outcome.line())
    assert outcome.ok, outcome.line()


def main() -> int:
    results = compute()
    for o in results:
        print(o.line())
    return 0 if all(o.ok for o in results) else 1


if __name__ == "__main__":
    sys.exit(main())
