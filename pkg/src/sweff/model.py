"""Preference profiles, lotteries and utility profiles over a finite set of alternatives.

Every numeric value is a :class:`fractions.Fraction`; nothing in this package
uses floating point for a decision.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence


class ProfileError(ValueError):
    """Raised for structurally invalid profiles, lotteries and utility profiles."""


class PreconditionError(ValueError):
    """An operation was called outside the hypotheses it is defined under."""


class ParseError(ProfileError):
    """Syntax error in profile or lottery text; carries a 1-based position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class WeakOrder:
    """A complete weak order stored as indifference tiers, best tier first.

    ``rank(x)`` counts tiers from the bottom, so the worst tier has rank 0.
    """

    tiers: tuple[frozenset[int], ...]
    _rank: tuple[int, ...] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        tiers = tuple(frozenset(t) for t in self.tiers)
        object.__setattr__(self, "tiers", tiers)
        if not tiers or any(not t for t in tiers):
            raise ProfileError("a weak order needs nonempty tiers")
        members = [x for t in tiers for x in t]
        m = len(members)
        if len(set(members)) != m:
            raise ProfileError("tiers of a weak order must be disjoint")
        if set(members) != set(range(m)):
            raise ProfileError("tiers must cover alternatives 0..m-1 exactly")
        rank = [0] * m
        for pos, tier in enumerate(tiers):
            for x in tier:
                rank[x] = len(tiers) - 1 - pos
        object.__setattr__(self, "_rank", tuple(rank))

    @classmethod
    def from_ranks(cls, ranks: Sequence[int]) -> "WeakOrder":
        """Build the order in which a higher number means better."""
        levels = sorted(set(ranks), reverse=True)
        return cls(tuple(frozenset(x for x, r in enumerate(ranks) if r == lvl) for lvl in levels))

    @property
    def m(self) -> int:
        return len(self._rank)

    @property
    def ranks(self) -> tuple[int, ...]:
        return self._rank

    def rank(self, x: int) -> int:
        return self._rank[x]

    def weakly_prefers(self, x: int, y: int) -> bool:
        return self._rank[x] >= self._rank[y]

    def strictly_prefers(self, x: int, y: int) -> bool:
        return self._rank[x] > self._rank[y]

    def indifferent(self, x: int, y: int) -> bool:
        return self._rank[x] == self._rank[y]

    def is_strict(self) -> bool:
        return len(self.tiers) == self.m


@dataclass(frozen=True)
class PreferenceProfile:
    orders: tuple[WeakOrder, ...]
    names: tuple[str, ...] | None = None
    agents: tuple[str, ...] | None = None

    def __post_init__(self):
        orders = tuple(self.orders)
        object.__setattr__(self, "orders", orders)
        if not orders:
            raise ProfileError("a profile needs at least one agent")
        m = orders[0].m
        if any(o.m != m for o in orders):
            raise ProfileError("all agents must order the same alternatives")
        if self.names is not None:
            names = tuple(self.names)
            if len(names) != m or len(set(names)) != m:
                raise ProfileError("need exactly one distinct name per alternative")
            object.__setattr__(self, "names", names)
        if self.agents is not None:
            agents = tuple(self.agents)
            if len(agents) != len(orders):
                raise ProfileError("need exactly one label per agent")
            object.__setattr__(self, "agents", agents)

    @classmethod
    def from_ranks(cls, ranks: Iterable[Sequence[int]], names=None) -> "PreferenceProfile":
        return cls(tuple(WeakOrder.from_ranks(r) for r in ranks), names)

    @property
    def n(self) -> int:
        return len(self.orders)

    @property
    def m(self) -> int:
        return self.orders[0].m

    @property
    def alternatives(self) -> range:
        return range(self.m)

    def name(self, x: int) -> str:
        return self.names[x] if self.names is not None else default_name(x)

    def agent_label(self, i: int) -> str:
        return self.agents[i] if self.agents is not None else str(i + 1)

    def index(self, name: str) -> int:
        names = self.names if self.names is not None else tuple(default_name(x) for x in self.alternatives)
        try:
            return names.index(name)
        except ValueError:
            raise ProfileError(f"unknown alternative {name!r}") from None

    def serialize(self) -> str:
        lines = []
        for i, order in enumerate(self.orders):
            tiers = (" ~ ".join(self.name(x) for x in sorted(t, key=self.name)) for t in order.tiers)
            lines.append(f"{self.agent_label(i)}: " + " > ".join(tiers))
        return "\n".join(lines) + "\n"


def default_name(x: int) -> str:
    """Names a, b, ..., z, then a1, b1, ..."""
    letter = chr(ord("a") + x % 26)
    return letter if x < 26 else f"{letter}{x // 26}"


_NAME = r"[^\s:>~]+"
_TOKEN = re.compile(rf"\s*(?:({_NAME})|([>~])|(\S))")
_HEADER = re.compile(rf"\s*({_NAME})\s*:")


def _parse_order_line(text: str, lineno: int) -> tuple[str, list[list[str]], list[int]]:
    header = _HEADER.match(text)
    if header is None:
        raise ParseError("expected '<agent>:' at start of line", lineno, 1)
    label = header.group(1)
    tiers: list[list[str]] = [[]]
    columns: list[int] = []
    pos = header.end()
    expect_name = True
    while True:
        match = _TOKEN.match(text, pos)
        if match is None:
            break
        column = match.start(match.lastindex) + 1
        name, sep, junk = match.groups()
        if junk is not None:
            raise ParseError(f"unexpected character {junk!r}", lineno, column)
        if expect_name:
            if name is None:
                raise ParseError(f"expected an alternative name, got {sep!r}", lineno, column)
            tiers[-1].append(name)
            columns.append(column)
        else:
            if sep is None:
                raise ParseError(f"expected '>' or '~', got {name!r}", lineno, column)
            if sep == ">":
                tiers.append([])
        expect_name = not expect_name
        pos = match.end()
    if expect_name:
        raise ParseError("order ends without an alternative", lineno, len(text) + 1)
    return label, tiers, columns


def parse_profile(text: str) -> PreferenceProfile:
    """Parse one ``<agent>: x > y ~ z`` line per agent.

    Alternatives are indexed in order of appearance in the first agent's
    line. Blank lines and lines starting with ``#`` are ignored.
    """
    names: list[str] | None = None
    agents: list[str] = []
    orders: list[WeakOrder] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        label, tiers, columns = _parse_order_line(raw, lineno)
        flat = [x for t in tiers for x in t]
        if names is None:
            names = []
            for x, col in zip(flat, columns):
                if x in names:
                    raise ParseError(f"alternative {x!r} appears twice", lineno, col)
                names.append(x)
        index = {x: k for k, x in enumerate(names)}
        seen: set[str] = set()
        for x, col in zip(flat, columns):
            if x not in index:
                raise ParseError(f"unknown alternative {x!r}", lineno, col)
            if x in seen:
                raise ParseError(f"alternative {x!r} appears twice", lineno, col)
            seen.add(x)
        missing = [x for x in names if x not in seen]
        if missing:
            raise ProfileError(f"agent {label} (line {lineno}): order is missing alternative(s) {', '.join(missing)}")
        if label in agents:
            raise ParseError(f"duplicate agent label {label!r}", lineno, 1)
        agents.append(label)
        orders.append(WeakOrder(tuple(frozenset(index[x] for x in t) for t in tiers)))
    if names is None:
        raise ProfileError("profile text contains no agents")
    return PreferenceProfile(tuple(orders), tuple(names), tuple(agents))


@dataclass(frozen=True)
class Lottery:
    """A probability distribution over alternatives ``0..m-1``, stored densely."""

    probs: tuple[Fraction, ...]

    def __post_init__(self):
        probs = tuple(Fraction(p) for p in self.probs)
        object.__setattr__(self, "probs", probs)
        if not probs:
            raise ProfileError("a lottery needs at least one alternative")
        if any(p < 0 for p in probs):
            raise ProfileError("probabilities must be nonnegative")
        total = sum(probs)
        if total != 1:
            raise ProfileError(f"probabilities sum to {total}, not 1")

    @classmethod
    def degenerate(cls, x: int, m: int) -> "Lottery":
        return cls(tuple(Fraction(int(k == x)) for k in range(m)))

    @classmethod
    def uniform(cls, support: Iterable[int], m: int) -> "Lottery":
        support = set(support)
        if not support:
            raise ProfileError("uniform lottery needs a nonempty support")
        share = Fraction(1, len(support))
        return cls(tuple(share if k in support else Fraction(0) for k in range(m)))

    @classmethod
    def from_dict(cls, probs: dict[int, Fraction], m: int) -> "Lottery":
        return cls(tuple(Fraction(probs.get(k, 0)) for k in range(m)))

    @property
    def m(self) -> int:
        return len(self.probs)

    def __getitem__(self, x: int) -> Fraction:
        return self.probs[x]

    @property
    def support(self) -> frozenset[int]:
        return frozenset(x for x, p in enumerate(self.probs) if p > 0)

    def format(self, profile: PreferenceProfile | None = None) -> str:
        name = profile.name if profile is not None else default_name
        return " ".join(f"{name(x)}:{p}" for x, p in enumerate(self.probs) if p)


_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?")


def parse_rational(text: str) -> Fraction:
    if not _RATIONAL.fullmatch(text):
        raise ProfileError(f"not a rational number: {text!r}")
    return Fraction(text)


def parse_lottery(text: str, profile: PreferenceProfile) -> Lottery:
    """Parse whitespace-separated ``name:p`` tokens; omitted alternatives get 0."""
    probs: dict[int, Fraction] = {}
    for token in text.split():
        name, sep, value = token.rpartition(":")
        if not sep or not name:
            raise ProfileError(f"expected name:probability, got {token!r}")
        x = profile.index(name)
        if x in probs:
            raise ProfileError(f"alternative {name!r} listed twice")
        p = parse_rational(value)
        if p < 0:
            raise ProfileError(f"negative probability for {name!r}: {p}")
        probs[x] = p
    total = sum(probs.values(), Fraction(0))
    if total != 1:
        raise ProfileError(f"probabilities sum to {total}, not 1")
    return Lottery.from_dict(probs, profile.m)


@dataclass(frozen=True)
class UtilityProfile:
    """``u[i][x]`` is agent i's utility for alternative x."""

    u: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(v) for v in row) for row in self.u)
        if not rows or len({len(r) for r in rows}) != 1 or not rows[0]:
            raise ProfileError("utility profile must be a nonempty rectangular matrix")
        object.__setattr__(self, "u", rows)

    @property
    def n(self) -> int:
        return len(self.u)

    @property
    def m(self) -> int:
        return len(self.u[0])

    def __getitem__(self, i: int) -> tuple[Fraction, ...]:
        return self.u[i]

    def column_sums(self) -> tuple[Fraction, ...]:
        return tuple(sum(col) for col in zip(*self.u))


def check_dimensions(u: UtilityProfile, profile: PreferenceProfile) -> None:
    if (u.n, u.m) != (profile.n, profile.m):
        raise ProfileError(f"utility profile is {u.n}x{u.m}, profile is {profile.n}x{profile.m}")


def is_consistent(u: UtilityProfile, profile: PreferenceProfile, strict: bool = False) -> bool:
    """Whether ``u`` is weakly monotone in every agent's order.

    With ``strict=True`` strict preferences must also get strictly larger
    utility; that variant is only offered for sensitivity checks.
    """
    check_dimensions(u, profile)
    for row, order in zip(u.u, profile.orders):
        r = order.ranks
        for x in profile.alternatives:
            for y in profile.alternatives:
                if r[x] >= r[y] and row[x] < row[y]:
                    return False
                if strict and r[x] > r[y] and row[x] <= row[y]:
                    return False
    return True
