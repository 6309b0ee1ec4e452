"""Exhaustive small-instance corpora: weak orders, profiles and test lotteries."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, product
from typing import Iterator

from .model import Lottery, PreferenceProfile, WeakOrder


def weak_orders(m: int) -> list[WeakOrder]:
    """All complete weak orders on ``m`` alternatives (1, 3, 13, 75, ... of them)."""
    # rank vectors whose values are exactly 0..k-1 for some k
    return [
        WeakOrder.from_ranks(r)
        for r in product(range(m), repeat=m)
        if set(r) == set(range(max(r) + 1))
    ]


def all_profiles(n: int, m: int) -> Iterator[PreferenceProfile]:
    """Every profile of ``n`` labelled agents over ``m`` alternatives."""
    for orders in product(weak_orders(m), repeat=n):
        yield PreferenceProfile(orders)


def nonempty_supports(m: int) -> Iterator[frozenset[int]]:
    for size in range(1, m + 1):
        for s in combinations(range(m), size):
            yield frozenset(s)


def random_lottery(support: frozenset[int], m: int, rng: random.Random, max_weight: int = 9) -> Lottery:
    """A lottery with exactly the given support and random rational weights."""
    weights = {x: rng.randint(1, max_weight) for x in sorted(support)}
    total = sum(weights.values())
    return Lottery.from_dict({x: Fraction(w, total) for x, w in weights.items()}, m)


def sample_lotteries(profile: PreferenceProfile, per_support: int, seed: int) -> Iterator[Lottery]:
    """Uniform lottery on every nonempty support plus ``per_support`` random ones.

    The random stream is keyed by the seed and the profile text, so each
    profile sees the same lotteries whatever order the corpus is visited in.
    """
    rng = random.Random(f"{seed}|{profile.serialize()}")
    for support in nonempty_supports(profile.m):
        yield Lottery.uniform(support, profile.m)
        for _ in range(per_support):
            yield random_lottery(support, profile.m, rng)


def mesh_lotteries(m: int, max_denominator: int = 4) -> list[Lottery]:
    """All lotteries whose probabilities have denominators at most ``max_denominator``."""
    values = sorted({Fraction(k, d) for d in range(1, max_denominator + 1) for k in range(d + 1)})
    out = []
    for head in product(values, repeat=m - 1):
        last = 1 - sum(head, Fraction(0))
        if last in values:
            out.append(Lottery(head + (last,)))
    return out
