"""Hypothesis strategies for small profiles and lotteries."""

from fractions import Fraction

from hypothesis import strategies as st

from sweff.model import Lottery, PreferenceProfile


@st.composite
def rank_vectors(draw, m):
    # any vector works: from_ranks compresses the levels
    return draw(st.lists(st.integers(0, m - 1), min_size=m, max_size=m))


@st.composite
def profiles(draw, max_n=3, max_m=4, min_m=1):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(min_m, max_m))
    return PreferenceProfile.from_ranks([draw(rank_vectors(m)) for _ in range(n)])


@st.composite
def lotteries(draw, m, max_weight=6):
    weights = draw(st.lists(st.integers(0, max_weight), min_size=m, max_size=m).filter(any))
    total = sum(weights)
    return Lottery(tuple(Fraction(w, total) for w in weights))


@st.composite
def profile_and_lotteries(draw, k=1, **kw):
    profile = draw(profiles(**kw))
    return (profile, *[draw(lotteries(profile.m)) for _ in range(k)])
