import random
from fractions import Fraction

from hypothesis import strategies as st

from tournament_fvs.core import Tournament


@st.composite
def tournaments(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    flips = draw(st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    rows = [0] * n
    it = iter(flips)
    for u in range(n):
        for v in range(u + 1, n):
            if next(it):
                rows[v] |= 1 << u
            else:
                rows[u] |= 1 << v
    return Tournament(n, tuple(rows))


def weights_for(n):
    return st.lists(
        st.fractions(min_value=0, max_value=10, max_denominator=6), min_size=n, max_size=n
    )


@st.composite
def weighted_tournaments(draw, min_n=0, max_n=8):
    T = draw(tournaments(min_n, max_n))
    w = draw(weights_for(T.n))
    return T, w


def rng(seed=0):
    return random.Random(seed)


def fr(*xs):
    return [Fraction(x) for x in xs]


# one line per acceptance criterion, shown in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
