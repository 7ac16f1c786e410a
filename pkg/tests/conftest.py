import itertools
from math import gcd, prod

from hypothesis import assume, settings
from hypothesis import strategies as st

from mixedcayley.group import AbelianGroup

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def laplace_det(m):
    """Cofactor expansion, used as an oracle independent of Bareiss elimination."""
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * laplace_det([row[:j] + row[j + 1:] for row in m[1:]])
               for j in range(n) if m[0][j])


def determinantal_divisors(m):
    """gcd of all i x i minors, i = 1..n."""
    n = len(m)
    out = []
    for i in range(1, n + 1):
        g = 0
        for rows in itertools.combinations(range(n), i):
            for cols in itertools.combinations(range(n), i):
                g = gcd(g, laplace_det([[m[r][c] for c in cols] for r in rows]))
        out.append(g)
    return out


@st.composite
def nonsingular_matrices(draw, n_min=1, n_max=3, bound=6):
    n = draw(st.integers(n_min, n_max))
    entries = st.integers(-bound, bound)
    m = draw(st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n))
    assume(laplace_det(m) != 0)
    return m


@st.composite
def small_groups(draw, max_factors=3, max_factor=6, max_order=72):
    factors = draw(st.lists(st.integers(2, max_factor), min_size=1, max_size=max_factors))
    assume(prod(factors) <= max_order)
    return AbelianGroup(tuple(factors))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
