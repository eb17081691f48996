import sys
from fractions import Fraction
from pathlib import Path

from hypothesis import settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from tridet.exact_core import Poly  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

F = Fraction


def P(*coeffs):
    """Poly from ascending coefficients, ints or 'a/b' strings."""
    return Poly([F(c) for c in coeffs])


X3_MINUS_X = P(0, -1, 0, 1)
X3_PLUS_X = P(0, 1, 0, 1)
QUINTIC = P(0, 4, 0, -5, 0, 1)


def cubic(s, t):
    return P(t, s, 0, 1)


def q_a(a):
    return Poly.from_roots([F(a), F(-3, 2), F(-1, 2), F(1, 2)])


rats = st.builds(
    F, st.integers(-10, 10), st.integers(1, 4)
)


@st.composite
def monic_polys(draw, min_degree=1, max_degree=8):
    n = draw(st.integers(min_degree, max_degree))
    return Poly(draw(st.lists(rats, min_size=n, max_size=n)) + [F(1)])


@st.composite
def monic_pairs(draw, min_degree=1, max_degree=8):
    p = draw(monic_polys(min_degree, max_degree))
    n = p.degree
    q = Poly(draw(st.lists(rats, min_size=n - 1, max_size=n - 1)) + [F(1)])
    return p, q


@st.composite
def rooted_polys(draw, max_roots=6):
    """Distinct rational roots and the monic polynomial they define."""
    roots = draw(st.lists(rats, min_size=1, max_size=max_roots, unique=True))
    return roots, Poly.from_roots(roots)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
