import itertools
import sys

from hypothesis import settings, strategies as st

from degexcess.monomial import minimalize

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

SAMPLE = minimalize([(2, 0, 0), (0, 3, 0), (1, 2, 1)])


@st.composite
def small_ideals(draw, min_vars=1, max_vars=3, max_gens=4, max_coord=4):
    s = draw(st.integers(min_vars, max_vars))
    vec = st.tuples(*[st.integers(0, max_coord)] * s).filter(any)
    gens = draw(st.lists(vec, min_size=1, max_size=max_gens))
    return minimalize(gens, s)


def brute_power(ideal, n):
    """Minimalized set of all n-fold generator sums, by direct enumeration."""
    sums = [tuple(map(sum, zip(*c))) for c in itertools.combinations_with_replacement(ideal.generators, n)]
    return minimalize(sums, ideal.num_vars)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
