"""
Hypothesis strategies for signed permutations and digit tuples.
"""
from hypothesis import HealthCheck, settings, strategies as st

from core.inversions import InversionTable, digit_bound
from core.permutations import from_window

settings.register_profile("typeb", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("typeb")


@st.composite
def signed_permutations(draw, min_n: int = 1, max_n: int = 8, n: int | None = None):
    size = n if n is not None else draw(st.integers(min_value=min_n, max_value=max_n))
    values = draw(st.permutations(range(1, size + 1)))
    negated = draw(st.lists(st.booleans(), min_size=size, max_size=size))
    return from_window(size, [-v if neg else v for v, neg in zip(values, negated)])


@st.composite
def inversion_tables(draw, min_n: int = 1, max_n: int = 16, n: int | None = None):
    size = n if n is not None else draw(st.integers(min_value=min_n, max_value=max_n))
    digits = [draw(st.integers(min_value=0, max_value=digit_bound(i, size))) for i in range(1, size + 1)]
    return InversionTable(digits=tuple(digits))


@st.composite
def permutation_pairs(draw, min_n: int = 1, max_n: int = 8):
    """Two elements of the same B_n."""
    size = draw(st.integers(min_value=min_n, max_value=max_n))
    return draw(signed_permutations(n=size)), draw(signed_permutations(n=size))
