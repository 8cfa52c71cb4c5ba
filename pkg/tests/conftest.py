import os

import hypothesis
import hypothesis.strategies as st
import pytest

from coxgrowth.catalog import catalog_entries
from coxgrowth.coxeter import INF, from_graph
from coxgrowth.polyarith import IntPolynomial, rf_normalize

hypothesis.settings.register_profile("ci", max_examples=60, deadline=None, derandomize=True)
hypothesis.settings.register_profile("thorough", max_examples=500, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))

LABELS = [2, 2, 2, 3, 3, 4, 5, 6, 7, INF]


@st.composite
def coxeter_matrices(draw, min_rank=1, max_rank=5, labels=LABELS):
    n = draw(st.integers(min_rank, max_rank))
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            edges.append((i, j, draw(st.sampled_from(labels))))
    return from_graph(n, edges)


small_ints = st.integers(-6, 6)


@st.composite
def polynomials(draw, max_degree=4, nonzero=False):
    coeffs = draw(st.lists(small_ints, min_size=1, max_size=max_degree + 1))
    p = IntPolynomial(tuple(coeffs))
    if nonzero and p.is_zero():
        p = IntPolynomial((draw(st.sampled_from([-2, -1, 1, 3])),))
    return p


@st.composite
def rational_functions(draw, max_degree=3):
    num = draw(polynomials(max_degree))
    den = draw(polynomials(max_degree, nonzero=True))
    return rf_normalize(num, den)


@pytest.fixture(scope="session")
def entries():
    return catalog_entries()


@pytest.fixture(scope="session")
def computed(entries):
    """Steinberg series for every catalog entry, computed once."""
    from coxgrowth.poincare import steinberg_poincare
    return {e.id: steinberg_poincare(e.matrix) for e in entries}
