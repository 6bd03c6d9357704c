import random

import pytest

from algsubshift import GF, LaurentPoly


def random_poly(rng: random.Random, ring, deg: int = 4, density: float = 0.4, low: int = 0) -> LaurentPoly:
    """Random nonzero polynomial with exponents in ``[low, low + deg]``."""
    p = ring.p or 5
    while True:
        terms = {}
        for i in range(low, low + deg + 1):
            for j in range(low, low + deg + 1):
                if rng.random() < density:
                    terms[(i, j)] = rng.randrange(1, p) if ring.p else rng.randrange(-3, 4)
        f = LaurentPoly(ring, terms)
        if not f.is_zero():
            return f


@pytest.fixture
def F2():
    return GF(2)


@pytest.fixture
def F3():
    return GF(3)


from hypothesis import strategies as st  # noqa: E402


def polys(ring, lo: int = -2, hi: int = 2, max_terms: int = 6, nonzero: bool = False):
    """Hypothesis strategy for Laurent polynomials with exponents in [lo, hi]."""
    exps = st.tuples(st.integers(lo, hi), st.integers(lo, hi))
    coefs = st.integers(1, ring.p - 1) if ring.p else st.integers(-5, 5)
    terms = st.dictionaries(exps, coefs, min_size=1 if nonzero else 0, max_size=max_terms)
    out = terms.map(lambda t: LaurentPoly(ring, t))
    return out.filter(lambda f: not f.is_zero()) if nonzero else out
