import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algsubshift import GF, ZZ, LaurentPoly
from algsubshift.complexity import (
    Shape,
    annihilator_from_kernel,
    complexity_count,
    enumerate_patterns,
    kernel_annihilators,
    nullspace_integer,
    nullspace_mod_p,
    relation_polynomial,
    scattered_square,
)
from algsubshift.config import (
    AdditiveCASource,
    Region,
    TorusSource,
    Window,
    check_annihilates,
    constant_source,
    sublattice_counterexample,
    zlift,
)
from algsubshift.errors import PreconditionError

F2, F3 = GF(2), GF(3)


def test_scattered_square():
    assert scattered_square(3, 2).cells == tuple((a, b) for a in (0, 2, 4) for b in (0, 2, 4))
    assert len(scattered_square(1, 7)) == 1
    assert scattered_square(2, 1) == Shape.block(2)


def test_shape_text_roundtrip():
    D = Shape([(0, 0), (2, -1), (0, 0)])
    assert len(D) == 2
    assert Shape.parse(D.to_text()) == D
    with pytest.raises(ValueError):
        Shape.parse("0 0\n")


def test_counterexample_complexity():
    count, low = complexity_count(sublattice_counterexample(), scattered_square(3, 2), Region(-32, -32, 64, 64))
    assert (count, low) == (7, True)


def test_constant_complexity():
    assert complexity_count(constant_source(F3, 1), scattered_square(3, 1)) == (1, True)


def test_pascal_window_is_high_complexity():
    seed = [0] * 32
    seed[16] = 1
    src = AdditiveCASource(F2, LaurentPoly.parse("1+X", F2), seed)
    assert len(enumerate_patterns(src, Shape.block(2), Region(0, -32, 32, 32))) > 4


def test_random_torus_is_high_complexity():
    rng = np.random.default_rng(16)
    src = TorusSource(Window(F2, (0, 0), rng.integers(0, 2, size=(16, 16))))
    count, low = complexity_count(src, Shape.block(2))
    assert count > 4 and not low


def test_exactness_flag():
    src = TorusSource(Window(F2, (0, 0), [[0, 1], [1, 1]]))
    assert enumerate_patterns(src, Shape.block(2)).exact
    assert not enumerate_patterns(src, Shape.block(2), Region(0, 0, 1, 1)).exact
    with pytest.raises(PreconditionError):
        enumerate_patterns(sublattice_counterexample(), Shape.block(2))


def test_pattern_count_monotone_in_region():
    src = sublattice_counterexample()
    D = scattered_square(3, 2)
    counts = [len(enumerate_patterns(src, D, Region(-k, -k, 2 * k, 2 * k))) for k in (1, 2, 4, 8, 16)]
    assert counts == sorted(counts)


def test_nullspaces():
    assert nullspace_mod_p([[1, 1, 0], [0, 1, 1]], 3, 2) == [[1, 1, 1]]
    assert nullspace_mod_p([[1, 0], [0, 1]], 2, 3) == []
    assert nullspace_integer([[2, 4, -2]], 3) == [[2, -1, 0], [1, 0, 1]]
    for a in nullspace_integer([[1, 2, 3], [0, 5, 7]], 3):
        assert sum(x * y for x, y in zip([1, 2, 3], a)) == 0
        assert sum(x * y for x, y in zip([0, 5, 7], a)) == 0


@settings(max_examples=50, deadline=None)
@given(st.lists(st.lists(st.integers(0, 4), min_size=4, max_size=4), min_size=1, max_size=5))
def test_nullspace_mod_p_property(rows):
    for a in nullspace_mod_p(rows, 4, 5):
        assert any(a)
        assert all(sum(x * y for x, y in zip(r, a)) % 5 == 0 for r in rows)


def test_relation_support_is_mirrored():
    f = relation_polynomial(Shape([(0, 0), (1, 2)]), [1, -1], ZZ)
    assert f == LaurentPoly.parse("1 - X^-1*Y^-2", ZZ)


def test_vertical_stripes():
    # c[i, j] = j mod 2
    src = TorusSource(Window(F2, (0, 0), [[0, 1]]))
    D = Shape([(0, 0), (0, 1), (0, 2)])
    pats = enumerate_patterns(src, D).patterns
    assert set(pats) == {(0, 1, 0), (1, 0, 1)}
    cert = annihilator_from_kernel(src, D)
    assert cert.poly == LaurentPoly.parse("1 + Y^-2", F2)
    assert cert.verified and cert.scope == "exact-torus"


def test_constant_relation():
    cert = annihilator_from_kernel(constant_source(F2, 1), Shape([(0, 0), (1, 0)]))
    assert cert.poly == LaurentPoly.parse("1 + X^-1", F2)


def test_affine_fallback():
    # constant 1 over Z: no homogeneous relation on a single cell, only c = 1
    src = constant_source(F2, 1)
    polys = list(kernel_annihilators(src, Shape([(0, 0)]), ring=ZZ))
    assert polys == [LaurentPoly.parse("X - 1", ZZ)]
    cert = annihilator_from_kernel(src, Shape([(0, 0)]), ring=ZZ)
    assert cert is not None and cert.verified


def test_full_complexity_has_no_annihilator():
    rng = np.random.default_rng(7)
    src = TorusSource(Window(F2, (0, 0), rng.integers(0, 2, size=(12, 12))))
    assert annihilator_from_kernel(src, Shape.block(2)) is None


def test_integer_annihilator_on_counterexample():
    cert = annihilator_from_kernel(sublattice_counterexample(), scattered_square(3, 2),
                                   Region(-32, -32, 64, 64), ZZ)
    assert cert is not None and cert.verified and cert.poly.ring == ZZ


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5), st.integers(0, 2**31), st.sampled_from([F2, F3]))
def test_low_complexity_tori_have_verified_annihilators(w, h, seed, ring):
    rng = np.random.default_rng(seed)
    src = TorusSource(Window(ring, (0, 0), rng.integers(0, ring.p, size=(w, h))))
    D = Shape.block(4)
    count, low = complexity_count(src, D)
    if not low:
        return
    for r in (ring, ZZ):
        cert = annihilator_from_kernel(src, D, ring=r)
        assert cert is not None and cert.verified and cert.scope == "exact-torus"
        target = src if r == ring else TorusSource(zlift(src.domain()))
        assert check_annihilates(cert.poly, target).verified
