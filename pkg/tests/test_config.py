import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algsubshift import GF, ZZ, LaurentPoly
from algsubshift.config import (
    AdditiveCASource,
    FourDotSource,
    Region,
    SublatticeLines,
    SumSource,
    TorusSource,
    Window,
    ZLiftSource,
    additive_ca_torus,
    apply_poly,
    check_annihilates,
    constant_source,
    detect_periods,
    format_grid,
    fourdot_decompose,
    generate_window,
    parse_grid,
    search_monomial_difference_annihilator,
    sublattice_counterexample,
    window_of,
    zlift,
)
from algsubshift.errors import PreconditionError, RegionTooSmallError, UnreachableRegionError
from conftest import polys

F2, F3 = GF(2), GF(3)
f_L = LaurentPoly.parse("1 + X + Y", F2)
f_S = LaurentPoly.parse("1 + X + Y + X*Y", F2)
f_T = LaurentPoly.parse("1 + X^2 + Y^2 + X^2*Y^2", F2)


def P(text, ring=F2):
    return LaurentPoly.parse(text, ring)


def W(rows, ring=F2, origin=(0, 0)):
    """Window from rows listed top to bottom, like the grid text format."""
    vals = np.array(rows[::-1]).T
    return Window(ring, origin, vals)


class TestWindow:
    def test_indexing_and_values_are_frozen(self):
        w = Window(F3, (2, -1), [[1, 2], [4, 5]])
        assert w[2, -1] == 1 and w[3, 0] == 2
        assert w.values.flags.writeable is False
        with pytest.raises(ValueError):
            w.values[0, 0] = 1

    def test_restrict(self):
        w = window_of(sublattice_counterexample(), Region(-4, -4, 8, 8))
        sub = w.restrict(Region(0, 0, 2, 2))
        assert sub.origin == (0, 0) and sub[0, 0] == 1 and sub[1, 0] == 1

    def test_grid_roundtrip(self):
        w = window_of(SublatticeLines(), Region(-3, -2, 7, 5))
        text = format_grid(w)
        assert text.splitlines()[0] == "%grid mod=2 origin=-3,-2 size=7x5"
        assert parse_grid(text) == w

    def test_grid_large_prime_uses_spaces(self):
        w = Window(GF(11), (0, 0), [[10, 3]])
        text = format_grid(w)
        assert text.splitlines()[1] == "3"
        assert parse_grid(text) == w

    def test_parse_grid_errors(self):
        with pytest.raises(ValueError):
            parse_grid("%grid mod=2 origin=0,0 size=2x2\n01\n")


class TestSources:
    def test_sublattice_lines(self):
        src = SublatticeLines()
        h = window_of(SublatticeLines("h"), Region(0, 0, 4, 4))
        v = window_of(SublatticeLines("v"), Region(0, 0, 4, 4))
        assert {(i, j) for i in range(4) for j in range(4) if h[i, j]} == {(0, 0), (2, 0)}
        assert {(i, j) for i in range(4) for j in range(4) if v[i, j]} == {(1, 0), (1, 2)}
        c = window_of(src, Region(0, 0, 4, 4))
        assert c[0, 0] == 1 and c[1, 0] == 1

    def test_counterexample_8x8(self):
        w = generate_window(sublattice_counterexample(), (0, 0), 8, 8)
        expect = np.zeros((8, 8), dtype=int)
        expect[0::2, 0] = 1
        expect[1, 0::2] ^= 1
        assert np.array_equal(w.values, expect)

    def test_pascal_triangle(self):
        src = AdditiveCASource(F2, P("1+X"), (0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0))
        w = window_of(src, Region(0, -4, 12, 5))
        # row -k holds binomial(k, i - 3) mod 2
        from math import comb
        for k in range(5):
            assert [w[i, -k] for i in range(12)] == [comb(k, i - 3) % 2 if i >= 3 else 0 for i in range(12)]
        assert apply_poly(f_L, w).is_zero()

    def test_ca_rows_above_seed(self):
        src = AdditiveCASource(F2, P("1+X"), (1, 0))
        with pytest.raises(UnreachableRegionError):
            window_of(src, Region(0, -1, 2, 3))

    def test_constant_torus(self):
        w = window_of(constant_source(F3, 2), Region(-5, 7, 3, 4))
        assert np.all(w.values == 2)

    def test_sum_source_domain(self):
        a = TorusSource(Window(F2, (0, 0), [[1, 0]]))
        b = TorusSource(Window(F2, (0, 0), [[1], [0], [0]]))
        s = SumSource(a, b)
        assert s.domain().width == 3 and s.domain().height == 2

    def test_zlift(self):
        w = Window(F2, (0, 0), [[0, 1], [1, 0]])
        z = zlift(w)
        assert z.ring == ZZ and np.array_equal(z.values.astype(int), w.values)
        assert window_of(ZLiftSource(constant_source(F3, 2)), Region(0, 0, 2, 2)).values[1, 1] == 2

    def test_ledrappier_torus_closure(self):
        src = additive_ca_torus(P("1+X"), (0, 0, 0, 1, 0, 1))
        assert src is not None and check_annihilates(f_L, src).verified
        # on width four every seed dies out since (1+X)^4 = 1 + X^4
        assert additive_ca_torus(P("1+X"), (0, 0, 0, 1)) is None


class TestApply:
    def test_translation_and_identity(self):
        w = Window(F3, (0, 0), [[1, 2], [0, 1]])
        shifted = apply_poly(P("X", F3), w)
        assert shifted.origin == (1, 0) and np.array_equal(shifted.values, w.values)
        assert apply_poly(LaurentPoly.one(F3), w) == w

    def test_region_too_small(self):
        with pytest.raises(RegionTooSmallError):
            apply_poly(P("1+X^5"), Window(F2, (0, 0), [[1], [0]]))

    @settings(max_examples=40, deadline=None)
    @given(polys(F3, -1, 1, 4, nonzero=True), polys(F3, -1, 1, 4, nonzero=True))
    def test_composition(self, f, g):
        rng = np.random.default_rng(0)
        w = Window(F3, (-3, 2), rng.integers(0, 3, size=(9, 8)))
        both = apply_poly(f * g, w)
        step = apply_poly(f, apply_poly(g, w))
        assert both.region == step.region and both == step


class TestAnnihilation:
    def test_examples(self):
        assert check_annihilates(f_T, sublattice_counterexample(), Region(-64, -64, 128, 128)).verified
        assert check_annihilates(f_S, FourDotSource((0, 1, 1), (1, 0, 0, 1)), Region(0, 0, 64, 64)).verified
        cert = check_annihilates(P("1+X"), constant_source(F2, 1))
        assert cert.verified and cert.scope == "exact-torus"

    def test_window_certificates_say_so(self):
        cert = check_annihilates(f_T, sublattice_counterexample(), Region(0, 0, 8, 8))
        assert cert.scope == "window" and "not a proof" in cert.report()

    def test_region_required(self):
        with pytest.raises(PreconditionError):
            check_annihilates(f_T, sublattice_counterexample())

    def test_failure_detected(self):
        assert not check_annihilates(f_L, sublattice_counterexample(), Region(-8, -8, 16, 16)).verified

    def test_construction_invariants(self):
        rng = random.Random(3)
        for _ in range(10):
            w, h = rng.randint(1, 6), rng.randint(1, 6)
            grid = Window(F3, (0, 0), [[rng.randrange(3) for _ in range(h)] for _ in range(w)])
            t = TorusSource(grid)
            assert check_annihilates(LaurentPoly.monomial(F3, w, 0) - 1, t).verified
            assert check_annihilates(LaurentPoly.monomial(F3, 0, h) - 1, t).verified
            rule = LaurentPoly(F3, {(rng.randint(-2, 2), 0): rng.randint(1, 2)}) + 1
            ca = AdditiveCASource(F3, rule, [rng.randrange(3) for _ in range(5)])
            assert check_annihilates(LaurentPoly.monomial(F3, 0, 1) - rule, ca, Region(-5, -12, 20, 13)).verified
            fd = FourDotSource([rng.randrange(2) for _ in range(4)], [rng.randrange(2) for _ in range(3)])
            x0, y0 = rng.randint(-9, 9), rng.randint(-9, 9)
            assert check_annihilates(f_S, fd, Region(x0, y0, 20, 20)).verified
            assert check_annihilates(f_T, sublattice_counterexample(), Region(x0, y0, 20, 20)).verified


class TestPeriods:
    def test_counterexample(self):
        big = window_of(sublattice_counterexample(), Region(-64, -64, 128, 128))
        assert len(detect_periods(big, 32)) == 0
        assert (2, 0) in detect_periods(window_of(SublatticeLines("h"), Region(-64, -64, 128, 128)), 32)

    def test_constant_window(self):
        ev = detect_periods(window_of(constant_source(F2, 1), Region(0, 0, 10, 10)), 3)
        assert len(ev) == 7 * 7 - 1

    def test_overlap_sizes(self):
        ev = detect_periods(window_of(constant_source(F2, 0), Region(0, 0, 10, 10)), 2)
        assert ev.overlaps[(2, -1)] == 8 * 9 and not ev.exact

    def test_torus_wrap_contains_fundamental_periods(self):
        rng = np.random.default_rng(1)
        for w, h in [(3, 4), (5, 2), (6, 6)]:
            grid = Window(F2, (0, 0), rng.integers(0, 2, size=(w, h)))
            ev = detect_periods(grid, 6, wrap=True)
            assert (w, 0) in ev and (0, h) in ev and ev.exact


class TestFourDot:
    def test_all_ones(self):
        dec = fourdot_decompose(window_of(constant_source(F2, 1), Region(0, 0, 5, 5)))
        assert np.all(dec.h.values == 1) and not dec.v.values.any() and not dec.d.values.any()
        assert dec.sum_holds and dec.integer_identity_holds

    def test_checkerboard(self):
        w = window_of(FourDotSource((0, 1), (0, 1)), Region(0, 0, 6, 6))
        dec = fourdot_decompose(w)
        i, j = np.indices((6, 6))
        assert np.array_equal(dec.h.values, j % 2)
        assert np.array_equal(dec.v.values, i % 2)
        assert np.array_equal(dec.d.values, (i % 2) & (j % 2))
        assert dec.integer_identity_holds

    def test_horizontal_word_only(self):
        dec = fourdot_decompose(window_of(FourDotSource((0, 1), (0,)), Region(0, 0, 6, 6)))
        assert not dec.h.values.any()
        assert np.array_equal(dec.v.values, np.indices((6, 6))[0] % 2)

    def test_rejects_other_configurations(self):
        with pytest.raises(PreconditionError):
            fourdot_decompose(window_of(sublattice_counterexample(), Region(0, 0, 6, 6)))
        with pytest.raises(PreconditionError):
            fourdot_decompose(window_of(constant_source(F2, 1), Region(0, 0, 4, 4)), anchor=(9, 9))


class TestMonomialDifferenceSearch:
    def test_period_found_with_one_factor(self):
        grid = Window(F2, (0, 0), [[1, 0, 0], [0, 1, 1]])
        f = search_monomial_difference_annihilator(TorusSource(grid), 1)
        assert f is not None and len(f) == 2
        assert check_annihilates(f, ZLiftSource(TorusSource(grid))).verified

    def test_checkerboard_diagonal(self):
        grid = Window(F2, (0, 0), [[0, 1], [1, 0]])
        f = search_monomial_difference_annihilator(TorusSource(grid), 1)
        xy = LaurentPoly.parse("X*Y - 1", ZZ)
        assert check_annihilates(xy, ZLiftSource(TorusSource(grid))).verified
        assert f is not None and len(f) == 2

    def test_random_torus(self):
        rng = np.random.default_rng(4)
        grid = Window(F3, (0, 0), rng.integers(0, 3, size=(4, 3)))
        assert search_monomial_difference_annihilator(TorusSource(grid)) is not None

    def test_requires_torus(self):
        with pytest.raises(PreconditionError):
            search_monomial_difference_annihilator(sublattice_counterexample())
