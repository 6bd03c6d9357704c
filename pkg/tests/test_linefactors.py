import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from algsubshift import GF, LaurentPoly
from algsubshift.elimination import exact_divide
from algsubshift.errors import NotAFieldError
from algsubshift.linefactors import (
    NivatKind,
    classify_nivat,
    divide_by_line,
    line_content,
    line_direction_of,
    line_factor_profile,
    straightening_matrix,
)
from algsubshift.newton import Direction
from algsubshift import ZZ
from conftest import polys

F2, F3 = GF(2), GF(3)
f_L = LaurentPoly.parse("1 + X + Y", F2)
f_S = LaurentPoly.parse("1 + X + Y + X*Y", F2)
f_T = LaurentPoly.parse("1 + X^2 + Y^2 + X^2*Y^2", F2)


def P(text, ring=F2):
    return LaurentPoly.parse(text, ring)


def test_straightening_matrix():
    for u in [(1, 0), (0, 1), (1, 1), (2, -3), (5, 7)]:
        (s, t), (c, d) = straightening_matrix(Direction.of(u))
        a, b = Direction.of(u)
        assert (s * a + t * b, c * a + d * b) == (1, 0)
        assert s * d - t * c in (1, -1)


def test_line_direction_examples():
    assert line_direction_of(P("1+X^2")) == (1, 0)
    assert line_direction_of(P("1+X*Y+X^2*Y^2")) == (1, 1)
    assert line_direction_of(f_L) is None
    assert line_direction_of(P("X")) is None


def test_line_content_examples():
    assert line_content(f_T, (1, 0)) == P("1+X^2")
    assert line_content(f_S, (0, 1)) == P("1+Y")
    assert line_content(f_L, (1, 0)) == LaurentPoly.one(F2)


def test_line_content_needs_field():
    with pytest.raises(NotAFieldError):
        line_content(LaurentPoly.parse("1+X", ZZ), (1, 0))


def test_profiles():
    assert line_factor_profile(f_L).has_none
    prof = line_factor_profile(f_S)
    assert prof.directions == [(0, 1), (1, 0)]
    assert prof.content((1, 0)) == P("1+X") and prof.content((0, 1)) == P("1+Y")
    single = line_factor_profile(P("1+X") * f_L)
    assert single.single_direction and single.content((1, 0)) == P("1+X")


def test_classification():
    assert classify_nivat(f_L).kind is NivatKind.NONE
    assert classify_nivat(P("Y - X - X^2")).kind is NivatKind.NONE
    t = classify_nivat(f_T)
    assert t.kind is NivatKind.MULTI
    assert list(t.directions) == [(0, 1), (1, 0)] and t.sublattice_index == 4
    s = classify_nivat(P("1+X") * f_L)
    assert s.kind is NivatKind.SINGLE and list(s.directions) == [(1, 0)]
    assert "periodic in direction (1,0)" in s.verdict


def test_report_is_deterministic_text():
    text = classify_nivat(f_T).report()
    assert text.splitlines()[0] == "class: MultiDirection"
    assert "sublattice index: 4" in text


def test_divide_by_line():
    assert divide_by_line(f_S, P("1+X")) == P("1+Y")
    assert divide_by_line(f_L, P("1+X")) is None


line_dirs = st.sampled_from([(1, 0), (0, 1), (1, 1), (1, -1), (2, 1)])


def random_line(u, coefs):
    return LaurentPoly(F3, {(k * u[0], k * u[1]): c for k, c in enumerate(coefs)})


@given(polys(F3, nonzero=True))
def test_contents_divide(f):
    for e in line_factor_profile(f).entries:
        assert e.content * e.cofactor == f
        assert e.content.is_constant() or line_direction_of(e.content) == e.direction


@given(polys(F3, -1, 2, 5, nonzero=True), line_dirs,
       st.lists(st.integers(0, 2), min_size=2, max_size=4).filter(lambda c: c[0] and c[-1]))
def test_planted_line_factor_found(f, u, coefs):
    ell = random_line(u, coefs)
    assume(line_content(f, Direction.of(u)).is_constant())
    prof = line_factor_profile(ell * f)
    assert Direction.of(u) in prof.directions
    assert exact_divide(prof.content(u), ell) is not None


@given(polys(F3, nonzero=True), st.integers(-3, 3), st.integers(-3, 3))
def test_monomial_invariance(f, i, j):
    a, b = classify_nivat(f), classify_nivat(f.shift(i, j))
    assert (a.kind, a.directions, a.sublattice_index) == (b.kind, b.directions, b.sublattice_index)
