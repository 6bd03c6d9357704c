import math

from hypothesis import given
from hypothesis import strategies as st

from algsubshift import GF, LaurentPoly
from algsubshift.algebra import monomial_normal_form, unimodular_change
from algsubshift.newton import (
    Direction,
    candidate_line_directions,
    convex_hull,
    lattice_index,
    newton_polygon,
    primitive,
    sublattice_index,
)
from conftest import polys

F2, F3 = GF(2), GF(3)


def P(text, ring=F2):
    return LaurentPoly.parse(text, ring)


def test_direction_canonical():
    assert Direction.of((-2, 4)) == Direction(1, -2)
    assert Direction.of((0, -3)) == Direction(0, 1)
    assert primitive((6, -4)) == (3, -2)


def test_hull_examples():
    assert set(newton_polygon(P("1+X+Y")).vertices) == {(0, 0), (1, 0), (0, 1)}
    assert set(newton_polygon(P("1+X+Y+X*Y")).vertices) == {(0, 0), (1, 0), (0, 1), (1, 1)}
    mono = newton_polygon(P("X^2*Y"))
    assert mono.is_point and mono.vertices == ((2, 1),)


def test_hull_drops_collinear_points():
    assert set(convex_hull([(0, 0), (1, 0), (2, 0), (1, 1), (0, 2)])) == {(0, 0), (2, 0), (0, 2)}


def test_edge_normals_point_outward():
    poly = newton_polygon(P("1+X+Y"))
    normals = {e.normal for e in poly.edges}
    assert normals == {(0, -1), (-1, 0), (1, 1)}


def test_candidate_directions_examples():
    assert candidate_line_directions(P("1+X+Y")) == set()
    assert candidate_line_directions(P("1+X^2+Y^2+X^2*Y^2")) == {(1, 0), (0, 1)}
    assert candidate_line_directions(P("1+X^3")) == {(1, 0)}
    assert candidate_line_directions(P("X*Y")) == set()


def test_sublattice_index_examples():
    assert sublattice_index(P("1+X+Y+X*Y")) == 1
    assert sublattice_index(P("1+X^2+Y^2+X^2*Y^2")) == 4
    assert sublattice_index(P("X^5*Y")) == math.inf
    assert sublattice_index(P("1+X^3")) == math.inf
    assert lattice_index([(2, 0), (0, 3), (2, 3)]) == 6


line_dirs = st.sampled_from([(1, 0), (0, 1), (1, 1), (1, -1), (2, 1), (1, -3)])


@given(polys(F3, nonzero=True), line_dirs, st.integers(1, 3), st.integers(1, 2))
def test_line_factor_forces_candidate(f, u, k, c):
    # a line polynomial factor in direction u shows up among the candidates
    line = LaurentPoly(F3, {(0, 0): 1, (k * u[0], k * u[1]): c})
    assert Direction.of(u) in candidate_line_directions(f * line)


@given(polys(F3, nonzero=True))
def test_vertices_cover_support(f):
    poly = newton_polygon(f)
    assert set(poly.vertices) <= set(f.support())
    assert all(poly.contains(q) for q in f.support())


@given(polys(F3, nonzero=True), st.sampled_from([((1, 1), (0, 1)), ((0, 1), (-1, 0)), ((2, 1), (1, 1))]))
def test_index_invariance(f, m):
    idx = sublattice_index(f)
    assert sublattice_index(monomial_normal_form(f)[0]) == idx
    assert sublattice_index(unimodular_change(f, m)) == idx
