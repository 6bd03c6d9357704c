"""Resultants, Bezout cofactors and gcds of bivariate polynomials over F_p.

Polynomials are viewed in the eliminated variable with coefficients in
``F_p[other]``.  Inputs with negative exponents are first made proper by the
smallest monomial shift, so their resultants are defined up to monomial
units; proper inputs are used as given.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import LaurentPoly, iter_x_columns, monomial_normal_form
from .errors import (
    CommonFactorError,
    NotAFieldError,
    RingMismatchError,
    ZeroPolynomialError,
)
from .univariate import UPoly, upoly_from_laurent, upoly_gcd

AXES = ("X", "Y")


def _check_pair(f: LaurentPoly, g: LaurentPoly):
    if f.ring != g.ring:
        raise RingMismatchError(f"ring mismatch: {f.ring} vs {g.ring}")
    if not f.ring.is_field:
        raise NotAFieldError("elimination needs coefficients in F_p")
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomialError("elimination with a zero polynomial")


def make_proper(f: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Smallest monomial shift ``f = m * f'`` making ``f'`` proper.

    Unlike :func:`monomial_normal_form` this leaves proper input untouched,
    so ``X`` stays ``X`` and resultants agree with the polynomial-ring ones.
    """
    if f.is_zero():
        raise ZeroPolynomialError("zero polynomial")
    i0 = min(f.x_range()[0], 0)
    j0 = min(f.y_range()[0], 0)
    return f.shift(-i0, -j0), LaurentPoly.monomial(f.ring, i0, j0)


def _orient(f: LaurentPoly, axis: str) -> LaurentPoly:
    # work internally with X as the eliminated variable
    if axis not in AXES:
        raise ValueError(f"axis must be X or Y, got {axis!r}")
    return f if axis == "X" else f.swap_xy()


def _columns(f: LaurentPoly) -> list[UPoly]:
    """Coefficients of proper ``f`` in X (ascending) as polynomials in Y."""
    p = f.ring.p
    cols = [UPoly.zero(p)] * (f.x_degree() + 1)
    for k, col in iter_x_columns(f):
        cols[k] = UPoly(p, _dense_y(col))
    return cols


def _dense_y(col: LaurentPoly) -> list[int]:
    out = [0] * (col.y_degree() + 1)
    for (_, j), c in col.terms.items():
        out[j] = c
    return out


def bareiss_det(m: list[list[UPoly]], p: int) -> UPoly:
    """Determinant of a square matrix over F_p[Y] by fraction-free elimination."""
    n = len(m)
    if n == 0:
        return UPoly.one(p)
    a = [row[:] for row in m]
    sign = 1
    prev = UPoly.one(p)
    for k in range(n - 1):
        piv = next((r for r in range(k, n) if a[r][k]), None)
        if piv is None:
            return UPoly.zero(p)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * akk - aik * a[k][j]).exact_div(prev)
            a[i][k] = UPoly.zero(p)
        prev = akk
    return a[n - 1][n - 1] * sign


def sylvester_matrix(f: LaurentPoly, g: LaurentPoly) -> list[list[UPoly]]:
    """Sylvester matrix of proper ``f``, ``g`` with respect to X."""
    p = f.ring.p
    fc = _columns(f)[::-1]
    gc = _columns(g)[::-1]
    m, n = len(fc) - 1, len(gc) - 1
    size = m + n
    zero = UPoly.zero(p)
    rows = []
    for k in range(n):
        rows.append([zero] * k + fc + [zero] * (size - m - 1 - k))
    for k in range(m):
        rows.append([zero] * k + gc + [zero] * (size - n - 1 - k))
    return rows


def resultant(f: LaurentPoly, g: LaurentPoly, axis: str = "X") -> LaurentPoly:
    """Resultant eliminating ``axis``; a polynomial in the other variable.

    Inputs with negative exponents are shifted to be proper first.  Zero
    exactly when the proper versions share a factor of positive degree in the
    eliminated variable.
    """
    _check_pair(f, g)
    f1, _ = make_proper(_orient(f, axis))
    g1, _ = make_proper(_orient(g, axis))
    det = bareiss_det(sylvester_matrix(f1, g1), f.ring.p)
    r = det.to_laurent(f.ring, "Y")
    return r if axis == "X" else r.swap_xy()


# ---------------------------------------------------------------------------
# pseudo-remainder machinery, X is the main variable throughout


def _lead(f: LaurentPoly) -> tuple[int, LaurentPoly]:
    d = f.x_degree()
    return d, LaurentPoly(f.ring, {(0, j): c for (i, j), c in f.terms.items() if i == d})


def _y_content(polys) -> UPoly:
    acc = None
    for f in polys:
        for _, col in iter_x_columns(f):
            u = UPoly(f.ring.p, _dense_y(col))
            acc = u if acc is None else upoly_gcd(acc, u)
            if acc.degree == 0:
                return acc
    return acc


def _divide_by_y_poly(f: LaurentPoly, d: UPoly) -> LaurentPoly:
    out = LaurentPoly.zero(f.ring)
    dl = d.to_laurent(f.ring, "Y")
    for k, col in iter_x_columns(f):
        q = UPoly(f.ring.p, _dense_y(col)).exact_div(d)
        out = out + q.to_laurent(f.ring, "Y").shift(k, 0)
    assert out * dl == f
    return out


def _pseudo_reduce(a, sa, ta, b, sb, tb):
    """Reduce ``a`` below the X-degree of ``b``, carrying cofactors along."""
    db, lb = _lead(b)
    while not a.is_zero() and a.x_degree() >= db:
        da, la = _lead(a)
        shift = da - db
        a = lb * a - (la * b).shift(shift, 0)
        sa = lb * sa - (la * sb).shift(shift, 0)
        ta = lb * ta - (la * tb).shift(shift, 0)
    return a, sa, ta


def _primitive_triple(r, s, t):
    polys = [q for q in (r, s, t) if not q.is_zero()]
    c = _y_content(polys)
    if c is None or c.degree == 0:
        if c is not None and c.c[0] != 1:
            inv = r.ring.inv(c.c[0])
            return r.scale(inv), s.scale(inv), t.scale(inv)
        return r, s, t
    c = c.monic()
    return tuple(q if q.is_zero() else _divide_by_y_poly(q, c) for q in (r, s, t))


@dataclass(frozen=True)
class EliminationResult:
    """``alpha * f + beta * g == value`` with ``value`` free of ``axis``."""

    axis: str
    f: LaurentPoly
    g: LaurentPoly
    alpha: LaurentPoly
    beta: LaurentPoly
    value: LaurentPoly
    resultant: LaurentPoly

    def identity_holds(self) -> bool:
        return self.alpha * self.f + self.beta * self.g == self.value

    def is_univariate(self) -> bool:
        if self.value.is_zero():
            return False
        return not (self.value.involves_x() if self.axis == "X" else self.value.involves_y())

    def report(self) -> str:
        return "\n".join([
            f"axis: {self.axis}",
            f"alpha: {self.alpha}",
            f"beta: {self.beta}",
            f"r: {self.value}",
            f"resultant: {self.resultant}",
            f"identity alpha*f + beta*g = r: {'verified' if self.identity_holds() else 'FAILED'}",
        ])


def _bezout_proper(f: LaurentPoly, g: LaurentPoly):
    """Cofactors for proper ``f``, ``g`` eliminating X; raises on a common factor."""
    ring = f.ring
    one, zero = LaurentPoly.one(ring), LaurentPoly.zero(ring)
    r0, s0, t0 = f, one, zero
    r1, s1, t1 = g, zero, one
    if r0.x_degree() < r1.x_degree():
        r0, s0, t0, r1, s1, t1 = r1, s1, t1, r0, s0, t0
    while True:
        if r1.x_degree() == 0:
            return s1, t1, r1
        r2, s2, t2 = _pseudo_reduce(r0, s0, t0, r1, s1, t1)
        if r2.is_zero():
            raise CommonFactorError(
                f"common factor of X-degree {r1.x_degree()}", gcd=primitive_part(r1))
        r0, s0, t0 = r1, s1, t1
        r1, s1, t1 = _primitive_triple(r2, s2, t2)


def bezout_cofactors(f: LaurentPoly, g: LaurentPoly, axis: str = "X") -> EliminationResult:
    """Find ``alpha``, ``beta`` with ``alpha f + beta g`` nonzero and free of ``axis``.

    The value is an associate of a divisor-multiple of the resultant, found
    by extended Euclid over the rational functions in the other variable with
    denominators cleared.
    """
    _check_pair(f, g)
    fo, go = _orient(f, axis), _orient(g, axis)
    f1, mf = make_proper(fo)
    g1, mg = make_proper(go)
    a, b, r = _bezout_proper(f1, g1)
    # alpha*f1 + beta*g1 = r and f1 = fo / mf
    a = a * mf ** -1
    b = b * mg ** -1
    if axis == "Y":
        a, b, r = a.swap_xy(), b.swap_xy(), r.swap_xy()
    res = EliminationResult(axis, f, g, a, b, r, resultant(f, g, axis))
    assert res.identity_holds()
    return res


def coprime_periodicity(f: LaurentPoly, g: LaurentPoly) -> tuple[EliminationResult, EliminationResult]:
    """Univariate combinations of ``f``, ``g`` along both axes.

    Returns ``(elim_X, elim_Y)``: ``elim_X.value`` involves only Y and
    ``elim_Y.value`` only X.  Anything annihilated by both ``f`` and ``g`` is
    annihilated by these, hence periodic vertically and horizontally.
    """
    return bezout_cofactors(f, g, "X"), bezout_cofactors(f, g, "Y")


# ---------------------------------------------------------------------------
# gcd and exact division


def primitive_part(f: LaurentPoly) -> LaurentPoly:
    """``f`` divided by its content in F_p[Y] (as a polynomial in X), monic-ish."""
    f1, _ = monomial_normal_form(f)
    c = _y_content([f1]).monic()
    out = _divide_by_y_poly(f1, c) if c.degree > 0 else f1
    _, lead = _lead(out)
    lc = lead.terms[max(lead.terms)]
    return out.scale(out.ring.inv(lc))


def poly_gcd(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Greatest common divisor in F_p[X^{+-1}, Y^{+-1}], monomial-normalized.

    Computed as gcd of contents times the primitive part of the last nonzero
    term of a primitive pseudo-remainder sequence.
    """
    _check_pair(f, g)
    ring = f.ring
    f1, _ = monomial_normal_form(f)
    g1, _ = monomial_normal_form(g)
    cf = _y_content([f1]).monic()
    cg = _y_content([g1]).monic()
    c = upoly_gcd(cf, cg)
    a, b = primitive_part(f1), primitive_part(g1)
    if a.x_degree() < b.x_degree():
        a, b = b, a
    one, zero = LaurentPoly.one(ring), LaurentPoly.zero(ring)
    while b.x_degree() > 0:
        r, _, _ = _pseudo_reduce(a, zero, zero, b, one, one)
        if r.is_zero():
            break
        a, b = b, primitive_part(r)
    x_part = b if b.x_degree() > 0 else one
    out = x_part * c.to_laurent(ring, "Y")
    return monomial_normal_form(out)[0]


def exact_divide(f: LaurentPoly, h: LaurentPoly) -> LaurentPoly | None:
    """Quotient ``f / h`` in the Laurent ring over F_p, or None if inexact.

    Division by a single polynomial with a lex leading term yields remainder
    zero exactly when ``h`` divides ``f``.
    """
    _check_pair(f, h)
    f1, mf = monomial_normal_form(f)
    h1, mh = monomial_normal_form(h)
    ring = f.ring
    lead_exp = max(h1.terms)
    inv = ring.inv(h1.coeff(*lead_exp))
    rem = f1
    q = {}
    while not rem.is_zero():
        e = max(rem.terms)
        di, dj = e[0] - lead_exp[0], e[1] - lead_exp[1]
        if di < 0 or dj < 0:
            return None
        c = rem.coeff(*e) * inv
        q[(di, dj)] = q.get((di, dj), 0) + c
        rem = rem - h1.shift(di, dj).scale(c)
    quot = LaurentPoly(ring, q) * mf * mh ** -1
    return quot
