"""Line polynomial factors of Laurent polynomials over F_p.

For a direction ``u`` a unimodular change of coordinates sends ``u`` to
``(1, 0)``.  Line polynomials in direction ``u`` then become polynomials in
``X`` alone, and the largest such factor of ``f`` is the gcd of the
coefficients of ``f`` viewed as a polynomial in ``Y`` over ``F_p[X^{+-1}]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from .algebra import (
    LaurentPoly,
    Matrix2,
    invert_unimodular,
    monomial_normal_form,
    unimodular_change,
)
from .errors import NotAFieldError, ZeroPolynomialError
from .newton import Direction, candidate_line_directions, sublattice_index
from .univariate import UPoly, upoly_from_laurent, upoly_gcd


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return (a, 1, 0) if a >= 0 else (-a, -1, 0)
    g, s, t = _egcd(b, a % b)
    return g, t, s - (a // b) * t


def straightening_matrix(u: Direction) -> Matrix2:
    """Unimodular matrix ``M`` with ``M @ u == (1, 0)``."""
    a, b = u
    g, s, t = _egcd(a, b)
    assert g == 1, "direction must be primitive"
    return ((s, t), (-b, a))


def line_direction_of(f: LaurentPoly) -> Direction | None:
    """Direction of ``f`` if it is a line polynomial, else None."""
    if f.is_zero():
        raise ZeroPolynomialError("zero polynomial has no direction")
    pts = f.support()
    if len(pts) < 2:
        return None
    x0, y0 = pts[0]
    d = Direction.of((pts[1][0] - x0, pts[1][1] - y0))
    for x, y in pts[2:]:
        if (x - x0) * d.b - (y - y0) * d.a != 0:
            return None
    return d


def _require_field(f: LaurentPoly):
    if f.is_zero():
        raise ZeroPolynomialError("zero polynomial")
    if not f.ring.is_field:
        raise NotAFieldError("line factor analysis needs coefficients in F_p")


def _x_coefficient_rows(g: LaurentPoly) -> dict[int, LaurentPoly]:
    rows: dict[int, dict] = {}
    for (i, j), c in g.terms.items():
        rows.setdefault(j, {})[(i, 0)] = c
    return {j: LaurentPoly(g.ring, t) for j, t in rows.items()}


def line_content(f: LaurentPoly, u: Direction) -> LaurentPoly:
    """Largest line polynomial factor of ``f`` in direction ``u`` (or 1).

    The result is monomial-normalized, so it is determined up to a nonzero
    scalar; the gcd is made monic in the straightened coordinates.
    """
    _require_field(f)
    u = Direction.of(u)
    m = straightening_matrix(u)
    g = unimodular_change(f, m)
    p = f.ring.p
    acc = UPoly.zero(p)
    for row in _x_coefficient_rows(g).values():
        up, _ = upoly_from_laurent(row, "X")
        acc = upoly_gcd(acc, up)
        if acc.degree == 0:
            break
    if acc.degree <= 0:
        return LaurentPoly.one(f.ring)
    back = unimodular_change(acc.to_laurent(f.ring, "X"), invert_unimodular(m))
    return monomial_normal_form(back)[0]


def divide_by_line(f: LaurentPoly, h: LaurentPoly) -> LaurentPoly | None:
    """Exact quotient ``f / h`` for a line polynomial ``h``, or None."""
    _require_field(f)
    u = line_direction_of(h)
    if u is None:
        if h.is_monomial():
            ((e, c),) = h.items()
            return f.shift(-e[0], -e[1]).scale(f.ring.inv(c))
        raise ValueError("divisor is not a line polynomial")
    m = straightening_matrix(u)
    # the straightened divisor lives on a single row j0
    ((j0, hrow),) = _x_coefficient_rows(unimodular_change(h, m)).items()
    hu, hoff = upoly_from_laurent(hrow, "X")
    out = LaurentPoly.zero(f.ring)
    for j, row in _x_coefficient_rows(unimodular_change(f, m)).items():
        ru, roff = upoly_from_laurent(row, "X")
        q, r = ru.divmod(hu)
        if r:
            return None
        out = out + q.to_laurent(f.ring, "X", roff - hoff).shift(0, j - j0)
    return unimodular_change(out, invert_unimodular(m))


@dataclass(frozen=True)
class LineFactorEntry:
    direction: Direction
    content: LaurentPoly
    cofactor: LaurentPoly


@dataclass(frozen=True)
class LineFactorProfile:
    poly: LaurentPoly
    entries: tuple[LineFactorEntry, ...]

    @property
    def directions(self) -> list[Direction]:
        return [e.direction for e in self.entries]

    @property
    def has_none(self) -> bool:
        return not self.entries

    @property
    def single_direction(self) -> bool:
        return len(self.entries) == 1

    @property
    def multi_direction(self) -> bool:
        return len(self.entries) > 1

    def content(self, u) -> LaurentPoly:
        u = Direction.of(u)
        for e in self.entries:
            if e.direction == u:
                return e.content
        return LaurentPoly.one(self.poly.ring)


def line_factor_profile(f: LaurentPoly) -> LineFactorProfile:
    _require_field(f)
    entries = []
    for u in sorted(candidate_line_directions(f)):
        h = line_content(f, u)
        if len(h) < 2:
            continue
        q = divide_by_line(f, h)
        if q is None or q * h != f:
            raise AssertionError(f"line content {h} does not divide {f}")
        entries.append(LineFactorEntry(u, h, q))
    return LineFactorProfile(f, tuple(entries))


class NivatKind(str, Enum):
    NONE = "NoLineFactors"
    SINGLE = "SingleDirection"
    MULTI = "MultiDirection"


VERDICTS = {
    NivatKind.NONE: (
        "generalized Nivat property holds; any element with a nontrivial "
        "Z-annihilator is two-periodic"
    ),
    NivatKind.SINGLE: "generalized Nivat property holds; periodic in direction {u}",
    NivatKind.MULTI: (
        "not covered by the line factor criterion; property status unknown "
        "(line factors in several directions)"
    ),
}


@dataclass(frozen=True)
class NivatClass:
    kind: NivatKind
    directions: tuple[Direction, ...] = ()
    sublattice_index: int | float | None = None
    verdict: str = ""
    profile: LineFactorProfile | None = field(default=None, compare=False)

    def __str__(self):
        return self.report()

    def report(self) -> str:
        lines = [f"class: {self.kind.value}"]
        if self.directions:
            lines.append("directions: " + " ".join(str(d) for d in self.directions))
        if self.profile is not None:
            for e in self.profile.entries:
                lines.append(f"content {e.direction}: {e.content}")
        if self.sublattice_index is not None:
            idx = self.sublattice_index
            lines.append(f"sublattice index: {'inf' if idx == math.inf else idx}")
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines)


def classify_nivat(f: LaurentPoly) -> NivatClass:
    prof = line_factor_profile(f)
    if prof.has_none:
        return NivatClass(NivatKind.NONE, (), None, VERDICTS[NivatKind.NONE], prof)
    if prof.single_direction:
        u = prof.directions[0]
        return NivatClass(NivatKind.SINGLE, (u,), None,
                          VERDICTS[NivatKind.SINGLE].format(u=u), prof)
    return NivatClass(NivatKind.MULTI, tuple(prof.directions), sublattice_index(f),
                      VERDICTS[NivatKind.MULTI], prof)
