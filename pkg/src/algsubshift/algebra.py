"""Coefficient rings and sparse two-variable Laurent polynomials.

A :class:`LaurentPoly` stores a map from exponent pairs ``(i, j)`` to nonzero
coefficients and stands for ``sum c_ij X^i Y^j``.  Coefficients live either in
a prime field F_p or in the integers (arbitrary precision).  Values are
immutable; every operation returns a new polynomial.

Text format (parsed and printed)::

    1 + X*Y^-2 + 2*X^3

Terms appear in lexicographic exponent order, the zero polynomial prints as
``0``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import (
    NotProperError,
    NotUnimodularError,
    ParseError,
    RingMismatchError,
    ZeroPolynomialError,
)

PRIME_BOUND = 1 << 16


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Ring:
    """F_p for a prime ``p``, or the integers when ``p == 0``."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0:
            if not _is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")
            if self.p >= PRIME_BOUND:
                raise ValueError(f"prime {self.p} exceeds bound 2^16")

    @property
    def is_field(self) -> bool:
        return self.p != 0

    def reduce(self, a: int) -> int:
        return a % self.p if self.p else a

    def inv(self, a: int) -> int:
        if not self.p:
            if a in (1, -1):
                return a
            raise ZeroDivisionError(f"{a} is not a unit in Z")
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def __str__(self):
        return f"F_{self.p}" if self.p else "Z"


def GF(p: int) -> Ring:
    return Ring(p)


ZZ = Ring(0)

Exp = tuple[int, int]


class LaurentPoly:
    """Sparse Laurent polynomial in ``X``, ``Y`` over a :class:`Ring`."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Exp, int] | Iterable[tuple[Exp, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exp, int] = {}
        for (i, j), c in items:
            key = (int(i), int(j))
            clean[key] = clean.get(key, 0) + int(c)
        for key in list(clean):
            c = ring.reduce(clean[key])
            if c:
                clean[key] = c
            else:
                del clean[key]
        self.ring = ring
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring: Ring, terms: dict[Exp, int]) -> LaurentPoly:
        # terms already reduced and zero-free
        obj = cls.__new__(cls)
        obj.ring = ring
        obj._terms = terms
        obj._hash = None
        return obj

    # constructors -----------------------------------------------------------

    @classmethod
    def zero(cls, ring: Ring) -> LaurentPoly:
        return cls._raw(ring, {})

    @classmethod
    def one(cls, ring: Ring) -> LaurentPoly:
        return cls.monomial(ring, 0, 0)

    @classmethod
    def monomial(cls, ring: Ring, i: int = 0, j: int = 0, coef: int = 1) -> LaurentPoly:
        return cls(ring, {(i, j): coef})

    @classmethod
    def constant(cls, ring: Ring, c: int) -> LaurentPoly:
        return cls(ring, {(0, 0): c})

    @classmethod
    def parse(cls, text: str, ring: Ring) -> LaurentPoly:
        return parse_poly(text, ring)

    # inspection -------------------------------------------------------------

    @property
    def terms(self) -> dict[Exp, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[Exp, int]]:
        """Terms in canonical (lexicographic exponent) order."""
        return sorted(self._terms.items())

    def support(self) -> list[Exp]:
        return sorted(self._terms)

    def coeff(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0, 0)}

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def x_range(self) -> tuple[int, int]:
        xs = [i for i, _ in self._terms]
        return min(xs), max(xs)

    def y_range(self) -> tuple[int, int]:
        ys = [j for _, j in self._terms]
        return min(ys), max(ys)

    def x_degree(self) -> int:
        """Largest X exponent (``-1`` for the zero polynomial)."""
        return max((i for i, _ in self._terms), default=-1)

    def y_degree(self) -> int:
        return max((j for _, j in self._terms), default=-1)

    def is_proper(self) -> bool:
        return all(i >= 0 and j >= 0 for i, j in self._terms)

    def involves_x(self) -> bool:
        return any(i != 0 for i, _ in self._terms)

    def involves_y(self) -> bool:
        return any(j != 0 for _, j in self._terms)

    # arithmetic -------------------------------------------------------------

    def _check(self, other: LaurentPoly):
        if self.ring != other.ring:
            raise RingMismatchError(f"ring mismatch: {self.ring} vs {other.ring}")

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(self.ring, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        red = self.ring.reduce
        for k, c in other._terms.items():
            v = red(out.get(k, 0) + c)
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return LaurentPoly._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        red = self.ring.reduce
        return LaurentPoly._raw(self.ring, {k: red(-c) for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        red = self.ring.reduce
        out: dict[Exp, int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly._raw(self.ring, {k: v for k, v in ((k, red(v)) for k, v in out.items()) if v})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise ValueError("negative powers only for monomials")
            ((i, j), c), = self._terms.items()
            return LaurentPoly(self.ring, {(i * n, j * n): pow(self.ring.inv(c), -n)})
        result = LaurentPoly.one(self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: int) -> LaurentPoly:
        return LaurentPoly(self.ring, {k: v * c for k, v in self._terms.items()})

    def shift(self, di: int, dj: int) -> LaurentPoly:
        """Multiply by the monomial ``X^di Y^dj``."""
        return LaurentPoly._raw(self.ring, {(i + di, j + dj): c for (i, j), c in self._terms.items()})

    def swap_xy(self) -> LaurentPoly:
        return LaurentPoly._raw(self.ring, {(j, i): c for (i, j), c in self._terms.items()})

    def map_exponents(self, fn) -> LaurentPoly:
        return LaurentPoly(self.ring, [(fn(k), c) for k, c in self._terms.items()])

    # comparison / display ---------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(self.ring, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, tuple(self.items())))
        return self._hash

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r}, {self.ring})"


# ---------------------------------------------------------------------------
# text format


def _format_term(exp: Exp, c: int) -> str:
    i, j = exp
    parts = []
    if c != 1 or exp == (0, 0):
        parts.append(str(c))
    if i:
        parts.append("X" if i == 1 else f"X^{i}")
    if j:
        parts.append("Y" if j == 1 else f"Y^{j}")
    return "*".join(parts)


def format_poly(f: LaurentPoly) -> str:
    if f.is_zero():
        return "0"
    out = []
    for exp, c in f.items():
        neg = c < 0
        body = _format_term(exp, -c if neg else c)
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


_TERM = re.compile(
    r"""([+-])?
        (?:(\d+)\*?)?
        (?:X(?:\^(-?\d+))?\*?)?
        (?:Y(?:\^(-?\d+))?)?""",
    re.VERBOSE,
)


def parse_poly(text: str, ring: Ring) -> LaurentPoly:
    """Parse the polynomial text grammar, e.g. ``"1 + X*Y^-2 + 2*X^3"``."""
    s = "".join(text.split())
    if not s:
        raise ParseError("empty polynomial")
    terms: list[tuple[Exp, int]] = []
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"cannot parse polynomial at {s[pos:]!r}")
        sign, coef, xe, ye = m.groups()
        body = m.group(0).lstrip("+-")
        if not body or body.endswith("*"):
            raise ParseError(f"malformed term {m.group(0)!r} in {text!r}")
        if sign is None and pos > 0:
            raise ParseError(f"missing operator before {body!r}")
        has_x = "X" in body
        has_y = "Y" in body
        c = int(coef) if coef is not None else 1
        i = (int(xe) if xe is not None else 1) if has_x else 0
        j = (int(ye) if ye is not None else 1) if has_y else 0
        terms.append(((i, j), -c if sign == "-" else c))
        pos = m.end()
    return LaurentPoly(ring, terms)


# ---------------------------------------------------------------------------
# operations


def poly_add(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    f._check(g)
    return f + g


def poly_mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    f._check(g)
    return f * g


def monomial_normal_form(f: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Split ``f = m * f'`` with ``f'`` proper and min X- and Y-exponents zero.

    Returns ``(f', m)`` where ``m`` is a monomial with coefficient 1.
    """
    if f.is_zero():
        raise ZeroPolynomialError("normal form of the zero polynomial")
    i0 = f.x_range()[0]
    j0 = f.y_range()[0]
    return f.shift(-i0, -j0), LaurentPoly.monomial(f.ring, i0, j0)


def substitute_x(g: LaurentPoly, r: LaurentPoly) -> LaurentPoly:
    """Replace every ``X`` in ``g`` by the X-free polynomial ``r``."""
    g._check(r)
    if r.involves_x():
        raise ValueError("substituted polynomial must not contain X")
    if any(i < 0 for i, _ in g._terms):
        raise NotProperError("negative X exponent; normalize first")
    ring = g.ring
    by_power: dict[int, dict[int, int]] = {}
    for (i, j), c in g._terms.items():
        by_power.setdefault(i, {})[j] = c
    # Horner in X from the top degree down
    result = LaurentPoly.zero(ring)
    for k in range(g.x_degree(), -1, -1):
        result = result * r
        col = by_power.get(k)
        if col:
            result = result + LaurentPoly(ring, {(0, j): c for j, c in col.items()})
    return result


def reduce_mod_p(f: LaurentPoly, p: int) -> LaurentPoly:
    if f.ring.is_field:
        raise RingMismatchError("reduce_mod_p expects an integer polynomial")
    return LaurentPoly(Ring(p), f._terms)


def lift_to_integers(f: LaurentPoly) -> LaurentPoly:
    """Rename coefficients 0..p-1 of an F_p polynomial as integers."""
    return LaurentPoly._raw(ZZ, dict(f._terms))


Matrix2 = tuple[tuple[int, int], tuple[int, int]]


def _det2(m: Matrix2) -> int:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def invert_unimodular(m: Matrix2) -> Matrix2:
    d = _det2(m)
    if d not in (1, -1):
        raise NotUnimodularError(f"determinant {d} is not +-1")
    (a, b), (c, e) = m
    return ((e * d, -b * d), (-c * d, a * d))


def unimodular_change(f: LaurentPoly, m: Matrix2) -> LaurentPoly:
    """Map every exponent pair ``e`` to ``m @ e`` (a ring automorphism)."""
    d = _det2(m)
    if d not in (1, -1):
        raise NotUnimodularError(f"determinant {d} is not +-1")
    (a, b), (c, e) = m
    return LaurentPoly._raw(f.ring, {(a * i + b * j, c * i + e * j): v for (i, j), v in f._terms.items()})


def iter_x_columns(f: LaurentPoly) -> Iterator[tuple[int, LaurentPoly]]:
    """Yield ``(k, f_k(Y))`` with ``f = sum_k X^k f_k(Y)``, ascending in k."""
    cols: dict[int, dict[Exp, int]] = {}
    for (i, j), c in f._terms.items():
        cols.setdefault(i, {})[(0, j)] = c
    for k in sorted(cols):
        yield k, LaurentPoly._raw(f.ring, cols[k])
