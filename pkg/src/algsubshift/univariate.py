"""Dense univariate polynomials over F_p.

Coefficients are stored low degree first in a tuple with no trailing zeros;
the zero polynomial is the empty tuple.
"""

from __future__ import annotations

from .algebra import LaurentPoly, Ring


class UPoly:
    __slots__ = ("p", "c")

    def __init__(self, p: int, coeffs=()):
        c = [x % p for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.p = p
        self.c = tuple(c)

    @classmethod
    def _raw(cls, p, c):
        obj = cls.__new__(cls)
        obj.p = p
        obj.c = c
        return obj

    @classmethod
    def one(cls, p):
        return cls._raw(p, (1,))

    @classmethod
    def zero(cls, p):
        return cls._raw(p, ())

    @classmethod
    def x_power(cls, p, k):
        return cls._raw(p, (0,) * k + (1,))

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def lc(self) -> int:
        return self.c[-1] if self.c else 0

    def is_zero(self):
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        return isinstance(other, UPoly) and self.p == other.p and self.c == other.c

    def __hash__(self):
        return hash((self.p, self.c))

    def __repr__(self):
        return f"UPoly({self.p}, {list(self.c)})"

    def __add__(self, other):
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, v in enumerate(b):
            out[k] += v
        return UPoly(self.p, out)

    def __neg__(self):
        return UPoly(self.p, [-v for v in self.c])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return UPoly(self.p, [v * other for v in self.c])
        a, b = self.c, other.c
        if not a or not b:
            return UPoly.zero(self.p)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UPoly(self.p, out)

    __rmul__ = __mul__

    def monic(self) -> UPoly:
        if not self.c:
            return self
        return self * pow(self.lc(), -1, self.p)

    def divmod(self, other: UPoly) -> tuple[UPoly, UPoly]:
        if not other.c:
            raise ZeroDivisionError("division by the zero polynomial")
        p = self.p
        r = list(self.c)
        db = other.degree
        inv = pow(other.lc(), -1, p)
        q = [0] * max(len(r) - db, 0)
        for k in range(len(r) - 1, db - 1, -1):
            coef = r[k] % p
            if coef:
                f = coef * inv % p
                q[k - db] = f
                for t, v in enumerate(other.c):
                    r[k - db + t] -= f * v
        return UPoly(p, q), UPoly(p, r[:db] if db > 0 else [])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: UPoly) -> UPoly:
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def to_laurent(self, ring: Ring, axis: str = "X", offset: int = 0) -> LaurentPoly:
        if axis == "X":
            return LaurentPoly(ring, {(k + offset, 0): v for k, v in enumerate(self.c)})
        return LaurentPoly(ring, {(0, k + offset): v for k, v in enumerate(self.c)})


def upoly_gcd(a: UPoly, b: UPoly) -> UPoly:
    """Monic gcd (zero only if both inputs are zero)."""
    while b:
        a, b = b, a % b
    return a.monic()


def upoly_from_laurent(f: LaurentPoly, axis: str) -> tuple[UPoly, int]:
    """Convert a polynomial in one variable to ``(proper UPoly, min exponent)``."""
    if not f.ring.is_field:
        raise ValueError("UPoly needs a prime field")
    p = f.ring.p
    if f.is_zero():
        return UPoly.zero(p), 0
    if axis == "X":
        if f.involves_y():
            raise ValueError("polynomial involves Y")
        exps = {i: c for (i, _), c in f.terms.items()}
    else:
        if f.involves_x():
            raise ValueError("polynomial involves X")
        exps = {j: c for (_, j), c in f.terms.items()}
    lo = min(exps)
    hi = max(exps)
    coeffs = [0] * (hi - lo + 1)
    for e, c in exps.items():
        coeffs[e - lo] = c
    return UPoly(p, coeffs), lo


def mulmod(a: UPoly, b: UPoly, m: UPoly) -> UPoly:
    return (a * b) % m


def polynomial_order(r: UPoly, limit: int = 1 << 16) -> int | None:
    """Smallest ``k >= 1`` with ``r | x^k - 1``, or None if above ``limit``.

    ``r`` must have a nonzero constant term.  A bi-infinite sequence over F_p
    satisfying the recurrence with characteristic polynomial ``r`` is periodic
    with period dividing this order.
    """
    if not r.c or r.c[0] == 0:
        raise ValueError("order needs a nonzero constant term")
    if r.degree == 0:
        return 1
    p = r.p
    x = UPoly._raw(p, (0, 1)) % r
    one = UPoly.one(p) % r
    cur = x
    for k in range(1, limit + 1):
        if cur == one:
            return k
        cur = mulmod(cur, x, r)
    return None
