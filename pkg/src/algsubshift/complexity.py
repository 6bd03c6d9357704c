"""Shapes, pattern sets and annihilators found from pattern kernels.

A vector ``a`` orthogonal to every observed ``D``-pattern gives the relation
``sum_u a_u c[t + u] = 0`` for all sampled ``t``.  Under the product
convention ``(f c)_n = sum_u f_u c[n - u]`` that relation is ``f c = 0`` for
``f = sum_u a_u X^-u1 Y^-u2``, i.e. the annihilator has support ``-D``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from .algebra import ZZ, LaurentPoly, Ring
from .config import (
    AnnihilatorCertificate,
    ConfigSource,
    Region,
    ZLiftSource,
    check_annihilates,
)
from .errors import PreconditionError, RingMismatchError


@dataclass(frozen=True)
class Shape:
    """Finite nonempty subset of Z^2, deduplicated and sorted."""

    cells: tuple[tuple[int, int], ...]

    def __init__(self, cells):
        cs = tuple(sorted({(int(i), int(j)) for i, j in cells}))
        if not cs:
            raise ValueError("shape must be nonempty")
        object.__setattr__(self, "cells", cs)

    def __len__(self):
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)

    @classmethod
    def block(cls, w: int, h: int | None = None) -> Shape:
        h = w if h is None else h
        return cls((i, j) for i in range(w) for j in range(h))

    def bounds(self) -> tuple[int, int, int, int]:
        xs = [i for i, _ in self.cells]
        ys = [j for _, j in self.cells]
        return min(xs), max(xs), min(ys), max(ys)

    def to_text(self) -> str:
        return "%shape\n" + "".join(f"{i} {j}\n" for i, j in self.cells)

    @classmethod
    def parse(cls, text: str) -> Shape:
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines or lines[0] != "%shape":
            raise ValueError("missing %shape header")
        return cls(tuple(int(t) for t in ln.split()) for ln in lines[1:])


def scattered_square(n: int, step: int) -> Shape:
    if n < 1 or step < 1:
        raise ValueError("n and step must be positive")
    return Shape((a * step, b * step) for a in range(n) for b in range(n))


@dataclass(frozen=True)
class PatternSet:
    shape: Shape
    patterns: tuple[tuple[int, ...], ...]
    region: Region
    exact: bool

    def __len__(self):
        return len(self.patterns)


def _translation_region(src: ConfigSource, region: Region | None) -> tuple[Region, bool]:
    dom = src.domain()
    if region is None:
        if dom is None:
            raise PreconditionError("a region is required for non-torus sources")
        return dom.region, True
    exact = dom is not None and region.w >= dom.width and region.h >= dom.height
    return region, exact


def pattern_matrix(src: ConfigSource, D: Shape, region: Region) -> np.ndarray:
    """All ``D``-patterns at translations in ``region``, one row per translation."""
    xmin, xmax, ymin, ymax = D.bounds()
    W = region.w + xmax - xmin
    H = region.h + ymax - ymin
    vals = src.block(region.x0 + xmin, region.y0 + ymin, W, H)
    cols = [vals[i - xmin:i - xmin + region.w, j - ymin:j - ymin + region.h].reshape(-1)
            for i, j in D.cells]
    out = np.stack(cols, axis=1)
    if out.dtype == object:
        out = out.astype(np.int64)
    return out


def enumerate_patterns(src: ConfigSource, D: Shape, region: Region | None = None) -> PatternSet:
    """Distinct ``D``-patterns ``(c[t + u])_{u in D}`` over translations ``t``.

    Exact for a torus source when ``region`` is omitted or covers a fundamental
    domain; a lower bound on the pattern count otherwise.
    """
    reg, exact = _translation_region(src, region)
    rows = np.unique(pattern_matrix(src, D, reg), axis=0)
    return PatternSet(D, tuple(tuple(int(x) for x in r) for r in rows), reg, exact)


def complexity_count(src: ConfigSource, D: Shape, region: Region | None = None) -> tuple[int, bool]:
    n = len(enumerate_patterns(src, D, region))
    return n, n <= len(D)


# ---------------------------------------------------------------------------
# exact kernels


def nullspace_mod_p(rows, ncols: int, p: int) -> list[list[int]]:
    """Basis of ``{a : row . a == 0 mod p for every row}``."""
    pivots: list[tuple[int, list[int]]] = []  # (pivot column, reduced row)
    for r in rows:
        v = [int(x) % p for x in r]
        for col, pr in pivots:
            if v[col]:
                f = v[col]
                v = [(x - f * y) % p for x, y in zip(v, pr)]
        lead = next((k for k, x in enumerate(v) if x), None)
        if lead is None:
            continue
        inv = pow(v[lead], -1, p)
        v = [x * inv % p for x in v]
        # keep earlier pivot rows reduced in the new column
        pivots = [(c, [(x - pr[lead] * y) % p for x, y in zip(pr, v)]) for c, pr in pivots]
        pivots.append((lead, v))
        if len(pivots) == ncols:
            return []
    pivcols = {c for c, _ in pivots}
    basis = []
    for free in range(ncols):
        if free in pivcols:
            continue
        vec = [0] * ncols
        vec[free] = 1
        for c, pr in pivots:
            vec[c] = (-pr[free]) % p
        basis.append(vec)
    return basis


def _primitive_int(vec) -> list[int]:
    den = math.lcm(*(x.denominator for x in vec))
    ints = [int(x * den) for x in vec]
    g = math.gcd(*ints)
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    return [-x for x in ints] if lead < 0 else ints


def nullspace_integer(rows, ncols: int) -> list[list[int]]:
    """Basis of the rational kernel, each vector scaled to a primitive integer vector."""
    pivots: list[tuple[int, list[Fraction]]] = []
    for r in rows:
        v = [Fraction(int(x)) for x in r]
        for col, pr in pivots:
            if v[col]:
                f = v[col]
                v = [x - f * y for x, y in zip(v, pr)]
        lead = next((k for k, x in enumerate(v) if x), None)
        if lead is None:
            continue
        inv = 1 / v[lead]
        v = [x * inv for x in v]
        pivots = [(c, [x - pr[lead] * y for x, y in zip(pr, v)]) for c, pr in pivots]
        pivots.append((lead, v))
        if len(pivots) == ncols:
            return []
    pivcols = {c for c, _ in pivots}
    basis = []
    for free in range(ncols):
        if free in pivcols:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for c, pr in pivots:
            vec[c] = -pr[free]
        basis.append(_primitive_int(vec))
    return basis


def nullspace(rows, ncols: int, ring: Ring) -> list[list[int]]:
    return nullspace_mod_p(rows, ncols, ring.p) if ring.is_field else nullspace_integer(rows, ncols)


def relation_polynomial(D: Shape, a, ring: Ring) -> LaurentPoly:
    """``sum_u a_u X^-u1 Y^-u2`` for a vector ``a`` indexed like ``D.cells``."""
    return LaurentPoly(ring, {(-i, -j): c for (i, j), c in zip(D.cells, a)})


def _resolve(src: ConfigSource, ring: Ring | None) -> tuple[ConfigSource, Ring]:
    ring = src.ring if ring is None else ring
    if ring == src.ring:
        return src, ring
    if ring == ZZ and src.ring.is_field:
        return ZLiftSource(src), ring
    raise RingMismatchError(f"cannot compute {ring} annihilators of a source over {src.ring}")


def kernel_annihilators(src: ConfigSource, D: Shape, region: Region | None = None,
                        ring: Ring | None = None) -> Iterator[LaurentPoly]:
    """Candidate annihilators from the kernel of the pattern matrix.

    Yields one polynomial per homogeneous kernel basis vector; when the
    homogeneous kernel is trivial, falls back to affine relations
    ``sum a_u c[t+u] = b`` and yields ``(X - 1) * f`` for each.
    """
    target, ring = _resolve(src, ring)
    pats = enumerate_patterns(src, D, region).patterns
    n = len(D)
    basis = nullspace(pats, n, ring)
    if basis:
        for a in basis:
            yield relation_polynomial(D, a, ring)
        return
    affine = nullspace([list(r) + [1] for r in pats], n + 1, ring)
    x_minus_1 = LaurentPoly(ring, {(1, 0): 1, (0, 0): -1})
    for a in affine:
        if any(a[:n]):
            yield x_minus_1 * relation_polynomial(D, a[:n], ring)


def input_region(f: LaurentPoly, region: Region) -> Region:
    """Window whose image under ``apply_poly(f, .)`` is exactly ``region``."""
    fx0, fx1 = f.x_range()
    fy0, fy1 = f.y_range()
    return Region(region.x0 - fx1, region.y0 - fy1, region.w + fx1 - fx0, region.h + fy1 - fy0)


def certify(f: LaurentPoly, src: ConfigSource, region: Region | None) -> AnnihilatorCertificate:
    """Check ``f`` on the translations ``region`` (exactly, for tori)."""
    target, _ = _resolve(src, f.ring)
    reg, _ = _translation_region(src, region)
    return check_annihilates(f, target, input_region(f, reg))


def annihilator_from_kernel(src: ConfigSource, D: Shape, region: Region | None = None,
                            ring: Ring | None = None) -> AnnihilatorCertificate | None:
    """First kernel annihilator of ``src`` over ``ring``, re-verified, or None."""
    for f in kernel_annihilators(src, D, region, ring):
        cert = certify(f, src, region)
        if cert.verified:
            return cert
    return None
