"""Finite descriptions of configurations and grid computations on them.

A configuration ``c`` is a coloring of Z^2 with values in a ring.  Windows hold
a finite rectangle of it; sources generate windows on demand.

Polynomials act by ``(f c)_n = sum_u f_u c_{n-u}``, so multiplying by
``X^i Y^j`` translates the configuration by ``(i, j)``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .algebra import ZZ, LaurentPoly, Ring
from .errors import (
    PreconditionError,
    RegionTooSmallError,
    RingMismatchError,
    UnreachableRegionError,
)


class Region(NamedTuple):
    x0: int
    y0: int
    w: int
    h: int

    @classmethod
    def square(cls, n: int, origin=(0, 0)) -> Region:
        return cls(origin[0], origin[1], n, n)

    @property
    def origin(self):
        return (self.x0, self.y0)

    def __str__(self):
        return f"origin={self.x0},{self.y0} size={self.w}x{self.h}"


def _dtype(ring: Ring):
    return object if not ring.is_field else np.int64


@dataclass(frozen=True, eq=False)
class Window:
    """Rectangle of a configuration; ``values[i, j] == c[x0 + i, y0 + j]``."""

    ring: Ring
    origin: tuple[int, int]
    values: np.ndarray

    def __post_init__(self):
        v = np.array(self.values, dtype=_dtype(self.ring))
        if v.ndim != 2 or v.shape[0] < 1 or v.shape[1] < 1:
            raise ValueError(f"window values must be a nonempty 2-d array, got shape {v.shape}")
        if self.ring.is_field:
            v %= self.ring.p
        v.setflags(write=False)
        object.__setattr__(self, "values", v)
        object.__setattr__(self, "origin", (int(self.origin[0]), int(self.origin[1])))

    @property
    def width(self) -> int:
        return self.values.shape[0]

    @property
    def height(self) -> int:
        return self.values.shape[1]

    @property
    def region(self) -> Region:
        return Region(self.origin[0], self.origin[1], self.width, self.height)

    def __getitem__(self, xy):
        x, y = xy
        return self.values[x - self.origin[0], y - self.origin[1]]

    def contains(self, x, y) -> bool:
        return 0 <= x - self.origin[0] < self.width and 0 <= y - self.origin[1] < self.height

    def is_zero(self) -> bool:
        return not np.any(self.values != 0)

    def __eq__(self, other):
        if not isinstance(other, Window):
            return NotImplemented
        return (self.ring == other.ring and self.origin == other.origin
                and self.values.shape == other.values.shape
                and bool(np.all(self.values == other.values)))

    def restrict(self, region: Region) -> Window:
        dx, dy = region.x0 - self.origin[0], region.y0 - self.origin[1]
        if dx < 0 or dy < 0 or dx + region.w > self.width or dy + region.h > self.height:
            raise ValueError(f"{region} not inside window {self.region}")
        return Window(self.ring, region.origin, self.values[dx:dx + region.w, dy:dy + region.h])

    def __str__(self):
        return format_grid(self)


# ---------------------------------------------------------------------------
# sources


class ConfigSource:
    """Finite description of a configuration over ``ring``."""

    ring: Ring

    def block(self, x0: int, y0: int, w: int, h: int) -> np.ndarray:
        raise NotImplementedError

    def domain(self) -> Window | None:
        """Fundamental domain when the source is a torus, else None."""
        return None

    def describe(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True, eq=False)
class TorusSource(ConfigSource):
    """Two-periodic configuration with periods ``(w, 0)`` and ``(0, h)``."""

    grid: Window

    @property
    def ring(self):
        return self.grid.ring

    def block(self, x0, y0, w, h):
        g = self.grid
        xs = (np.arange(x0, x0 + w) - g.origin[0]) % g.width
        ys = (np.arange(y0, y0 + h) - g.origin[1]) % g.height
        return g.values[np.ix_(xs, ys)]

    def domain(self):
        return self.grid

    def describe(self):
        return f"torus {self.grid.width}x{self.grid.height} over {self.ring}"


@dataclass(frozen=True, eq=False)
class AdditiveCASource(ConfigSource):
    """Space-time diagram of the additive CA with local rule ``rule(X)``.

    Row ``j = 0`` is the seed word repeated with period ``len(seed)``; rows
    below follow ``c[i, j-1] = sum_k g_k c[i-k, j]`` so the configuration is
    annihilated by ``Y - rule(X)``.  Rows above the seed are unavailable.
    """

    ring: Ring
    rule: LaurentPoly
    seed: tuple[int, ...]

    def __post_init__(self):
        if self.rule.ring != self.ring:
            raise RingMismatchError("rule ring differs from source ring")
        if self.rule.is_zero() or self.rule.involves_y():
            raise ValueError("rule must be a nonzero polynomial in X")
        if not self.seed:
            raise ValueError("seed word must be nonempty")
        object.__setattr__(self, "seed", tuple(self.ring.reduce(int(v)) for v in self.seed))

    def step(self, row: np.ndarray) -> np.ndarray:
        out = np.zeros_like(row)
        for (k, _), c in self.rule.items():
            out = out + c * np.roll(row, k)
        return out % self.ring.p if self.ring.is_field else out

    def rows(self, count: int) -> list[np.ndarray]:
        """Rows ``j = 0, -1, ..., -(count-1)`` over one period."""
        row = np.array(self.seed, dtype=_dtype(self.ring))
        out = [row]
        for _ in range(count - 1):
            row = self.step(row)
            out.append(row)
        return out

    def block(self, x0, y0, w, h):
        top = y0 + h - 1
        if top > 0:
            raise UnreachableRegionError(
                f"rows above the seed row (requested up to y={top}) cannot be generated")
        rows = self.rows(1 - y0)
        n = len(self.seed)
        xs = np.arange(x0, x0 + w) % n
        out = np.empty((w, h), dtype=_dtype(self.ring))
        for b in range(h):
            out[:, b] = rows[-(y0 + b)][xs]
        return out

    def describe(self):
        word = "".join(str(v) for v in self.seed) if self.ring.p and self.ring.p <= 10 else str(self.seed)
        return f"additive CA over {self.ring}, rule {self.rule}, seed {word}"


def additive_ca_torus(rule: LaurentPoly, seed, max_height: int | None = None) -> TorusSource | None:
    """Close a periodic seed row into an exact torus, if it lies on a cycle.

    Returns the torus of width ``len(seed)`` and height equal to the cycle
    length of the seed under the CA map, or None when the seed is transient.
    """
    src = AdditiveCASource(rule.ring, rule, tuple(seed))
    start = np.array(src.seed, dtype=_dtype(src.ring))
    p = src.ring.p
    bound = max_height if max_height is not None else (p ** len(seed) if p else 1 << 12)
    rows = [start]
    row = start
    for _ in range(bound):
        row = src.step(row)
        if np.array_equal(row, start):
            # rows[k] sits at y = -k; put the domain at y in [-(h-1), 0]
            h = len(rows)
            vals = np.stack(rows[::-1], axis=1)
            return TorusSource(Window(src.ring, (0, -(h - 1)), vals))
        rows.append(row)
    return None


@dataclass(frozen=True, eq=False)
class FourDotSource(ConfigSource):
    """``c[i, j] = r[i mod |r|] + s[j mod |s|]`` over F_2."""

    r: tuple[int, ...]
    s: tuple[int, ...]
    ring: Ring = Ring(2)

    def __post_init__(self):
        if self.ring.p != 2:
            raise ValueError("four-dot sources are binary")
        if not self.r or not self.s:
            raise ValueError("words must be nonempty")
        object.__setattr__(self, "r", tuple(int(v) % 2 for v in self.r))
        object.__setattr__(self, "s", tuple(int(v) % 2 for v in self.s))

    def block(self, x0, y0, w, h):
        rv = np.array(self.r, dtype=np.int64)[np.arange(x0, x0 + w) % len(self.r)]
        sv = np.array(self.s, dtype=np.int64)[np.arange(y0, y0 + h) % len(self.s)]
        return (rv[:, None] + sv[None, :]) % 2

    def describe(self):
        return f"four-dot r={''.join(map(str, self.r))} s={''.join(map(str, self.s))}"


@dataclass(frozen=True, eq=False)
class SublatticeLines(ConfigSource):
    """Horizontal dotted line on ``j = 0``, even ``i``, plus a vertical one on
    ``i = 1``, even ``j``.  ``part`` selects ``"h"``, ``"v"`` or ``"both"``."""

    part: str = "both"
    ring: Ring = Ring(2)

    def __post_init__(self):
        if self.part not in ("h", "v", "both"):
            raise ValueError("part must be 'h', 'v' or 'both'")

    def block(self, x0, y0, w, h):
        xs = np.arange(x0, x0 + w)[:, None]
        ys = np.arange(y0, y0 + h)[None, :]
        out = np.zeros((w, h), dtype=np.int64)
        if self.part in ("h", "both"):
            out += (ys == 0) & (xs % 2 == 0)
        if self.part in ("v", "both"):
            out += (xs == 1) & (ys % 2 == 0)
        return out % 2

    def describe(self):
        return "sublattice lines" + ("" if self.part == "both" else f" ({self.part}-part)")


@dataclass(frozen=True, eq=False)
class SumSource(ConfigSource):
    left: ConfigSource
    right: ConfigSource

    def __post_init__(self):
        if self.left.ring != self.right.ring:
            raise RingMismatchError("summands over different rings")

    @property
    def ring(self):
        return self.left.ring

    def block(self, x0, y0, w, h):
        out = self.left.block(x0, y0, w, h) + self.right.block(x0, y0, w, h)
        return out % self.ring.p if self.ring.is_field else out

    def domain(self):
        a, b = self.left.domain(), self.right.domain()
        if a is None or b is None:
            return None
        w = math.lcm(a.width, b.width)
        h = math.lcm(a.height, b.height)
        return Window(self.ring, a.origin, self.block(a.origin[0], a.origin[1], w, h))

    def describe(self):
        return f"({self.left.describe()}) + ({self.right.describe()})"


@dataclass(frozen=True, eq=False)
class ZLiftSource(ConfigSource):
    """Values ``0..p-1`` of an F_p source read as integers."""

    base: ConfigSource
    ring: Ring = field(default=ZZ, init=False)

    def block(self, x0, y0, w, h):
        return self.base.block(x0, y0, w, h).astype(object)

    def domain(self):
        d = self.base.domain()
        return None if d is None else zlift(d)

    def describe(self):
        return f"integer lift of {self.base.describe()}"


def constant_source(ring: Ring, value: int) -> TorusSource:
    return TorusSource(Window(ring, (0, 0), [[value]]))


def sublattice_counterexample() -> SublatticeLines:
    """Non-periodic, low-complexity configuration annihilated by (1+X^2)(1+Y^2)."""
    return SublatticeLines("both")


# ---------------------------------------------------------------------------
# operations


def generate_window(src: ConfigSource, origin=(0, 0), w: int = 1, h: int = 1) -> Window:
    if w < 1 or h < 1:
        raise ValueError("window size must be positive")
    return Window(src.ring, origin, src.block(origin[0], origin[1], w, h))


def window_of(src: ConfigSource, region: Region) -> Window:
    return generate_window(src, region.origin, region.w, region.h)


def zlift(win: Window) -> Window:
    if not win.ring.is_field:
        raise RingMismatchError("zlift expects a window over F_p")
    return Window(ZZ, win.origin, win.values.astype(object))


def _finish(acc, ring: Ring):
    return acc % ring.p if ring.is_field else acc


def apply_poly(f: LaurentPoly, win: Window) -> Window:
    """``f * c`` on the largest sub-rectangle determined by ``win``."""
    if f.ring != win.ring:
        raise RingMismatchError(f"polynomial over {f.ring}, window over {win.ring}")
    if f.is_zero():
        return Window(win.ring, win.origin, np.zeros_like(win.values))
    imin, imax = f.x_range()
    jmin, jmax = f.y_range()
    w2 = win.width - (imax - imin)
    h2 = win.height - (jmax - jmin)
    if w2 < 1 or h2 < 1:
        raise RegionTooSmallError(
            f"window {win.width}x{win.height} too small for polynomial span "
            f"{imax - imin + 1}x{jmax - jmin + 1}")
    v = win.values
    acc = np.zeros((w2, h2), dtype=v.dtype)
    for (ui, uj), c in f.items():
        a, b = imax - ui, jmax - uj
        acc = acc + c * v[a:a + w2, b:b + h2]
    return Window(win.ring, (win.origin[0] + imax, win.origin[1] + jmax), _finish(acc, win.ring))


def apply_poly_torus(f: LaurentPoly, grid: Window) -> Window:
    """``f * c`` for the torus with fundamental domain ``grid`` (exact)."""
    if f.ring != grid.ring:
        raise RingMismatchError(f"polynomial over {f.ring}, grid over {grid.ring}")
    v = grid.values
    acc = np.zeros_like(v)
    for (ui, uj), c in f.items():
        acc = acc + c * np.roll(v, (ui, uj), axis=(0, 1))
    return Window(grid.ring, grid.origin, _finish(acc, grid.ring))


@dataclass(frozen=True)
class AnnihilatorCertificate:
    poly: LaurentPoly
    scope: str  # "exact-torus" or "window"
    region: Region
    verified: bool
    source: str = ""

    @property
    def status(self) -> str:
        return "verified" if self.verified else "failed"

    def report(self) -> str:
        note = "" if self.scope == "exact-torus" else " (window evidence, not a proof)"
        return (f"polynomial: {self.poly}\nscope: {self.scope}{note}\n"
                f"region: {self.region}\nstatus: {self.status}")


def check_annihilates(f: LaurentPoly, src: ConfigSource, region: Region | None = None) -> AnnihilatorCertificate:
    """Check ``f * c == 0``: exactly for tori, on ``region`` otherwise."""
    if f.ring != src.ring:
        raise RingMismatchError(f"polynomial over {f.ring}, source over {src.ring}")
    dom = src.domain()
    if dom is not None:
        out = apply_poly_torus(f, dom)
        return AnnihilatorCertificate(f, "exact-torus", dom.region, out.is_zero(), src.describe())
    if region is None:
        raise PreconditionError("a region is required for non-torus sources")
    win = window_of(src, region)
    out = apply_poly(f, win)
    return AnnihilatorCertificate(f, "window", out.region, out.is_zero(), src.describe())


class PeriodEvidence:
    """Translation vectors under which a window agrees with itself.

    Without wraparound this is window evidence only: each vector comes with
    the size of the overlap on which agreement was checked.
    """

    def __init__(self, vectors, overlaps, exact: bool):
        self.vectors = list(vectors)
        self.overlaps = dict(overlaps)
        self.exact = exact

    def __contains__(self, t):
        return tuple(t) in self.overlaps

    def __iter__(self):
        return iter(self.vectors)

    def __len__(self):
        return len(self.vectors)

    def __bool__(self):
        return bool(self.vectors)

    def __repr__(self):
        return f"PeriodEvidence({self.vectors!r}, exact={self.exact})"


def detect_periods(win: Window, bound: int, wrap: bool = False) -> PeriodEvidence:
    """All ``t`` with ``0 < max(|t_x|, |t_y|) <= bound`` fixing the window.

    With ``wrap`` the window is read as a torus fundamental domain and the
    answer is exact; otherwise agreement is checked on the overlap of the
    window and its translate, skipping vectors with empty overlap.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    v = win.values
    W, H = v.shape
    vecs, overlaps = [], {}
    for tx, ty in itertools.product(range(-bound, bound + 1), repeat=2):
        if tx == 0 and ty == 0:
            continue
        if wrap:
            ok = np.array_equal(np.roll(v, (tx, ty), axis=(0, 1)), v)
            size = W * H
        else:
            if abs(tx) >= W or abs(ty) >= H:
                continue
            # c[n + t] == c[n] for n, n + t both in the window
            a = v[max(0, -tx):W - max(0, tx), max(0, -ty):H - max(0, ty)]
            b = v[max(0, tx):W - max(0, -tx), max(0, ty):H - max(0, -ty)]
            ok = np.array_equal(a, b)
            size = a.size
        if ok:
            vecs.append((tx, ty))
            overlaps[(tx, ty)] = size
    return PeriodEvidence(vecs, overlaps, wrap)


@dataclass(frozen=True, eq=False)
class FourDotDecomposition:
    c: Window
    h: Window
    v: Window
    d: Window
    sum_holds: bool
    integer_identity_holds: bool

    def report(self) -> str:
        return "\n".join([
            f"c = h + v over F_2: {'holds' if self.sum_holds else 'FAILS'}",
            f"c = h + v - 2d over Z: {'holds' if self.integer_identity_holds else 'FAILS'}",
        ])


def fourdot_decompose(win: Window, anchor=(0, 0)) -> FourDotDecomposition:
    """Split ``c`` annihilated by (1+X)(1+Y) into horizontal and vertical parts.

    ``h[i, j] = c[a, j]`` is constant along rows, ``v[i, j] = c[i, b] + c[a, b]``
    is constant along columns, and ``d`` marks cells where both are one.
    """
    if win.ring.p != 2:
        raise RingMismatchError("four-dot decomposition works over F_2")
    a, b = anchor
    if not win.contains(a, b):
        raise PreconditionError(f"anchor row/column {anchor} outside window {win.region}")
    f_s = LaurentPoly.parse("1 + X + Y + X*Y", win.ring)
    if not apply_poly(f_s, win).is_zero():
        raise PreconditionError("window is not annihilated by (1+X)(1+Y)")
    vals = win.values
    ai, bj = a - win.origin[0], b - win.origin[1]
    col = vals[ai, :]  # c[a, j]
    row = vals[:, bj]  # c[i, b]
    hv = np.broadcast_to(col[None, :], vals.shape)
    vv = np.broadcast_to(((row + vals[ai, bj]) % 2)[:, None], vals.shape)
    dv = hv & vv
    h = Window(win.ring, win.origin, hv)
    v = Window(win.ring, win.origin, vv)
    d = Window(win.ring, win.origin, dv)
    sum_ok = bool(np.array_equal((hv + vv) % 2, vals))
    zc = zlift(win).values
    int_ok = bool(np.all(zc == (hv.astype(object) + vv.astype(object) - 2 * dv.astype(object))))
    return FourDotDecomposition(win, h, v, d, sum_ok, int_ok)


def search_monomial_difference_annihilator(src: ConfigSource, m_max: int = 2) -> LaurentPoly | None:
    """Smallest product of factors ``X^i Y^j - 1`` annihilating the integer lift.

    Bounded search over torus sources: at most ``m_max`` factors, exponents
    with ``0 <= i <= w`` and ``|j| <= h`` (canonical sign), ordered by factor
    count and then lexicographically.
    """
    dom = src.domain()
    if dom is None:
        raise PreconditionError("monomial-difference search needs a torus source")
    grid = zlift(dom) if dom.ring.is_field else dom
    W, H = grid.width, grid.height
    vecs = [(i, j) for i in range(0, W + 1) for j in range(-H, H + 1)
            if i > 0 or j > 0]
    one = LaurentPoly.one(ZZ)
    for m in range(1, m_max + 1):
        for combo in itertools.combinations_with_replacement(vecs, m):
            f = one
            for i, j in combo:
                f = f * (LaurentPoly.monomial(ZZ, i, j) - one)
            if apply_poly_torus(f, grid).is_zero():
                return f
    return None


# ---------------------------------------------------------------------------
# grid text format


def format_grid(win: Window) -> str:
    p = win.ring.p
    lines = [f"%grid mod={p} origin={win.origin[0]},{win.origin[1]} size={win.width}x{win.height}"]
    digits = 0 < p <= 10
    for b in range(win.height - 1, -1, -1):
        col = win.values[:, b]
        lines.append("".join(str(int(x)) for x in col) if digits else " ".join(str(int(x)) for x in col))
    return "\n".join(lines) + "\n"


def parse_grid(text: str) -> Window:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("%grid"):
        raise ValueError("missing %grid header")
    fields = dict(tok.split("=", 1) for tok in lines[0].split()[1:])
    p = int(fields["mod"])
    x0, y0 = (int(t) for t in fields["origin"].split(","))
    w, h = (int(t) for t in fields["size"].split("x"))
    rows = lines[1:]
    if len(rows) != h:
        raise ValueError(f"expected {h} rows, got {len(rows)}")
    digits = 0 < p <= 10
    ring = Ring(p)
    vals = np.empty((w, h), dtype=_dtype(ring))
    for k, line in enumerate(rows):
        toks = list(line.strip()) if digits else line.split()
        if len(toks) != w:
            raise ValueError(f"row {k} has {len(toks)} cells, expected {w}")
        vals[:, h - 1 - k] = [int(t) for t in toks]
    return Window(ring, (x0, y0), vals)
