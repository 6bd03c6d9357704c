"""End-to-end periodicity pipeline on concrete configurations.

Starting from a configuration ``c`` in ``X_f`` the pipeline

1. measures the pattern complexity of ``c`` for a shape ``D``;
2. looks for an integer annihilator ``g`` of ``c`` in the pattern kernel;
3. reduces ``g`` modulo ``p``;
4. profiles the line polynomial factors of ``f``;
5. eliminates: if ``gcd(f, g) == 1`` the Bezout combinations along both axes
   are nonzero univariate annihilators, so ``c`` is two-periodic; if the gcd
   ``h`` is a line polynomial in direction ``u`` then ``f/h`` and ``g/h`` make
   ``h c`` two-periodic and a line polynomial ``h * (X^a Y^b - 1)`` in
   direction ``u`` annihilates ``c``;
6. cross-checks with directly detected periods.

Certificates on non-torus sources are window evidence, never proofs.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .algebra import (
    ZZ,
    LaurentPoly,
    monomial_normal_form,
    reduce_mod_p,
    substitute_x,
)
from .complexity import Shape, certify, complexity_count, kernel_annihilators
from .config import (
    ConfigSource,
    PeriodEvidence,
    Region,
    check_annihilates,
    detect_periods,
    window_of,
)
from .elimination import coprime_periodicity, exact_divide, poly_gcd
from .errors import (
    CommonFactorError,
    PreconditionError,
    RegionTooSmallError,
    RingMismatchError,
    ZeroPolynomialError,
)
from .linefactors import classify_nivat, line_direction_of
from .newton import Direction
from .univariate import polynomial_order, upoly_from_laurent

TWO_PERIODIC = "two-periodic-evidence"
NON_PERIODIC = "non-periodic-evidence"
INCONCLUSIVE = "inconclusive"

EXIT_CODES = {TWO_PERIODIC: 0, NON_PERIODIC: 4, INCONCLUSIVE: 3}


def exit_code(verdict: str) -> int:
    return EXIT_CODES.get(verdict, 0)


def ledrappier_ideal_membership(g: LaurentPoly) -> tuple[bool, LaurentPoly]:
    """Decide ``g in (1 + X + Y)`` over F_2; the witness is ``g'(1 + Y, Y)``.

    ``g'`` is the proper normal form of ``g``.  Substituting ``X = 1 + Y``
    kills exactly the multiples of ``1 + X + Y``.
    """
    if g.ring.p != 2:
        raise RingMismatchError("Ledrappier membership is over F_2")
    if g.is_zero():
        raise ZeroPolynomialError("membership of the zero polynomial")
    g1, _ = monomial_normal_form(g)
    beta = substitute_x(g1, LaurentPoly.parse("1 + Y", g.ring))
    return beta.is_zero(), beta


@dataclass
class Step:
    name: str
    inputs: dict[str, str] = field(default_factory=dict)
    outputs: dict[str, str] = field(default_factory=dict)
    verdict: str = ""


@dataclass
class PipelineReport:
    inputs: dict[str, str]
    steps: list[Step]
    verdict: str
    note: str = ""

    @property
    def exit_code(self) -> int:
        return exit_code(self.verdict)

    def to_text(self) -> str:
        out = ["pipeline report"]
        out += [f"{k}: {v}" for k, v in self.inputs.items()]
        for k, s in enumerate(self.steps, 1):
            out.append(f"step {k} {s.name}: {s.verdict}")
            out += [f"  in  {key}: {val}" for key, val in s.inputs.items()]
            out += [f"  out {key}: {val}" for key, val in s.outputs.items()]
        out.append(f"verdict: {self.verdict}")
        if self.note:
            out.append(f"note: {self.note}")
        return "\n".join(out) + "\n"

    def to_json(self) -> str:
        return json.dumps({
            "inputs": self.inputs,
            "steps": [s.__dict__ for s in self.steps],
            "verdict": self.verdict,
            "note": self.note,
        }, indent=2, sort_keys=False) + "\n"


def _univariate_period(r: LaurentPoly, axis: str, limit: int) -> int | None:
    """Period forced along ``axis`` by a nonzero annihilator in that variable alone."""
    r1, _ = monomial_normal_form(r)
    u, _ = upoly_from_laurent(r1, axis)
    return polynomial_order(u, limit)


def _vec(t) -> str:
    return f"({t[0]},{t[1]})"


def _fmt_index(idx) -> str:
    return "inf" if idx == math.inf else str(idx)


def _classify_periods(ev: PeriodEvidence) -> tuple[str, Direction | None]:
    if not ev.vectors:
        return NON_PERIODIC, None
    dirs = sorted({Direction.of(t) for t in ev.vectors})
    if len(dirs) >= 2:
        return TWO_PERIODIC, None
    return verdict_for(dirs[0]), dirs[0]


def verdict_for(direction: Direction | None) -> str:
    return TWO_PERIODIC if direction is None else f"periodic-in-direction{direction}"


def _eliminate(f: LaurentPoly, g: LaurentPoly, src: ConfigSource, region: Region,
               order_limit: int) -> tuple[Step, str | None]:
    """Run the elimination step for one candidate ``g``; verdict None if not applicable."""
    step = Step("elimination", {"f": str(f), "g mod p": str(g)})
    h = poly_gcd(f, g)
    step.outputs["gcd(f, g)"] = str(h)
    if h.is_constant():
        fa, ga, direction = f, g, None
    else:
        u = line_direction_of(h)
        if u is None:
            step.verdict = "not applicable: common factor is not a line polynomial"
            return step, None
        fa, ga, direction = exact_divide(f, h), exact_divide(g, h), u
        step.outputs["common factor direction"] = str(u)
        step.outputs["f / gcd"] = str(fa)
        step.outputs["g / gcd"] = str(ga)
    fa, _ = monomial_normal_form(fa)
    ga, _ = monomial_normal_form(ga)
    try:
        ex, ey = coprime_periodicity(fa, ga)
    except CommonFactorError:
        step.verdict = "not applicable: cofactors not coprime"
        return step, None
    step.outputs["X-free combination"] = str(ex.value)
    step.outputs["Y-free combination"] = str(ey.value)
    step.outputs["Bezout identities"] = (
        "verified" if ex.identity_holds() and ey.identity_holds() else "FAILED")
    ky = _univariate_period(ex.value, "Y", order_limit)
    kx = _univariate_period(ey.value, "X", order_limit)
    if kx is None or ky is None:
        step.verdict = "univariate annihilators found; period above search limit"
        return step, verdict_for(direction)
    ring = f.ring
    if direction is None:
        step.outputs["forced periods"] = f"{_vec((kx, 0))} {_vec((0, ky))}"
        certs = [check_annihilates(LaurentPoly.monomial(ring, kx, 0) - 1, src, region),
                 check_annihilates(LaurentPoly.monomial(ring, 0, ky) - 1, src, region)]
        verdict = TWO_PERIODIC
    else:
        k = math.lcm(kx, ky)
        t = (direction.a * k, direction.b * k)
        line = h * (LaurentPoly.monomial(ring, *t) - 1)
        step.outputs["period of gcd * c"] = f"{_vec((kx, 0))} {_vec((0, ky))}"
        step.outputs["line annihilator"] = str(line)
        try:
            certs = [check_annihilates(line, src, region)]
        except RegionTooSmallError:
            step.verdict = "line annihilator longer than the region"
            return step, verdict_for(direction)
        verdict = verdict_for(direction)
    ok = all(c.verified for c in certs)
    scope = certs[0].scope
    step.outputs["certificate"] = f"{'verified' if ok else 'FAILED'} ({scope})"
    step.verdict = verdict if ok else "certificate failed"
    return step, verdict if ok else None


def nivat_pipeline(src: ConfigSource, f: LaurentPoly, D: Shape, region: Region | None = None,
                   bound: int = 32, order_limit: int = 4096) -> PipelineReport:
    if not src.ring.is_field or f.ring != src.ring:
        raise RingMismatchError("pipeline needs f and the source over the same F_p")
    p = src.ring.p
    dom = src.domain()
    if dom is None and region is None:
        raise PreconditionError("a region is required for non-torus sources")
    check_region = dom.region if dom is not None else region
    inputs = {
        "source": src.describe(),
        "defining polynomial": str(f),
        "shape": f"{len(D)} cells " + " ".join(_vec(c) for c in D.cells),
        "region": str(check_region) + (" (torus, exact)" if dom is not None else ""),
    }
    steps: list[Step] = []

    pre = check_annihilates(f, src, check_region)
    steps.append(Step("annihilation check", {"f": str(f)},
                      {"status": pre.status, "scope": pre.scope}, pre.status))
    if not pre.verified:
        raise PreconditionError(f"{f} does not annihilate the source on {check_region}")

    count, low = complexity_count(src, D, None if dom is not None else region)
    steps.append(Step("complexity", {"|D|": str(len(D))},
                      {"patterns": str(count), "low complexity": str(low).lower()},
                      "low" if low else "high"))

    cls = classify_nivat(f)
    line_step = Step("line factors", {"f": str(f)}, {"class": cls.kind.value}, cls.kind.value)
    if cls.directions:
        line_step.outputs["directions"] = " ".join(str(d) for d in cls.directions)
        for e in cls.profile.entries:
            line_step.outputs[f"content {e.direction}"] = str(e.content)
    if cls.sublattice_index is not None:
        line_step.outputs["sublattice index"] = _fmt_index(cls.sublattice_index)

    candidates = []
    for gz in kernel_annihilators(src, D, None if dom is not None else region, ZZ):
        cert = certify(gz, src, None if dom is not None else region)
        if cert.verified:
            candidates.append(gz)
    z_step = Step("integer annihilator", {"method": "pattern kernel over Z"})
    z_step.outputs["candidates"] = str(len(candidates))
    steps.append(z_step)

    verdict = INCONCLUSIVE
    note = ""
    if not candidates:
        z_step.verdict = "none found"
        steps.append(line_step)
        note = "no integer annihilator in the pattern kernel"
    else:
        z_step.verdict = "found"
        elim_verdict = None
        tried = []
        for k, gz in enumerate(candidates):
            g = reduce_mod_p(gz, p)
            elim, elim_verdict = _eliminate(f, g, src, check_region, order_limit)
            tried.append((gz, g, elim))
            if elim_verdict is not None:
                break
        gz, g, elim = tried[-1]
        z_step.outputs["g"] = str(gz)
        z_step.outputs["candidate index"] = str(len(tried) - 1)
        steps.append(Step("reduce mod p", {"g": str(gz), "p": str(p)},
                          {"g mod p": str(g)}, "nonzero" if g else "zero"))
        steps.append(line_step)
        steps.append(elim)
        if elim_verdict is not None:
            verdict = elim_verdict
        else:
            note = "elimination route not applicable to any kernel annihilator; verdict from detected periods"

    win = dom if dom is not None else window_of(src, region)
    ev = detect_periods(win, bound, wrap=dom is not None)
    per_verdict, _ = _classify_periods(ev)
    shown = [t for t in ev.vectors if t[0] > 0 or (t[0] == 0 and t[1] > 0)][:8]
    steps.append(Step("period detection", {"bound": str(bound), "wrap": str(dom is not None).lower()},
                      {"vectors found": str(len(ev)),
                       "examples": " ".join(_vec(t) for t in shown) or "none"},
                      per_verdict))
    if verdict == INCONCLUSIVE and candidates:
        verdict = per_verdict
    if cls.kind.value == "MultiDirection":
        flag = (f"defining polynomial has line factors in several directions; "
                f"sublattice index {_fmt_index(cls.sublattice_index)}")
        note = f"{note}; {flag}" if note else flag
    return PipelineReport(inputs, steps, verdict, note)


# ---------------------------------------------------------------------------
# worked examples


def worked_example(name: str):
    """``(source, f, D, region)`` for the named worked example."""
    from .algebra import GF
    from .config import FourDotSource, additive_ca_torus, sublattice_counterexample
    from .complexity import scattered_square

    F2 = GF(2)
    if name == "fourdot":
        src = FourDotSource((0, 1, 1, 0, 1), (0, 0, 1))
        return src, LaurentPoly.parse("1 + X + Y + X*Y", F2), Shape.block(4), Region(0, 0, 64, 64)
    if name == "counterexample":
        return (sublattice_counterexample(), LaurentPoly.parse("1 + X^2 + Y^2 + X^2*Y^2", F2),
                scattered_square(3, 2), Region(-64, -64, 128, 128))
    if name == "ledrappier":
        f_l = LaurentPoly.parse("1 + X + Y", F2)
        src = additive_ca_torus(LaurentPoly.parse("1 + X", F2), LEDRAPPIER_SEED)
        return src, f_l, Shape.block(3), None
    raise ValueError(f"unknown worked example {name!r}")


LEDRAPPIER_SEED = (0, 0, 0, 1, 0, 1)
WORKED_EXAMPLES = ("fourdot", "counterexample", "ledrappier")
