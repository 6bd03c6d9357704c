"""Command line interface: ``algsubshift <group> <command> ...``.

Polynomial arguments are file paths or literal expressions.  Sources are
written as ``kind:arg:arg``::

    torus:grid.txt          fundamental domain from a %grid file
    ca:1+X:0001000          additive CA space-time diagram (rows j <= 0)
    ca-torus:1+X:011        CA seed closed into an exact torus
    fourdot:0101:0011       c[i,j] = r[i] + s[j] over F_2
    sublattice[:h|v|both]   the non-periodic (1+X^2)(1+Y^2) configuration
    const:1                 constant configuration

Shapes are %shape files, ``block:WxH`` or ``scattered:N,STEP``.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

from . import __version__
from .algebra import LaurentPoly, Ring, parse_poly
from .complexity import (
    Shape,
    annihilator_from_kernel,
    enumerate_patterns,
    scattered_square,
)
from .config import (
    AdditiveCASource,
    FourDotSource,
    Region,
    SublatticeLines,
    TorusSource,
    additive_ca_torus,
    check_annihilates,
    constant_source,
    detect_periods,
    format_grid,
    fourdot_decompose,
    parse_grid,
    sublattice_counterexample,
    window_of,
)
from .elimination import bezout_cofactors, resultant
from .errors import AlgSubshiftError
from .linefactors import NivatKind, classify_nivat
from .newton import candidate_line_directions, newton_polygon, sublattice_index
from .pipeline import WORKED_EXAMPLES, ledrappier_ideal_membership, nivat_pipeline, worked_example


def _read_arg(text: str) -> str:
    if os.path.isfile(text):
        with open(text) as fh:
            return fh.read()
    return text


def read_poly(text: str, ring: Ring) -> LaurentPoly:
    return parse_poly(_read_arg(text).strip(), ring)


def _pair(text: str, sep: str = ",") -> tuple[int, int]:
    a, b = text.split(sep)
    return int(a), int(b)


def read_region(args) -> Region | None:
    if getattr(args, "region", None):
        origin, size = args.region.split(":")
        x0, y0 = _pair(origin)
        w, h = _pair(size, "x")
        return Region(x0, y0, w, h)
    if args.size is None:
        return None
    x0, y0 = _pair(args.origin)
    w, h = _pair(args.size, "x")
    return Region(x0, y0, w, h)


def read_word(text: str) -> tuple[int, ...]:
    return tuple(int(t) for t in (text.split(",") if "," in text else text))


def read_source(spec: str, ring: Ring):
    kind, _, rest = spec.partition(":")
    args = rest.split(":") if rest else []
    if kind == "torus":
        return TorusSource(parse_grid(_read_arg(args[0])))
    if kind == "ca":
        return AdditiveCASource(ring, parse_poly(args[0], ring), read_word(args[1]))
    if kind == "ca-torus":
        src = additive_ca_torus(parse_poly(args[0], ring), read_word(args[1]))
        if src is None:
            raise AlgSubshiftError("seed does not lie on a cycle; no torus closure")
        return src
    if kind == "fourdot":
        return FourDotSource(read_word(args[0]), read_word(args[1]))
    if kind == "sublattice":
        return SublatticeLines(args[0] if args else "both")
    if kind == "const":
        return constant_source(ring, int(args[0]))
    raise AlgSubshiftError(f"unknown source kind {kind!r}")


def read_shape(spec: str) -> Shape:
    if spec.startswith("block:"):
        w, h = _pair(spec[6:], "x")
        return Shape.block(w, h)
    if spec.startswith("scattered:"):
        n, step = _pair(spec[10:])
        return scattered_square(n, step)
    return Shape.parse(_read_arg(spec))


def _fmt_index(idx) -> str:
    return "inf" if idx == math.inf else str(idx)


# ---------------------------------------------------------------------------
# commands; each returns (text, exit code)


def cmd_poly_info(args):
    ring = Ring(args.mod)
    f = read_poly(args.poly, ring)
    poly = newton_polygon(f)
    lines = [f"polynomial: {f}", "vertices: " + " ".join(f"({x},{y})" for x, y in poly.vertices)]
    for e in poly.edges:
        lines.append(f"edge: ({e.start[0]},{e.start[1]}) -> ({e.end[0]},{e.end[1]}) "
                     f"normal ({e.normal[0]},{e.normal[1]})")
    dirs = sorted(candidate_line_directions(f))
    lines.append("candidate directions: " + (" ".join(map(str, dirs)) or "none"))
    lines.append(f"sublattice index: {_fmt_index(sublattice_index(f))}")
    return "\n".join(lines) + "\n", 0


def cmd_poly_classify(args):
    f = read_poly(args.poly, Ring(args.mod))
    cls = classify_nivat(f)
    return cls.report() + "\n", 2 if cls.kind is NivatKind.MULTI else 0


def cmd_poly_resultant(args):
    ring = Ring(args.mod)
    r = resultant(read_poly(args.f, ring), read_poly(args.g, ring), args.axis)
    return f"Res_{args.axis}: {r}\n", 0


def cmd_poly_bezout(args):
    ring = Ring(args.mod)
    res = bezout_cofactors(read_poly(args.f, ring), read_poly(args.g, ring), args.axis)
    return res.report() + "\n", 0 if res.identity_holds() else 1


def cmd_poly_member(args):
    g = read_poly(args.poly, Ring(2))
    member, beta = ledrappier_ideal_membership(g)
    return f"member: {str(member).lower()}\nwitness: {beta}\n", 0 if member else 1


def cmd_config_gen(args):
    src = read_source(args.source, Ring(args.mod))
    return format_grid(window_of(src, read_region(args))), 0


def cmd_config_check(args):
    src = read_source(args.source, Ring(args.mod))
    cert = check_annihilates(read_poly(args.poly, src.ring), src, read_region(args))
    return cert.report() + "\n", 0 if cert.verified else 1


def _window_arg(args):
    if args.grid:
        return parse_grid(_read_arg(args.grid))
    return window_of(read_source(args.source, Ring(args.mod)), read_region(args))


def cmd_config_periods(args):
    win = _window_arg(args)
    ev = detect_periods(win, args.bound, wrap=args.wrap)
    lines = [f"window: {win.region}", f"bound: {args.bound}",
             f"scope: {'exact (torus)' if ev.exact else 'window evidence'}",
             f"count: {len(ev)}"]
    lines += [f"({t[0]},{t[1]}) overlap={ev.overlaps[t]}" for t in ev.vectors]
    return "\n".join(lines) + "\n", 0


def cmd_config_decompose4(args):
    win = _window_arg(args)
    dec = fourdot_decompose(win, _pair(args.anchor))
    text = ("c:\n" + format_grid(dec.c) + "h:\n" + format_grid(dec.h) + "v:\n" + format_grid(dec.v)
            + "d:\n" + format_grid(dec.d) + dec.report() + "\n")
    return text, 0 if dec.sum_holds and dec.integer_identity_holds else 1


def cmd_config_counterexample(args):
    src = SublatticeLines(args.part) if args.part != "both" else sublattice_counterexample()
    return format_grid(window_of(src, read_region(args))), 0


def cmd_complexity_count(args):
    src = read_source(args.source, Ring(args.mod))
    D = read_shape(args.shape)
    ps = enumerate_patterns(src, D, read_region(args))
    low = len(ps) <= len(D)
    text = (f"|D|: {len(D)}\npatterns: {len(ps)}\nlow complexity: {str(low).lower()}\n"
            f"region: {ps.region}\nscope: {'exact' if ps.exact else 'lower bound'}\n")
    return text, 0


def cmd_complexity_annihilator(args):
    src = read_source(args.source, Ring(args.src_mod))
    cert = annihilator_from_kernel(src, read_shape(args.shape), read_region(args), Ring(args.mod))
    if cert is None:
        return "annihilator: none\n", 1
    return cert.report() + "\n", 0


def cmd_pipeline_run(args):
    if args.example:
        src, f, D, region = worked_example(args.example)
    else:
        ring = Ring(args.mod)
        src = read_source(args.source, ring)
        f = read_poly(args.poly, ring)
        D = read_shape(args.shape)
        region = read_region(args)
    rep = nivat_pipeline(src, f, D, region, bound=args.bound)
    return (rep.to_json() if args.format == "json" else rep.to_text()), rep.exit_code


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mod", type=int, default=2, help="prime p, or 0 for the integers")
    common.add_argument("--out", help="write output to this file")

    area = argparse.ArgumentParser(add_help=False)
    area.add_argument("--origin", default="0,0")
    area.add_argument("--size", help="WxH")
    area.add_argument("--region", help="X0,Y0:WxH (overrides --origin/--size)")

    parser = argparse.ArgumentParser(prog="algsubshift", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    groups = parser.add_subparsers(dest="group", required=True)

    poly = groups.add_parser("poly").add_subparsers(dest="cmd", required=True)
    p = poly.add_parser("info", parents=[common])
    p.add_argument("poly")
    p.set_defaults(func=cmd_poly_info)
    p = poly.add_parser("classify", parents=[common])
    p.add_argument("poly")
    p.set_defaults(func=cmd_poly_classify)
    for name, fn in (("resultant", cmd_poly_resultant), ("bezout", cmd_poly_bezout)):
        p = poly.add_parser(name, parents=[common])
        p.add_argument("f")
        p.add_argument("g")
        p.add_argument("--axis", choices=("X", "Y"), default="X")
        p.set_defaults(func=fn)
    p = poly.add_parser("member-ledrappier", parents=[common])
    p.add_argument("poly")
    p.set_defaults(func=cmd_poly_member)

    config = groups.add_parser("config").add_subparsers(dest="cmd", required=True)
    p = config.add_parser("gen", parents=[common, area])
    p.add_argument("--source", required=True)
    p.set_defaults(func=cmd_config_gen)
    p = config.add_parser("check", parents=[common, area])
    p.add_argument("--source", required=True)
    p.add_argument("--poly", required=True)
    p.set_defaults(func=cmd_config_check)
    for name, fn in (("periods", cmd_config_periods), ("decompose4", cmd_config_decompose4)):
        p = config.add_parser(name, parents=[common, area])
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--source")
        src.add_argument("--grid")
        p.set_defaults(func=fn)
    config.choices["periods"].add_argument("--bound", type=int, default=8)
    config.choices["periods"].add_argument("--wrap", action="store_true",
                                           help="read the window as a torus")
    config.choices["decompose4"].add_argument("--anchor", default="0,0")
    p = config.add_parser("counterexample", parents=[common, area])
    p.add_argument("--part", choices=("h", "v", "both"), default="both")
    p.set_defaults(func=cmd_config_counterexample)

    cx = groups.add_parser("complexity").add_subparsers(dest="cmd", required=True)
    p = cx.add_parser("count", parents=[common, area])
    p.add_argument("--source", required=True)
    p.add_argument("--shape", required=True)
    p.set_defaults(func=cmd_complexity_count)
    p = cx.add_parser("annihilator", parents=[common, area])
    p.add_argument("--source", required=True)
    p.add_argument("--shape", required=True)
    p.add_argument("--src-mod", type=int, default=2, help="prime of the source alphabet")
    p.set_defaults(func=cmd_complexity_annihilator)

    pl = groups.add_parser("pipeline").add_subparsers(dest="cmd", required=True)
    p = pl.add_parser("run", parents=[common, area])
    p.add_argument("--example", choices=WORKED_EXAMPLES)
    p.add_argument("--source")
    p.add_argument("--poly")
    p.add_argument("--shape")
    p.add_argument("--bound", type=int, default=32)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_pipeline_run)
    return parser


_COORD_FLAGS = ("--origin", "--region", "--anchor")


def _glue_negative(argv: list[str]) -> list[str]:
    # argparse would read "-4,-4" after --origin as an option
    out: list[str] = []
    k = 0
    while k < len(argv):
        tok = argv[k]
        if tok in _COORD_FLAGS and k + 1 < len(argv) and argv[k + 1].startswith("-"):
            out.append(f"{tok}={argv[k + 1]}")
            k += 2
        else:
            out.append(tok)
            k += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_glue_negative(argv))
    if args.group == "pipeline" and not args.example and not (args.source and args.poly and args.shape):
        parser.error("pipeline run needs --example or --source, --poly and --shape")
    try:
        text, code = args.func(args)
    except (AlgSubshiftError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
