"""Command line interface: ``powergeom analyze | hull | order | presets``.

Exit status is 0 on success, 1 on bad input (usage, equation, assumption or
point syntax), 2 if an internal invariant check fails.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from powergeom import errata, presets, report
from powergeom.exponents import Convention
from powergeom.funcexpr import FunctionSyntaxError, compile_function
from powergeom.orders import (OrderEvaluationError, RaySpec, derivative_order_gaps,
                              estimate_order)
from powergeom.parser import ParseError, parse_differential_sum
from powergeom.polyhedron import HullInvariantError, check_lattice, convex_hull
from powergeom.truncation import (AssumptionError, InvalidFaceError, analyze,
                                  parse_assumptions)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="powergeom",
                     description="Power Geometry of second-order polynomial ODEs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def output_flags(p):
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")

    a = sub.add_parser("analyze", help="support, polyhedron and truncations of an equation")
    src = a.add_mutually_exclusive_group(required=True)
    src.add_argument("--preset", help=f"one of: {', '.join(presets.PRESETS)}")
    src.add_argument("--equation", help="equation text, e.g. \"w'' - 6*w^2 - z\"")
    src.add_argument("--file", type=Path, help="UTF-8 file holding the equation text")
    a.add_argument("--dim", type=int, choices=[2, 3, 4], default=4)
    a.add_argument("--convention", choices=[c.value for c in Convention],
                   default=Convention.PLAIN.value)
    a.add_argument("--regime", choices=["zero", "infinity", "both"], default="both",
                   help="which candidate order triples to report")
    a.add_argument("--assume", default="", metavar="LIST",
                   help="comma separated 'name!=0' or 'name=value' facts")
    a.add_argument("--force-relative", action="store_true",
                   help="analyze facets relative to the affine hull of a degenerate support")
    a.add_argument("--explain", action="store_true",
                   help="describe the preset and its known misprints, then exit")
    output_flags(a)

    h = sub.add_parser("hull", help="face lattice of an explicit point list")
    h.add_argument("--points", required=True, help='e.g. "(0,0),(1,0),(0,1),(1,1)"')
    output_flags(h)

    o = sub.add_parser("order", help="numerical order of a function along rays")
    o.add_argument("--psi", required=True, help="function of z, e.g. 'z + z^2.5'")
    o.add_argument("--dpsi", help="its first derivative (enables the gap report)")
    o.add_argument("--d2psi", help="its second derivative")
    o.add_argument("--phi", default="0", help="ray direction(s), comma separated")
    o.add_argument("--regime", choices=["zero", "infinity"], default="zero")
    o.add_argument("--r0", type=float)
    o.add_argument("--ratio", type=float)
    o.add_argument("--count", type=int)
    o.add_argument("--tol", type=float, default=1e-3)
    output_flags(o)

    sub.add_parser("presets", help="list the built-in equations")
    return parser


_POINT = re.compile(r"\(\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\)")


def parse_points(text: str) -> list[tuple[int, ...]]:
    points = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _POINT.match(text, pos)
        if not m:
            raise UsageError(f"malformed point list near {text[pos:pos + 12]!r}")
        points.append(tuple(int(x) for x in m.group(1).split(",")))
        pos = m.end()
        while pos < len(text) and text[pos] in ", \t":
            pos += 1
    if not points:
        raise UsageError("no points given")
    return points


def _cmd_analyze(args) -> str:
    if args.preset:
        preset = presets.get(args.preset)
        if args.explain:
            return _explain(preset)
        text = preset.equation
    elif args.explain:
        raise UsageError("--explain needs --preset")
    elif args.file:
        text = args.file.read_text("utf-8")
    else:
        text = args.equation
    sum_ = parse_differential_sum(text)
    result = analyze(sum_, args.dim, Convention(args.convention),
                     parse_assumptions(args.assume), args.force_relative,
                     preset=args.preset)
    check_lattice(result.lattice)
    return _emit(report.analysis_document(result, args.regime), args.format)


def _explain(preset: presets.Preset) -> str:
    lines = [f"{preset.name}: {preset.title}", f"differential sum: {preset.equation} = 0"]
    if preset.genericity:
        lines.append(f"generic case: {preset.genericity}")
    if preset.note:
        lines.append(f"note: {preset.note}")
    for e in errata.entries(preset.name):
        lines.append(f"erratum {e['id']}: {e['summary']}")
    return "\n".join(lines) + "\n"


def _cmd_hull(args) -> str:
    lattice = convex_hull(parse_points(args.points))
    check_lattice(lattice)
    return _emit(report.hull_document(lattice), args.format)


def _cmd_order(args) -> str:
    sources = [args.psi] + [s for s in (args.dpsi, args.d2psi) if s]
    if len(sources) == 2:
        raise UsageError("--dpsi and --d2psi must be given together")
    fns = [compile_function(s) for s in sources]
    try:
        phis = [float(x) for x in args.phi.split(",")]
    except ValueError:
        raise UsageError(f"malformed --phi {args.phi!r}") from None
    rows = []
    for phi in phis:
        base = RaySpec.default(args.regime, phi)
        try:
            ray = RaySpec(phi, base.regime,
                          args.r0 if args.r0 is not None else base.r0,
                          args.ratio if args.ratio is not None else base.ratio,
                          args.count if args.count is not None else base.count)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if len(fns) == 3:
            gaps = derivative_order_gaps(*fns, ray, args.tol)
            rows.append((ray, list(gaps.orders), gaps))
        else:
            rows.append((ray, [estimate_order(fns[0], ray, args.tol)], None))
    return _emit(report.order_document(sources, rows, args.tol), args.format)


def _cmd_presets(args) -> str:
    return "".join(f"{p.name}: {p.equation} = 0\n" for p in presets.PRESETS.values())


def _emit(doc: dict, fmt: str) -> str:
    return report.dumps(doc) if fmt == "json" else report.render_text(doc)


COMMANDS = {"analyze": _cmd_analyze, "hull": _cmd_hull,
            "order": _cmd_order, "presets": _cmd_presets}


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        output = COMMANDS[args.command](args)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except ParseError as exc:
        print(f"error: {exc.pretty()}", file=stderr)
        return 1
    except (UsageError, AssumptionError, FunctionSyntaxError, OrderEvaluationError,
            InvalidFaceError, presets.UnknownPresetError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except HullInvariantError as exc:
        print(f"internal error: {exc}", file=stderr)
        return 2
    if getattr(args, "out", None):
        Path(args.out).write_text(output, "utf-8")
    else:
        stdout.write(output)
    return 0


def main() -> None:
    sys.exit(run())
