"""Command-line front end.

    quandloid quandle validate|analyze|enumerate ...
    quandloid diagram parse|presentation|omega-minus|r1|r2|closure ...
    quandloid color count|matrix|profile ...
    quandloid dtable ...

Domain errors exit with status 1 and a JSON object on stderr.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field

from . import census, coloring, diagrams, pointed, presentation as pres, quandle as qc
from .caps import Caps, default_caps
from .diagrams import LinkoidDiagram
from .errors import InvalidArgument, QuandloidError
from .fixtures import named_quandle
from .io import dumps, parse_any, pointed_from_dict, quandle_from_dict, read_text


@dataclass
class JobConfig:
    command: str
    action: str | None
    inputs: dict = field(default_factory=dict)
    target: str | None = None
    fmt: str = "json"
    caps: Caps = field(default_factory=Caps)


def _sign(text):
    if text in ("+", "+1", "1"):
        return 1
    if text in ("-", "-1"):
        return -1
    raise argparse.ArgumentTypeError(f"sign must be + or -, got {text!r}")


def _k_value(text):
    if text.lower() in ("inf", "unbounded", "infinity"):
        return pointed.UNBOUNDED
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"k must be a positive integer or 'inf', got {text!r}") from None
    if k < 1:
        raise argparse.ArgumentTypeError(f"k must be >= 1, got {k}")
    return k


def _add_target(p, required=True):
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--named", help="t<n>, r<n>, v3, tet4 or census:<order>:<index>")
    g.add_argument("--quandle", metavar="PATH", help="quandle JSON file")


def _add_caps(p):
    p.add_argument("--group-cap", type=int, help="largest quandle order for Aut computations")
    p.add_argument("--census-cap", type=int, help="largest census order")
    p.add_argument("--arity-cap", type=int, help="largest basepoint count for orbit enumeration")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quandloid", description="Quandle invariants of knotoids and linkoids.")
    sub = parser.add_subparsers(dest="command", required=True)

    q = sub.add_parser("quandle", help="finite quandles")
    qs = q.add_subparsers(dest="action", required=True)
    p = qs.add_parser("validate", help="check the quandle axioms")
    _add_target(p)
    p = qs.add_parser("analyze", help="groups, components, flags, d_n")
    _add_target(p)
    p.add_argument("--max-n", type=int, default=None, help="largest n for d_n (default: arity cap)")
    p.add_argument("--format", choices=("json", "text"), default="json")
    _add_caps(p)
    p = qs.add_parser("enumerate", help="census of one order as JSON lines")
    p.add_argument("--order", type=int, required=True)
    _add_caps(p)

    d = sub.add_parser("diagram", help="linkoid diagrams and presentations")
    ds = d.add_subparsers(dest="action", required=True)
    for name in ("parse", "presentation"):
        p = ds.add_parser(name)
        p.add_argument("--in", dest="input", required=True, help="path, '-' or fixture:<file>")
        p.add_argument("--format", choices=("json", "text"), default="text")
    p = ds.add_parser("omega-minus", help="slide an endpoint under an arc")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--component", type=int, default=0,
                   help="component index (diagram) or open-component index (presentation)")
    p.add_argument("--end", choices=("leg", "head"), default="head")
    p.add_argument("--over", required=True, help="arc id (diagram) or generator (presentation)")
    p.add_argument("--sign", type=_sign, default=1)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p = ds.add_parser("r1", help="insert a kink")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--component", type=int, default=0)
    p.add_argument("--position", type=int, default=0)
    p.add_argument("--sign", type=_sign, default=1)
    p.add_argument("--under-first", action="store_true")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p = ds.add_parser("r2", help="insert a pair of opposite crossings")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--component-a", type=int, default=0)
    p.add_argument("--pos-a", type=int, default=0)
    p.add_argument("--component-b", type=int, default=0)
    p.add_argument("--pos-b", type=int, default=0)
    p.add_argument("--sign", type=_sign, default=1, help="sign of the first new crossing")
    p.add_argument("--a-under", action="store_true", help="strand A passes under B")
    p.add_argument("--antiparallel", action="store_true")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p = ds.add_parser("closure", help="add the closing relation f(h) = l")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--shortcut", default="", help="e.g. 'b+ c-'")
    p.add_argument("--format", choices=("json", "text"), default="text")

    c = sub.add_parser("color", help="coloring counts")
    cs = c.add_subparsers(dest="action", required=True)
    p = cs.add_parser("count")
    p.add_argument("--pres", required=True, help="presentation or diagram")
    _add_target(p)
    p.add_argument("--basepoints", help="pin basepoints to these elements, e.g. '0,0'")
    p = cs.add_parser("matrix")
    p.add_argument("--pres", required=True)
    _add_target(p)
    p.add_argument("--link-type", action="store_true", help="input is a link-type 1-linkoid")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    _add_caps(p)
    p = cs.add_parser("profile")
    p.add_argument("--pres", required=True)
    p.add_argument("--target", action="append", default=[],
                   help="NAME@b1,b2 (repeatable); default: 2-pointed orbit classes of the order<=4 census")
    p.add_argument("--targets-json", metavar="PATH", help="JSON list of pointed quandles")

    p = sub.add_parser("dtable", help="CSV of d_{m,n,k}")
    p.add_argument("--m-max", type=int, default=3)
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--k", type=_k_value, nargs="+", default=[pointed.UNBOUNDED])
    return parser


def _config(args) -> JobConfig:
    caps = default_caps().with_overrides(
        group=getattr(args, "group_cap", None),
        census=getattr(args, "census_cap", None),
        arity=getattr(args, "arity_cap", None))
    inputs = {k: getattr(args, k) for k in ("input", "pres", "quandle", "targets_json") if getattr(args, k, None)}
    return JobConfig(args.command, getattr(args, "action", None), inputs,
                     getattr(args, "named", None), getattr(args, "format", "json"), caps)


def _target(args) -> qc.FiniteQuandle:
    if getattr(args, "named", None):
        return named_quandle(args.named)
    return quandle_from_dict(json.loads(read_text(args.quandle)))


def _as_presentation(obj):
    return diagrams.fundamental_presentation(obj) if isinstance(obj, LinkoidDiagram) else obj


def _emit_structure(obj, fmt, out):
    if fmt == "json":
        out.write(dumps(obj.to_dict()) + "\n")
    elif isinstance(obj, LinkoidDiagram):
        out.write(diagrams.render_diagram(obj))
    else:
        out.write(pres.render_presentation(obj))


def _analyze(Q, cfg, max_n):
    G = qc.automorphism_group(Q, cfg.caps.group)
    inn = qc.inner_group(Q)
    max_n = cfg.caps.arity if max_n is None else max_n
    if max_n > cfg.caps.arity:
        raise InvalidArgument(f"--max-n {max_n} exceeds arity cap {cfg.caps.arity}")
    d = {str(n): pointed.d_n(Q, n, cfg.caps.arity, cfg.caps.group) for n in range(1, max_n + 1)}
    return {
        "quandle": Q.to_dict(),
        "size": Q.size,
        "aut_order": G.order,
        "inn_order": inn.order,
        "components": [list(b) for b in qc.algebraic_components(Q)],
        "faithful": qc.is_faithful(Q),
        "connected": qc.is_connected(Q),
        "homogeneous": qc.is_homogeneous(Q, cfg.caps.group),
        "cyclic_type": qc.is_cyclic_type(Q),
        "two_point_homogeneous": pointed.is_two_point_homogeneous(Q),
        "d": d,
        "n_homogeneous": {n: v == pointed.partition_count(0, int(n), Q.size) for n, v in d.items()},
        "uniform": pointed.is_uniform(Q, cfg.caps.group),
    }


def _parse_target_spec(spec):
    name, _, pts = spec.partition("@")
    Q = named_quandle(name)
    bps = tuple(int(x) for x in pts.split(",") if x.strip()) if pts else ()
    return pointed.PointedQuandle(Q, bps)


def _default_battery():
    out = []
    for Q in census.census_up_to(4):
        for rep in pointed.orbit_classes(Q, 2):
            out.append(pointed.PointedQuandle(Q, rep))
    return out


def run(args, out) -> None:
    cfg = _config(args)
    if cfg.command == "quandle":
        if cfg.action == "validate":
            Q = _target(args)
            out.write(dumps({"valid": True, **Q.to_dict()}) + "\n")
        elif cfg.action == "analyze":
            report = _analyze(_target(args), cfg, args.max_n)
            if cfg.fmt == "json":
                out.write(dumps(report) + "\n")
            else:
                for key, value in report.items():
                    if key != "quandle":
                        out.write(f"{key}: {value}\n")
        else:
            for Q in census.enumerate_quandles(args.order, cfg.caps.census):
                out.write(json.dumps(Q.to_dict()) + "\n")
        return

    if cfg.command == "diagram":
        obj = parse_any(read_text(args.input))
        if cfg.action == "parse":
            _emit_structure(obj, cfg.fmt, out)
        elif cfg.action == "presentation":
            _emit_structure(_as_presentation(obj), cfg.fmt, out)
        elif cfg.action == "omega-minus":
            if isinstance(obj, LinkoidDiagram):
                res = diagrams.apply_omega_minus(obj, args.component, args.end, args.over, args.sign)
            else:
                res = pres.omega_minus_presentation(obj, args.component, args.end, args.over, args.sign)
            _emit_structure(res, cfg.fmt, out)
        elif cfg.action in ("r1", "r2"):
            if not isinstance(obj, LinkoidDiagram):
                raise InvalidArgument("Reidemeister moves need a diagram, not a presentation")
            if cfg.action == "r1":
                res = diagrams.apply_r1(obj, args.component, args.position, args.sign, not args.under_first)
            else:
                res = diagrams.apply_r2(obj, args.component_a, args.pos_a, args.component_b, args.pos_b,
                                        (args.sign, -args.sign), not args.a_under, args.antiparallel)
            _emit_structure(res, cfg.fmt, out)
        else:
            res = pres.add_closure_relation(_as_presentation(obj), pres.parse_shortcut(args.shortcut))
            _emit_structure(res, cfg.fmt, out)
        return

    if cfg.command == "color":
        P = _as_presentation(parse_any(read_text(args.pres)))
        if cfg.action == "count":
            Q = _target(args)
            if args.basepoints is not None:
                bps = tuple(int(x) for x in args.basepoints.split(",") if x.strip())
                n = coloring.pointed_counting_invariant(P, pointed.PointedQuandle(Q, bps))
                out.write(dumps({"count": n, "basepoints": list(bps)}) + "\n")
            else:
                out.write(dumps({"count": coloring.counting_invariant(P, Q)}) + "\n")
        elif cfg.action == "matrix":
            Q = _target(args)
            M = coloring.counting_matrix(P, Q)
            if cfg.fmt == "csv":
                out.write(M.to_csv())
            elif cfg.fmt == "text":
                width = max(len(str(v)) for row in M.entries for v in row)
                for row in M.entries:
                    out.write(" ".join(str(v).rjust(width) for v in row) + "\n")
            else:
                report = coloring.matrix_report(M, Q, args.link_type, cfg.caps.group)
                out.write(dumps({"target": Q.to_dict(), "matrix": M.as_lists(), "trace": M.trace,
                                 "sum": M.total, "checks": report["checks"],
                                 "violations": report["violations"]}) + "\n")
        else:
            targets = [_parse_target_spec(s) for s in args.target]
            if args.targets_json:
                targets += [pointed_from_dict(d) for d in json.loads(read_text(args.targets_json))]
            if not targets:
                targets = _default_battery()
            out.write(json.dumps(coloring.pointed_profile(P, targets)) + "\n")
        return

    if cfg.command == "dtable":
        out.write("m,n,k,value\n")
        omitted = []
        for k in args.k:
            for m in range(args.m_max + 1):
                if m > k:
                    omitted.append((m, k))
                    continue
                for n in range(args.n_max + 1):
                    kk = "inf" if k == math.inf else k
                    out.write(f"{m},{n},{kk},{pointed.partition_count(m, n, k)}\n")
        if omitted:
            sys.stderr.write("omitted rows with m > k: " + ", ".join(f"m={m},k={k}" for m, k in omitted) + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        run(args, sys.stdout)
    except QuandloidError as exc:
        sys.stderr.write(json.dumps(exc.to_dict()) + "\n")
        return 1
    except (OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(json.dumps({"error": "io_error", "message": str(exc)}) + "\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
