"""Command-line entry point.

Every command prints one report.  With ``--json`` the report is a JSON
envelope (tool, version, command, input digests, status, result) written
with sorted keys, so identical inputs give byte-identical output.

Exit codes: 0 ok, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import __version__
from .alexander import (
    VanishingError,
    alexander_report,
    betti_bound,
    scan_vanishing_classes,
)
from .families import (
    circle_bundle_presentation,
    mapping_torus_fixture,
    mapping_torus_presentation,
    square_fixture,
    surgery_fixture,
    torus_bundle_presentation,
    verify_surgery_scaling,
    SurgerySpec,
    surgered_presentation,
)
from .fixtures import parse_fixture
from .medley import certify_virtual_realization, stabilize_betti
from .polytopes import ball_from_functionals, dual_face, face_of
from .presentations import betti_of_cyclic_cover

TOOL = "alexmedley"


class UsageError(Exception):
    pass


class ArgParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


# -- argument helpers ---------------------------------------------------------


def int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def rational_list(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(x) for x in text.split(",") if x.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}") from None


def v0_arg(text: str):
    point, _, d = text.partition("@")
    try:
        return rational_list(point), int(d) if d else 1
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected POINT@DEGREE, got {text!r}") from None


def fills_arg(text: str) -> list[tuple[int, int]]:
    out = []
    for item in text.split(","):
        p, sep, q = item.partition("/")
        try:
            out.append((int(p), int(q) if sep else 1))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad slope {item!r}") from None
    return out


def face_arg(text: str) -> tuple[Fraction, ...]:
    return rational_list(text[2:] if text.startswith("w=") else text)


class Inputs:
    """Reads input files and remembers their digests."""

    def __init__(self):
        self.digests: dict[str, str] = {}

    def read(self, path: str) -> str:
        with open(path, "rb") as fh:
            data = fh.read()
        self.digests[path] = hashlib.sha256(data).hexdigest()
        return data.decode("utf-8")


# -- commands -----------------------------------------------------------------


def _load_presentation(path: str, inputs: Inputs):
    # fixture files are presentation files with extra directives
    return parse_fixture(inputs.read(path)).presentation


def cmd_alexander(args, inputs: Inputs):
    p = _load_presentation(args.pres, inputs)
    psis = list(args.psi or [])
    report = alexander_report(p, psis).to_json()
    if args.scan is not None:
        report["vanishing"] = [list(v) for v in scan_vanishing_classes(p, args.scan)]
    lines = [f"b1 = {report['b1']}, torsion = {report['torsion']}",
             f"delta_sharp = {report['delta_sharp']['rendered']}"]
    for c in report["classes"]:
        lines.append(f"psi = {c['psi']}: delta = {c['delta_psi']['rendered']}, betti bound = {c['betti_bound']}")
    if "vanishing" in report:
        lines.append(f"vanishing classes (r = {args.scan}): {report['vanishing']}")
    return "ok", report, lines


def cmd_covers(args, inputs: Inputs):
    p = _load_presentation(args.pres, inputs)
    psi = args.psi
    table = [{"m": m, "b1": betti_of_cyclic_cover(p, psi, m)} for m in range(1, args.max_m + 1)]
    result = {"psi": list(psi), "table": table}
    try:
        bound = betti_bound(p, psi)
        result["betti_bound"] = bound
        result["within_bound"] = all(r["b1"] <= bound for r in table)
        stab = stabilize_betti(p, psi, args.max_m)
        result["m_star"] = stab.m_star
        result["b_max"] = stab.b_max
    except VanishingError:
        result["betti_bound"] = None
    lines = [f"m = {r['m']}: b1 = {r['b1']}" for r in table]
    if result.get("betti_bound") is not None:
        lines.append(f"betti bound = {result['betti_bound']}, m* = {result['m_star']}")
    return "ok", result, lines


def _read_functionals(text: str) -> list[list[int]]:
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line.startswith("ball:"):
            line = line[5:]
        if line:
            rows.append([int(x) for x in line.replace(",", " ").split()])
    return rows


def cmd_normball(args, inputs: Inputs):
    pair = ball_from_functionals(_read_functionals(inputs.read(args.functionals)))
    result = {"ball": pair.ball.to_json(), "dual_ball": pair.dual_ball.to_json(),
              "functionals": [[int(x) for x in u] for u in pair.functionals]}
    lines = [f"ball vertices: {[[str(x) for x in v] for v in pair.ball.vertices]}",
             f"dual ball vertices: {[[str(x) for x in v] for v in pair.dual_ball.vertices]}"]
    if args.face is not None:
        target, other = (pair.dual_ball, pair.ball) if args.dual else (pair.ball, pair.dual_ball)
        face = face_of(args.face, target)
        back = dual_face(face, other)
        result["face"] = face.to_json()
        result["dual_face"] = back.to_json()
        lines.append(f"face of w: dim {face.dim}; dual face: dim {back.dim}")
    return "ok", result, lines


def cmd_certify(args, inputs: Inputs):
    fx = _load_fixture(args.fixture, inputs)
    ball = fx.ball()
    if ball is None:
        raise ValueError("fixture carries no ball data")
    v0, d = args.v0 if args.v0 else (None, 1)
    cert = certify_virtual_realization(fx.presentation, ball, args.w, args.psi, v0=v0, d=d,
                                       projection=fx.projection)
    result = cert.to_json()
    ok = cert.pushforward_check and cert.norm_check
    lines = [f"mode = {cert.mode}, D = {cert.D}, block counts = {list(cert.block_counts)}",
             f"mu = {[str(x) for x in cert.mu]}",
             f"pushforward check = {cert.pushforward_check}, norm check = {cert.norm_check}"]
    return ("ok" if ok else "error"), result, lines


def cmd_scan(args, inputs: Inputs):
    p = _load_presentation(args.pres, inputs)
    vanishing = [list(v) for v in scan_vanishing_classes(p, args.scan)]
    return "ok", {"radius": args.scan, "vanishing": vanishing}, [f"vanishing: {vanishing}"]


def cmd_examples_gen(args, inputs: Inputs):
    fam = args.family
    if fam == "circle-bundle":
        text = circle_bundle_presentation(args.e).to_text()
    elif fam == "mapping-torus":
        text = (mapping_torus_fixture(args.g, args.s).to_text() if args.fixture
                else mapping_torus_presentation(args.g, args.s).to_text())
    elif fam == "torus-bundle":
        m = args.matrix or (0, -1, 1, 0)
        if len(m) != 4:
            raise ValueError("torus-bundle matrix needs 4 entries")
        text = torus_bundle_presentation([m[:2], m[2:]]).to_text()
    elif fam == "surgery":
        text = surgery_fixture().to_text()
    else:  # square
        text = square_fixture(args.e).to_text()
    return "ok", {"family": fam, "text": text}, [text.rstrip("\n")]


def cmd_examples_verify(args, inputs: Inputs):
    fx = _load_fixture(args.fixture, inputs)
    if fx.meridian is None or fx.longitude is None:
        raise ValueError("fixture needs meridian and longitude lines")
    base = surgered_presentation(SurgerySpec.from_words(fx.presentation, fx.meridian, fx.longitude, 1, 0))
    report = verify_surgery_scaling(base, fx.presentation, fx.meridian, fx.longitude, args.fills, args.psi,
                                    trnh=fx.trnh)
    result = report.to_json()
    status = {"ok": "ok", "inconclusive": "inconclusive", "failed": "error"}[report.status]
    lines = [f"{c.p}/{c.q}: {c.delta_filled} vs {c.expected}: {c.status}" for c in report.checks]
    return status, result, lines


def _load_fixture(path: str, inputs: Inputs):
    return parse_fixture(inputs.read(path))


# -- parser and driver -----------------------------------------------------------


def build_parser() -> ArgParser:
    ap = ArgParser(prog=TOOL, description="Alexander polynomials, norm balls and realization certificates.")
    ap.add_argument("--version", action="version", version=f"{TOOL} {__version__}")
    sub = ap.add_subparsers(dest="command", parser_class=ArgParser)

    def common(p):
        p.add_argument("--json", action="store_true", help="emit a JSON envelope")

    p = sub.add_parser("alexander", help="Δ^#, Δ^ψ and vanishing scans")
    p.add_argument("--pres", required=True)
    p.add_argument("--psi", type=int_list, action="append")
    p.add_argument("--scan", type=int)
    common(p)
    p.set_defaults(func=cmd_alexander)

    p = sub.add_parser("covers", help="b1 of cyclic covers dual to ψ")
    p.add_argument("--pres", required=True)
    p.add_argument("--psi", type=int_list, required=True)
    p.add_argument("--max-m", type=int, default=8)
    common(p)
    p.set_defaults(func=cmd_covers)

    p = sub.add_parser("normball", help="norm ball and dual ball from even functionals")
    p.add_argument("--functionals", required=True)
    p.add_argument("--dual", action="store_true", help="locate --face on the dual ball")
    p.add_argument("--face", type=face_arg)
    common(p)
    p.set_defaults(func=cmd_normball)

    p = sub.add_parser("certify", help="virtual realization certificate for a class w")
    p.add_argument("--fixture", required=True)
    p.add_argument("--w", type=rational_list, required=True)
    p.add_argument("--psi", type=int_list, required=True)
    p.add_argument("--v0", type=v0_arg)
    common(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("scan", help="vanishing classes in a box")
    p.add_argument("--pres", required=True)
    p.add_argument("--scan", "--radius", dest="scan", type=int, default=2)
    common(p)
    p.set_defaults(func=cmd_scan)

    ex = sub.add_parser("examples", help="example families and surgery checks")
    exs = ex.add_subparsers(dest="action", parser_class=ArgParser)
    g = exs.add_parser("gen")
    g.add_argument("--family", required=True,
                   choices=["circle-bundle", "mapping-torus", "torus-bundle", "surgery", "square"])
    g.add_argument("--e", type=int, default=0)
    g.add_argument("--g", type=int, default=2)
    g.add_argument("--s", type=int, default=0)
    g.add_argument("--matrix", type=int_list)
    g.add_argument("--fixture", action="store_true", help="include ball data where known")
    common(g)
    g.set_defaults(func=cmd_examples_gen)
    v = exs.add_parser("verify-surgery")
    v.add_argument("--fixture", required=True)
    v.add_argument("--fills", type=fills_arg, required=True)
    v.add_argument("--psi", type=int_list, required=True)
    common(v)
    v.set_defaults(func=cmd_examples_verify)
    return ap


def _echo(argv: Sequence[str]) -> list[str]:
    return [a for a in argv if a != "--json"]


def run(argv: Sequence[str] | None = None, out=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"{TOOL}: error: {exc}", file=sys.stderr)
        return 2
    if getattr(args, "func", None) is None:
        parser.print_usage(sys.stderr)
        return 2
    inputs = Inputs()
    want_json = getattr(args, "json", False)
    try:
        status, result, lines = args.func(args, inputs)
        code = 0 if status in ("ok", "inconclusive") else 1
    except OSError as exc:
        status, result, lines, code = "error", {"error": str(exc)}, [f"error: {exc}"], 1
    except (ValueError, ArithmeticError) as exc:
        status, result, lines, code = "error", {"error": str(exc), "kind": type(exc).__name__}, [f"error: {exc}"], 1
    if want_json:
        env = {
            "tool": TOOL,
            "version": __version__,
            "command": _echo(argv),
            "inputs": inputs.digests,
            "status": status,
            "result": result,
        }
        text = json.dumps(env, sort_keys=True, indent=2)
    else:
        text = "\n".join(lines)
    out.write(text + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
