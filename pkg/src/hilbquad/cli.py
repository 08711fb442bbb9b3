"""Command-line entry point ``hilbquad``.

Stdout carries data only. Errors are JSON objects on stderr; exit status is
2 for usage or input errors and 1 when a verification suite fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from hilbquad import equations as eq
from hilbquad import hilb4, pencils, verify
from hilbquad.equations import IdealLevel
from hilbquad.grassmann import VARIABLES, PluckerVec
from hilbquad.poly import PolyParseError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class JsonArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse calls this on bad flags
        raise UsageError(message)

    def exit(self, status: int = 0, message: str | None = None):
        if status:
            raise UsageError((message or "").strip() or "usage error")
        super().exit(status, message)


def _emit_error(kind: str, message: str) -> None:
    print(json.dumps({"error": kind, "message": message}), file=sys.stderr)


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=False))


# --- subcommands --------------------------------------------------------------------------


def m2_script() -> str:
    lines = [f"S=QQ[{','.join(VARIABLES)}];", ""]
    prev = None
    for lv in eq.LEVELS:
        gens = ", ".join(eq.format_generator(p) for p in eq.block(lv))
        head = f"{lv.value}=ideal(" if prev is None else f"{lv.value}={prev}+ideal("
        lines.append(head + gens + ");")
        lines.append("")
        prev = lv.value
    return "\n".join(lines).rstrip() + "\n"


def cmd_emit_ideals(args) -> int:
    if args.format == "m2":
        if args.level is None:
            sys.stdout.write(m2_script())
        else:
            for p in eq.generators(IdealLevel.parse(args.level)):
                print(eq.format_generator(p))
        return EXIT_OK
    levels = eq.LEVELS if args.level is None else (IdealLevel.parse(args.level),)
    out = {
        "ring": list(VARIABLES),
        "ideals": {lv.value: {"extra": [eq.format_generator(p) for p in eq.block(lv)],
                              "generators": len(eq.generators(lv))} for lv in eq.LEVELS},
    }
    if args.level is not None:
        lv = levels[0]
        out = {"ring": list(VARIABLES), "level": lv.value,
               "generators": [eq.format_generator(p) for p in eq.generators(lv)]}
    _print_json(out)
    return EXIT_OK


def cmd_classify(args) -> int:
    p = pencils.parse_pencil(args.q1, args.q2)
    label, cert = pencils.classify(p)
    _print_json({
        "pencil": [str(p.q1), str(p.q2)],
        "orbit": label.value,
        "closure": sorted(t.value for t in pencils.closure(label)),
        "vanishing_profile": dict(zip(("I8", "I5_extra", "I4_extra", "I3_extra"),
                                      eq.vanishing_profile(p).as_tuple())),
        "certificate": cert.to_json(),
    })
    return EXIT_OK


def cmd_pi(args) -> int:
    cfg = hilb4.PointConfig.parse(args.points)
    v = hilb4.pi_points(cfg)
    _print_json({"pi": v.to_dict(), "omega": str(hilb4.omega(cfg))})
    return EXIT_OK


def cmd_cluster(args) -> int:
    text = args.tensor if args.tensor is not None else sys.stdin.read()
    try:
        v = PluckerVec.from_json(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"tensor is not valid JSON: {exc}") from None
    alg = hilb4.tensor_to_algebra(v)
    rep = hilb4.matrices(alg)
    conds = hilb4.punctual_conditions(alg)
    out = {
        "algebra": alg.to_json(),
        "ideal": [g.to_text("xyz") for g in hilb4.ideal_from_algebra(alg)],
        "punctual": conds.all_zero(),
        "support": [it.to_json() for it in hilb4.support(rep, args.tol, seed=args.seed)],
    }
    _print_json(out)
    return EXIT_OK


def cmd_hilbert(args) -> int:
    lv = IdealLevel.parse(args.level)
    print(eq.hilbert_function(lv, args.degree, backend=args.backend))
    return EXIT_OK


def cmd_verify(args) -> int:
    ideals = None
    if args.ideals_json:
        with open(args.ideals_json, encoding="utf-8") as fh:
            ideals = verify.IdealSet.from_json(fh.read())
    results = verify.run_suite(args.suite, args.seed, ideals)
    text, summary = verify.verify_report(results)
    if args.format == "json":
        _print_json(summary)
    else:
        sys.stdout.write(text)
    return EXIT_OK if summary["ok"] else EXIT_FAIL


def build_parser() -> JsonArgumentParser:
    parser = JsonArgumentParser(prog="hilbquad", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=JsonArgumentParser)
    sub.required = True

    p = sub.add_parser("emit-ideals", help="print the four quadric ideals")
    p.add_argument("--level", choices=[lv.value for lv in eq.LEVELS])
    p.add_argument("--format", choices=["m2", "json"], default="m2")
    p.set_defaults(func=cmd_emit_ideals)

    p = sub.add_parser("classify-pencil", help="orbit type of the pencil <q1, q2>")
    p.add_argument("q1")
    p.add_argument("q2")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("pi-of-points", help="Pluecker point of four non-planar points")
    p.add_argument("--points", required=True, help='e.g. "(-1,0,0);(0,-1,0);(0,0,-1);(1,1,1)"')
    p.set_defaults(func=cmd_pi)

    p = sub.add_parser("cluster-from-tensor", help="cluster algebra and support of a decomposable tensor")
    p.add_argument("--tensor", help="Pluecker vector JSON (default: read stdin)")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_cluster)

    p = sub.add_parser("hilbert", help="Hilbert function of S/I at one degree")
    p.add_argument("--level", required=True, choices=[lv.value for lv in eq.LEVELS])
    p.add_argument("--degree", required=True, type=int)
    p.add_argument("--backend", choices=["rational", "prime"], default="rational")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("verify", help="run acceptance checks")
    p.add_argument("--suite", choices=sorted(verify.SUITES), default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--ideals-json", help="replace generator blocks (keys I8/I5/I4/I3) from a JSON file")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        _emit_error("usage", str(exc))
    except (ValueError, PolyParseError, OSError) as exc:
        _emit_error(type(exc).__name__, str(exc))
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
