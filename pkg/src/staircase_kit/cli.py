"""Command-line interface.

Exit codes: 0 success / all checks pass, 1 semantic failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys

from . import __version__
from .certify import CERT_SUFFIX, deserialize, serialize, verify
from .errors import MalformedCertificate, StaircaseKitError
from .extcalc import random_staircase, reduce_to_maximal
from .numsgp import apery_set, format_semigroup, gaps, parse_semigroup
from .sweeps import ARITHMETIC_CHECKS, TWO_GENERATOR_CHECKS, SweepSpec, run_sweep
from .truncmono import (
    format_pairs,
    format_ring,
    normalize,
    parse_pairs,
    parse_ring,
    staircase_of_conductor,
)
from .valideal import (
    colon,
    format_ideal,
    is_stable_under_normalization,
    max_ideal_power,
    parse_ideal,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_sgp_info(args) -> int:
    S = parse_semigroup(args.gens)
    g = gaps(S)
    info = {
        "generators": list(S.generators),
        "conductor": S.conductor,
        "frobenius": S.frobenius,
        "gaps": g,
        "genus": len(g),
        "apery": apery_set(S, S.multiplicity),
    }
    if args.format == "json":
        _emit(json.dumps(info, sort_keys=True))
    else:
        _emit("\n".join([
            f"semigroup  <{format_semigroup(S)}>",
            f"conductor  {S.conductor}",
            f"frobenius  {S.frobenius}",
            f"gaps       {len(g)}: {', '.join(map(str, g)) if g else '(none)'}",
            f"apery({S.multiplicity})  {', '.join(map(str, info['apery']))}",
        ]))
    return EXIT_OK


def _rows_text(rows) -> str:
    header = ("family", "a", "param", "check", "expected", "observed", "status")
    body = [(r.family, str(r.a), str(r.param), r.check, r.expected, r.observed,
             "pass" if r.passed else "FAIL") for r in rows]
    widths = [max(len(x) for x in col) for col in zip(header, *body)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(line, widths)).rstrip() for line in [header, *body]]
    failed = sum(not r.passed for r in rows)
    lines.append(f"{len(rows) - failed}/{len(rows)} passed")
    return "\n".join(lines)


def _rows_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["family", "a", "param", "check", "expected", "observed", "status"])
    for r in rows:
        writer.writerow([r.family, r.a, r.param, r.check, r.expected, r.observed,
                         "pass" if r.passed else "fail"])
    return buf.getvalue()


def _rows_json(rows) -> str:
    failed = sum(not r.passed for r in rows)
    payload = {"rows": [r.as_dict() for r in rows], "passed": len(rows) - failed, "failed": failed}
    return json.dumps(payload, sort_keys=True, indent=1)


def cmd_check(args) -> int:
    checks = tuple(c for c in args.checks.split(",") if c) if args.checks else (
        ARITHMETIC_CHECKS if args.family == "arithmetic" else TWO_GENERATOR_CHECKS
    )
    try:
        spec = SweepSpec(args.family, args.a_max, checks, args.r_max)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    rows = run_sweep(spec)
    render = {"text": _rows_text, "csv": _rows_csv, "json": _rows_json}[args.format]
    _emit(render(rows))
    return EXIT_OK if all(r.passed for r in rows) else EXIT_FAIL


def cmd_ideal(args) -> int:
    if args.op == "power":
        S = parse_semigroup(args.sgp)
        result = max_ideal_power(S, args.n)
        _emit(format_ideal(result))
        return EXIT_OK
    if args.op == "colon":
        I, J = parse_ideal(args.ideal), parse_ideal(args.divisor)
        _emit(format_ideal(colon(I, J)))
        return EXIT_OK
    I = parse_ideal(args.ideal)
    stable, start = is_stable_under_normalization(I)
    _emit(f"stable, equals t^{start}S" if stable else "not stable")
    return EXIT_OK


def cmd_stair_conductor(args) -> int:
    I = staircase_of_conductor(args.a, args.b)
    if args.format == "json":
        _emit(json.dumps({"ring": format_ring(I.ring), "pairs": [list(p) for p in I.pairs]}))
        return EXIT_OK
    _emit(f"ring   {format_ring(I.ring)}\nideal  {I}\npairs  {format_pairs(I.pairs)}")
    return EXIT_OK


def cmd_reduce(args) -> int:
    if args.fuzz is not None:
        rng = random.Random(args.seed)
        bad = 0
        for _ in range(args.fuzz):
            I = random_staircase(rng)
            cert = reduce_to_maximal(I)
            if not verify(cert).ok:
                bad += 1
                _emit(f"INVALID certificate for {format_ring(I.ring)} {format_pairs(I.pairs)}")
        _emit(f"{args.fuzz - bad}/{args.fuzz} certificates verified (seed {args.seed})")
        return EXIT_OK if bad == 0 else EXIT_FAIL
    if not args.ring or not args.ideal:
        raise UsageError("reduce needs --ring and --ideal (or --fuzz N)")
    ring = parse_ring(args.ring)
    I = normalize(ring, parse_pairs(args.ideal))
    cert = reduce_to_maximal(I)
    data = serialize(cert)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
        _emit(f"{len(cert.steps)} steps")
    else:
        sys.stdout.write(data.decode("utf-8"))
        sys.stderr.write(f"{len(cert.steps)} steps\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        with open(args.path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.path}: {exc.strerror}") from exc
    cert = deserialize(data)
    report = verify(cert)
    if args.format == "json":
        failures = [{"check": r.check, "step": r.step, "detail": r.detail} for r in report.failures()]
        _emit(json.dumps({"valid": report.ok, "failures": failures}, sort_keys=True))
    else:
        _emit(str(report))
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS so a flag given before the subcommand is not reset by the subparser
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                        help="suppress the version banner")
    common.add_argument("--format", choices=("text", "csv", "json"), default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="staircase-kit", parents=[common],
                                     description="Numerical semigroups, value ideals and certified staircase reductions.")
    sub = parser.add_subparsers(dest="command", required=True)

    sgp = sub.add_parser("sgp", parents=[common], help="numerical semigroup computations")
    sgp_sub = sgp.add_subparsers(dest="sgp_command", required=True)
    info = sgp_sub.add_parser("info", parents=[common], help="conductor, Frobenius number, gaps, Apéry set")
    info.add_argument("gens", help="comma-separated generators, e.g. 5,6")
    info.set_defaults(func=cmd_sgp_info)

    check = sub.add_parser("check", parents=[common], help="sweep closed forms against brute force")
    check.add_argument("--family", choices=("arithmetic", "two-generator"), default="arithmetic")
    check.add_argument("--a-max", type=int, default=30)
    check.add_argument("--r-max", type=int, default=None)
    check.add_argument("--checks", default=None,
                       help=f"comma-separated subset of {','.join(ARITHMETIC_CHECKS + TWO_GENERATOR_CHECKS)}")
    check.set_defaults(func=cmd_check)

    ideal = sub.add_parser("ideal", parents=[common], help="value-ideal arithmetic")
    ideal_sub = ideal.add_subparsers(dest="op", required=True)
    power = ideal_sub.add_parser("power", parents=[common], help="power of the maximal ideal")
    power.add_argument("--sgp", required=True)
    power.add_argument("-n", type=int, required=True)
    col = ideal_sub.add_parser("colon", parents=[common], help="integral colon I : J")
    col.add_argument("ideal", help='"gens=e1,e2 @ sgp=g1,g2"')
    col.add_argument("divisor")
    stable = ideal_sub.add_parser("stable", parents=[common], help="stability under normalization")
    stable.add_argument("ideal")
    for p in (power, col, stable):
        p.set_defaults(func=cmd_ideal)

    stair = sub.add_parser("stair", parents=[common], help="staircases")
    stair_sub = stair.add_subparsers(dest="stair_command", required=True)
    cond = stair_sub.add_parser("conductor", parents=[common], help="staircase of the conductor of <a,b>")
    cond.add_argument("a", type=int)
    cond.add_argument("b", type=int)
    cond.set_defaults(func=cmd_stair_conductor)

    red = sub.add_parser("reduce", parents=[common], help="build a reduction certificate")
    red.add_argument("--ring", help='e.g. "a=5,b=3,sign=-"')
    red.add_argument("--ideal", help='e.g. "3,0;1,1;0,2"')
    red.add_argument("-o", "--out", help=f"output file (conventionally *{CERT_SUFFIX})")
    red.add_argument("--fuzz", type=int, default=None, metavar="N",
                     help="reduce and verify N random staircases instead")
    red.add_argument("--seed", type=int, default=0)
    red.set_defaults(func=cmd_reduce)

    ver = sub.add_parser("verify", parents=[common], help="verify a certificate file")
    ver.add_argument("path")
    ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.quiet = getattr(args, "quiet", False)
    args.format = getattr(args, "format", "text")
    if not args.quiet:
        sys.stderr.write(f"staircase-kit {__version__}\n")
    try:
        return args.func(args)
    except (UsageError, MalformedCertificate) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except StaircaseKitError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
