"""Command-line front end: encode, corrupt, decode, check, demo.

Exit codes: 0 success (possibly an empty candidate list), 2 input error,
3 plan or condition error, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import formats
from .codes import corrupt_codeword
from .demos import DEMO_NAMES, run_demo
from .errors import BudgetError, DecodingInvariantError, PlanError
from .listdecode import build_plan, decode_with_diagnostics, evaluate_plan
from .oracle import OracleBudget
from .poly import BiPoly


@dataclass(frozen=True)
class ChannelSpec:
    """Column-granular corruption: e distinct columns replaced, seeded."""

    errors: int
    seed: int

    def __post_init__(self) -> None:
        if self.errors < 0:
            raise ValueError("error count must be nonnegative")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="blocodes",
                                     description="Bivariate linear operator codes")
    sub = parser.add_subparsers(dest="command", required=True)

    enc = sub.add_parser("encode", help="encode a message file; codeword on stdout")
    enc.add_argument("--instance", required=True)
    enc.add_argument("--message", required=True)

    cor = sub.add_parser("corrupt", help="corrupt columns of a codeword; result on stdout")
    cor.add_argument("--instance", required=True)
    cor.add_argument("--received", required=True, help="codeword file to corrupt")
    cor.add_argument("--errors", type=int, required=True)
    cor.add_argument("--seed", type=int, default=0)

    dec = sub.add_parser("decode", help="list-decode a received word; candidates on stdout")
    dec.add_argument("--instance", required=True)
    dec.add_argument("--plan", required=True)
    dec.add_argument("--received", required=True)
    dec.add_argument("--emit-kernel", action="store_true",
                     help="also print the raw solve-kernel vectors")

    chk = sub.add_parser("check", help="report the decodability conditions for a plan")
    chk.add_argument("--instance", required=True)
    chk.add_argument("--plan", required=True)

    dem = sub.add_parser("demo", help="run a named end-to-end demo")
    dem.add_argument("name", nargs="?", default="")
    dem.add_argument("--out", default=None,
                     help="directory for the summary, trial table, and figures")
    dem.add_argument("--trials", type=int, default=5)
    dem.add_argument("--seed", type=int, default=2024)
    dem.add_argument("--budget", type=int, default=None,
                     help="oracle budget in messages (skips the oracle when exceeded)")
    return parser


def _cmd_encode(args) -> int:
    inst, _ = formats.load_instance(args.instance)
    msg = formats.load_message(args.message, inst.field, inst.t, inst.k)
    from .codes import encode_blo

    sys.stdout.write(encode_blo(inst, msg).to_text())
    return 0


def _cmd_corrupt(args) -> int:
    inst, _ = formats.load_instance(args.instance)
    cw = formats.load_codeword(args.received, inst.field)
    spec = ChannelSpec(args.errors, args.seed)
    sys.stdout.write(corrupt_codeword(cw, spec.errors, spec.seed).to_text())
    return 0


def _cmd_decode(args) -> int:
    inst, h = formats.load_instance(args.instance)
    plan_args = formats.load_plan_args(args.plan)
    plan = build_plan(inst, h=h, **plan_args)
    received = formats.load_codeword(args.received, inst.field)
    outcome = decode_with_diagnostics(plan, received)
    for msg, dist in outcome.candidates:
        print(formats.candidate_line(msg, dist))
    if args.emit_kernel:
        print("# kernel")
        for vec in outcome.kernel:
            poly = BiPoly.from_coeff_vector(inst.field, vec, inst.t, inst.k)
            print("kernel ; " + " | ".join(" ".join(str(c) for c in row)
                                           for row in poly.coeffs))
    return 0


def _cmd_check(args) -> int:
    inst, h = formats.load_instance(args.instance)
    plan_args = formats.load_plan_args(args.plan)
    report = evaluate_plan(inst, h=h, **plan_args)
    for line in report.lines():
        print(line)
    return 0


def _cmd_demo(args) -> int:
    if args.name not in DEMO_NAMES:
        print(f"unknown demo {args.name!r}; available: {', '.join(DEMO_NAMES)}",
              file=sys.stderr)
        return 2
    budget = OracleBudget(max_messages=args.budget) if args.budget else OracleBudget()
    result = run_demo(args.name, out=args.out, trials=args.trials,
                      seed=args.seed, budget=budget)
    for line in result.lines:
        print(line)
    for path in result.files:
        print(f"wrote {path}")
    return 0 if result.ok else 4


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {"encode": _cmd_encode, "corrupt": _cmd_corrupt, "decode": _cmd_decode,
                "check": _cmd_check, "demo": _cmd_demo}
    try:
        return handlers[args.command](args)
    except PlanError as exc:
        print(f"plan error: {exc}", file=sys.stderr)
        return 3
    except DecodingInvariantError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 4
    except (ValueError, KeyError, OSError, ZeroDivisionError, BudgetError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
