"""Ready-made desk-scale instances and the demo driver used by the CLI."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .codes import (FrsParams, PpcParams, encode_blo, encode_ppc_direct, frs_as_blo,
                    frs_encode_direct, ppc_to_blelo, rate)
from .field import FieldDesc
from .formats import plan_json, ppc_instance_json
from .listdecode import build_plan, evaluate_plan
from .oracle import OracleBudget, oracle_cross_check
from .poly import AffineMap, BiPoly

DEMO_NAMES = ("ppc7", "ppc61", "ppc61-bivariate", "frs13")


def ppc7_params() -> PpcParams:
    """q=7, x-map X+1 (orbit 7), y-map 3X (orbit 6), start (0, 1), t=k=2."""
    f = FieldDesc(7)
    return PpcParams(AffineMap.of(f, 1, 1), AffineMap.of(f, 3, 0),
                     f.elt(0), f.elt(1), 2, 2)


def ppc61_params() -> PpcParams:
    """q=61, x-map 9X (orbit 5), y-map 32X (orbit 12), start (1, 1), t=1, k=3."""
    f = FieldDesc(61)
    return PpcParams(AffineMap.of(f, 9, 0), AffineMap.of(f, 32, 0),
                     f.elt(1), f.elt(1), 1, 3)


def ppc61_bivariate_params() -> PpcParams:
    """The q=61 instance with a genuinely bivariate message space t=k=2."""
    f = FieldDesc(61)
    return PpcParams(AffineMap.of(f, 9, 0), AffineMap.of(f, 32, 0),
                     f.elt(1), f.elt(1), 2, 2)


def frs13_params() -> FrsParams:
    """q=13, fold step 2, folding 2, degree bound 3, four disjoint cosets."""
    f = FieldDesc(13)
    return FrsParams(f.elt(2), 2, 3, (f.elt(1), f.elt(3), f.elt(4), f.elt(9)))


def demo_plan_args(name: str) -> dict:
    return {"ppc61": {"w": 3, "d1": 3, "d2": 7},
            "ppc61-bivariate": {"w": 3, "d1": 3, "d2": 8}}[name]


@dataclass
class DemoResult:
    name: str
    lines: list[str]
    files: list[str]
    ok: bool


def _write(outdir: Path, name: str, text: str, files: list[str]) -> None:
    path = outdir / name
    path.write_text(text)
    files.append(str(path))


def _equivalence_demo(name: str, out: Path | None) -> DemoResult:
    lines = [f"demo {name}: encoding equivalence"]
    files: list[str] = []
    if name == "ppc7":
        params = ppc7_params()
        inst = ppc_to_blelo(params)
        direct = lambda m: encode_ppc_direct(params, m)  # noqa: E731
        q, width = 7, 4
        sample = BiPoly.from_rows(inst.field, [[0, 0], [0, 1]], 2, 2)
        lines.append(f"instance: q=7 s={params.s} n={params.n} t=2 k=2 rate={rate(inst)}")
    else:
        params = frs13_params()
        inst = frs_as_blo(params)
        direct = lambda m: frs_encode_direct(params, m)  # noqa: E731
        q, width = 13, 3
        sample = BiPoly.from_rows(inst.field, [[0], [1], [0]], 3, 1)
        lines.append(f"instance: q=13 s={params.s} n={params.n} k=3 rate={rate(inst)}")
    f = inst.field
    checked = mismatches = 0
    for idx in range(q ** width):
        vec = [(idx // q ** (width - 1 - v)) % q for v in range(width)]
        msg = BiPoly.from_coeff_vector(f, vec, inst.t, inst.k)
        if direct(msg).columns != encode_blo(inst, msg).columns:
            mismatches += 1
        checked += 1
    lines.append(f"checked {checked} messages: {mismatches} mismatches")
    col0 = " ".join(str(v) for v in direct(sample).columns[0])
    lines.append(f"sample message column 0: {col0}")
    ok = mismatches == 0
    lines.append(f"demo {name}: {'PASS' if ok else 'FAIL'}")
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
        _write(out, "summary.txt", "\n".join(lines) + "\n", files)
        _write(out, "equivalence.csv",
               "messages;mismatches\n" + f"{checked};{mismatches}\n", files)
    return DemoResult(name, lines, files, ok)


def _decode_demo(name: str, out: Path | None, trials: int, seed: int,
                 budget: OracleBudget) -> DemoResult:
    params = ppc61_params() if name == "ppc61" else ppc61_bivariate_params()
    inst = ppc_to_blelo(params)
    args = demo_plan_args(name)
    report = evaluate_plan(inst, **args)
    lines = [f"demo {name}: decode and cross-check",
             f"instance: q=61 s={inst.s} n={inst.n} t={inst.t} k={inst.k}"]
    lines.extend(report.lines())
    files: list[str] = []
    plan = build_plan(inst, **args)
    total = inst.field.modulus ** (inst.t * inst.k)
    oracle_trials = trials if total <= budget.max_messages else 0
    if name == "ppc61-bivariate":
        oracle_trials = min(oracle_trials, 1)
    if oracle_trials == 0:
        lines.append(f"oracle skipped: {total} messages exceed budget {budget.max_messages}")
    check = oracle_cross_check(inst, plan, trials, seed, budget,
                               errors=plan.D - 1, oracle_trials=oracle_trials)
    lines.extend(check.lines())
    ok = check.all_ok
    lines.append(f"demo {name}: {'PASS' if ok else 'FAIL'}")
    if out is not None:
        from .report import render_report

        out.mkdir(parents=True, exist_ok=True)
        _write(out, "summary.txt", "\n".join(lines) + "\n", files)
        _write(out, "instance.json", ppc_instance_json(params), files)
        _write(out, "plan.json", plan_json(args["w"], args["d1"], args["d2"], plan.D), files)
        cap = inst.field.modulus ** plan.ell
        files.extend(render_report(check, out, name.replace("-", "_"), cap))
    return DemoResult(name, lines, files, ok)


def run_demo(name: str, out=None, trials: int = 5, seed: int = 2024,
             budget: OracleBudget | None = None) -> DemoResult:
    if name not in DEMO_NAMES:
        raise ValueError(f"unknown demo {name!r}; available: {', '.join(DEMO_NAMES)}")
    outdir = Path(out) if out is not None else None
    budget = budget or OracleBudget()
    if name in ("ppc7", "frs13"):
        return _equivalence_demo(name, outdir)
    return _decode_demo(name, outdir, trials, seed, budget)
