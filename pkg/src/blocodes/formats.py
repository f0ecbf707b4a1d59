"""File formats: instances and plans as JSON, messages and codewords as
plain decimal grids."""

from __future__ import annotations

import json
from pathlib import Path

from .codes import BloInstance, Codeword, PpcParams, ppc_to_blelo
from .field import FieldDesc
from .operators import ExtendibilityWitness, HMapTable, MatrixOp, OperatorFamily, power_family
from .poly import AffineMap, BiPoly, PolyMatrix


def _affine_from_json(fieldd: FieldDesc, obj) -> AffineMap:
    return AffineMap.of(fieldd, int(obj["a"]), int(obj.get("b", 0)))


def _grid_poly_from_json(fieldd: FieldDesc, obj) -> BiPoly:
    return BiPoly.from_rows(fieldd, obj["rows"], int(obj["dx"]), int(obj["dy"]))


def load_instance(path) -> tuple[BloInstance, HMapTable | None]:
    """Read an instance file; returns the instance plus the explicit h table
    when the file carries one (matrix families only)."""
    data = json.loads(Path(path).read_text())
    fieldd = FieldDesc(int(data["q"]))
    t, k = int(data["t"]), int(data["k"])
    if "ppc" in data:
        ppc = data["ppc"]
        params = PpcParams(_affine_from_json(fieldd, ppc["l1"]),
                           _affine_from_json(fieldd, ppc["l2"]),
                           fieldd.elt(int(ppc["alpha"])), fieldd.elt(int(ppc["beta"])),
                           t, k)
        return ppc_to_blelo(params), None
    famobj = data["family"]
    points = tuple((fieldd.elt(int(x)), fieldd.elt(int(y))) for x, y in data["points"])
    if famobj["kind"] == "power":
        fam = power_family(_affine_from_json(fieldd, famobj["lx"]),
                           _affine_from_json(fieldd, famobj["ly"]),
                           int(famobj["s"]))
        return BloInstance(fam, points, t, k), None
    if famobj["kind"] == "matrix":
        ops = tuple(MatrixOp.from_rows(fieldd, rows, t, k) for rows in famobj["ops"])
        witness = None
        if "witness" in famobj:
            wit = famobj["witness"]
            mx = PolyMatrix(tuple(tuple(_grid_poly_from_json(fieldd, e) for e in row)
                                  for row in wit["mx"]))
            my = PolyMatrix(tuple(tuple(_grid_poly_from_json(fieldd, e) for e in row)
                                  for row in wit["my"]))
            witness = ExtendibilityWitness(mx, my)
        fam = OperatorFamily(ops, witness)
        h = HMapTable.from_matrices(famobj["h"]) if "h" in famobj else None
        return BloInstance(fam, points, t, k), h
    raise ValueError(f"unknown family kind {famobj['kind']!r}")


def ppc_instance_json(params: PpcParams) -> str:
    return json.dumps({
        "q": params.field.modulus,
        "t": params.t,
        "k": params.k,
        "ppc": {
            "l1": {"a": params.l1.a.value, "b": params.l1.b.value},
            "l2": {"a": params.l2.a.value, "b": params.l2.b.value},
            "alpha": params.alpha.value,
            "beta": params.beta.value,
        },
    }, indent=2) + "\n"


def power_instance_json(inst: BloInstance) -> str:
    ops = inst.fam.ops
    gen = ops[1] if len(ops) > 1 else ops[0]  # generator of the iterated family
    lx, ly = gen.lx, gen.ly
    return json.dumps({
        "q": inst.field.modulus,
        "t": inst.t,
        "k": inst.k,
        "family": {"kind": "power",
                   "lx": {"a": lx.a.value, "b": lx.b.value},
                   "ly": {"a": ly.a.value, "b": ly.b.value},
                   "s": inst.s},
        "points": [[x.value, y.value] for x, y in inst.points],
    }, indent=2) + "\n"


def matrix_instance_json(inst: BloInstance, h: HMapTable | None = None) -> str:
    """Serialize a matrix-family instance; witness entries are coefficient
    grids with explicit bounds, h maps are row-major integer grids."""
    fam = {"kind": "matrix",
           "ops": [[list(row) for row in op.matrix(inst.t, inst.k)] for op in inst.fam.ops]}
    if inst.fam.witness is not None:
        def grids(m: PolyMatrix):
            return [[{"dx": e.dx_bound, "dy": e.dy_bound,
                      "rows": [list(r) for r in e.coeffs]} for e in row]
                    for row in m.entries]

        fam["witness"] = {"mx": grids(inst.fam.witness.mx),
                          "my": grids(inst.fam.witness.my)}
    if h is not None:
        if h.per_point:
            raise ValueError("only point-independent h tables serialize")
        fam["h"] = [[list(row) for row in m] for m in h.maps]
    return json.dumps({
        "q": inst.field.modulus,
        "t": inst.t,
        "k": inst.k,
        "family": fam,
        "points": [[x.value, y.value] for x, y in inst.points],
    }, indent=2) + "\n"


def load_plan_args(path) -> dict:
    data = json.loads(Path(path).read_text())
    out = {"w": int(data["w"]), "d1": int(data["d1"]), "d2": int(data["d2"])}
    if "D" in data and data["D"] is not None:
        out["D_override"] = int(data["D"])
    return out


def plan_json(w: int, d1: int, d2: int, D: int | None = None) -> str:
    obj = {"w": w, "d1": d1, "d2": d2}
    if D is not None:
        obj["D"] = D
    return json.dumps(obj, indent=2) + "\n"


def load_message(path, fieldd: FieldDesc, t: int, k: int) -> BiPoly:
    return BiPoly.from_text(fieldd, Path(path).read_text(), t, k)


def load_codeword(path, fieldd: FieldDesc) -> Codeword:
    return Codeword.from_text(fieldd, Path(path).read_text())


def candidate_line(msg: BiPoly, distance: int) -> str:
    """Decode output: "distance ; message-grid" with grid rows joined by '|'."""
    grid = " | ".join(" ".join(str(c) for c in row) for row in msg.coeffs)
    return f"{distance} ; {grid}"
