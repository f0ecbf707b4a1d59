"""List decoding by interpolation and a linear solve.

The pipeline decodes a received word in four stages:

1.  Interpolate a nonzero tuple (Q_0, ..., Q_{w-1}) of bounded-degree
    polynomials such that, at every evaluation point, the witness-matrix
    evaluation of the Q's annihilates the h-mapped received column. The
    constraint system has n*r equations in w*(d1-t+1)*(d2-k+1) > n*r
    unknowns, so a nonzero solution always exists.
2.  Form the linear system expressing that the combination
    R_p = sum_i Q_i * G_i(p) vanishes identically as a polynomial; its
    kernel contains the coefficient vector of every message whose codeword
    is within distance D of the received word.
3.  Enumerate the kernel. Its dimension is bounded by the number of zero
    entries on the diagonal of a lower-triangular block of the system,
    which the diagonal-code distance caps at ell.
4.  Re-encode each candidate and keep those strictly within distance D.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .codes import BloInstance, Codeword, column_distance, encoding_matrix, rate, tcode_distance_ppc
from .errors import BudgetError, DecodingInvariantError, PlanError
from .field import FieldDesc
from .operators import (HMapTable, OperatorFamily, SubstitutionOp, check_degree_preserving,
                        diag, diag_distance, verify_extendibility, verify_list_composition)
from .poly import BiPoly
from .scan import int64_safe


@dataclass(frozen=True)
class ConditionResult:
    name: str
    ok: bool
    detail: str


@dataclass(frozen=True)
class PlanReport:
    """Per-condition verdicts plus the derived decoding quantities."""

    conditions: tuple[ConditionResult, ...]
    s: int
    n: int
    w: int
    r: int
    d1: int
    d2: int
    D: int | None
    ell: int | None
    rate: Fraction

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.conditions)

    def lines(self) -> list[str]:
        out = []
        for c in self.conditions:
            mark = "PASS" if c.ok else "FAIL"
            out.append(f"{c.name}: {mark}" + (f"  [{c.detail}]" if c.detail else ""))
        radius = "-" if self.D is None else str(self.D - 1)
        out.append(f"derived: s={self.s} n={self.n} w={self.w} r={self.r} "
                   f"d1={self.d1} d2={self.d2} D={self.D} ell={self.ell} "
                   f"rate={self.rate} radius={radius}")
        return out


@dataclass(frozen=True)
class DecodingPlan:
    """Everything the decoder needs, with per-point witness evaluations and
    the composing operators' coefficient matrices precomputed."""

    inst: BloInstance
    w: int
    r: int
    t_family: OperatorFamily
    g_family: OperatorFamily
    h: HMapTable
    d1: int
    d2: int
    D: int
    ell: int
    mx_at_points: tuple
    my_at_points: tuple
    g_matrices: tuple
    diag_rows: tuple


def evaluate_plan(inst: BloInstance, w: int, d1: int, d2: int,
                  D_override: int | None = None,
                  t_family: OperatorFamily | None = None,
                  g_family: OperatorFamily | None = None,
                  h: HMapTable | None = None) -> PlanReport:
    """Check the four decodability conditions without raising on failure."""
    s, n, t, k = inst.s, inst.n, inst.t, inst.k
    if not 1 <= w <= s:
        raise ValueError(f"w must be in [1, {s}], got {w}")
    tfam = t_family if t_family is not None else inst.fam.prefix(s - w + 1)
    gfam = g_family if g_family is not None else inst.fam.prefix(w)
    r = tfam.size
    conditions = []

    # Extendibility of the prefix family backing the interpolation step.
    if tfam.witness is None:
        ext_ok, ext_detail = False, "no extendibility witness available"
    else:
        vt, vk = (d1, d2) if all(isinstance(op, SubstitutionOp) for op in tfam.ops) else (t, k)
        ext_ok = verify_extendibility(tfam, vt, vk)
        ext_detail = f"witness verified on bounds ({vt}, {vk})" if ext_ok \
            else "witness identities fail"
    conditions.append(ConditionResult("T extendibility", ext_ok, ext_detail))

    # Condition 1: interpolation counting and a positive distance D.
    count_ok = d1 >= t and d2 >= k and (d1 - t + 1) * (d2 - k + 1) * w > n * r
    count_detail = (f"w*(d1-t+1)*(d2-k+1) = {w * (d1 - t + 1) * (d2 - k + 1)} "
                    f"{'>' if count_ok else '<='} n*r = {n * r}")
    if d1 < t or d2 < k:
        count_detail = f"need d1 >= t and d2 >= k, got d1={d1} (t={t}), d2={d2} (k={k})"
    D: int | None
    if D_override is not None:
        D = D_override
        d_detail = f"D = {D} (supplied)"
        d_ok = D >= 1
    else:
        try:
            D = tcode_distance_ppc(inst, r, d1, d2)
            d_ok = D >= 1
            d_detail = f"D = n - d2 = {D}" if d_ok else f"degenerate radius: D = n - d2 = {D}"
        except ValueError as exc:
            D, d_ok, d_detail = None, False, f"no distance bound: {exc}"
    conditions.append(ConditionResult("condition 1 (interpolation counting)",
                                      count_ok, count_detail))
    conditions.append(ConditionResult("condition 1 (prefix-code distance)", d_ok, d_detail))

    # Condition 2: list composition through the h table.
    try:
        htab = h if h is not None else HMapTable.selection(w, r, s)
        comp_ok = verify_list_composition(tfam, gfam, inst.fam, inst.points, htab, t, k)
        comp_detail = "" if comp_ok else "composition identity fails at some monomial/point"
    except ValueError as exc:
        htab, comp_ok, comp_detail = None, False, str(exc)
    conditions.append(ConditionResult("condition 2 (list composition)", comp_ok, comp_detail))

    # Condition 3: degree preservation of the composing family.
    deg_ok = check_degree_preserving(gfam, t, k)
    conditions.append(ConditionResult("condition 3 (degree preservation)", deg_ok,
                                      "" if deg_ok else "some image drops degree"))

    # Condition 4: distance of the stacked-diagonals code.
    diag_rows = diag(gfam, t, k)
    try:
        dist = diag_distance(diag_rows, inst.field)
        ell = t * k - dist
        conditions.append(ConditionResult(
            "condition 4 (diagonal code distance)", dist >= 1,
            f"distance {dist}, ell = {ell}, list cap q^ell = {inst.field.modulus ** ell}"))
    except BudgetError as exc:
        ell = None
        conditions.append(ConditionResult("condition 4 (diagonal code distance)",
                                          False, str(exc)))

    return PlanReport(tuple(conditions), s, n, w, r, d1, d2, D, ell, rate(inst))


def build_plan(inst: BloInstance, w: int, d1: int, d2: int,
               D_override: int | None = None,
               t_family: OperatorFamily | None = None,
               g_family: OperatorFamily | None = None,
               h: HMapTable | None = None) -> DecodingPlan:
    """Verify the decodability conditions and assemble a plan, raising a
    PlanError naming the first failed condition."""
    report = evaluate_plan(inst, w, d1, d2, D_override, t_family, g_family, h)
    for cond in report.conditions:
        if not cond.ok:
            raise PlanError(cond.name, cond.detail)
    assert report.D is not None and report.ell is not None
    s, t, k = inst.s, inst.t, inst.k
    tfam = t_family if t_family is not None else inst.fam.prefix(s - w + 1)
    gfam = g_family if g_family is not None else inst.fam.prefix(w)
    htab = h if h is not None else HMapTable.selection(w, tfam.size, s)
    assert tfam.witness is not None
    mx_at, my_at = [], []
    for x, y in inst.points:
        mx_at.append(tuple(tuple(e.value for e in row)
                           for row in tfam.witness.mx.eval_at(x, y)))
        my_at.append(tuple(tuple(e.value for e in row)
                           for row in tfam.witness.my.eval_at(x, y)))
    g_mats = tuple(tuple(tuple(row) for row in op.matrix(t, k)) for op in gfam.ops)
    diag_rows = tuple(tuple(row) for row in diag(gfam, t, k))
    return DecodingPlan(inst, w, tfam.size, tfam, gfam, htab, d1, d2,
                        report.D, report.ell, tuple(mx_at), tuple(my_at),
                        g_mats, diag_rows)


@dataclass(frozen=True)
class InterpolationResult:
    qs: tuple[BiPoly, ...]


def _check_received(plan: DecodingPlan, received: Codeword) -> None:
    if received.field != plan.inst.field:
        raise ValueError("received word must be over the instance field")
    if received.n != plan.inst.n or received.s != plan.inst.s:
        raise ValueError(
            f"received word must be {plan.inst.n} columns of {plan.inst.s} entries")


def interpolate(plan: DecodingPlan, received: Codeword) -> InterpolationResult:
    """Find a nonzero Q satisfying all n*r point constraints.

    The column of the constraint matrix for unknown q_{i,a,b} at a point is
    Mx^a * My^b * (h_i * c), with the witness matrices evaluated numerically
    at the point first (evaluation is a ring homomorphism, so this equals
    evaluating the polynomial matrix power).
    """
    _check_received(plan, received)
    inst = plan.inst
    p = inst.field.modulus
    ax = plan.d1 - inst.t + 1
    by = plan.d2 - inst.k + 1
    unknowns = plan.w * ax * by
    rows = [[0] * unknowns for _ in range(inst.n * plan.r)]
    for pidx in range(inst.n):
        mxv = [list(r) for r in plan.mx_at_points[pidx]]
        myv = [list(r) for r in plan.my_at_points[pidx]]
        col = list(received.columns[pidx])
        for i in range(plan.w):
            z = linalg.mat_vec([list(r) for r in plan.h.at(i, pidx)], col, p)
            yb = z
            for b in range(by):
                xa = yb
                for a in range(ax):
                    u = (i * ax + a) * by + b
                    for j in range(plan.r):
                        rows[pidx * plan.r + j][u] = xa[j]
                    xa = linalg.mat_vec(mxv, xa, p)
                yb = linalg.mat_vec(myv, yb, p)
    basis = linalg.nullspace(rows, unknowns, p)
    if not basis:
        raise DecodingInvariantError(
            "interpolation kernel is trivial despite unknowns exceeding constraints")
    vec = basis[0]
    qs = []
    for i in range(plan.w):
        grid = [[vec[(i * ax + a) * by + b] for b in range(by)] for a in range(ax)]
        qs.append(BiPoly.from_rows(inst.field, grid, ax, by))
    return InterpolationResult(tuple(qs))


def _poly_at_matrices(q: BiPoly, mx: list[list[int]], my: list[list[int]], p: int):
    """Evaluate q at matrix arguments, expanding monomials as Mx^a * My^b."""
    size = len(mx)
    my_pows = [linalg.identity(size)]
    for _ in range(q.dy_bound - 1):
        my_pows.append(linalg.mat_mul(my, my_pows[-1], p))
    acc = None
    for a in range(q.dx_bound - 1, -1, -1):
        row_val = None
        for b in range(q.dy_bound):
            c = q.coeffs[a][b]
            if c == 0:
                continue
            term = [[c * e % p for e in r] for r in my_pows[b]]
            row_val = term if row_val is None else [
                [(x + y) % p for x, y in zip(r1, r2)] for r1, r2 in zip(row_val, term)]
        if row_val is None:
            row_val = [[0] * size for _ in range(size)]
        acc = row_val if acc is None else [
            [(x + y) % p for x, y in zip(r1, r2)]
            for r1, r2 in zip(linalg.mat_mul(mx, acc, p), row_val)]
    return acc if acc is not None else [[0] * size for _ in range(size)]


def verify_interpolation(plan: DecodingPlan, result, received: Codeword) -> bool:
    """Independently recheck degree bounds, nonzeroness, and all point
    constraints of an interpolation output."""
    qs = result.qs if isinstance(result, InterpolationResult) else tuple(result)
    inst = plan.inst
    if len(qs) != plan.w:
        return False
    if all(q.is_zero() for q in qs):
        return False
    for q in qs:
        if q.deg_x() > plan.d1 - inst.t or q.deg_y() > plan.d2 - inst.k:
            return False
    p = inst.field.modulus
    for pidx in range(inst.n):
        mxv = [list(r) for r in plan.mx_at_points[pidx]]
        myv = [list(r) for r in plan.my_at_points[pidx]]
        col = list(received.columns[pidx])
        total = [0] * plan.r
        for i, q in enumerate(qs):
            z = linalg.mat_vec([list(r) for r in plan.h.at(i, pidx)], col, p)
            qm = _poly_at_matrices(q, mxv, myv, p)
            contrib = linalg.mat_vec(qm, z, p)
            total = [(a + b) % p for a, b in zip(total, contrib)]
        if any(total):
            return False
    return True


def build_solve_system(plan: DecodingPlan, qs) -> list[list[int]]:
    """Rows express the coefficients of sum_i Q_i * G_i(p) as linear
    functionals of coeff(p); row a*d2 + b is the X^a Y^b coefficient."""
    qs = qs.qs if isinstance(qs, InterpolationResult) else tuple(qs)
    inst = plan.inst
    p = inst.field.modulus
    t, k, d1, d2 = inst.t, inst.k, plan.d1, plan.d2
    system = [[0] * (t * k) for _ in range(d1 * d2)]
    for u in range(t * k):
        for i in range(plan.w):
            col = [plan.g_matrices[i][v][u] for v in range(t * k)]
            g_poly = BiPoly.from_coeff_vector(inst.field, col, t, k)
            prod = (qs[i] * g_poly).resize(d1, d2)
            for a in range(d1):
                row = prod.coeffs[a]
                for b in range(d2):
                    if row[b]:
                        system[a * d2 + b][u] = (system[a * d2 + b][u] + row[b]) % p
    return system


@dataclass(frozen=True)
class SolveDiagnostics:
    """The leading-block view of the solve system.

    r1 is the top X-degree over the Q's; r2_profile[i] is the top Y-degree
    among their X^(r1-i) coefficient slices (-1 when the slice is zero);
    u collects the X^r1 Y^r2 coefficients. The leading block is the set of
    tk rows for the coefficients of X^(r1+t-1-i) Y^(r2+k-1-l), which is
    lower-triangular in the reversed unknown order with diagonal u * Diag.
    """

    r1: int
    r2_profile: tuple[int, ...]
    u: tuple[int, ...]
    leading_diag: tuple[int, ...]
    zero_count: int


def leading_diagnostics(plan: DecodingPlan, qs,
                        system: list[list[int]] | None = None) -> SolveDiagnostics:
    """Extract the leading block, assert its triangular structure, and count
    zero diagonal entries (provably at most ell)."""
    qs = qs.qs if isinstance(qs, InterpolationResult) else tuple(qs)
    if all(q.is_zero() for q in qs):
        raise ValueError("all-zero Q has no leading block")
    inst = plan.inst
    t, k, d2 = inst.t, inst.k, plan.d2
    p = inst.field.modulus
    r1 = max(q.deg_x() for q in qs)
    profile = []
    for i in range(r1 + 1):
        degs = []
        for q in qs:
            if r1 - i < q.dx_bound and any(q.coeffs[r1 - i]):
                degs.append(max(b for b, c in enumerate(q.coeffs[r1 - i]) if c))
        profile.append(max(degs) if degs else -1)
    r2 = profile[0]
    u = tuple(q.coeffs[r1][r2] if r1 < q.dx_bound and r2 < q.dy_bound else 0 for q in qs)
    if not any(u):
        raise DecodingInvariantError("leading coefficient vector u is zero")
    if system is None:
        system = build_solve_system(plan, qs)
    tk = t * k
    block = []
    for i in range(t):
        for l in range(k):
            block.append(system[(r1 + t - 1 - i) * d2 + (r2 + k - 1 - l)])
    # Triangularity: equation v(i, l) may involve only unknowns with
    # v >= v(t-1-i, k-1-l) = tk - 1 - v(i, l).
    for e in range(tk):
        for v in range(tk - 1 - e):
            if block[e][v] != 0:
                raise DecodingInvariantError(
                    f"leading block is not lower-triangular: equation {e} "
                    f"touches unknown {v}")
    diag_vals = tuple(block[e][tk - 1 - e] for e in range(tk))
    expected = tuple(
        sum(u[j] * plan.diag_rows[j][tk - 1 - e] for j in range(plan.w)) % p
        for e in range(tk))
    if diag_vals != expected:
        raise DecodingInvariantError(
            "leading-block diagonal does not equal u times the stacked diagonals")
    zero_count = sum(1 for v in diag_vals if v == 0)
    if zero_count > plan.ell:
        raise DecodingInvariantError(
            f"{zero_count} zero diagonal entries exceed the bound ell = {plan.ell}")
    return SolveDiagnostics(r1, tuple(profile), u, diag_vals, zero_count)


def kernel_enumerate(system: list[list[int]], fieldd: FieldDesc,
                     dim_cap: int) -> list[tuple[int, ...]]:
    """All q^dim vectors of the kernel, in the deterministic odometer order
    over the reduced basis; refuses kernels larger than q^dim_cap."""
    p = fieldd.modulus
    ncols = len(system[0]) if system else 0
    basis = linalg.nullspace(system, ncols, p)
    dim = len(basis)
    if dim > dim_cap:
        raise DecodingInvariantError(
            f"kernel dimension {dim} exceeds the cap {dim_cap}: theorem violation or bad plan")
    out = []
    for idx in range(p ** dim):
        vec = [0] * ncols
        for j in range(dim):
            c = (idx // p ** (dim - 1 - j)) % p
            if c:
                vec = [(v + c * b) % p for v, b in zip(vec, basis[j])]
        out.append(tuple(vec))
    return out


@dataclass(frozen=True)
class DecodeOutcome:
    candidates: tuple
    kernel: tuple
    interpolation: InterpolationResult
    interpolation_verified: bool
    diagnostics: SolveDiagnostics
    kernel_dim: int


def _candidate_distances(inst: BloInstance, vectors, received: Codeword) -> list[int]:
    e = encoding_matrix(inst)
    p = inst.field.modulus
    rflat = received.flat()
    if int64_safe(p, inst.t * inst.k) and vectors:
        import numpy as np

        enp = np.array(e, dtype=np.int64)
        m = np.array(vectors, dtype=np.int64).T
        words = (enp @ m) % p
        mism = (words != np.array(rflat, dtype=np.int64)[:, None])
        return mism.reshape(inst.n, inst.s, len(vectors)).any(axis=1).sum(axis=0).tolist()
    dists = []
    for vec in vectors:
        d = 0
        for i in range(inst.n):
            for j in range(inst.s):
                if sum(a * b for a, b in zip(e[i * inst.s + j], vec)) % p != rflat[i * inst.s + j]:
                    d += 1
                    break
        dists.append(d)
    return dists


def decode_with_diagnostics(plan: DecodingPlan, received: Codeword) -> DecodeOutcome:
    """Full pipeline with the intermediate artifacts exposed."""
    _check_received(plan, received)
    result = interpolate(plan, received)
    if not verify_interpolation(plan, result, received):
        raise DecodingInvariantError("interpolation output fails independent re-verification")
    system = build_solve_system(plan, result)
    diagnostics = leading_diagnostics(plan, result, system)
    kernel = kernel_enumerate(system, plan.inst.field, plan.ell)
    dim = 0
    p = plan.inst.field.modulus
    count = len(kernel)
    while p ** dim < count:
        dim += 1
    dists = _candidate_distances(plan.inst, kernel, received)
    inst = plan.inst
    kept = []
    for vec, dist in zip(kernel, dists):
        if dist < plan.D:
            kept.append((BiPoly.from_coeff_vector(inst.field, vec, inst.t, inst.k), dist))
    kept.sort(key=lambda md: (md[1], md[0].coeff_vector(inst.t, inst.k)))
    return DecodeOutcome(tuple(kept), tuple(kernel), result, True, diagnostics, dim)


def list_decode(plan: DecodingPlan, received: Codeword) -> list[tuple[BiPoly, int]]:
    """All messages whose codewords lie strictly within distance D of the
    received word, sorted by (distance, coefficients)."""
    return list(decode_with_diagnostics(plan, received).candidates)
