"""Encoders: generic operator-family instances, permuted product codes,
folded and plain Reed-Solomon, plus codeword utilities and distance bounds."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import scan
from .errors import BudgetError
from .field import Felt, FieldDesc
from .operators import MatrixOp, OperatorFamily, SubstitutionOp, ExtendibilityWitness, power_family
from .poly import AffineMap, BiPoly, PolyMatrix


@dataclass(frozen=True)
class Codeword:
    """A word over the alphabet F^s: n columns of s canonical residues."""

    field: FieldDesc
    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.columns:
            raise ValueError("codeword must have at least one column")
        s = len(self.columns[0])
        if s == 0 or any(len(c) != s for c in self.columns):
            raise ValueError("codeword columns must be nonempty and rectangular")
        p = self.field.modulus
        for col in self.columns:
            for v in col:
                if not 0 <= v < p:
                    raise ValueError(f"non-canonical codeword entry {v}")

    @property
    def n(self) -> int:
        return len(self.columns)

    @property
    def s(self) -> int:
        return len(self.columns[0])

    def flat(self) -> list[int]:
        """Entries in column-major order: index i*s + j is row j of column i."""
        return [v for col in self.columns for v in col]

    def to_text(self) -> str:
        """n lines of s decimal integers, one column per line."""
        return "\n".join(" ".join(str(v) for v in col) for col in self.columns) + "\n"

    @classmethod
    def from_text(cls, field: FieldDesc, text: str) -> "Codeword":
        cols = [tuple(int(tok) for tok in line.split())
                for line in text.splitlines() if line.strip()]
        return cls(field, tuple(cols))


def column_distance(c1: Codeword, c2: Codeword) -> int:
    """Hamming distance over the column alphabet F^s."""
    if c1.field != c2.field or c1.n != c2.n or c1.s != c2.s:
        raise ValueError("codewords must share field and shape")
    return sum(1 for a, b in zip(c1.columns, c2.columns) if a != b)


@dataclass(frozen=True)
class BloInstance:
    """An operator-family code: family, evaluation points, and degree bounds.

    Messages are polynomials with deg_X < t and deg_Y < k; the encoding of p
    evaluates every operator image at every point, one column per point.
    """

    fam: OperatorFamily
    points: tuple[tuple[Felt, Felt], ...]
    t: int
    k: int

    def __post_init__(self) -> None:
        if self.t < 1 or self.k < 1:
            raise ValueError("degree bounds must be positive")
        if not self.points:
            raise ValueError("instance needs at least one evaluation point")
        for x, y in self.points:
            if x.field != self.fam.field or y.field != self.fam.field:
                raise ValueError("evaluation points must lie in the family's field")
        if self.t * self.k > self.fam.size * len(self.points):
            raise ValueError(
                f"message space too large: t*k = {self.t * self.k} > s*n = "
                f"{self.fam.size * len(self.points)}")

    @property
    def s(self) -> int:
        return self.fam.size

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def field(self) -> FieldDesc:
        return self.fam.field


def rate(inst: BloInstance) -> Fraction:
    """Exact rate t*k / (s*n)."""
    return Fraction(inst.t * inst.k, inst.s * inst.n)


def encode_blo(inst: BloInstance, msg: BiPoly) -> Codeword:
    """Column i holds the evaluations of all operator images at point i."""
    if msg.field != inst.field:
        raise ValueError("message must be over the instance field")
    if msg.deg_x() >= inst.t or msg.deg_y() >= inst.k:
        raise ValueError(f"message exceeds degree bounds ({inst.t}, {inst.k})")
    images = inst.fam.apply_all(msg.resize(inst.t, inst.k))
    cols = tuple(tuple(img.eval(x, y).value for img in images) for x, y in inst.points)
    return Codeword(inst.field, cols)


def encoding_matrix(inst: BloInstance) -> list[list[int]]:
    """The s*n-by-t*k matrix of the encoding map on coefficient vectors;
    row i*s + j is entry j of column i."""
    p = inst.field.modulus
    t, k = inst.t, inst.k
    opmats = [op.matrix(t, k) for op in inst.fam.ops]
    rows = []
    for x, y in inst.points:
        mono = [pow(x.value, a, p) * pow(y.value, b, p) % p
                for a in range(t) for b in range(k)]
        for m in opmats:
            rows.append([sum(mono[v] * m[v][u] for v in range(t * k)) % p
                         for u in range(t * k)])
    return rows


def random_message(field: FieldDesc, t: int, k: int, rng: random.Random) -> BiPoly:
    p = field.modulus
    return BiPoly.from_rows(field, [[rng.randrange(p) for _ in range(k)] for _ in range(t)], t, k)


def corrupt_codeword(cw: Codeword, errors: int, seed: int) -> Codeword:
    """Replace `errors` distinct columns (chosen uniformly, seeded) with
    uniformly random columns different from the originals."""
    if not 0 <= errors <= cw.n:
        raise ValueError(f"error count must be in [0, {cw.n}]")
    rng = random.Random(seed)
    p = cw.field.modulus
    cols = [list(c) for c in cw.columns]
    for i in rng.sample(range(cw.n), errors):
        original = tuple(cols[i])
        replacement = original
        while replacement == original:
            replacement = tuple(rng.randrange(p) for _ in range(cw.s))
        cols[i] = list(replacement)
    return Codeword(cw.field, tuple(tuple(c) for c in cols))


# -- permuted product codes -------------------------------------------------


@dataclass(frozen=True)
class PpcParams:
    """A permuted product code: two affine maps of coprime orders, a start
    point for each orbit, and degree bounds."""

    l1: AffineMap
    l2: AffineMap
    alpha: Felt
    beta: Felt
    t: int
    k: int
    s: int = dc_field(init=False)
    n: int = dc_field(init=False)

    def __post_init__(self) -> None:
        fieldd = self.l1.field
        if self.l2.field != fieldd or self.alpha.field != fieldd or self.beta.field != fieldd:
            raise ValueError("all parameters must share a field")
        s = self.l1.order()
        n = self.l2.order()
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "n", n)
        if math.gcd(s, n) != 1:
            raise ValueError(f"orbit orders must be coprime, got {s} and {n}")
        if self.l1(self.alpha) == self.alpha:
            raise ValueError("alpha must not be a fixed point of the first map")
        if self.l2(self.beta) == self.beta:
            raise ValueError("beta must not be a fixed point of the second map")
        if self.t < 1 or self.k < 1 or self.t * self.k > s * n:
            raise ValueError("degree bounds must be positive with t*k <= s*n")
        flat = set(self.flat_points())
        if len(flat) != s * n:
            raise ValueError("flat evaluation points are not pairwise distinct")

    @property
    def field(self) -> FieldDesc:
        return self.l1.field

    def x_orbit(self) -> list[Felt]:
        out, cur = [], self.alpha
        for _ in range(self.s):
            out.append(cur)
            cur = self.l1(cur)
        return out

    def y_orbit(self) -> list[Felt]:
        out, cur = [], self.beta
        for _ in range(self.n):
            out.append(cur)
            cur = self.l2(cur)
        return out

    def flat_points(self) -> list[tuple[Felt, Felt]]:
        xs, ys = self.x_orbit(), self.y_orbit()
        return [(xs[e % self.s], ys[e % self.n]) for e in range(self.s * self.n)]


def encode_ppc_direct(params: PpcParams, msg: BiPoly) -> Codeword:
    """Stack the s*n orbit evaluations into n columns of height s, in flat
    index order: column i row j is the evaluation at orbit index i*s + j."""
    if msg.deg_x() >= params.t or msg.deg_y() >= params.k:
        raise ValueError(f"message exceeds degree bounds ({params.t}, {params.k})")
    flat = params.flat_points()
    vals = [msg.eval(x, y).value for x, y in flat]
    s, n = params.s, params.n
    cols = tuple(tuple(vals[i * s + j] for j in range(s)) for i in range(n))
    return Codeword(params.field, cols)


def ppc_to_blelo(params: PpcParams) -> BloInstance:
    """The same code as an operator-family instance: the iterated-substitution
    family of size s at points (alpha, l2^{i*s}(beta))."""
    fam = power_family(params.l1, params.l2, params.s)
    ys = params.y_orbit()
    points = tuple((params.alpha, ys[(i * params.s) % params.n]) for i in range(params.n))
    return BloInstance(fam, points, params.t, params.k)


def tcode_distance_ppc(inst: BloInstance, r: int, d1: int, d2: int) -> int:
    """Column distance bound n - d2 for the prefix family of size r encoding
    polynomials with deg_X < d1, deg_Y < d2 at the instance's points.

    Valid when d1 <= r: a nonzero polynomial of X-degree < d1 cannot vanish
    identically at r distinct x-nodes, and each surviving row is a
    Reed-Solomon word at n distinct y-nodes, hence has at most d2 - 1 zeros.
    """
    if not 1 <= r <= inst.s:
        raise ValueError(f"prefix size {r} out of range")
    if d1 > r:
        raise ValueError(
            f"d1 = {d1} > r = {r}: the row argument fails; supply the distance externally")
    if d2 > inst.n:
        raise ValueError(f"d2 = {d2} exceeds the block length {inst.n}")
    ops = inst.fam.ops[:r]
    if not all(isinstance(op, SubstitutionOp) for op in ops):
        raise ValueError("distance bound requires a substitution-form family")
    alpha = inst.points[0][0]
    if any(x != alpha for x, _ in inst.points):
        raise ValueError("instance points must share the orbit start x-coordinate")
    x_nodes = [op.lx(alpha) for op in ops]
    if len(set(x_nodes)) != r:
        raise ValueError("x-nodes are not distinct")
    y_nodes = [y for _, y in inst.points]
    if len(set(y_nodes)) != inst.n:
        raise ValueError("y-nodes are not distinct")
    return inst.n - d2


def brute_force_min_distance(inst: BloInstance, cap: int = 1 << 25) -> int:
    """Exact minimum column distance by exhausting the message space."""
    total = inst.field.modulus ** (inst.t * inst.k)
    if total > cap:
        raise BudgetError(f"message space {total} exceeds the cap {cap}")
    e = encoding_matrix(inst)
    return scan.min_nonzero_weight(e, inst.s, inst.n, inst.field.modulus)


# -- folded and plain Reed-Solomon ------------------------------------------


@dataclass(frozen=True)
class FrsParams:
    """A folded Reed-Solomon code: folding s, step gamma, degree bound k,
    and base evaluation points whose gamma-cosets are pairwise disjoint."""

    gamma: Felt
    s: int
    k: int
    points: tuple[Felt, ...]

    def __post_init__(self) -> None:
        if self.s < 1 or self.k < 1:
            raise ValueError("folding and degree parameters must be positive")
        if self.gamma.value == 0:
            raise ValueError("gamma must be nonzero")
        if (self.gamma ** (self.s - 1)).value == 1:
            raise ValueError("gamma^(s-1) must differ from 1")
        if self.k > self.s * len(self.points):
            raise ValueError("degree bound exceeds the code dimension budget")
        cosets = [frozenset((a * self.gamma ** j).value for j in range(self.s))
                  for a in self.points]
        for i in range(len(cosets)):
            for j in range(i + 1, len(cosets)):
                if cosets[i] & cosets[j]:
                    raise ValueError(f"gamma-cosets of points {i} and {j} intersect")

    @property
    def field(self) -> FieldDesc:
        return self.gamma.field

    @property
    def n(self) -> int:
        return len(self.points)


def frs_encode_direct(params: FrsParams, msg: BiPoly) -> Codeword:
    """Column i holds p(a_i), p(a_i*gamma), ..., p(a_i*gamma^(s-1))."""
    if msg.deg_x() >= params.k or msg.deg_y() >= 1:
        raise ValueError("message must be univariate in X with degree below k")
    fieldd = params.field
    zero = fieldd.zero
    cols = []
    for a in params.points:
        x = a
        col = []
        for _ in range(params.s):
            col.append(msg.eval(x, zero).value)
            x = x * params.gamma
        cols.append(tuple(col))
    return Codeword(fieldd, tuple(cols))


def frs_as_blo(params: FrsParams) -> BloInstance:
    """The folded code as an operator-family instance on the (k, 1) message
    space: operator i scales the X^a coefficient by gamma^(i*a), with points
    (a, 0). The fold step appears in the witness as Mx[i][i] = gamma^i * X."""
    fieldd = params.field
    t, k = params.k, 1
    ops = []
    for i in range(params.s):
        g = params.gamma ** i
        rows = [[(g ** a).value if a == c else 0 for c in range(t)] for a in range(t)]
        ops.append(MatrixOp.from_rows(fieldd, rows, t, k))
    zero22 = BiPoly.zero(fieldd, 2, 2)
    mx = PolyMatrix(tuple(
        tuple(AffineMap(params.gamma ** i, fieldd.zero).as_bipoly("x") if i == j else zero22
              for j in range(params.s))
        for i in range(params.s)))
    my = PolyMatrix(tuple(tuple(zero22 for _ in range(params.s)) for _ in range(params.s)))
    fam = OperatorFamily(tuple(ops), ExtendibilityWitness(mx, my))
    points = tuple((a, fieldd.zero) for a in params.points)
    return BloInstance(fam, points, t, k)


def rs_code(fieldd: FieldDesc, k: int, points) -> BloInstance:
    """Plain Reed-Solomon as a degenerate single-operator instance."""
    ident = AffineMap.identity(fieldd)
    fam = power_family(ident, ident, 1)
    pts = tuple((a, fieldd.zero) for a in points)
    return BloInstance(fam, pts, k, 1)
