"""Linear operator families on bounded-degree bivariate polynomials.

An operator is either a pair of affine substitutions p -> p(lx(X), ly(Y)),
which acts on polynomials of any degree, or an explicit tk-by-tk matrix
acting on coefficient vectors under the running order v(a, b) = a*k + b.
A family bundles an ordered tuple of operators with an optional pair of
polynomial matrices (Mx, My) witnessing that multiplication of the input
by X or by Y factors through the family.
"""

from __future__ import annotations

import warnings
import random
from dataclasses import dataclass
from typing import Union

from . import linalg
from .errors import BudgetError
from .field import Felt, FieldDesc
from .poly import AffineMap, BiPoly, PolyMatrix, affine_power_coeffs

DEFAULT_DISTANCE_CAP = 1 << 24


@dataclass(frozen=True)
class SubstitutionOp:
    """p(X, Y) -> p(lx(X), ly(Y)); preserves every bounded-degree space."""

    lx: AffineMap
    ly: AffineMap

    def __post_init__(self) -> None:
        if self.lx.field != self.ly.field:
            raise ValueError("mismatched fields in substitution operator")

    @property
    def field(self) -> FieldDesc:
        return self.lx.field

    def apply(self, p: BiPoly) -> BiPoly:
        return p.substitute(self.lx, self.ly)

    def matrix(self, t: int, k: int) -> list[list[int]]:
        """Coefficient action on F[X,Y]_{<t,<k}: row and column v(a, b) = a*k + b."""
        p = self.field.modulus
        powx = affine_power_coeffs(self.lx, t - 1)
        powy = affine_power_coeffs(self.ly, k - 1)
        m = [[0] * (t * k) for _ in range(t * k)]
        for c in range(t):
            for d in range(k):
                col = c * k + d
                for a in range(c + 1):
                    xa = powx[c][a]
                    if xa == 0:
                        continue
                    for b in range(d + 1):
                        m[a * k + b][col] = xa * powy[d][b] % p
        return m


@dataclass(frozen=True)
class MatrixOp:
    """Explicit coefficient action on F[X,Y]_{<t,<k}."""

    rows: tuple[tuple[int, ...], ...]
    t: int
    k: int
    field: FieldDesc

    def __post_init__(self) -> None:
        n = self.t * self.k
        if len(self.rows) != n or any(len(r) != n for r in self.rows):
            raise ValueError(f"matrix operator must be {n}x{n} for bounds ({self.t}, {self.k})")

    @classmethod
    def from_rows(cls, field: FieldDesc, rows, t: int, k: int) -> "MatrixOp":
        p = field.modulus
        return cls(tuple(tuple(int(c) % p for c in row) for row in rows), t, k, field)

    def apply(self, p: BiPoly) -> BiPoly:
        vec = p.coeff_vector(self.t, self.k)
        image = linalg.mat_vec([list(r) for r in self.rows], list(vec), self.field.modulus)
        return BiPoly.from_coeff_vector(self.field, image, self.t, self.k)

    def matrix(self, t: int, k: int) -> list[list[int]]:
        if (t, k) != (self.t, self.k):
            raise ValueError(
                f"matrix operator acts on bounds ({self.t}, {self.k}), not ({t}, {k})")
        return [list(r) for r in self.rows]


LinOp = Union[SubstitutionOp, MatrixOp]


def operator_matrix(op: LinOp, t: int, k: int) -> list[list[int]]:
    """The tk-by-tk coefficient action of an operator under the v order."""
    return op.matrix(t, k)


@dataclass(frozen=True)
class ExtendibilityWitness:
    """Square polynomial matrices with L(X*p) = Mx * L(p) and L(Y*p) = My * L(p)."""

    mx: PolyMatrix
    my: PolyMatrix

    def __post_init__(self) -> None:
        for m in (self.mx, self.my):
            if m.rows != m.cols:
                raise ValueError("witness matrices must be square")
        if self.mx.rows != self.my.rows:
            raise ValueError("witness matrices must have matching size")

    @property
    def size(self) -> int:
        return self.mx.rows


@dataclass(frozen=True)
class OperatorFamily:
    """An ordered tuple of linear operators with an optional witness."""

    ops: tuple[LinOp, ...]
    witness: ExtendibilityWitness | None = None

    def __post_init__(self) -> None:
        if not self.ops:
            raise ValueError("operator family must be nonempty")
        field = self.ops[0].field
        for op in self.ops:
            if op.field != field:
                raise ValueError("operators must share a field")
        mat_bounds = {(op.t, op.k) for op in self.ops if isinstance(op, MatrixOp)}
        if len(mat_bounds) > 1:
            raise ValueError("matrix operators must share degree bounds")
        if self.witness is not None and self.witness.size != len(self.ops):
            raise ValueError("witness size must match the family size")

    @property
    def size(self) -> int:
        return len(self.ops)

    @property
    def field(self) -> FieldDesc:
        return self.ops[0].field

    def apply_all(self, p: BiPoly) -> list[BiPoly]:
        return [op.apply(p) for op in self.ops]

    def eval_all(self, p: BiPoly, x: Felt, y: Felt) -> list[Felt]:
        return [op.apply(p).eval(x, y) for op in self.ops]

    def prefix(self, r: int) -> "OperatorFamily":
        """The first r operators; the witness is truncated to its top-left
        block when the block is self-contained, otherwise dropped."""
        if not 1 <= r <= len(self.ops):
            raise ValueError(f"prefix length {r} out of range for family of size {len(self.ops)}")
        wit = None
        if self.witness is not None:
            closed = all(
                m.entries[i][j].is_zero()
                for m in (self.witness.mx, self.witness.my)
                for i in range(r) for j in range(r, self.witness.size))
            if closed:
                wit = ExtendibilityWitness(self.witness.mx.submatrix(r, r),
                                           self.witness.my.submatrix(r, r))
        return OperatorFamily(self.ops[:r], wit)


def power_family(lx: AffineMap, ly: AffineMap, s: int) -> OperatorFamily:
    """The family (L^0, ..., L^{s-1}) of iterated substitutions by (lx, ly),
    with the diagonal witness Mx[i][i] = lx^i(X), My[i][i] = ly^i(Y)."""
    if s < 1:
        raise ValueError("family size must be positive")
    if lx.field != ly.field:
        raise ValueError("mismatched fields")
    field = lx.field
    ops = tuple(SubstitutionOp(lx.iterate(i), ly.iterate(i)) for i in range(s))
    zero = BiPoly.zero(field, 2, 2)
    mx = PolyMatrix(tuple(
        tuple(ops[i].lx.as_bipoly("x") if i == j else zero for j in range(s))
        for i in range(s)))
    my = PolyMatrix(tuple(
        tuple(ops[i].ly.as_bipoly("y") if i == j else zero for j in range(s))
        for i in range(s)))
    return OperatorFamily(ops, ExtendibilityWitness(mx, my))


def verify_extendibility(fam: OperatorFamily, t: int, k: int) -> bool:
    """Check the witness identities on monomials of F[X,Y]_{<t,<k}.

    The X identity is checked on monomials X^a Y^b with a < t-1 (so X*p stays
    inside the bounded space) and the Y identity with b < k-1.
    """
    if fam.witness is None:
        raise ValueError("family carries no extendibility witness")
    mx, my = fam.witness.mx, fam.witness.my

    def holds(mat: PolyMatrix, shift_a: int, shift_b: int, amax: int, bmax: int) -> bool:
        for a in range(amax):
            for b in range(bmax):
                mono = BiPoly.monomial(fam.field, a, b, 1, t, k)
                shifted = BiPoly.monomial(fam.field, a + shift_a, b + shift_b, 1, t, k)
                lhs = fam.apply_all(shifted)
                rhs = mat.apply_vec(fam.apply_all(mono))
                if not all(l.same_poly(r) for l, r in zip(lhs, rhs)):
                    return False
        return True

    return holds(mx, 1, 0, t - 1, k) and holds(my, 0, 1, t, k - 1)


def family_from_one(fam: OperatorFamily, t: int, k: int) -> OperatorFamily:
    """Reconstruct the family in matrix form from its image of 1 and the
    witness, using L(X^a Y^b) = Mx^a * My^b * L(1).

    The images are built recursively; whenever a monomial is reachable by an
    X step and by a Y step, both routes must agree, which checks that the
    witness matrices commute on the generated span.
    """
    if fam.witness is None:
        raise ValueError("family carries no extendibility witness")
    if not verify_extendibility(fam, t, k):
        raise ValueError("extendibility witness does not verify")
    mx, my = fam.witness.mx, fam.witness.my
    one = BiPoly.monomial(fam.field, 0, 0, 1, t, k)
    images: dict[tuple[int, int], list[BiPoly]] = {(0, 0): fam.apply_all(one)}
    for a in range(t):
        for b in range(k):
            if (a, b) == (0, 0):
                continue
            via_x = mx.apply_vec(images[(a - 1, b)]) if a > 0 else None
            via_y = my.apply_vec(images[(a, b - 1)]) if b > 0 else None
            if via_x is not None and via_y is not None:
                if not all(vx.same_poly(vy) for vx, vy in zip(via_x, via_y)):
                    raise ValueError(
                        "witness matrices disagree on X^%d Y^%d: Mx and My do not "
                        "commute on the generated span" % (a, b))
            images[(a, b)] = via_x if via_x is not None else via_y
    mats = [[[0] * (t * k) for _ in range(t * k)] for _ in fam.ops]
    for (a, b), vec in images.items():
        col = a * k + b
        for i, poly in enumerate(vec):
            try:
                coeffs = poly.coeff_vector(t, k)
            except ValueError as exc:
                raise ValueError(
                    f"reconstructed image of X^{a} Y^{b} leaves the bounded space") from exc
            for row, c in enumerate(coeffs):
                mats[i][row][col] = c
    ops = tuple(MatrixOp.from_rows(fam.field, m, t, k) for m in mats)
    return OperatorFamily(ops, fam.witness)


def diag(fam: OperatorFamily, t: int, k: int) -> list[list[int]]:
    """Stack the diagonals of the operators' coefficient matrices as rows."""
    out = []
    for op in fam.ops:
        m = op.matrix(t, k)
        out.append([m[v][v] for v in range(t * k)])
    return out


def diag_distance(rows: list[list[int]], field: FieldDesc,
                  cap: int = DEFAULT_DISTANCE_CAP) -> int:
    """Minimum Hamming weight of u * D over all nonzero u, by enumeration.

    Returns 0 when some nonzero combination gives the zero word (in
    particular when D = 0). Enumeration is refused beyond q^w > cap.
    """
    w = len(rows)
    if w == 0:
        return 0
    m = len(rows[0])
    p = field.modulus
    total = p ** w
    if total > cap:
        raise BudgetError(
            f"q^w = {total} exceeds the enumeration cap {cap}; supply the distance externally")
    try:
        import numpy as np
    except ImportError:  # pragma: no cover
        np = None
    if np is not None and w * (p - 1) ** 2 < (1 << 62):
        d = np.array(rows, dtype=np.int64)
        best = m
        chunk = 1 << 16
        for start in range(1, total, chunk):
            idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
            u = np.stack([(idx // p ** (w - 1 - j)) % p for j in range(w)])
            words = (u.T @ d) % p
            weights = (words != 0).sum(axis=1)
            nz = weights[weights > 0]
            if nz.size and int(nz.min()) < best:
                best = int(nz.min())
            if (weights == 0).any():
                return 0
        return best
    best = m
    seen_zero = False
    for idx in range(1, total):
        u = [(idx // p ** (w - 1 - j)) % p for j in range(w)]
        word = linalg.vec_mat(u, rows, p)
        weight = sum(1 for c in word if c)
        if weight == 0:
            seen_zero = True
        else:
            best = min(best, weight)
    return 0 if seen_zero else best


def check_degree_preserving(fam: OperatorFamily, t: int, k: int) -> bool:
    """True iff every operator maps each monomial X^a Y^b (a < t, b < k) to a
    polynomial of X-degree exactly a and Y-degree exactly b."""
    for a in range(t):
        for b in range(k):
            mono = BiPoly.monomial(fam.field, a, b, 1, t, k)
            for op in fam.ops:
                img = op.apply(mono)
                if img.deg_x() != a or img.deg_y() != b:
                    return False
    return True


def selection_h(i: int, r: int, s: int) -> list[list[int]]:
    """The r-by-s matrix picking out coordinates i, i+1, ..., i+r-1."""
    if i < 0 or i + r > s:
        raise ValueError(f"selection window [{i}, {i + r}) does not fit in [0, {s}): "
                         "family too short to list-compose")
    return [[1 if c == i + j else 0 for c in range(s)] for j in range(r)]


@dataclass(frozen=True)
class HMapTable:
    """Per-operator linear maps h taking the family's evaluations at a point
    to the composed family's evaluations there.

    Point-independent tables hold one r-by-s matrix per composing operator;
    per-point tables hold one matrix per (operator, point) pair.
    """

    maps: tuple
    per_point: bool = False

    def at(self, i: int, point_index: int) -> tuple[tuple[int, ...], ...]:
        return self.maps[i][point_index] if self.per_point else self.maps[i]

    @property
    def count(self) -> int:
        return len(self.maps)

    @classmethod
    def from_matrices(cls, matrices) -> "HMapTable":
        frozen = tuple(tuple(tuple(int(c) for c in row) for row in m) for m in matrices)
        return cls(frozen, per_point=False)

    @classmethod
    def selection(cls, w: int, r: int, s: int) -> "HMapTable":
        return cls.from_matrices(selection_h(i, r, s) for i in range(w))


def verify_list_composition(tfam: OperatorFamily, gfam: OperatorFamily,
                            lfam: OperatorFamily, points, h: HMapTable,
                            t: int, k: int) -> bool:
    """Check T_j(G_i(p))(x, y) = (h_i @ L(p)(x, y))_j on every monomial of
    F[X,Y]_{<t,<k}, every composing operator, and every evaluation point."""
    r, s = len(tfam.ops), len(lfam.ops)
    if h.count != len(gfam.ops):
        raise ValueError("one h matrix required per composing operator")
    for i in range(h.count):
        for pidx in range(len(points)):
            m = h.at(i, pidx)
            if len(m) != r or any(len(row) != s for row in m):
                raise ValueError(f"h matrix for operator {i} must be {r}x{s}")
    p = tfam.field.modulus
    for a in range(t):
        for b in range(k):
            mono = BiPoly.monomial(lfam.field, a, b, 1, t, k)
            l_images = lfam.apply_all(mono)
            for i, g in enumerate(gfam.ops):
                tg_images = tfam.apply_all(g.apply(mono))
                for pidx, (x, y) in enumerate(points):
                    lvals = [img.eval(x, y).value for img in l_images]
                    rhs = linalg.mat_vec([list(row) for row in h.at(i, pidx)], lvals, p)
                    lhs = [img.eval(x, y).value for img in tg_images]
                    if lhs != rhs:
                        return False
    return True


def ideal_closure_check(fam: OperatorFamily, point: tuple[Felt, Felt],
                        t: int, k: int, trials: int = 100, seed: int = 0) -> bool:
    """Sample the ideal property of the per-point annihilator.

    Random polynomials p with all family images vanishing at the point are
    drawn from the kernel of the evaluation map on F[X,Y]_{<t,<k}; for each,
    a random multiplier m is checked to keep m*p in the annihilator. Requires
    substitution operators (products leave any fixed bounded space) and a
    verified witness.
    """
    if not all(isinstance(op, SubstitutionOp) for op in fam.ops):
        raise ValueError("closure sampling requires substitution-form operators")
    if fam.witness is None or not verify_extendibility(fam, t, k):
        raise ValueError("family must carry a verified extendibility witness")
    x, y = point
    p = fam.field.modulus
    rows = []
    for op in fam.ops:
        row = []
        for a in range(t):
            for b in range(k):
                mono = BiPoly.monomial(fam.field, a, b, 1, t, k)
                row.append(op.apply(mono).eval(x, y).value)
        rows.append(row)
    basis = linalg.nullspace(rows, t * k, p)
    if not basis:
        warnings.warn("annihilator at the point is trivial; closure check is vacuous")
        return True
    rng = random.Random(seed)
    for _ in range(trials):
        vec = [0] * (t * k)
        for bvec in basis:
            c = rng.randrange(p)
            vec = [(v + c * bv) % p for v, bv in zip(vec, bvec)]
        poly = BiPoly.from_coeff_vector(fam.field, vec, t, k)
        mult = BiPoly.from_rows(
            fam.field, [[rng.randrange(p) for _ in range(k)] for _ in range(t)], t, k)
        prod = mult * poly
        if any(op.apply(prod).eval(x, y).value != 0 for op in fam.ops):
            return False
    return True
