"""Bivariate polynomials over prime fields, affine maps, and polynomial matrices.

Polynomials carry explicit degree bounds: a BiPoly with bounds (dx, dy) is an
element of the typed space of polynomials with deg_X < dx and deg_Y < dy,
stored as a dense dx-by-dy coefficient grid. Bounds are never inferred from
trailing zeros.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import Felt, FieldDesc


def affine_power_coeffs(lmap: "AffineMap", top: int) -> list[list[int]]:
    """Coefficient rows of (a*V + b)^c for c in [0, top]; row c has length c + 1."""
    p = lmap.field.modulus
    a, b = lmap.a.value, lmap.b.value
    rows = [[1]]
    for _ in range(top):
        prev = rows[-1]
        nxt = [0] * (len(prev) + 1)
        for i, coeff in enumerate(prev):
            nxt[i] = (nxt[i] + coeff * b) % p
            nxt[i + 1] = (nxt[i + 1] + coeff * a) % p
        rows.append(nxt)
    return rows


@dataclass(frozen=True)
class BiPoly:
    """Dense bivariate polynomial: coeffs[a][b] is the X^a Y^b coefficient."""

    field: FieldDesc
    coeffs: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.coeffs or not self.coeffs[0]:
            raise ValueError("degree bounds must be positive")
        dy = len(self.coeffs[0])
        p = self.field.modulus
        for row in self.coeffs:
            if len(row) != dy:
                raise ValueError("coefficient grid must be rectangular")
            for c in row:
                if not 0 <= c < p:
                    raise ValueError(f"non-canonical coefficient {c}")

    # -- construction -------------------------------------------------

    @classmethod
    def from_rows(cls, field: FieldDesc, rows, dx_bound: int | None = None,
                  dy_bound: int | None = None) -> "BiPoly":
        """Build from an iterable of coefficient rows, reducing mod p and
        zero-padding to the requested bounds."""
        p = field.modulus
        grid = [[int(c) % p for c in row] for row in rows]
        dx = dx_bound if dx_bound is not None else max(1, len(grid))
        dy = dy_bound if dy_bound is not None else max(1, max((len(r) for r in grid), default=1))
        if len(grid) > dx or any(len(r) > dy for r in grid):
            raise ValueError("rows exceed the requested degree bounds")
        full = [[grid[a][b] if a < len(grid) and b < len(grid[a]) else 0
                 for b in range(dy)] for a in range(dx)]
        return cls(field, tuple(tuple(r) for r in full))

    @classmethod
    def zero(cls, field: FieldDesc, dx_bound: int = 1, dy_bound: int = 1) -> "BiPoly":
        return cls(field, tuple(tuple(0 for _ in range(dy_bound)) for _ in range(dx_bound)))

    @classmethod
    def constant(cls, field: FieldDesc, value: int, dx_bound: int = 1, dy_bound: int = 1) -> "BiPoly":
        return cls.monomial(field, 0, 0, value, dx_bound, dy_bound)

    @classmethod
    def monomial(cls, field: FieldDesc, a: int, b: int, coeff: int = 1,
                 dx_bound: int | None = None, dy_bound: int | None = None) -> "BiPoly":
        dx = dx_bound if dx_bound is not None else a + 1
        dy = dy_bound if dy_bound is not None else b + 1
        if a >= dx or b >= dy:
            raise ValueError("monomial exceeds degree bounds")
        grid = [[0] * dy for _ in range(dx)]
        grid[a][b] = int(coeff) % field.modulus
        return cls(field, tuple(tuple(r) for r in grid))

    @classmethod
    def from_coeff_vector(cls, field: FieldDesc, vec, t: int, k: int) -> "BiPoly":
        """Inverse of coeff_vector: vec[a*k + b] is the X^a Y^b coefficient."""
        vec = list(vec)
        if len(vec) != t * k:
            raise ValueError(f"expected {t * k} coefficients, got {len(vec)}")
        return cls.from_rows(field, [vec[a * k:(a + 1) * k] for a in range(t)], t, k)

    # -- shape ---------------------------------------------------------

    @property
    def dx_bound(self) -> int:
        return len(self.coeffs)

    @property
    def dy_bound(self) -> int:
        return len(self.coeffs[0])

    def deg_x(self) -> int:
        """Exact X-degree (-1 for the zero polynomial)."""
        for a in range(self.dx_bound - 1, -1, -1):
            if any(self.coeffs[a]):
                return a
        return -1

    def deg_y(self) -> int:
        for b in range(self.dy_bound - 1, -1, -1):
            if any(row[b] for row in self.coeffs):
                return b
        return -1

    def is_zero(self) -> bool:
        return all(not any(row) for row in self.coeffs)

    def resize(self, dx_bound: int, dy_bound: int) -> "BiPoly":
        """Re-bound the polynomial; truncating a nonzero coefficient is an error."""
        if self.deg_x() >= dx_bound or self.deg_y() >= dy_bound:
            raise ValueError("polynomial does not fit the requested bounds")
        grid = [[self.coeffs[a][b] if a < self.dx_bound and b < self.dy_bound else 0
                 for b in range(dy_bound)] for a in range(dx_bound)]
        return BiPoly(self.field, tuple(tuple(r) for r in grid))

    def coeff_vector(self, t: int, k: int) -> tuple[int, ...]:
        """Coefficients in the running order v(a, b) = a*k + b."""
        fitted = self.resize(t, k)
        return tuple(fitted.coeffs[a][b] for a in range(t) for b in range(k))

    def same_poly(self, other: "BiPoly") -> bool:
        """Equality as polynomials, ignoring zero padding beyond either bound."""
        if self.field != other.field:
            return False
        dx = max(self.dx_bound, other.dx_bound)
        dy = max(self.dy_bound, other.dy_bound)
        return self.resize(dx, dy).coeffs == other.resize(dx, dy).coeffs

    # -- arithmetic ----------------------------------------------------

    def _same_field(self, other: "BiPoly") -> None:
        if self.field != other.field:
            raise ValueError("mismatched fields")

    def __add__(self, other: "BiPoly") -> "BiPoly":
        self._same_field(other)
        p = self.field.modulus
        dx = max(self.dx_bound, other.dx_bound)
        dy = max(self.dy_bound, other.dy_bound)
        a1 = self.resize(dx, dy).coeffs
        a2 = other.resize(dx, dy).coeffs
        return BiPoly(self.field, tuple(
            tuple((a1[a][b] + a2[a][b]) % p for b in range(dy)) for a in range(dx)))

    def __neg__(self) -> "BiPoly":
        p = self.field.modulus
        return BiPoly(self.field, tuple(tuple(-c % p for c in row) for row in self.coeffs))

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        """Full convolution; result bounds (dx1 + dx2 - 1, dy1 + dy2 - 1)."""
        self._same_field(other)
        p = self.field.modulus
        dx = self.dx_bound + other.dx_bound - 1
        dy = self.dy_bound + other.dy_bound - 1
        out = [[0] * dy for _ in range(dx)]
        for a1, row in enumerate(self.coeffs):
            for b1, c1 in enumerate(row):
                if c1 == 0:
                    continue
                orow = other.coeffs
                for a2 in range(other.dx_bound):
                    tgt = out[a1 + a2]
                    for b2, c2 in enumerate(orow[a2]):
                        if c2:
                            tgt[b1 + b2] = (tgt[b1 + b2] + c1 * c2) % p
        return BiPoly(self.field, tuple(tuple(r) for r in out))

    def scale(self, c) -> "BiPoly":
        p = self.field.modulus
        cv = c.value if isinstance(c, Felt) else int(c) % p
        return BiPoly(self.field, tuple(tuple(cv * x % p for x in row) for row in self.coeffs))

    # -- evaluation and substitution ------------------------------------

    def eval(self, x: Felt, y: Felt) -> Felt:
        """Nested Horner evaluation at a point."""
        if x.field != self.field or y.field != self.field:
            raise ValueError("evaluation point not in the polynomial's field")
        p = self.field.modulus
        xv, yv = x.value, y.value
        acc = 0
        for row in reversed(self.coeffs):
            inner = 0
            for c in reversed(row):
                inner = (inner * yv + c) % p
            acc = (acc * xv + inner) % p
        return Felt(acc, self.field)

    def substitute(self, lx: "AffineMap", ly: "AffineMap") -> "BiPoly":
        """The polynomial p(lx(X), ly(Y)); degree bounds are preserved."""
        if lx.field != self.field or ly.field != self.field:
            raise ValueError("affine maps not over the polynomial's field")
        p = self.field.modulus
        powx = affine_power_coeffs(lx, self.dx_bound - 1)
        powy = affine_power_coeffs(ly, self.dy_bound - 1)
        out = [[0] * self.dy_bound for _ in range(self.dx_bound)]
        for c, row in enumerate(self.coeffs):
            px = powx[c]
            for d, coeff in enumerate(row):
                if coeff == 0:
                    continue
                py = powy[d]
                for a in range(c + 1):
                    ca = coeff * px[a] % p
                    if ca == 0:
                        continue
                    tgt = out[a]
                    for b in range(d + 1):
                        tgt[b] = (tgt[b] + ca * py[b]) % p
        return BiPoly(self.field, tuple(tuple(r) for r in out))

    # -- serialization ---------------------------------------------------

    def to_text(self) -> str:
        """dx_bound lines of dy_bound decimal integers (row a = X-degree a)."""
        return "\n".join(" ".join(str(c) for c in row) for row in self.coeffs) + "\n"

    @classmethod
    def from_text(cls, field: FieldDesc, text: str, dx_bound: int | None = None,
                  dy_bound: int | None = None) -> "BiPoly":
        rows = [[int(tok) for tok in line.split()] for line in text.splitlines() if line.strip()]
        if not rows:
            raise ValueError("empty polynomial text")
        return cls.from_rows(field, rows, dx_bound, dy_bound)

    def __repr__(self) -> str:
        return f"BiPoly({self.field.modulus}, {self.coeffs})"


@dataclass(frozen=True)
class AffineMap:
    """A member a*V + b of the affine group (a nonzero)."""

    a: Felt
    b: Felt

    def __post_init__(self) -> None:
        if self.a.field != self.b.field:
            raise ValueError("mismatched fields in affine map")
        if self.a.value == 0:
            raise ValueError("affine map requires a nonzero linear coefficient")

    @classmethod
    def of(cls, field: FieldDesc, a: int, b: int = 0) -> "AffineMap":
        return cls(field.elt(a), field.elt(b))

    @classmethod
    def identity(cls, field: FieldDesc) -> "AffineMap":
        return cls(field.one, field.zero)

    @property
    def field(self) -> FieldDesc:
        return self.a.field

    def __call__(self, x: Felt) -> Felt:
        return self.a * x + self.b

    def compose(self, other: "AffineMap") -> "AffineMap":
        """self after other: x -> self(other(x))."""
        return AffineMap(self.a * other.a, self.a * other.b + self.b)

    def iterate(self, i: int) -> "AffineMap":
        """The i-fold self-composition; iterate(0) is the identity."""
        if i < 0:
            raise ValueError("iteration count must be nonnegative")
        field = self.field
        p = field.modulus
        av, bv = self.a.value, self.b.value
        ai = pow(av, i, p)
        if av == 1:
            shift = i % p * bv % p
        else:
            shift = bv * (ai - 1) % p * pow(av - 1, p - 2, p) % p
        return AffineMap(field.elt(ai), field.elt(shift))

    def order(self) -> int:
        """Smallest i >= 1 with the i-fold composition equal to the identity."""
        p = self.field.modulus
        if self.a.value == 1:
            return 1 if self.b.value == 0 else p
        from .field import element_order

        return element_order(self.a)

    def fixes(self, x: Felt) -> bool:
        return self(x) == x

    def as_bipoly(self, var: str, dx_bound: int = 2, dy_bound: int = 2) -> BiPoly:
        """The map as a degree-1 polynomial in X (var='x') or Y (var='y')."""
        field = self.field
        if var == "x":
            rows = [[self.b.value], [self.a.value]]
        elif var == "y":
            rows = [[self.b.value, self.a.value]]
        else:
            raise ValueError("var must be 'x' or 'y'")
        return BiPoly.from_rows(field, rows, dx_bound, dy_bound)

    def __repr__(self) -> str:
        return f"AffineMap({self.a.value}*V + {self.b.value} mod {self.field.modulus})"


@dataclass(frozen=True)
class PolyMatrix:
    """A rectangular matrix of BiPoly entries sharing field and bounds."""

    entries: tuple[tuple[BiPoly, ...], ...]

    def __post_init__(self) -> None:
        if not self.entries or not self.entries[0]:
            raise ValueError("polynomial matrix must be nonempty")
        first = self.entries[0][0]
        for row in self.entries:
            if len(row) != len(self.entries[0]):
                raise ValueError("polynomial matrix must be rectangular")
            for e in row:
                if e.field != first.field or e.dx_bound != first.dx_bound \
                        or e.dy_bound != first.dy_bound:
                    raise ValueError("entries must share field and degree bounds")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def field(self) -> FieldDesc:
        return self.entries[0][0].field

    def eval_at(self, x: Felt, y: Felt) -> list[list[Felt]]:
        """Entrywise evaluation; a ring homomorphism, so products commute
        with evaluation."""
        return [[e.eval(x, y) for e in row] for row in self.entries]

    def matmul(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in polynomial matrix product")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = None
                for m in range(self.cols):
                    term = self.entries[i][m] * other.entries[m][j]
                    acc = term if acc is None else acc + term
                row.append(acc)
            out.append(tuple(row))
        return PolyMatrix(tuple(out))

    def apply_vec(self, vec: list[BiPoly]) -> list[BiPoly]:
        """Matrix times a column vector of polynomials."""
        if len(vec) != self.cols:
            raise ValueError("dimension mismatch in matrix-vector product")
        out = []
        for row in self.entries:
            acc = None
            for entry, v in zip(row, vec):
                term = entry * v
                acc = term if acc is None else acc + term
            out.append(acc)
        return out

    def submatrix(self, rows: int, cols: int) -> "PolyMatrix":
        return PolyMatrix(tuple(tuple(self.entries[i][j] for j in range(cols))
                                for i in range(rows)))


def eval_matrix(m: PolyMatrix, x: Felt, y: Felt) -> list[list[Felt]]:
    """Entrywise evaluation of a polynomial matrix at a point."""
    return m.eval_at(x, y)
