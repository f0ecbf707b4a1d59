"""Exact arithmetic in prime fields F_p, p < 2^31."""

from __future__ import annotations

from dataclasses import dataclass

MAX_MODULUS = 1 << 31

# Deterministic Miller-Rabin witnesses for n < 3,215,031,751.
_MR_BASES = (2, 3, 5, 7)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for sp in _SMALL_PRIMES:
        if n % sp == 0:
            return n == sp
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (n < 2^62)."""
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


@dataclass(frozen=True)
class FieldDesc:
    """A prime field F_p.

    The modulus is checked for primality at construction and bounded so
    that a product of two canonical residues fits in 64 bits.
    """

    modulus: int

    def __post_init__(self) -> None:
        if not isinstance(self.modulus, int) or not 2 <= self.modulus < MAX_MODULUS:
            raise ValueError(f"modulus must be an integer in [2, 2^31), got {self.modulus!r}")
        if not is_prime(self.modulus):
            raise ValueError(f"modulus {self.modulus} is not prime")

    def elt(self, value: int) -> "Felt":
        """Canonical field element for any integer value."""
        return Felt(value % self.modulus, self)

    @property
    def zero(self) -> "Felt":
        return Felt(0, self)

    @property
    def one(self) -> "Felt":
        return Felt(1, self)

    def elements(self):
        """All field elements in ascending value order."""
        return (Felt(v, self) for v in range(self.modulus))

    def __repr__(self) -> str:
        return f"FieldDesc({self.modulus})"


@dataclass(frozen=True)
class Felt:
    """A canonical element of a prime field: 0 <= value < modulus."""

    value: int
    field: FieldDesc

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.field.modulus:
            raise ValueError(f"non-canonical value {self.value} for {self.field}")

    def _same_field(self, other: "Felt") -> None:
        if self.field != other.field:
            raise ValueError(f"mismatched fields: {self.field} vs {other.field}")

    def __add__(self, other: "Felt") -> "Felt":
        self._same_field(other)
        return Felt((self.value + other.value) % self.field.modulus, self.field)

    def __sub__(self, other: "Felt") -> "Felt":
        self._same_field(other)
        return Felt((self.value - other.value) % self.field.modulus, self.field)

    def __neg__(self) -> "Felt":
        return Felt(-self.value % self.field.modulus, self.field)

    def __mul__(self, other: "Felt") -> "Felt":
        self._same_field(other)
        return Felt(self.value * other.value % self.field.modulus, self.field)

    def __truediv__(self, other: "Felt") -> "Felt":
        self._same_field(other)
        if other.value == 0:
            raise ZeroDivisionError("division by zero field element")
        p = self.field.modulus
        return Felt(self.value * pow(other.value, p - 2, p) % p, self.field)

    def __pow__(self, exponent: int) -> "Felt":
        if exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        return Felt(pow(self.value, exponent, self.field.modulus), self.field)

    def inverse(self) -> "Felt":
        return self.field.one / self

    def is_zero(self) -> bool:
        return self.value == 0

    def __repr__(self) -> str:
        return f"{self.value}"


def element_order(a: Felt) -> int:
    """Multiplicative order of a nonzero element; divides p - 1."""
    if a.value == 0:
        raise ValueError("the zero element has no multiplicative order")
    p = a.field.modulus
    order = p - 1
    for f in factorize(p - 1):
        while order % f == 0 and pow(a.value, order // f, p) == 1:
            order //= f
    return order


def find_order_element(field: FieldDesc, d: int) -> Felt:
    """Smallest-valued element of multiplicative order exactly d.

    Requires d | p - 1 (the orders that occur in the cyclic group F_p^*).
    """
    p = field.modulus
    if d < 1 or (p - 1) % d != 0:
        raise ValueError(f"{d} does not divide p - 1 = {p - 1}")
    proper = [d // f for f in factorize(d)]
    for v in range(1, p):
        if pow(v, d, p) != 1:
            continue
        if all(pow(v, e, p) != 1 for e in proper):
            return Felt(v, field)
    raise AssertionError("cyclic group must contain an element of each divisor order")
