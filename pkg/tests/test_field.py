import pytest
from hypothesis import given, strategies as st

from blocodes import FieldDesc, element_order, find_order_element

F7 = FieldDesc(7)
F61 = FieldDesc(61)

SMALL_FIELDS = [FieldDesc(p) for p in (7, 13, 31, 61)]


def brute_order(p: int, a: int) -> int:
    """Oracle: smallest d >= 1 with a^d = 1 by repeated multiplication."""
    acc, d = a % p, 1
    while acc != 1:
        acc = acc * a % p
        d += 1
    return d


def test_construction_rejects_composites_and_range():
    with pytest.raises(ValueError):
        FieldDesc(6)
    with pytest.raises(ValueError):
        FieldDesc(1)
    with pytest.raises(ValueError):
        FieldDesc(1 << 31)
    FieldDesc((1 << 31) - 1)  # Mersenne prime, largest allowed


def test_mul_example():
    assert (F7.elt(3) * F7.elt(5)).value == 3 * 5 % 7 == 1


def test_fermat_little():
    assert (F7.elt(3) ** 6).value == 1


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        F7.elt(1) / F7.elt(0)


def test_mismatched_fields():
    with pytest.raises(ValueError):
        F7.elt(1) + F61.elt(1)


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        F7.elt(3) ** -1


def test_canonical_representatives():
    assert F7.elt(-1).value == 6
    assert F7.elt(14).value == 0
    assert (F7.elt(2) - F7.elt(5)).value == 4


def test_order_examples():
    assert element_order(F7.one) == 1
    assert element_order(F7.elt(2)) == brute_order(7, 2) == 3
    assert element_order(FieldDesc(31).elt(2)) == brute_order(31, 2) == 5


def test_order_of_zero():
    with pytest.raises(ValueError):
        element_order(F7.elt(0))


@pytest.mark.parametrize("field", SMALL_FIELDS, ids=lambda f: f"p{f.modulus}")
def test_order_exhaustive_against_brute_force(field):
    p = field.modulus
    for v in range(1, p):
        d = element_order(field.elt(v))
        assert d == brute_order(p, v)
        assert (p - 1) % d == 0  # Lagrange


def test_find_order_element_examples():
    # Oracle: smallest value of exact order d by scanning brute-force orders.
    smallest5 = min(v for v in range(1, 61) if brute_order(61, v) == 5)
    assert find_order_element(F61, 5).value == smallest5 == 9

    c = find_order_element(F61, 12)
    assert (c ** 12).value == 1 and (c ** 6).value != 1 and (c ** 4).value != 1

    assert find_order_element(F7, 1).value == 1


def test_find_order_element_rejects_non_divisor():
    with pytest.raises(ValueError):
        find_order_element(F7, 4)


@given(st.sampled_from(SMALL_FIELDS), st.integers(min_value=1, max_value=1000))
def test_inverse_property(field, raw):
    a = field.elt(raw % (field.modulus - 1) + 1)  # nonzero
    assert (a * (field.one / a)).value == 1


@given(st.sampled_from(SMALL_FIELDS), st.integers(min_value=0, max_value=1000),
       st.integers(min_value=0, max_value=50), st.integers(min_value=0, max_value=50))
def test_exponent_additivity(field, raw, e1, e2):
    a = field.elt(raw)
    assert a ** (e1 + e2) == (a ** e1) * (a ** e2)
