import random

import pytest
from hypothesis import given, settings, strategies as st

from blocodes import AffineMap, BiPoly, FieldDesc, PolyMatrix, eval_matrix

F7 = FieldDesc(7)
F13 = FieldDesc(13)


def rand_poly(field, dx, dy, rng):
    return BiPoly.from_rows(
        field, [[rng.randrange(field.modulus) for _ in range(dy)] for _ in range(dx)])


def all_affine_maps(field):
    return [AffineMap.of(field, a, b)
            for a in range(1, field.modulus) for b in range(field.modulus)]


# -- evaluation ---------------------------------------------------------


def test_eval_examples():
    x_plus_y = BiPoly.from_rows(F7, [[0, 1], [1, 0]])
    assert x_plus_y.eval(F7.elt(2), F7.elt(3)).value == 5

    one = BiPoly.constant(F7, 1)
    for x in F7.elements():
        assert one.eval(x, x).value == 1

    xy = BiPoly.from_rows(F7, [[0, 0], [0, 1]])
    assert xy.eval(F7.elt(3), F7.elt(3)).value == 3 * 3 % 7 == 2


def test_eval_field_mismatch():
    with pytest.raises(ValueError):
        BiPoly.constant(F7, 1).eval(F13.elt(1), F13.elt(1))


def test_eval_is_ring_homomorphism():
    rng = random.Random(11)
    for _ in range(50):
        p = rand_poly(F13, 3, 2, rng)
        q = rand_poly(F13, 2, 3, rng)
        x, y = F13.elt(rng.randrange(13)), F13.elt(rng.randrange(13))
        assert (p * q).eval(x, y) == p.eval(x, y) * q.eval(x, y)
        assert (p + q).eval(x, y) == p.eval(x, y) + q.eval(x, y)


# -- arithmetic ---------------------------------------------------------


def test_mul_example_bounds():
    x = BiPoly.from_rows(F7, [[0], [1]])          # bounds (2, 1)
    y = BiPoly.from_rows(F7, [[0, 1]])            # bounds (1, 2)
    xy = x * y
    assert (xy.dx_bound, xy.dy_bound) == (2, 2)
    assert xy.coeffs == ((0, 0), (0, 1))


def test_additive_inverse():
    rng = random.Random(5)
    p = rand_poly(F7, 3, 3, rng)
    assert (p + p.scale(-1)).is_zero()
    assert (p - p).is_zero()


def test_binomial_square():
    x_plus_1 = BiPoly.from_rows(F7, [[1], [1]])
    sq = x_plus_1 * x_plus_1
    assert sq.coeffs == ((1,), (2,), (1,))


def test_resize_refuses_truncation():
    p = BiPoly.from_rows(F7, [[0, 0], [0, 1]])
    with pytest.raises(ValueError):
        p.resize(1, 1)
    padded = p.resize(3, 4)
    assert padded.same_poly(p)


# -- affine substitution -------------------------------------------------


def test_substitute_examples():
    x_sq = BiPoly.from_rows(F7, [[0], [0], [1]])
    shifted = x_sq.substitute(AffineMap.of(F7, 1, 1), AffineMap.identity(F7))
    assert shifted.coeffs == ((1,), (2,), (1,))  # (X+1)^2

    xy = BiPoly.from_rows(F7, [[0, 0], [0, 1]])
    scaled = xy.substitute(AffineMap.of(F7, 2), AffineMap.of(F7, 3))
    assert scaled.coeffs == ((0, 0), (0, 6))  # 6*XY

    rng = random.Random(3)
    p = rand_poly(F7, 3, 2, rng)
    ident = AffineMap.identity(F7)
    assert p.substitute(ident, ident) == p


def test_substitution_preserves_degrees():
    rng = random.Random(17)
    for _ in range(30):
        p = rand_poly(F13, 4, 3, rng)
        lx = AffineMap.of(F13, rng.randrange(1, 13), rng.randrange(13))
        ly = AffineMap.of(F13, rng.randrange(1, 13), rng.randrange(13))
        q = p.substitute(lx, ly)
        assert q.deg_x() == p.deg_x() and q.deg_y() == p.deg_y()


def test_substitution_composition_law_exhaustive_f7():
    # p((l∘l')(X), (m∘m')(Y)) must equal substituting twice, over every
    # pair of x-maps (y-maps sampled) in the q=7 affine group.
    rng = random.Random(23)
    p = rand_poly(F7, 3, 3, rng)
    maps = all_affine_maps(F7)
    m1, m2 = maps[5], maps[17]
    for l1 in maps:
        for l2 in maps:
            twice = p.substitute(l1, m1).substitute(l2, m2)
            once = p.substitute(l1.compose(l2), m1.compose(m2))
            assert twice == once


# -- affine map tools -----------------------------------------------------


def brute_affine_order(lmap):
    """Oracle: compose until the identity comes back."""
    ident = AffineMap.identity(lmap.field)
    cur, d = lmap, 1
    while cur != ident:
        cur = lmap.compose(cur)
        d += 1
    return d


def test_affine_order_examples():
    assert AffineMap.of(F7, 1, 1).order() == 7
    assert AffineMap.of(FieldDesc(31), 2).order() == 5
    assert AffineMap.identity(F7).order() == 1


def test_affine_order_exhaustive_f13():
    for lmap in all_affine_maps(F13):
        assert lmap.order() == brute_affine_order(lmap)


def test_iterate_matches_repeated_composition():
    lmap = AffineMap.of(F13, 4, 9)
    cur = AffineMap.identity(F13)
    for i in range(30):
        assert lmap.iterate(i) == cur
        cur = lmap.compose(cur)
    with pytest.raises(ValueError):
        lmap.iterate(-1)


def test_fixed_points():
    tripler = AffineMap.of(F7, 3)
    assert tripler.fixes(F7.elt(0))
    assert not tripler.fixes(F7.elt(1))


# -- polynomial matrices ---------------------------------------------------


def test_eval_matrix_examples():
    x = BiPoly.from_rows(F7, [[0, 0], [1, 0]], 2, 2)
    y = BiPoly.from_rows(F7, [[0, 1], [0, 0]], 2, 2)
    zero = BiPoly.zero(F7, 2, 2)
    m = PolyMatrix(((x, zero), (zero, y)))
    vals = eval_matrix(m, F7.elt(2), F7.elt(3))
    assert [[e.value for e in row] for row in vals] == [[2, 0], [0, 3]]

    consts = PolyMatrix(((BiPoly.constant(F7, 4), BiPoly.constant(F7, 5)),))
    vals = eval_matrix(consts, F7.elt(6), F7.elt(1))
    assert [[e.value for e in row] for row in vals] == [[4, 5]]

    xy = BiPoly.from_rows(F7, [[0, 0], [0, 1]], 2, 2)
    assert eval_matrix(PolyMatrix(((xy,),)), F7.elt(3), F7.elt(3))[0][0].value == 2


def test_matrix_product_commutes_with_evaluation():
    rng = random.Random(41)
    for _ in range(10):
        a = PolyMatrix(tuple(tuple(rand_poly(F13, 2, 2, rng) for _ in range(2))
                             for _ in range(2)))
        b = PolyMatrix(tuple(tuple(rand_poly(F13, 2, 2, rng) for _ in range(2))
                             for _ in range(2)))
        x, y = F13.elt(rng.randrange(13)), F13.elt(rng.randrange(13))
        prod_then_eval = (a.matmul(b)).eval_at(x, y)
        av = [[e.value for e in row] for row in a.eval_at(x, y)]
        bv = [[e.value for e in row] for row in b.eval_at(x, y)]
        eval_then_prod = [[sum(av[i][m] * bv[m][j] for m in range(2)) % 13
                           for j in range(2)] for i in range(2)]
        assert [[e.value for e in row] for row in prod_then_eval] == eval_then_prod


# -- serialization ----------------------------------------------------------


def test_text_round_trip():
    p = BiPoly.from_rows(F13, [[1, 2, 3], [0, 0, 12]])
    again = BiPoly.from_text(F13, p.to_text())
    assert again == p
    assert p.to_text() == "1 2 3\n0 0 12\n"


@given(st.integers(min_value=0, max_value=12), st.integers(min_value=0, max_value=12),
       st.integers(min_value=0, max_value=12))
@settings(max_examples=30)
def test_coeff_vector_round_trip(c0, c1, c2):
    p = BiPoly.from_coeff_vector(F13, [c0, c1, c2], 1, 3)
    assert p.coeff_vector(1, 3) == (c0, c1, c2)
