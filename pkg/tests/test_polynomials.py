from fractions import Fraction

import pytest

from conftest import sc, sci
from virab.polynomials import (
    BiPoly,
    UniPoly,
    divided_difference,
    format_bipoly,
    format_unipoly,
)
from virab.scalars import I, MINUS_ONE, ONE, ZERO


def rand_unipoly(rng, deg=4):
    return UniPoly(
        {k: sc(rng.randint(-5, 5)) for k in range(rng.randint(0, deg) + 1)}
    )


def rand_bipoly(rng, deg=3):
    return BiPoly(
        {
            (i, j): sc(rng.randint(-5, 5))
            for i in range(deg + 1)
            for j in range(deg + 1)
            if rng.random() < 0.4
        }
    )


def test_zero_coefficients_never_stored():
    p = UniPoly({2: ONE}) + UniPoly({2: MINUS_ONE})
    assert p.is_zero and not p.terms
    q = BiPoly({(1, 1): ONE}) - BiPoly({(1, 1): ONE})
    assert q.is_zero and not q.terms


def test_unipoly_arithmetic_and_eval():
    p = UniPoly({2: ONE, 0: sc(-3)})  # t^2 - 3
    q = UniPoly({1: sc(2)})  # 2t
    assert (p * q).coeff(3) == sc(2)
    assert (p * q).coeff(1) == sc(-6)
    assert p.eval(sc(2)) == ONE
    assert p.deriv() == UniPoly({1: sc(2)})
    assert p.scale(sc("1/2")).coeff(0) == sc("-3/2")


def test_ring_axioms_random(rng):
    for _ in range(60):
        p, q, r = (rand_bipoly(rng) for _ in range(3))
        assert (p + q) * r == p * r + q * r
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)


def test_shift_s_is_substitution(rng):
    # f.shift_s(c) must equal f(s - c, t): check on evaluations
    for _ in range(40):
        f = rand_bipoly(rng)
        c = sc(rng.randint(-4, 4))
        g = f.shift_s(c)
        for sv in (sc(0), sc(1), sc(-2), sc("1/2")):
            for tv in (sc(0), sc(3), sc("-1/3")):
                assert g.subs_s(sv).eval(tv) == f.subs_s(sv - c).eval(tv)


def test_shift_s_zero_is_identity(rng):
    f = rand_bipoly(rng)
    assert f.shift_s(ZERO) is f


def test_partial_t():
    f = BiPoly({(2, 3): sc(2), (1, 0): sc(5)})
    assert f.partial_t() == BiPoly({(2, 2): sc(6)})


def test_divided_difference_matches_long_division():
    # (t^k - alpha^k) / (t - alpha) computed by naive long division
    def long_division(k, alpha):
        num = {k: ONE, 0: -(alpha**k)}
        out = {}
        for d in range(k - 1, -1, -1):
            c = num.get(d + 1, ZERO)
            if c:
                out[d] = c
                num[d + 1] = ZERO
                num[d] = num.get(d, ZERO) + c * alpha
        assert all(not v for v in num.values())
        return UniPoly(out)

    for k in range(1, 6):
        for alpha in (sc(2), sc("1/2"), sc(-3), I, sci(1, -1)):
            assert divided_difference(k, alpha) == long_division(k, alpha)
    assert divided_difference(3, sc(2)) == UniPoly({2: ONE, 1: sc(2), 0: sc(4)})
    assert divided_difference(0, sc(7)).is_zero


def test_embed_and_projection(rng):
    p = rand_unipoly(rng)
    assert p.embed().to_unipoly_t() == p
    with pytest.raises(ValueError):
        BiPoly.s_var().to_unipoly_t()


def test_degrees():
    f = BiPoly({(2, 1): ONE, (0, 4): sc(3)})
    assert f.deg_s == 2 and f.deg_t == 4
    assert f.total_degree == 4
    assert BiPoly.zero().total_degree == float("-inf")


def test_format_unipoly():
    p = UniPoly({2: sc(3), 1: MINUS_ONE, 0: sc("1/2")})
    assert format_unipoly(p) == "3*t^2 - t + 1/2"
    assert format_unipoly(UniPoly.zero()) == "0"
    assert format_unipoly(UniPoly({1: sci(2, 1)})) == "(2+i)*t"


def test_format_bipoly_graded_lex():
    f = BiPoly({(1, 1): ONE, (2, 0): ONE, (0, 0): MINUS_ONE, (0, 2): sc(4)})
    # total degree descending, higher s-power first within a degree
    assert format_bipoly(f) == "s^2 + s*t + 4*t^2 - 1"
    assert format_bipoly(BiPoly.monomial(0, 1).scale(-I)) == "-i*t"
    assert format_bipoly(BiPoly.monomial(1, 0).scale(sci(3, -2))) == "(3-2i)*s"
    assert format_bipoly(BiPoly.zero()) == "0"


def test_subs_both_vars():
    f = BiPoly({(2, 1): ONE})  # s^2 t
    assert f.subs_s(sc(3)) == UniPoly({1: sc(9)})
    assert f.subs_t(sc(2)) == UniPoly({2: sc(2)})
